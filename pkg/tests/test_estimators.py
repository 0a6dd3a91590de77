import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from kitecc.estimators import IndexClassifier, MassMap, StabilityClassifier
from kitecc.errors import NonPositiveMass

SHAPES = np.array([[1.0, 1.0], [1.2, 0.9], [2.0, -1.0]])


def test_mass_map_transform_and_inverse():
    mm = MassMap().fit(SHAPES[:2])
    masses = mm.transform(SHAPES[:2])
    np.testing.assert_allclose(masses[0], [0.25, 0.25, 0.5])
    back = mm.inverse_transform(masses)
    np.testing.assert_allclose(back, SHAPES[:2], atol=1e-9)
    np.testing.assert_allclose(mm.inverse_transform(masses[:, :2]), SHAPES[:2], atol=1e-9)


def test_mass_map_strictness():
    bad = np.array([[1.0, -2.0], [1.0, 1.0]])
    with pytest.raises(NonPositiveMass):
        MassMap().fit(bad).transform(bad)
    out = MassMap(strict=False).fit(bad).transform(bad)
    assert np.all(np.isnan(out[0])) and np.allclose(out[1], [0.25, 0.25, 0.5])


def test_concave_inverse_empty_gives_nan():
    out = MassMap(kind="concave").fit(SHAPES).inverse_transform([[0.25, 0.4, 0.35]])
    assert np.all(np.isnan(out))


def test_input_validation():
    with pytest.raises(ValueError):
        MassMap().fit(np.ones((3, 3)))
    with pytest.raises(ValueError):
        MassMap().fit([[np.nan, 1.0]])
    with pytest.raises(NotFittedError):
        MassMap().transform(SHAPES)


def test_classifiers():
    ic = IndexClassifier().fit(SHAPES)
    assert list(ic.predict(SHAPES)) == [1, 1, 1]
    sc = StabilityClassifier().fit(SHAPES)
    assert list(sc.predict([[1.0, np.sqrt(2) - 1 + 1e-4], [1.0, 1.0]])) == [True, False]
    np.testing.assert_array_equal(sc.spectrum_class([[2.0, -1.0]]), [[4, 2, 2]])


def test_params_round_trip():
    sc = StabilityClassifier(real_tol=1e-9)
    assert sc.get_params() == {"real_tol": 1e-9, "gap_tol": 1e-8}
    assert clone(sc).real_tol == 1e-9
    assert MassMap(kind="concave").set_params(strict=False).get_params() == {"kind": "concave", "strict": False}
