import numpy as np
import pytest
from hypothesis import given, settings

from conftest import mass_triples, random_shapes
from kitecc.cc import cc_residual, dziobek_residual, mass_map
from kitecc.domain import MassTriple, Region, classify_region
from kitecc.errors import ConvergenceFailure
from kitecc.solver import newton_multistart, seed_grid, solve, solve_concave, solve_convex


def test_square():
    res = solve_convex(MassTriple(0.25, 0.25, 0.5))
    assert len(res) == 1
    np.testing.assert_allclose(res.solutions[0], (1.0, 1.0), atol=1e-12)
    assert res.regions == [Region.CONVEX]


def test_round_trip_convex():
    res = solve_convex(mass_map((1.2, 0.9)))
    np.testing.assert_allclose(res.solutions[0], (1.2, 0.9), atol=1e-9)


def test_swapped_masses_give_swapped_shape():
    masses = mass_map((1.2, 0.9))
    res = solve_convex(masses.swapped())
    np.testing.assert_allclose(res.solutions[0], (0.9, 1.2), atol=1e-9)


@settings(deadline=None, max_examples=25)
@given(mass_triples)
def test_convex_unique(m):
    masses = MassTriple(*m)
    res = solve_convex(masses)
    assert len(res) == 1
    shape = res.solutions[0]
    assert cc_residual(shape, masses).max_abs() < 1e-10
    assert abs(dziobek_residual(shape, masses)) < 1e-12


def test_concave_two_preimages():
    res = solve_concave(mass_map((2.0, -1.0)))
    assert len(res) == 2
    assert min(np.hypot(s[0] - 2.0, s[1] + 1.0) for s in res.solutions) < 1e-9
    xs = [s.xhat for s in res.solutions]
    assert xs == sorted(xs)


def test_concave_empty():
    assert len(solve_concave(MassTriple(0.25, 0.4, 0.35))) == 0


@pytest.mark.parametrize("m1, m3, region", [(0.3, 0.11, Region.CONCAVE2), (0.2, 0.41, Region.CONCAVE1)])
def test_concave_same_type_preimages(m1, m3, region):
    # just above the line m3 = 1 - 3 m1, below the image of the degeneracy curve
    res = solve_concave(MassTriple.from_m1_m3(m1, m3))
    assert res.regions == [region, region]


@pytest.mark.parametrize("region", [Region.CONCAVE1, Region.CONCAVE2])
def test_concave_round_trip(region):
    for shape in random_shapes(region, 10, seed=7):
        res = solve_concave(mass_map(shape))
        assert len(res) == 2
        assert min(np.hypot(s[0] - shape[0], s[1] - shape[1]) for s in res.solutions) < 1e-8
        for s, reg in zip(res.solutions, res.regions):
            assert classify_region(s) is reg


def test_seed_grid_in_region():
    xs, ys = seed_grid(Region.CONVEX, 40)
    assert len(xs) > 100
    assert all(classify_region((x, y)) is Region.CONVEX for x, y in zip(xs, ys))


def test_multistart_converges_from_far_seed():
    target = mass_map((1.5, 0.8))
    xs, ys = newton_multistart(Region.CONVEX, (target.m1, target.m3), seeds=([0.65], [0.6]))
    np.testing.assert_allclose([xs[0], ys[0]], [1.5, 0.8], atol=1e-9)


def test_convex_failure_reported(monkeypatch):
    import kitecc.solver as solver
    monkeypatch.setattr(solver, "newton_multistart", lambda *a, **k: (np.array([]), np.array([])))
    with pytest.raises(ConvergenceFailure):
        solver.solve_convex(MassTriple(0.3, 0.3, 0.4))


def test_solve_dispatch():
    with pytest.raises(ValueError):
        solve(MassTriple(0.3, 0.3, 0.4), "star")
