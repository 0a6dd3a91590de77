import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import settings_kw
from kitecc.errors import NoBracket
from kitecc.index import F_value
from kitecc.numkit import bisect, charpoly, eig_dense, solve_quartic_real_coeffs
from kitecc.stability import kite_config, lambda_W


def _sorted(z):
    return sorted(np.round(np.asarray(z, dtype=complex), 12), key=lambda v: (v.real, v.imag))


def test_eig_dense_examples():
    np.testing.assert_allclose(eig_dense(np.eye(4)), np.ones(4))
    np.testing.assert_allclose(_sorted(eig_dense([[0, 1], [-1, 0]])), [-1j, 1j], atol=1e-15)
    comp = np.zeros((4, 4))
    comp[1:, :3] = np.eye(3)
    comp[0, 3] = 1.0  # companion matrix of t^4 - 1
    np.testing.assert_allclose(_sorted(eig_dense(comp)), [-1, -1j, 1j, 1], atol=1e-14)


@pytest.mark.parametrize("bad", [np.ones((2, 3)), np.eye(17), np.array([[np.nan]])])
def test_eig_dense_rejects(bad):
    with pytest.raises(ValueError):
        eig_dense(bad)


@settings(**settings_kw)
@given(st.integers(1, 10), st.integers(0, 2 ** 31))
def test_charpoly_matches_numpy(n, seed):
    a = np.random.default_rng(seed).normal(size=(n, n))
    ours = charpoly(a)
    ref = np.poly(a)
    assert np.max(np.abs(ours - ref)) < 1e-10 * max(1.0, np.max(np.abs(ref)))


@pytest.mark.parametrize("coeffs, roots", [
    ([1, 0, 0, 0, -1], [-1, -1j, 1j, 1]),
    ([1, 0, 5, 0, 4], [-2j, -1j, 1j, 2j]),
    ([1, -10, 35, -50, 24], [1, 2, 3, 4]),
    ([1, 0, 0, 0, 0], [0, 0, 0, 0]),
])
def test_quartic_examples(coeffs, roots):
    np.testing.assert_allclose(_sorted(solve_quartic_real_coeffs(coeffs)), _sorted(roots), atol=1e-7)


def test_quartic_guards():
    with pytest.raises(ValueError):
        solve_quartic_real_coeffs([1, 2, 3])
    with pytest.raises(ValueError):
        solve_quartic_real_coeffs([0, 1, 2, 3, 4])


def _residual(c, z):
    c = np.asarray(c, dtype=float)
    scale = np.polyval(np.abs(c), max(1.0, abs(z)))
    return abs(np.polyval(c, z)) / scale


@settings(**settings_kw)
@given(st.lists(st.floats(-5, 5), min_size=5, max_size=5).filter(lambda c: abs(c[0]) > 1e-2))
def test_quartic_random_coefficients(c):
    roots = solve_quartic_real_coeffs(c)
    for z in roots:
        assert _residual(c, z) < 1e-10
    ref = np.roots(c)
    # same multiset as the companion-matrix oracle, up to clustering
    for z in roots:
        assert np.min(np.abs(ref - z)) < 1e-5 * max(1.0, abs(z))


@settings(**settings_kw)
@given(st.floats(0.01, 4), st.floats(0.01, 4), st.floats(-3, 3), st.floats(0.01, 3))
def test_quartic_from_roots(a, b, re, im):
    """Two negative reals and a complex pair: the shape seen for mu = sigma^2."""
    roots = [-a, -b, complex(re, im), complex(re, -im)]
    c = np.real(np.poly(roots))
    got = solve_quartic_real_coeffs(c)
    for r in roots:
        assert min(abs(g - r) for g in got) < 1e-6 * max(1.0, abs(r)) + 1e-6 * (1 / max(abs(a - b), 1e-3))


def test_quartic_at_square_matches_eig():
    cfg, masses = kite_config((1.0, 1.0))
    from kitecc import nbody
    omega = np.sqrt(nbody.potential(cfg.planar, masses.body_masses()))
    lw = lambda_W(cfg, masses) / omega
    mus = solve_quartic_real_coeffs(charpoly(lw)[0::2])
    sig = [s for mu in mus for s in (np.sqrt(complex(mu)), -np.sqrt(complex(mu)))]
    ev = eig_dense(lw)
    for s in sig:
        assert np.min(np.abs(ev - s)) < 1e-9


def test_bisect_threshold():
    assert bisect(lambda x: x > 0.5, 0.0, 1.0, 1e-9) == pytest.approx(0.5, abs=1e-9)


def test_bisect_no_bracket():
    with pytest.raises(NoBracket):
        bisect(lambda x: x > 2, 0.0, 1.0, 1e-9)


def test_bisect_finds_degenerate_point():
    ys = np.linspace(-1.7, -0.76, 200)
    signs = np.sign([F_value((2.0, y)) for y in ys])
    i = int(np.flatnonzero(np.diff(signs))[0])
    lo, hi = ys[i], ys[i + 1]
    s_lo = signs[i]
    y = bisect(lambda t: np.sign(F_value((2.0, t))) != s_lo, lo, hi, 1e-14)
    assert abs(F_value((2.0, y))) < 1e-7
