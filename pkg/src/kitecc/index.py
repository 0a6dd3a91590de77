"""Reduced Hessian matrix, product of nontrivial eigenvalues and the index."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cc import lambda_hat
from .domain import SQRT3, MassTriple, mutual_distances_reduced

XI = np.array([1.0, -1.0, -1.0, 0.0])


@dataclass
class HessianReport:
    A: np.ndarray
    lambda_hat: float
    product: float
    index_sign: int


def build_A(shape, masses):
    """``M^-1 D^2 U`` at the reduced configuration with ``d = 1``."""
    x, y = float(shape[0]), float(shape[1])
    m1, m3, m = masses.m1, masses.m3, masses.m
    r12, r13, r23, r24 = mutual_distances_reduced(shape)
    s13 = 1.0 / r13**3
    t12 = r12**-5
    t23 = r23**-5
    al1 = 2.0 * x * x - 1.0
    al2 = 2.0 * y * y - 1.0
    lam = lambda_hat(shape, masses)

    z1 = m * t12 * al1 + 2.0 * m3 * s13
    z2 = m * t23 * al2 + 2.0 * m1 * s13
    z3 = m1 * t12 * al1 + m3 * t23 * al2
    z4 = 3.0 * m1 * t12 + 3.0 * m3 * t23 + 3.0 * m / r24**3 - lam
    e34 = 3.0 * m1 * x * t12 - 3.0 * m3 * y * t23
    return np.array([
        [z1, 2.0 * m3 * s13, m * t12 * al1, 3.0 * m * x * t12],
        [2.0 * m1 * s13, z2, -m * t23 * al2, 3.0 * m * y * t23],
        [m1 * t12 * al1, -m3 * t23 * al2, z3, e34],
        [3.0 * m1 * x * t12, 3.0 * m3 * y * t23, e34, z4],
    ])


def _product(A, lam):
    tr = np.trace(A)
    return 0.5 * (tr * tr - np.trace(A @ A)) - lam * tr + 3.0 * lam * lam


def nontrivial_product(shape, masses):
    """Product of the two nontrivial eigenvalues of the modified Hessian.

    Only meaningful at a central configuration, where the trivial
    eigenvalues of ``A`` are exactly 0 and ``2 * lambda_hat``.
    """
    return float(_product(build_A(shape, masses), lambda_hat(shape, masses)))


def index_sign(shape, masses, tol=None):
    lam = lambda_hat(shape, masses)
    p = _product(build_A(shape, masses), lam)
    if tol is None:
        tol = 1e-9 * lam * lam
    if p > tol:
        return 1
    if p < -tol:
        return -1
    return 0


def hessian_report(shape, masses, tol=None):
    A = build_A(shape, masses)
    lam = lambda_hat(shape, masses)
    return HessianReport(A, lam, float(_product(A, lam)), index_sign(shape, masses, tol))


def F_value(shape):
    """Mass-free index function; its sign is the index on the convex region."""
    x, y = float(shape[0]), float(shape[1])
    r12, r13, r23, _ = mutual_distances_reduced(shape)
    a1, a2 = 2.0 * x * x - 1.0, 2.0 * y * y - 1.0
    b1, b2 = 4.0 * x * x + 1.0, 4.0 * y * y + 1.0
    r12_3, r23_3, r13_3 = r12**3, r23**3, r13**3
    r12_5, r23_5 = r12**5, r23**5
    f1 = r13 * (r13_3 - r12_3) * (r13_3 - r23_3) * (r12_5 + 8 * a1) * (r23_5 + 8 * a2)
    f2 = (y * r23**2 * (r13_3 - r23_3) * (8 - r23_3)
          * (r13_3 * (r12_5 + 6 * x * x * r12_3 - 8 * b1) + 2 * r12_3 * (r12_5 + 8 * a1)))
    f3 = (x * r12**2 * (r13_3 - r12_3) * (8 - r12_3)
          * (r13_3 * (r23_5 + 6 * y * y * r23_3 - 8 * b2) + 2 * r23_3 * (r23_5 + 8 * a2)))
    f4 = 9 * x * y * r13**7 * (8 - r12_3) * (8 - r23_3)
    return f1 + f2 + f3 + f4


def F_scale_factor(shape, masses):
    """Factor ``k`` with ``F = k * nontrivial_product`` at a central configuration."""
    r12, r13, r23, _ = mutual_distances_reduced(shape)
    return (64.0 * r12**5 * r23**5 * r13 * (r13**3 - r12**3) * (r13**3 - r23**3)
            / masses.m**2)


GON_SHAPE = (SQRT3, -1.0 / SQRT3)


def gon_masses(m):
    """Masses of the 1+3-gon with central mass ``1 - 3m/2`` and outer masses ``m/2``."""
    return MassTriple(0.5 * m, 1.0 - 1.5 * m, m)


def gon_product_quadratic():
    """Coefficients ``(c2, c1, c0)`` of the 1+3-gon product as a polynomial in m."""
    ms = np.array([0.1, 0.3, 0.6])
    ps = np.array([nontrivial_product(GON_SHAPE, gon_masses(m)) for m in ms])
    return np.polyfit(ms, ps, 2)


def degenerate_gon_mass():
    """Value of ``m`` in (0, 1) at which the 1+3-gon is degenerate."""
    c2, c1, c0 = gon_product_quadratic()
    disc = np.sqrt(c1 * c1 - 4 * c2 * c0)
    roots = [(-c1 + disc) / (2 * c2), (-c1 - disc) / (2 * c2)]
    inside = [r for r in roots if 0 < r < 1]
    if len(inside) != 1:
        raise ValueError(f"expected one root in (0, 1), got {roots}")
    return float(inside[0])
