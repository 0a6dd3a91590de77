"""Central configuration equations, the Dziobek relation and the mass map."""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .domain import GON, SQRT3, MassTriple, MutualDistances, mutual_distances_reduced
from .errors import (
    Collision,
    DegenerateDistances,
    InvalidSlope,
    NonPositiveMass,
    UndefinedAtGon,
)

GON_RADIUS = 1e-10


class CCResidual(NamedTuple):
    g1: float
    g2: float

    def max_abs(self):
        return max(abs(self.g1), abs(self.g2))


def _inv_cube(r):
    return 1.0 / (r * r * r)


def _s_values(shape):
    r12, r13, r23, r24 = mutual_distances_reduced(shape)
    return _inv_cube(r12), _inv_cube(r13), _inv_cube(r23), _inv_cube(r24)


def lambda_hat(shape, masses):
    """Scaled multiplier ``m1 r12^-3 + m3 r23^-3 + m r24^-3`` (d normalized to 1)."""
    s12, _, s23, s24 = _s_values(shape)
    return masses.m1 * s12 + masses.m3 * s23 + masses.m * s24


def cc_residual(shape, masses):
    """Residuals of the two reduced central configuration equations."""
    x, y = shape
    s12, s13, s23, _ = _s_values(shape)
    lam = lambda_hat(shape, masses)
    g1 = masses.m * x * (s12 - lam) - masses.m3 * (x + y) * (lam - s13)
    g2 = masses.m * y * (s23 - lam) - masses.m1 * (x + y) * (lam - s13)
    return CCResidual(g1, g2)


def dziobek_residual(shape, masses):
    s12, s13, s23, s24 = _s_values(shape)
    lam = lambda_hat(shape, masses)
    return (lam - s12) * (lam - s23) - (lam - s13) * (lam - s24)


def lambda_from_distances(dist: MutualDistances):
    """Multiplier recovered from the mutual distances alone."""
    s12, s13, s23, s24 = (_inv_cube(r) for r in (dist.r12, dist.r13, dist.r23, dist.r24))
    den = s12 + s23 - s13 - s24
    if abs(den) < 1e-14:
        raise DegenerateDistances(f"denominator {den!r} vanishes")
    return (s12 * s23 - s13 * s24) / den


def mass_ratios(x, y):
    """``(m1/m, m3/m)`` for shapes given as floats or arrays; no checks."""
    r12 = np.hypot(x, 1.0)
    r23 = np.hypot(y, 1.0)
    r13 = x + y
    s12 = 1.0 / (r12 * r12 * r12)
    s23 = 1.0 / (r23 * r23 * r23)
    s13 = 1.0 / (r13 * r13 * r13)
    s24 = 0.125
    rho1 = (y / r13) * (s23 - s24) / (s12 - s13)
    rho3 = (x / r13) * (s12 - s24) / (s23 - s13)
    return rho1, rho3


def mass_map_arrays(x, y):
    """Vectorized normalized masses ``(m1, m3, m)``; NaN/inf where undefined."""
    with np.errstate(divide="ignore", invalid="ignore"):
        rho1, rho3 = mass_ratios(x, y)
        m = 1.0 / (1.0 + rho1 + rho3)
        return rho1 * m, rho3 * m, m


def mass_map(shape):
    """The unique normalized masses that make ``shape`` central."""
    x, y = float(shape[0]), float(shape[1])
    if math.hypot(x - GON[0], y - GON[1]) < GON_RADIUS:
        raise UndefinedAtGon(f"mass map is 0/0 at the 1+3-gon, got {(x, y)}")
    with np.errstate(divide="ignore", invalid="ignore"):
        rho1, rho3 = mass_ratios(x, y)
    rho1, rho3 = float(rho1), float(rho3)
    m = 1.0 / (1.0 + rho1 + rho3)
    m1, m3 = rho1 * m, rho3 * m
    for name, value in (("m1", m1), ("m3", m3), ("m", m)):
        if not (value > 0) or not math.isfinite(value):
            raise NonPositiveMass(name, value)
    return MassTriple(m1, m3, m)


def limit_masses_13gon(k):
    """Limit of the mass map at the 1+3-gon along a line of slope ``k``."""
    if not k < -2.0 / 3.0:
        raise InvalidSlope(f"slope must be < -2/3, got {k!r}")
    if not math.isfinite(k):
        # vertical approach: m3 -> 0, not a positive triple
        raise InvalidSlope("slope must be finite")
    den = 18.0 - SQRT3 + 27.0 * k
    m1 = (6.0 + 9.0 * k) / den
    m3 = -SQRT3 / den
    return MassTriple(m1, m3, 1.0 - m1 - m3)


def potential_xyd(x, y, d, masses):
    """Newtonian potential of the kite in ``(x, y, d)`` coordinates."""
    m1, m3, m = masses.m1, masses.m3, masses.m
    r12 = math.hypot(x, d)
    r23 = math.hypot(y, d)
    return m * m1 / r12 + m * m3 / r23 + m1 * m3 / (x + y) + m * m / (8.0 * d)


def gradient_U_xyd(x, y, d, masses):
    """Gradient of U with respect to ``z = (a, b, c, d)``, written in ``(x, y, d)``."""
    m1, m3, m = masses.m1, masses.m3, masses.m
    r12 = math.hypot(x, d)
    r23 = math.hypot(y, d)
    r13 = x + y
    r24 = 2.0 * d
    if min(r12, r23, r13, r24) < 1e-13:
        raise Collision(f"collision at (x, y, d) = {(x, y, d)}")
    s12, s23, s13, s24 = (_inv_cube(r) for r in (r12, r23, r13, r24))
    return np.array([
        -m * m1 * s12 * x - m1 * m3 * s13 * r13,
        -m * m3 * s23 * y - m1 * m3 * s13 * r13,
        -m * m1 * s12 * x + m * m3 * s23 * y,
        -m * d * (m1 * s12 + m3 * s23 + m * s24),
    ])


def outward_normals(masses):
    """Outward normals ``(w_x, w_y)`` on the boundaries ``x = 0`` and ``y = 0``."""
    m1, m3, m = masses.m1, masses.m3, masses.m
    return -np.array([m, 0.0, m1, 0.0]), -np.array([0.0, m, -m3, 0.0])


def boundary_arc_point(which, theta, masses):
    """Point ``(x, y, d)`` on the arc ``x = 0`` or ``y = 0`` of the ellipsoid ``I = 1``.

    ``theta`` in (0, pi/2) runs from the collision of bodies 2 and 4
    (``d -> 0``) to that of bodies 1 and 3.
    """
    from .domain import shape_to_full

    if not 0.0 < theta < 0.5 * math.pi:
        raise ValueError(f"theta must lie in (0, pi/2), got {theta!r}")
    if which not in ("x", "y"):
        raise ValueError(f"which must be 'x' or 'y', got {which!r}")
    t = 1.0 / math.tan(theta)
    shape = (0.0, t) if which == "x" else (t, 0.0)
    z = shape_to_full(shape, masses, None)
    return z.x, z.y, z.d
