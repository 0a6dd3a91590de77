"""Kite geometry: masses, reduced shapes, full configurations and regions.

Bodies 1 and 3 sit on the symmetry axis, bodies 2 and 4 (each of mass m/2)
sit symmetrically off the axis.  A reduced shape ``(xhat, yhat)`` places the
bodies at ``(xhat, 0), (0, 1), (-yhat, 0), (0, -1)``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import InvalidMasses, NonPositiveGeometry

SQRT3 = math.sqrt(3.0)
INV_SQRT3 = 1.0 / SQRT3
GON = (SQRT3, -INV_SQRT3)
REGION_TOL = 1e-12


@dataclass(frozen=True)
class MassTriple:
    """Normalized masses ``(m1, m3, m)`` with ``m2 = m4 = m/2``.

    Triples whose sum is within 1e-9 of one are rescaled so that the sum is
    one to rounding; anything further off is rejected.
    """

    m1: float
    m3: float
    m: float

    def __post_init__(self):
        m1, m3, m = float(self.m1), float(self.m3), float(self.m)
        if not all(math.isfinite(v) for v in (m1, m3, m)):
            raise InvalidMasses(f"non-finite masses {(m1, m3, m)}")
        if m1 <= 0 or m3 <= 0 or m <= 0:
            raise InvalidMasses(f"masses must be positive, got {(m1, m3, m)}")
        total = m1 + m3 + m
        if abs(total - 1.0) > 1e-9:
            raise InvalidMasses(f"masses must sum to 1, got {total!r}")
        object.__setattr__(self, "m1", m1 / total)
        object.__setattr__(self, "m3", m3 / total)
        object.__setattr__(self, "m", m / total)

    @classmethod
    def from_m1_m3(cls, m1, m3):
        return cls(m1, m3, 1.0 - m1 - m3)

    @classmethod
    def normalized(cls, m1, m3, m):
        total = m1 + m3 + m
        return cls(m1 / total, m3 / total, m / total)

    @property
    def m2(self):
        return 0.5 * self.m

    @property
    def m4(self):
        return 0.5 * self.m

    def swapped(self):
        """Interchange the two on-axis masses."""
        return MassTriple(self.m3, self.m1, self.m)

    def as_tuple(self):
        return (self.m1, self.m3, self.m)

    def body_masses(self):
        """Masses of bodies 1..4 in order."""
        return np.array([self.m1, self.m2, self.m3, self.m4])


class ReducedShape(NamedTuple):
    xhat: float
    yhat: float

    def swapped(self):
        return ReducedShape(self.yhat, self.xhat)


class MutualDistances(NamedTuple):
    r12: float
    r13: float
    r23: float
    r24: float


class Region(enum.Enum):
    CONVEX = "ConvexC"
    CONCAVE1 = "Concave1"
    CONCAVE2 = "Concave2"
    ONE_PLUS_THREE_GON = "OnePlusThreeGon"
    BOUNDARY_RHOMBUS = "BoundaryRhombus"
    BOUNDARY_RESTRICTED = "BoundaryRestricted"
    BOUNDARY_ONE_PLUS_THREE = "BoundaryOnePlusThree"
    OUTSIDE = "Outside"

    @classmethod
    def parse(cls, text):
        aliases = {
            "convex": cls.CONVEX, "c": cls.CONVEX,
            "concave1": cls.CONCAVE1, "cv1": cls.CONCAVE1,
            "concave2": cls.CONCAVE2, "cv2": cls.CONCAVE2,
        }
        key = text.strip()
        if key.lower() in aliases:
            return aliases[key.lower()]
        return cls(key)

    @property
    def is_open_region(self):
        return self in (Region.CONVEX, Region.CONCAVE1, Region.CONCAVE2)


@dataclass(frozen=True)
class FullConfig:
    """Point ``z = (a, b, c, d)`` of the kite configuration space."""

    a: float
    b: float
    c: float
    d: float

    @property
    def z(self):
        return np.array([self.a, self.b, self.c, self.d])

    @property
    def planar(self):
        """Positions of bodies 1..4 flattened into an 8-vector."""
        a, b, c, d = self.a, self.b, self.c, self.d
        return np.array([a, 0.0, -c, d, -b, 0.0, -c, -d])

    @property
    def x(self):
        return self.a + self.c

    @property
    def y(self):
        return self.b - self.c

    def reduced_shape(self):
        return ReducedShape(self.x / self.d, self.y / self.d)

    def center_of_mass(self, masses):
        return masses.m1 * self.a - masses.m3 * self.b - masses.m * self.c

    def inertia(self, masses):
        a, b, c, d = self.a, self.b, self.c, self.d
        return masses.m1 * a * a + masses.m3 * b * b + masses.m * (c * c + d * d)

    def normalized(self, masses):
        """Rescale onto the ellipsoid ``I = 1``."""
        k = 1.0 / math.sqrt(self.inertia(masses))
        return FullConfig(k * self.a, k * self.b, k * self.c, k * self.d)


def lower_boundary(xhat):
    """The arc ``r13 = r12`` bounding the convex region from below."""
    return np.hypot(xhat, 1.0) - xhat


def concave_divider(xhat):
    """The arc ``r13 = r23`` separating the two concave regions' interiors."""
    return -0.5 * (xhat - 1.0 / xhat)


def mutual_distances_reduced(shape):
    x, y = shape
    return MutualDistances(math.hypot(x, 1.0), x + y, math.hypot(y, 1.0), 2.0)


def mutual_distances_full(config):
    x, y, d = config.x, config.y, config.d
    return MutualDistances(math.hypot(x, d), config.a + config.b, math.hypot(y, d), 2.0 * d)


def shape_to_full(shape, masses, scale=1.0):
    """Map a reduced shape to ``z = (a, b, c, d)`` with the center of mass at 0.

    ``scale=None`` picks the scale that puts the result on ``I = 1``.
    """
    m1, m3 = masses.m1, masses.m3
    if scale is None:
        unit = shape_to_full(shape, masses, 1.0)
        return unit.normalized(masses)
    x, y, d = scale * shape[0], scale * shape[1], float(scale)
    a = (1.0 - m1) * x + m3 * y
    b = m1 * x + (1.0 - m3) * y
    c = m1 * x - m3 * y
    if a <= 0 or a + b <= 0 or d <= 0:
        raise NonPositiveGeometry(f"a={a!r}, a+b={a + b!r}, d={d!r}")
    return FullConfig(a, b, c, d)


def classify_region(shape, tol=REGION_TOL):
    """Return the :class:`Region` tag of a reduced shape."""
    x, y = float(shape[0]), float(shape[1])
    if math.hypot(x - GON[0], y - GON[1]) <= tol:
        return Region.ONE_PLUS_THREE_GON
    if not (x + y > 0):
        return Region.OUTSIDE

    if y > tol:
        low = float(lower_boundary(x))
        if not (INV_SQRT3 - tol <= x <= SQRT3 + tol and low - tol <= y <= x + tol):
            return Region.OUTSIDE
        if abs(y - x) <= tol and (abs(x - INV_SQRT3) <= tol or abs(x - SQRT3) <= tol):
            return Region.BOUNDARY_RHOMBUS
        if abs(y - low) <= tol:
            return Region.BOUNDARY_ONE_PLUS_THREE
        if abs(x - SQRT3) <= tol:
            return Region.BOUNDARY_RESTRICTED
        return Region.CONVEX

    if y >= -tol:
        if 1.0 - tol <= x <= SQRT3 + tol:
            return Region.BOUNDARY_RESTRICTED
        return Region.OUTSIDE

    div = float(concave_divider(x))
    if SQRT3 - tol <= x <= 2.0 + SQRT3 + tol and -SQRT3 - tol <= y <= div + tol:
        if abs(y - div) <= tol:
            return Region.BOUNDARY_ONE_PLUS_THREE
        if abs(x - SQRT3) <= tol or abs(y + SQRT3) <= tol:
            return Region.BOUNDARY_RESTRICTED
        return Region.CONCAVE1
    if 1.0 - tol <= x <= SQRT3 + tol and div - tol <= y:
        if abs(y - div) <= tol:
            return Region.BOUNDARY_ONE_PLUS_THREE
        if abs(x - SQRT3) <= tol:
            return Region.BOUNDARY_RESTRICTED
        return Region.CONCAVE2
    return Region.OUTSIDE


def in_region_mask(region, x, y):
    """Vectorized strict membership test for the three open regions."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        if region is Region.CONVEX:
            return (x > INV_SQRT3) & (x < SQRT3) & (y > lower_boundary(x)) & (y <= x)
        div = concave_divider(x)
        if region is Region.CONCAVE1:
            return (x > SQRT3) & (x < 2.0 + SQRT3) & (y > -SQRT3) & (y < div)
        if region is Region.CONCAVE2:
            return (x > 1.0) & (x < SQRT3) & (y > div) & (y < 0.0)
    raise ValueError(f"no open region for {region}")


def bounding_box(region):
    """``(xmin, xmax, ymin, ymax)`` of an open region."""
    if region is Region.CONVEX:
        return (INV_SQRT3, SQRT3, 2.0 - SQRT3, SQRT3)
    if region is Region.CONCAVE1:
        return (SQRT3, 2.0 + SQRT3, -SQRT3, -INV_SQRT3)
    if region is Region.CONCAVE2:
        return (1.0, SQRT3, -INV_SQRT3, 0.0)
    raise ValueError(f"no bounding box for {region}")
