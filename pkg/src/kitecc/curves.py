"""Curve tracing: degenerate central configurations and the stability profile."""
from __future__ import annotations

import math

import numpy as np

from .cc import mass_map
from .domain import GON, INV_SQRT3, SQRT3, Region, classify_region
from .errors import SeedFailure
from .index import F_value
from .stability import psi_infimum_estimate, trace_stability_boundary

FD_STEP = 1e-7


def _grad(f, p):
    h = FD_STEP
    return np.array([
        (f((p[0] + h, p[1])) - f((p[0] - h, p[1]))) / (2 * h),
        (f((p[0], p[1] + h)) - f((p[0], p[1] - h))) / (2 * h),
    ])


def _correct(f, p, tol=1e-13, max_iter=20):
    """Newton projection of ``p`` onto ``{f = 0}`` along the gradient."""
    for _ in range(max_iter):
        v = f(p)
        g = _grad(f, p)
        p = p - v * g / (g @ g)
        if abs(v) < tol * max(1.0, float(np.linalg.norm(g))):
            break
    return p


def _seed(f, region, radius, n=720):
    """Zero of ``f`` on the circle of given radius about the gon, inside ``region``."""
    th = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    pts = [np.array([GON[0] + radius * math.cos(t), GON[1] + radius * math.sin(t)]) for t in th]
    inside = [classify_region(p) is region for p in pts]
    vals = [f(p) if ok else np.nan for p, ok in zip(pts, inside)]
    for i in range(n):
        j = (i + 1) % n
        if inside[i] and inside[j] and vals[i] * vals[j] < 0:
            a, b = th[i], th[j] if j else 2 * np.pi
            fa = vals[i]
            for _ in range(60):
                mid = 0.5 * (a + b)
                pm = np.array([GON[0] + radius * math.cos(mid), GON[1] + radius * math.sin(mid)])
                fm = f(pm)
                if fm * fa > 0:
                    a, fa = mid, fm
                else:
                    b = mid
            t = 0.5 * (a + b)
            return np.array([GON[0] + radius * math.cos(t), GON[1] + radius * math.sin(t)])
    raise SeedFailure(f"no sign change of F near the 1+3-gon in {region.value}")


def _branch(f, region, step, max_steps):
    p = _correct(f, _seed(f, region, step))
    pts = [p]
    prev_dir = p - np.asarray(GON)
    prev_dir /= np.linalg.norm(prev_dir)
    for _ in range(max_steps):
        g = _grad(f, p)
        t = np.array([-g[1], g[0]]) / np.linalg.norm(g)
        if t @ prev_dir < 0:
            t = -t
        q = _correct(f, p + step * t)
        if classify_region(q) is not region or np.linalg.norm(q - p) > 2 * step:
            break
        prev_dir = (q - p) / np.linalg.norm(q - p)
        p = q
        pts.append(p)
    return pts


def trace_degeneracy_curve(step=0.01, max_steps=2000):
    """Polyline of degenerate concave central configurations through the gon.

    Vertices run from the end of the Concave1 branch through the 1+3-gon to
    the end of the Concave2 branch.
    """
    if not 0 < step <= 0.1:
        raise ValueError(f"step must lie in (0, 0.1], got {step!r}")
    f = F_value
    one = _branch(f, Region.CONCAVE1, step, max_steps)
    two = _branch(f, Region.CONCAVE2, step, max_steps)
    pts = one[::-1] + [np.asarray(GON)] + two
    return [(float(p[0]), float(p[1])) for p in pts]


def degeneracy_masses(curve):
    """Mass-map image of a traced curve; the gon vertex is skipped."""
    out = []
    for x, y in curve:
        if math.hypot(x - GON[0], y - GON[1]) < 1e-9:
            continue
        out.append(mass_map((x, y)))
    return out


def psi_profile(n=50):
    """``(x, y, psi)`` on ``n`` interior abscissae plus the estimated infimum of psi."""
    xs = np.linspace(INV_SQRT3, SQRT3, n + 2)[1:-1]
    return trace_stability_boundary(xs), psi_infimum_estimate()
