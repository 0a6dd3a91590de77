"""Invert the mass map: find every kite central configuration for given masses.

Newton's method runs on the mass mismatch ``(m1(x, y) - m1*, m3(x, y) - m3*)``
from a uniform grid of seeds, all seeds advanced together as numpy arrays.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cc import cc_residual, mass_map_arrays
from .domain import ReducedShape, Region, bounding_box, in_region_mask
from .errors import ConvergenceFailure

FD_STEP = 1e-6
SEED_INSET = 1e-3


@dataclass
class SolveResult:
    solutions: list = field(default_factory=list)
    residuals: list = field(default_factory=list)
    regions: list = field(default_factory=list)

    def __len__(self):
        return len(self.solutions)


def seed_grid(region, n=40, inset=SEED_INSET):
    x0, x1, y0, y1 = bounding_box(region)
    xs = np.linspace(x0 + inset, x1 - inset, n)
    ys = np.linspace(y0 + inset, y1 - inset, n)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    X, Y = X.ravel(), Y.ravel()
    keep = in_region_mask(region, X, Y)
    return X[keep], Y[keep]


def _mismatch(x, y, target):
    m1, m3, _ = mass_map_arrays(x, y)
    return m1 - target[0], m3 - target[1]


def _jacobian(x, y):
    h = FD_STEP
    a1, a3, _ = mass_map_arrays(x + h, y)
    b1, b3, _ = mass_map_arrays(x - h, y)
    c1, c3, _ = mass_map_arrays(x, y + h)
    d1, d3, _ = mass_map_arrays(x, y - h)
    return (a1 - b1) / (2 * h), (c1 - d1) / (2 * h), (a3 - b3) / (2 * h), (c3 - d3) / (2 * h)


def _step(j11, j12, j21, j22, f1, f3, cond_limit):
    det = j11 * j22 - j12 * j21
    dx = -(j22 * f1 - j12 * f3) / det
    dy = -(-j21 * f1 + j11 * f3) / det
    # Levenberg step where the Jacobian is nearly rank one
    fro2 = j11 * j11 + j12 * j12 + j21 * j21 + j22 * j22
    disc = np.sqrt(np.maximum(fro2 * fro2 - 4 * det * det, 0.0))
    smax2 = 0.5 * (fro2 + disc)
    smin2 = np.maximum(0.5 * (fro2 - disc), 0.0)
    ill = ~(smin2 * cond_limit**2 > smax2)
    if np.any(ill):
        mu = 1e-12 * smax2[ill]
        g1 = j11[ill] * f1[ill] + j21[ill] * f3[ill]
        g2 = j12[ill] * f1[ill] + j22[ill] * f3[ill]
        a = j11[ill] ** 2 + j21[ill] ** 2 + mu
        b = j11[ill] * j12[ill] + j21[ill] * j22[ill]
        c = j12[ill] ** 2 + j22[ill] ** 2 + mu
        dd = a * c - b * b
        dx[ill] = -(c * g1 - b * g2) / dd
        dy[ill] = -(-b * g1 + a * g2) / dd
    return dx, dy


def newton_multistart(region, target, seeds=None, tol=1e-12, max_iter=50,
                      cond_limit=1e10, n_seeds=40):
    """Run damped Newton from every seed; return converged ``(x, y)`` arrays."""
    if seeds is None:
        seeds = seed_grid(region, n_seeds)
    x, y = (np.array(s, dtype=float) for s in seeds)
    active = np.ones(x.shape, dtype=bool)
    done = np.zeros(x.shape, dtype=bool)
    with np.errstate(all="ignore"):
        for _ in range(max_iter):
            idx = np.flatnonzero(active)
            if idx.size == 0:
                break
            xa, ya = x[idx], y[idx]
            f1, f3 = _mismatch(xa, ya, target)
            ok = np.isfinite(f1) & np.isfinite(f3)
            conv = ok & (np.maximum(np.abs(f1), np.abs(f3)) < tol)
            done[idx[conv]] = True
            active[idx[conv | ~ok]] = False
            sel = ok & ~conv
            idx, xa, ya, f1, f3 = idx[sel], xa[sel], ya[sel], f1[sel], f3[sel]
            if idx.size == 0:
                break
            dx, dy = _step(*_jacobian(xa, ya), f1, f3, cond_limit)
            t = np.ones_like(xa)
            bad = ~(np.isfinite(dx) & np.isfinite(dy))
            active[idx[bad]] = False
            for _ in range(40):
                out = ~in_region_mask(region, xa + t * dx, ya + t * dy) & ~bad
                if not np.any(out):
                    break
                t[out] *= 0.5
            x[idx] = xa + t * dx
            y[idx] = ya + t * dy
        # points that met the tolerance on the final iterate
        idx = np.flatnonzero(active)
        if idx.size:
            f1, f3 = _mismatch(x[idx], y[idx], target)
            done[idx[np.maximum(np.abs(f1), np.abs(f3)) < tol]] = True
        # one extra Newton step to push converged points to rounding level
        idx = np.flatnonzero(done)
        if idx.size:
            f1, f3 = _mismatch(x[idx], y[idx], target)
            dx, dy = _step(*_jacobian(x[idx], y[idx]), f1, f3, cond_limit)
            nx, ny = x[idx] + dx, y[idx] + dy
            g1, g3 = _mismatch(nx, ny, target)
            better = (np.maximum(np.abs(g1), np.abs(g3)) <= np.maximum(np.abs(f1), np.abs(f3))) \
                & in_region_mask(region, nx, ny)
            x[idx[better]], y[idx[better]] = nx[better], ny[better]
    return x[done], y[done]


def _collect(candidates, masses, radius, res_tol):
    """Deduplicate ``(x, y, region)`` candidates and certify residuals."""
    kept = []
    for x, y, region in candidates:
        res = cc_residual((x, y), masses).max_abs()
        if not res < res_tol:
            continue
        if any(np.hypot(x - kx, y - ky) < radius for kx, ky, _, _ in kept):
            continue
        kept.append((x, y, region, res))
    kept.sort(key=lambda t: (t[0], t[1]))
    return SolveResult(
        [ReducedShape(float(x), float(y)) for x, y, _, _ in kept],
        [float(r) for _, _, _, r in kept],
        [reg for _, _, reg, _ in kept],
    )


def solve_convex(masses, n_seeds=40, tol=1e-12, radius=1e-7, res_tol=1e-10):
    """The convex kite central configuration for ``masses``.

    The search runs in the canonical region ``yhat <= xhat``; when ``m3 > m1``
    the swapped problem is solved and the shape swapped back.
    """
    swap = masses.m3 > masses.m1
    target = masses.swapped() if swap else masses
    xs, ys = newton_multistart(Region.CONVEX, (target.m1, target.m3), tol=tol, n_seeds=n_seeds)
    cands = [(y, x, Region.CONVEX) if swap else (x, y, Region.CONVEX) for x, y in zip(xs, ys)]
    result = _collect(cands, masses, radius, res_tol)
    if not result.solutions:
        raise ConvergenceFailure(f"no convex solution found for {masses}")
    return result


def solve_concave(masses, n_seeds=40, tol=1e-12, radius=1e-7, res_tol=1e-10):
    """All concave kite central configurations with body 3 inside the triangle."""
    cands = []
    for region in (Region.CONCAVE1, Region.CONCAVE2):
        xs, ys = newton_multistart(region, (masses.m1, masses.m3), tol=tol, n_seeds=n_seeds)
        cands.extend((x, y, region) for x, y in zip(xs, ys))
    return _collect(cands, masses, radius, res_tol)


def solve(masses, kind="convex", **kwargs):
    if kind == "convex":
        return solve_convex(masses, **kwargs)
    if kind == "concave":
        return solve_concave(masses, **kwargs)
    raise ValueError(f"kind must be 'convex' or 'concave', got {kind!r}")
