"""Planar Newtonian n-body potential and its derivatives (positions flattened)."""
import numpy as np


def potential(q, masses):
    q = np.asarray(q, dtype=float).reshape(-1, 2)
    total = 0.0
    n = len(q)
    for i in range(n):
        for j in range(i + 1, n):
            total += masses[i] * masses[j] / np.hypot(*(q[j] - q[i]))
    return total


def gradient(q, masses):
    q = np.asarray(q, dtype=float).reshape(-1, 2)
    n = len(q)
    g = np.zeros_like(q)
    for i in range(n):
        for j in range(i + 1, n):
            d = q[j] - q[i]
            r = np.hypot(*d)
            f = masses[i] * masses[j] * d / r**3
            g[i] += f
            g[j] -= f
    return g.ravel()


def hessian(q, masses):
    """Second derivative matrix of the potential, shape ``(2n, 2n)``."""
    q = np.asarray(q, dtype=float).reshape(-1, 2)
    n = len(q)
    h = np.zeros((2 * n, 2 * n))
    eye = np.eye(2)
    for i in range(n):
        for j in range(i + 1, n):
            d = q[j] - q[i]
            r2 = d @ d
            r = np.sqrt(r2)
            block = masses[i] * masses[j] * (3.0 * np.outer(d, d) - r2 * eye) / (r2 * r2 * r)
            si, sj = slice(2 * i, 2 * i + 2), slice(2 * j, 2 * j + 2)
            h[si, si] += block
            h[sj, sj] += block
            h[si, sj] -= block
            h[sj, si] -= block
    return h


def inertia(q, masses):
    q = np.asarray(q, dtype=float).reshape(-1, 2)
    return float(np.sum(np.asarray(masses) * np.sum(q * q, axis=1)))
