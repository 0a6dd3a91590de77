"""Small dense kernels: eigenvalues, characteristic polynomials, quartics, bisection."""
from __future__ import annotations

import cmath
import math

import numpy as np
import scipy.linalg

from .errors import NoBracket, NoConvergence

MAX_DIM = 16


def _check_square(matrix):
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] > MAX_DIM:
        raise ValueError(f"matrix dimension {a.shape[0]} exceeds {MAX_DIM}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def eig_dense(matrix):
    """All eigenvalues of a small real matrix (Hessenberg + shifted QR, LAPACK)."""
    a = _check_square(matrix)
    try:
        return np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


def charpoly(matrix):
    """Monic characteristic polynomial, highest degree first.

    The matrix is reduced to upper Hessenberg form by an orthogonal
    similarity and the coefficients follow from La Budde's recurrence on the
    leading principal submatrices.
    """
    a = _check_square(matrix)
    n = a.shape[0]
    h = scipy.linalg.hessenberg(a)
    # p[k] holds det(t I - H[:k, :k]) as coefficients, lowest degree first
    p = [np.array([1.0])]
    for i in range(n):
        cur = np.zeros(i + 2)
        cur[1:] += p[i]
        cur[: i + 1] -= h[i, i] * p[i]
        prod = 1.0
        for m in range(1, i + 1):
            prod *= h[i - m + 1, i - m]
            coef = h[i - m, i] * prod
            cur[: i + 1 - m] -= coef * p[i - m]
        p.append(cur)
    return p[n][::-1].copy()


def _cubic_root(b, c, d):
    """One root of ``t^3 + b t^2 + c t + d`` (complex arithmetic)."""
    p = c - b * b / 3.0
    q = 2.0 * b**3 / 27.0 - b * c / 3.0 + d
    disc = cmath.sqrt((q / 2.0) ** 2 + (p / 3.0) ** 3)
    u3 = -q / 2.0 + disc
    if abs(u3) < abs(-q / 2.0 - disc):
        u3 = -q / 2.0 - disc
    if u3 == 0:
        return -b / 3.0
    u = u3 ** (1.0 / 3.0)
    return u - p / (3.0 * u) - b / 3.0


def _largest_cubic_root(b, c, d):
    """Root of ``t^3 + b t^2 + c t + d`` with the largest modulus."""
    t0 = _cubic_root(b, c, d)
    # deflate: t^2 + (b + t0) t + (c + (b + t0) t0)
    bb = b + t0
    cc = c + bb * t0
    disc = cmath.sqrt(bb * bb - 4.0 * cc)
    return max((t0, (-bb + disc) / 2.0, (-bb - disc) / 2.0), key=abs)


def _polish(coeffs, root, steps=3):
    dcoeffs = np.polyder(coeffs)
    for _ in range(steps):
        f = np.polyval(coeffs, root)
        df = np.polyval(dcoeffs, root)
        if df == 0:
            break
        new = root - f / df
        if not cmath.isfinite(new) or not abs(np.polyval(coeffs, new)) < abs(f):
            break
        root = new
    return root


def _quadratic_roots(b, c):
    """Roots of ``t^2 + b t + c`` without cancellation."""
    d = cmath.sqrt(b * b - 4.0 * c)
    t1 = (-b - d) / 2.0 if abs(-b - d) >= abs(-b + d) else (-b + d) / 2.0
    if t1 == 0:
        return [0j, complex(-b)]
    return [t1, c / t1]


def _low_degree_roots(c):
    """Roots of a monic polynomial of degree at most 3 (highest first)."""
    n = len(c) - 1
    if n == 0:
        return []
    if n == 1:
        return [complex(-c[1])]
    if n == 2:
        return _quadratic_roots(c[1], c[2])
    t0 = _cubic_root(c[1], c[2], c[3])
    bb = c[1] + t0
    return [t0] + _quadratic_roots(bb, c[2] + bb * t0)


def _ferrari(c):
    """Ferrari's method for ``c[0] t^4 + ... + c[4]``, unpolished."""
    a3, a2, a1, a0 = c[1:] / c[0]
    # depressed quartic t^4 + p t^2 + q t + r with x = t - a3/4
    shift = a3 / 4.0
    p = a2 - 6.0 * shift * shift
    q = a1 - 2.0 * a2 * shift + 8.0 * shift**3
    r = a0 - a1 * shift + a2 * shift * shift - 3.0 * shift**4
    scale = max(abs(p), math.sqrt(abs(r)), abs(q) ** (2.0 / 3.0), 1e-300)

    if abs(q) <= 1e-14 * scale**1.5:
        w1, w2 = _quadratic_roots(p, r)
        ts = [cmath.sqrt(w1), -cmath.sqrt(w1), cmath.sqrt(w2), -cmath.sqrt(w2)]
    else:
        # 8y^3 + 8p y^2 + (2p^2 - 8r) y - q^2 = 0; the largest root keeps
        # q / (2s) well conditioned
        y = _largest_cubic_root(p, (p * p - 4.0 * r) / 4.0, -q * q / 8.0)
        s = cmath.sqrt(2.0 * y)
        if s == 0:
            s = cmath.sqrt(complex(2.0 * abs(y) + 1e-300))
        ts = []
        for sign in (1.0, -1.0):
            # t^2 - sign*s t + (p/2 + y + sign*q/(2s)) = 0
            bb = -sign * s
            cc = p / 2.0 + y + sign * q / (2.0 * s)
            d = cmath.sqrt(bb * bb - 4.0 * cc)
            t1 = (-bb + d) / 2.0 if abs(-bb + d) >= abs(-bb - d) else (-bb - d) / 2.0
            t2 = cc / t1 if t1 != 0 else (-bb - d) / 2.0
            ts.extend([t1, t2])
    return [t - shift for t in ts]


def _vieta_error(roots, monic):
    """Coefficient mismatch of ``prod (t - z)``, relative to the attainable size."""
    bound = np.abs(np.poly(-np.abs(roots))).real
    return float(np.max(np.abs(np.poly(roots) - monic) / np.maximum(bound, 1e-300)))


def solve_quartic_real_coeffs(c):
    """Roots of ``c[0] t^4 + c[1] t^3 + c[2] t^2 + c[3] t + c[4]``.

    Ferrari's method through the resolvent cubic, then a Newton polish of
    every root on the original polynomial.  Ferrari loses the small roots
    when the moduli are widely spread; in that case the polynomial is
    rescaled, solved again reversed (which gets the small roots right) and
    the best mix of large and small roots is kept.  Quartics with roots on
    three or more separated scales remain out of reach.  Returns 4 complex
    roots sorted by (real, imag).
    """
    c = np.asarray(c, dtype=float)
    if c.shape != (5,):
        raise ValueError("expected 5 coefficients")
    if c[0] == 0:
        raise ValueError("leading coefficient must be nonzero")
    monic = c / c[0]
    n_zero = 0
    while n_zero < 4 and c[4 - n_zero] == 0:
        n_zero += 1
    if n_zero:
        with np.errstate(all="ignore"):
            rest = _low_degree_roots(monic[: 5 - n_zero])
            roots = [0j] * n_zero + [_polish(monic, complex(z)) for z in rest]
        return sorted(roots, key=lambda z: (z.real, z.imag))
    with np.errstate(all="ignore"):
        roots = [_polish(monic, complex(z)) for z in _ferrari(c)]
    if np.all(np.isfinite(monic)) and _vieta_error(roots, monic) > 1e-12:
        sig = (abs(c[4]) / abs(c[0])) ** 0.25
        with np.errstate(all="ignore"):
            cs = c * sig ** np.arange(4, -1, -1)
            ms = cs / cs[0]
            best = None
            if np.all(np.isfinite(ms)):
                big = sorted(_ferrari(cs), key=abs, reverse=True)
                small = sorted((1.0 / z if z != 0 else complex(math.inf) for z in _ferrari(cs[::-1])), key=abs)
                for k in range(5):
                    cand = [_polish(ms, complex(z), 5) for z in big[:k] + small[: 4 - k]]
                    if not all(cmath.isfinite(z) for z in cand):
                        continue
                    err = _vieta_error(cand, ms)
                    if best is None or err < best[0]:
                        best = (err, cand)
            if best is not None and best[0] < 1e-10 and best[0] < _vieta_error([z / sig for z in roots], ms):
                roots = [z * sig for z in best[1]]
    roots = [complex(z.real, 0.0) if z.imag == 0 else z for z in roots]
    return sorted(roots, key=lambda z: (z.real, z.imag))


def bisect(predicate, lo, hi, tol):
    """Locate a change of a boolean predicate between ``lo`` and ``hi``.

    Returns the midpoint of the final bracket, which lies within ``tol`` of
    the switching point.
    """
    p_lo = bool(predicate(lo))
    if p_lo == bool(predicate(hi)):
        raise NoBracket(f"predicate has the same value {p_lo} at {lo!r} and {hi!r}")
    steps = max(0, math.ceil(math.log2(abs(hi - lo) / tol)))
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        if bool(predicate(mid)) == p_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
