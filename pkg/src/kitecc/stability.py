"""Linear stability of kite relative equilibria.

The linearization about a relative equilibrium is restricted to the
8-dimensional invariant subspace that excludes the symmetry directions
(rotation, scaling, translation).  Its spectrum is computed from the even
characteristic polynomial, so ``+-`` pairs are exact by construction.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import nbody
from .cc import cc_residual, mass_map
from .domain import INV_SQRT3, SQRT3, FullConfig, ReducedShape, lower_boundary, shape_to_full
from .errors import BracketFailure, DegenerateBasis, NoBracket, NotCentral
from .numkit import bisect, charpoly, eig_dense, solve_quartic_real_coeffs

REAL_TOL = 1e-10
GAP_TOL = 1e-8
PSI_INFIMUM = (25.0 + 3.0 * math.sqrt(69.0)) / 2.0

J2 = np.array([[0.0, 1.0], [-1.0, 0.0]])


def block_K(n):
    return np.kron(np.eye(n), J2)


def _apply_K(v):
    v = np.asarray(v, dtype=float).reshape(-1, 2)
    return np.column_stack([v[:, 1], -v[:, 0]]).ravel()


def _mass_vector(masses):
    return np.repeat(masses.body_masses(), 2)


@dataclass
class ReducedBasis:
    u1hat: np.ndarray
    u2hat: np.ndarray
    areas: tuple

    def vectors(self):
        """Columns ``u1hat, -K u1hat, u2hat, -K u2hat`` as an 8x4 array."""
        return np.column_stack([self.u1hat, -_apply_K(self.u1hat),
                                self.u2hat, -_apply_K(self.u2hat)])


@dataclass
class SpectrumReport:
    eigenvalues: np.ndarray
    klass: tuple
    max_real: float
    stable: bool


def reduced_basis(config: FullConfig, masses):
    mv = _mass_vector(masses)
    body = masses.body_masses()

    def inner(v, w):
        return float(v @ (mv * w))

    a, b, c, d = config.a, config.b, config.c, config.d
    areas = (-d * (b - c), 0.5 * d * (a + b), -d * (a + c), 0.5 * d * (a + b))
    u1 = np.zeros(8)
    u1[0::2] = np.asarray(areas) / body

    q = config.planar
    xi = np.tile([1.0, 0.0], 4)
    v = np.zeros(8)
    v[0] = 1.0
    u2 = v.copy()
    for w in (q, _apply_K(q), xi, _apply_K(xi), u1, -_apply_K(u1)):
        u2 -= inner(v, w) / inner(w, w) * w
    n2 = math.sqrt(inner(u2, u2))
    if n2 < 1e-12:
        raise DegenerateBasis(f"|u2| = {n2!r}")
    return ReducedBasis(u1 / math.sqrt(inner(u1, u1)), u2 / n2, areas)


def _check_central(config, masses, tol):
    res = cc_residual(config.reduced_shape(), masses).max_abs()
    if not res < tol:
        raise NotCentral(f"central configuration residual {res!r} exceeds {tol!r}")


def angular_velocity(config, masses):
    """``omega = sqrt(U/I)`` of the relative equilibrium."""
    q = config.planar
    body = masses.body_masses()
    return math.sqrt(nbody.potential(q, body) / nbody.inertia(q, body))


def lambda_W(config, masses, tol=1e-10):
    """Linearization restricted to the nontrivial invariant subspace (8x8)."""
    _check_central(config, masses, tol)
    config = config.normalized(masses)
    q = config.planar
    omega = math.sqrt(nbody.potential(q, masses.body_masses()))
    P = reduced_basis(config, masses).vectors()
    Ahat = P.T @ nbody.hessian(q, masses.body_masses()) @ P
    K4 = block_K(2)
    return np.block([[omega * K4, np.eye(4)], [Ahat, omega * K4]])


def stability_matrix_full(config, masses):
    """The full 16x16 linearization in rotating coordinates."""
    config = config.normalized(masses)
    q = config.planar
    body = masses.body_masses()
    omega = math.sqrt(nbody.potential(q, body))
    K = block_K(4)
    mv = _mass_vector(masses)
    return np.block([[omega * K, np.diag(1.0 / mv)], [nbody.hessian(q, body), omega * K]])


def even_charpoly(matrix, omega):
    """Characteristic polynomial of ``matrix / omega`` (highest degree first)."""
    return charpoly(np.asarray(matrix, dtype=float) / omega)


def hamiltonian_eigenvalues(matrix, omega):
    """Eigenvalues of ``matrix / omega`` through the quartic in ``mu = s^2``."""
    coeffs = even_charpoly(matrix, omega)
    mus = solve_quartic_real_coeffs(coeffs[0::2])
    out = []
    for mu in mus:
        s = cmath.sqrt(mu)
        out.extend([s, -s])
    return np.array(out)


def classify_spectrum(matrix, omega, real_tol=REAL_TOL, gap_tol=GAP_TOL, method="quartic"):
    """Spectrum class triple ``(n_complex, n_real, n_imaginary)`` and stability.

    ``method="eig"`` uses the dense nonsymmetric eigensolver instead of the
    even characteristic polynomial; it exists for cross-checking.
    """
    if not omega > 0:
        raise ValueError("omega must be positive")
    if method == "quartic":
        ev = hamiltonian_eigenvalues(matrix, omega)
    elif method == "eig":
        ev = eig_dense(np.asarray(matrix, dtype=float) / omega).astype(complex)
    else:
        raise ValueError(f"unknown method {method!r}")

    n_complex = n_real = n_imag = 0
    imag_parts = []
    for s in ev:
        if abs(s.real) < real_tol:
            n_imag += 1
            imag_parts.append(s.imag)
        elif abs(s.imag) < real_tol:
            n_real += 1
        else:
            n_complex += 1
    klass = (n_complex, n_real, n_imag)
    stable = False
    if klass == (0, 0, len(ev)):
        vals = np.sort(np.asarray(imag_parts))
        stable = bool(np.all(np.diff(vals) > gap_tol))
    return SpectrumReport(ev, klass, float(np.max(ev.real)), stable)


def kite_config(shape, masses=None):
    """Normalized full configuration (``I = 1``) and masses for a reduced shape."""
    if masses is None:
        masses = mass_map(shape)
    return shape_to_full(shape, masses, None), masses


def spectrum(shape, masses=None, real_tol=REAL_TOL, gap_tol=GAP_TOL, method="quartic"):
    config, masses = kite_config(shape, masses)
    matrix = lambda_W(config, masses)
    omega = math.sqrt(nbody.potential(config.planar, masses.body_masses()))
    return classify_spectrum(matrix, omega, real_tol, gap_tol, method)


def is_stable(shape, real_tol=REAL_TOL, gap_tol=GAP_TOL):
    return spectrum(shape, None, real_tol, gap_tol).stable


def psi(masses):
    """Dominant mass ratio ``m1 / (m2 + m3 + m4)``."""
    return masses.m1 / (1.0 - masses.m1)


def boundary_point(xhat, inset=1e-6, width=0.005, tol=1e-9,
                   real_tol=REAL_TOL, gap_tol=GAP_TOL):
    """``yhat`` of the stability boundary above the lower arc at ``xhat``."""
    low = float(lower_boundary(xhat))

    def stable(y):
        return is_stable(ReducedShape(xhat, y), real_tol, gap_tol)

    lo, hi = low + inset, low + width
    if not stable(lo):
        raise BracketFailure(f"inset point {(xhat, lo)} is not stable")
    try:
        return bisect(stable, lo, hi, tol)
    except NoBracket as exc:
        raise BracketFailure(f"no stability change on [{lo}, {hi}] at xhat={xhat}") from exc


def trace_stability_boundary(xhat_grid, tol=1e-9, real_tol=REAL_TOL, gap_tol=GAP_TOL):
    """Points ``(xhat, yhat, psi)`` on the Krein boundary of the stable strip."""
    out = []
    for x in sorted(float(v) for v in xhat_grid):
        if not INV_SQRT3 < x < SQRT3:
            raise ValueError(f"xhat {x} outside (1/sqrt(3), sqrt(3))")
        y = boundary_point(x, tol=tol, real_tol=real_tol, gap_tol=gap_tol)
        out.append((x, y, psi(mass_map((x, y)))))
    return out


def psi_near_corner(h, tol_factor=1e-9):
    """``psi`` on the boundary at ``xhat = 1/sqrt(3) + h``.

    The stable strip shrinks linearly towards the corner, so the bracket is
    scaled with ``h``.
    """
    x = INV_SQRT3 + h
    y = boundary_point(x, inset=h * 1e-3, width=h * 0.5, tol=h * tol_factor)
    return psi(mass_map((x, y)))


def psi_infimum_estimate(h=1e-4):
    """Richardson extrapolation of ``psi`` to the corner ``xhat -> 1/sqrt(3)``.

    ``psi - inf psi`` is linear in ``h`` to leading order.
    """
    p1 = psi_near_corner(h)
    p2 = psi_near_corner(0.5 * h)
    return 2.0 * p2 - p1
