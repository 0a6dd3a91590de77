"""scikit-learn style wrappers around the shape <-> mass computations.

Inputs are arrays of reduced shapes ``(xhat, yhat)`` or of masses
``(m1, m3)`` / ``(m1, m3, m)``, one per row.  Nothing is learned: ``fit``
only validates and records the input width.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .cc import mass_map, mass_map_arrays
from .domain import MassTriple
from .index import index_sign
from .solver import solve
from .stability import GAP_TOL, REAL_TOL, spectrum


def _shapes(X):
    X = check_array(X, dtype=float)
    if X.shape[1] != 2:
        raise ValueError(f"expected 2 columns (xhat, yhat), got {X.shape[1]}")
    return X


class MassMap(TransformerMixin, BaseEstimator):
    """Shapes to masses ``(m1, m3, m)``; the inverse solves for the shape.

    With ``strict=False`` shapes without positive masses map to NaN rows
    instead of raising.
    """

    def __init__(self, kind="convex", strict=True):
        self.kind = kind
        self.strict = strict

    def fit(self, X, y=None):
        X = _shapes(X)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        X = _shapes(X)
        if self.strict:
            return np.array([mass_map(row).as_tuple() for row in X])
        m1, m3, m = mass_map_arrays(X[:, 0], X[:, 1])
        out = np.column_stack([m1, m3, m])
        bad = ~np.all(np.isfinite(out) & (out > 0), axis=1)
        out[bad] = np.nan
        return out

    def inverse_transform(self, M):
        """First solution of the requested kind for each mass row."""
        M = check_array(M, dtype=float)
        if M.shape[1] not in (2, 3):
            raise ValueError("expected columns (m1, m3) or (m1, m3, m)")
        out = np.full((M.shape[0], 2), np.nan)
        for i, row in enumerate(M):
            masses = MassTriple.from_m1_m3(row[0], row[1]) if M.shape[1] == 2 else MassTriple(*row)
            sols = solve(masses, self.kind).solutions
            if sols:
                out[i] = sols[0]
        return out


class IndexClassifier(ClassifierMixin, BaseEstimator):
    """Predicts the index (+1 or -1) of the central configuration at each shape."""

    def fit(self, X, y=None):
        X = _shapes(X)
        self.n_features_in_ = X.shape[1]
        self.classes_ = np.array([-1, 1])
        return self

    def predict(self, X):
        check_is_fitted(self, "classes_")
        X = _shapes(X)
        return np.array([index_sign(row, mass_map(row)) for row in X], dtype=int)


class StabilityClassifier(ClassifierMixin, BaseEstimator):
    """Predicts linear stability of the kite relative equilibrium at each shape."""

    def __init__(self, real_tol=REAL_TOL, gap_tol=GAP_TOL):
        self.real_tol = real_tol
        self.gap_tol = gap_tol

    def fit(self, X, y=None):
        X = _shapes(X)
        self.n_features_in_ = X.shape[1]
        self.classes_ = np.array([False, True])
        return self

    def _reports(self, X):
        check_is_fitted(self, "classes_")
        return [spectrum(row, None, self.real_tol, self.gap_tol) for row in _shapes(X)]

    def predict(self, X):
        return np.array([r.stable for r in self._reports(X)], dtype=bool)

    def spectrum_class(self, X):
        """``(n_complex, n_real, n_imag)`` per row as an ``(n, 3)`` int array."""
        return np.array([r.klass for r in self._reports(X)], dtype=int).reshape(-1, 3)
