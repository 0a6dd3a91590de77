"""Kite central configurations of the Newtonian four-body problem."""

__version__ = "0.1.0"

from .cc import (  # noqa: E402
    cc_residual,
    dziobek_residual,
    lambda_from_distances,
    lambda_hat,
    limit_masses_13gon,
    mass_map,
)
from .domain import (  # noqa: E402
    FullConfig,
    MassTriple,
    ReducedShape,
    Region,
    classify_region,
    shape_to_full,
)
from .index import F_value, build_A, index_sign, nontrivial_product  # noqa: E402
from .solver import SolveResult, solve, solve_concave, solve_convex  # noqa: E402
from .stability import classify_spectrum, lambda_W, spectrum  # noqa: E402

__all__ = [
    "FullConfig", "MassTriple", "ReducedShape", "Region", "SolveResult",
    "F_value", "build_A", "cc_residual", "classify_region", "classify_spectrum",
    "dziobek_residual", "index_sign", "lambda_W", "lambda_from_distances",
    "lambda_hat", "limit_masses_13gon", "mass_map", "nontrivial_product",
    "shape_to_full", "solve", "solve_concave", "solve_convex", "spectrum",
]
