"""Transitive (q-1)-fold line packings of PG(n, q) for q = 2^k, k and n odd.

The package builds, for each nonzero alpha in F_{q^n}, a spread B_alpha
of the projective space PG(n, q) modelled on V = F_{q^n} x F_q.  Together
the spreads form a packing in which every line occurs exactly q - 1
times, and multiplication by field units permutes the spreads
transitively.  Fast closed-form construction lives in `packing`,
underlying arithmetic in `field`, the geometry in `geometry`,
brute-force cross-checks in `oracle`, and a deterministic command-line
front end in `cli`.
"""

from .field import FieldContext, make_context
from .geometry import (
    basis_nonzero_U,
    canonical_point,
    enumerate_lines,
    enumerate_lines_naive,
    enumerate_points,
    line_count,
    line_through,
    point_count,
    spread_line_count,
)
from .oracle import classify_bruteforce, lambda_bruteforce, packing_count_naive
from .packing import (
    ConstructionError,
    Packing,
    Spread,
    VerificationReport,
    alpha_set,
    apply_beta,
    build_packing,
    build_spread,
    eval_form,
    infer_multiplicity,
    line_through_U_point,
    line_through_affine_point,
    unique_lambda,
    verify_packing,
    verify_spread,
    verify_transitivity,
)

__version__ = "1.0.0"

__all__ = [
    "ConstructionError",
    "FieldContext",
    "Packing",
    "Spread",
    "VerificationReport",
    "alpha_set",
    "apply_beta",
    "basis_nonzero_U",
    "build_packing",
    "build_spread",
    "canonical_point",
    "classify_bruteforce",
    "enumerate_lines",
    "enumerate_lines_naive",
    "enumerate_points",
    "eval_form",
    "infer_multiplicity",
    "lambda_bruteforce",
    "line_count",
    "line_through",
    "line_through_U_point",
    "line_through_affine_point",
    "make_context",
    "packing_count_naive",
    "point_count",
    "spread_line_count",
    "unique_lambda",
    "verify_packing",
    "verify_spread",
    "verify_transitivity",
]
