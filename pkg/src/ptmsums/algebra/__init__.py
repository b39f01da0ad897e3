"""Exact scalar and polynomial arithmetic."""

from .cyclotomic import (
    Cyclotomic,
    cyclo_arith,
    cyclo_root,
    cyclotomic_polynomial,
    normalize,
    totient,
)
from .linalg import (
    as_matrix,
    as_vector,
    block_diag,
    char_det,
    charpoly,
    diag,
    identity,
    matmul,
    matvec,
    parse_number,
)
from .poly import (
    MultiPoly,
    PolyRing,
    apply_linear,
    eval_subst,
    exact_divide_linear,
    integrate_x,
    poly_arith,
    poly_pow,
    rational_poly,
    theta,
)

__all__ = [
    "Cyclotomic",
    "MultiPoly",
    "PolyRing",
    "apply_linear",
    "as_matrix",
    "as_vector",
    "block_diag",
    "char_det",
    "charpoly",
    "cyclo_arith",
    "cyclo_root",
    "cyclotomic_polynomial",
    "diag",
    "eval_subst",
    "exact_divide_linear",
    "identity",
    "integrate_x",
    "matmul",
    "matvec",
    "normalize",
    "parse_number",
    "poly_arith",
    "poly_pow",
    "rational_poly",
    "theta",
    "totient",
]
