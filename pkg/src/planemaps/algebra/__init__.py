"""Exact scalar fields and sparse multivariate polynomials."""

from .gcd import gcd_multivar, normalize, squarefree_part
from .poly import (
    VARS,
    ZERO_DEGREE,
    MultiPoly,
    S,
    T,
    U,
    V,
    X,
    Y,
    Z,
    degree_and_lead,
    divides,
    exact_quotient,
    format_poly,
    partial_derivative,
    poly_arith,
    substitute,
)
from .scalars import QQ, AlgNum, Field, Rat, field_of, format_rat, format_scalar, to_rat

__all__ = [
    "VARS",
    "ZERO_DEGREE",
    "MultiPoly",
    "X",
    "Y",
    "U",
    "V",
    "T",
    "S",
    "Z",
    "QQ",
    "AlgNum",
    "Field",
    "Rat",
    "field_of",
    "format_rat",
    "format_scalar",
    "to_rat",
    "poly_arith",
    "partial_derivative",
    "substitute",
    "degree_and_lead",
    "exact_quotient",
    "divides",
    "format_poly",
    "gcd_multivar",
    "normalize",
    "squarefree_part",
]
