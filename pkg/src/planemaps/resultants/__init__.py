"""Resultants, discriminants, power structure and small-degree irreducibility."""

from .kronecker import factor_integer_poly, factor_rational, kronecker_irreducible
from .structure import PowerStructure, power_structure
from .sylvester import (
    SylvesterMatrix,
    cofactor_determinant,
    discriminant,
    resultant,
    sylvester_matrix,
)

__all__ = [
    "SylvesterMatrix",
    "sylvester_matrix",
    "cofactor_determinant",
    "resultant",
    "discriminant",
    "PowerStructure",
    "power_structure",
    "kronecker_irreducible",
    "factor_integer_poly",
    "factor_rational",
]
