"""Detect whether a polynomial is a scalar times a power of a squarefree one."""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra.gcd import squarefree_part
from ..algebra.poly import MultiPoly
from ..errors import DegenerateInput, NotAPrimePower, ZeroPolynomial


@dataclass(frozen=True)
class PowerStructure:
    """``R = alpha * base**exponent`` with ``base`` squarefree and normalized."""

    alpha: object
    base: MultiPoly
    exponent: int

    def expand(self) -> MultiPoly:
        return (self.base ** self.exponent).scalar_mul(self.alpha)


def power_structure(R: MultiPoly) -> PowerStructure:
    if not R:
        raise ZeroPolynomial("power structure of the zero polynomial")
    if R.is_constant():
        raise DegenerateInput("power structure of a constant")
    S = squarefree_part(R)
    dR, dS = R.total_degree(), S.total_degree()
    if dR % dS:
        raise NotAPrimePower(f"degree {dR} is not a multiple of {dS}")
    l = dR // dS
    T = S ** l
    alpha = R.lc() / T.lc()
    if T.scalar_mul(alpha) != R:
        raise NotAPrimePower("polynomial is not a scalar times a power of its squarefree part")
    return PowerStructure(alpha, S, l)
