"""Multivariate gcd and squarefree part.

Polynomials are viewed recursively as univariate in their lowest-indexed
variable with coefficients in the remaining ones.  The gcd of primitive parts
is computed with the subresultant PRS, whose intermediate divisions are exact.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import InternalError, ZeroPolynomial
from .poly import VARS, MultiPoly, exact_quotient

_ONE = MultiPoly.const(1)

Coeffs = list  # list[MultiPoly], index k multiplies w**k


def _trim(a: Coeffs) -> Coeffs:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def prem(A: Coeffs, B: Coeffs) -> Coeffs:
    """Pseudo-remainder ``lc(B)**(deg A - deg B + 1) * A mod B``."""
    dA, dB = len(A) - 1, len(B) - 1
    if dA < dB:
        return list(A)
    lcB = B[-1]
    monic = lcB == 1
    R = list(A)
    e = dA - dB + 1
    while R and len(R) - 1 >= dB:
        lcR = R[-1]
        k = len(R) - 1 - dB
        if not monic:
            R = [lcB * r for r in R]
        for j in range(dB):
            if B[j]:
                R[k + j] = R[k + j] - lcR * B[j]
        R.pop()
        R = _trim(R)
        e -= 1
    if e and not monic and R:
        f = lcB ** e
        R = [f * r for r in R]
    return R


def divide_coeffs(A: Coeffs, d: MultiPoly) -> Coeffs:
    if d == 1:
        return list(A)
    out = []
    for a in A:
        q = exact_quotient(a, d)
        if q is None:
            raise InternalError("inexact division in subresultant sequence")
        out.append(q)
    return out


def content(coeffs: Sequence[MultiPoly]) -> MultiPoly:
    g = None
    for c in coeffs:
        if not c:
            continue
        g = c if g is None else _gcd(g, c)
        if g.is_constant():
            return _ONE
    return _ONE if g is None else g


def primitive_part(coeffs: Coeffs) -> Coeffs:
    return divide_coeffs(coeffs, content(coeffs))


def _subresultant_gcd(A: Coeffs, B: Coeffs) -> Coeffs:
    if len(A) < len(B):
        A, B = B, A
    g = h = _ONE
    while True:
        delta = len(A) - len(B)
        R = prem(A, B)
        if not R:
            return primitive_part(B)
        if len(R) == 1:
            return [_ONE]
        A, B = B, divide_coeffs(R, g * h ** delta)
        g = A[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            q = exact_quotient(g ** delta, h ** (delta - 1))
            if q is None:
                raise InternalError("inexact division in subresultant sequence")
            h = q


def _first_var(P: MultiPoly, Q: MultiPoly) -> str:
    used = set(P.variables()) | set(Q.variables())
    for w in VARS:
        if w in used:
            return w
    raise AssertionError("both polynomials constant")


def _gcd(P: MultiPoly, Q: MultiPoly) -> MultiPoly:
    """A gcd of nonzero ``P`` and ``Q``, up to a scalar factor."""
    if P.is_constant() or Q.is_constant():
        return _ONE
    w = _first_var(P, Q)
    if P.degree(w) <= 0:
        return _gcd(P, content(Q.coeffs_in(w)))
    if Q.degree(w) <= 0:
        return _gcd(content(P.coeffs_in(w)), Q)
    A, B = P.coeffs_in(w), Q.coeffs_in(w)
    cA, cB = content(A), content(B)
    c = _gcd(cA, cB)
    G = _subresultant_gcd(divide_coeffs(A, cA), divide_coeffs(B, cB))
    return c * MultiPoly.from_coeffs(G, w)


def normalize(P: MultiPoly) -> MultiPoly:
    """Scale so the lex-leading coefficient (``x > y > u > v > ...``) is 1."""
    return P.monic()


def gcd_multivar(P: MultiPoly, Q: MultiPoly) -> MultiPoly:
    """Normalized gcd; ``gcd(0, Q)`` is normalized ``Q`` and ``gcd(0, 0) = 0``."""
    if not P:
        return normalize(Q)
    if not Q:
        return normalize(P)
    return normalize(_gcd(P, Q))


gcd = gcd_multivar


def squarefree_part(P: MultiPoly) -> MultiPoly:
    """Product of the distinct irreducible factors of ``P``, normalized."""
    if not P:
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    if P.is_constant():
        return _ONE
    g = P
    for w in P.variables():
        g = gcd_multivar(g, P.diff(w))
        if g.is_constant():
            return normalize(P)
    S = exact_quotient(P, g)
    if S is None:
        raise InternalError("gcd does not divide its argument")
    return normalize(S)
