"""Sylvester matrices, resultants and discriminants."""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra.gcd import divide_coeffs, prem
from ..algebra.poly import MultiPoly, exact_quotient
from ..errors import (
    DegenerateInput,
    InternalError,
    UnsupportedLeadingCoefficient,
    ZeroPolynomial,
)

_ZERO = MultiPoly.const(0)
_ONE = MultiPoly.const(1)


@dataclass(frozen=True)
class SylvesterMatrix:
    entries: tuple[tuple[MultiPoly, ...], ...]
    var: str

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def determinant(self) -> MultiPoly:
        return cofactor_determinant(self.entries)


def sylvester_matrix(f: MultiPoly, g: MultiPoly, w: str) -> SylvesterMatrix:
    """Rows: ``deg g`` shifted copies of ``f`` then ``deg f`` shifted copies of ``g``."""
    if not f or not g:
        raise ZeroPolynomial("Sylvester matrix of a zero polynomial")
    fc = f.coeffs_in(w)[::-1]
    gc = g.coeffs_in(w)[::-1]
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append(tuple([_ZERO] * i + fc + [_ZERO] * (size - m - 1 - i)))
    for i in range(m):
        rows.append(tuple([_ZERO] * i + gc + [_ZERO] * (size - n - 1 - i)))
    return SylvesterMatrix(tuple(rows), w)


def cofactor_determinant(rows) -> MultiPoly:
    """Laplace expansion along rows, memoized on the set of used columns.

    Exponential in the dimension; kept as an independent check on
    :func:`resultant`.
    """
    n = len(rows)
    if n == 0:
        return _ONE
    memo: dict[tuple[int, int], MultiPoly] = {}

    def det(r: int, used: int) -> MultiPoly:
        if r == n:
            return _ONE
        key = (r, used)
        if key in memo:
            return memo[key]
        acc = _ZERO
        sign = 1
        for col in range(n):
            if used >> col & 1:
                continue
            entry = rows[r][col]
            if entry:
                minor = det(r + 1, used | (1 << col))
                if minor:
                    term = entry * minor
                    acc = acc + term if sign > 0 else acc - term
            # sign alternates over the columns still available
            sign = -sign
        memo[key] = acc
        return acc

    return det(0, 0)


def resultant(f: MultiPoly, g: MultiPoly, w: str) -> MultiPoly:
    """``Res_w(f, g)`` by the subresultant PRS.

    Equals the determinant of :func:`sylvester_matrix`.  If ``deg_w f = 0``
    the result is ``f**deg_w g`` (and symmetrically), so two ``w``-free inputs
    give 1.
    """
    if not f or not g:
        raise ZeroPolynomial("resultant of a zero polynomial")
    A, B = f.coeffs_in(w), g.coeffs_in(w)
    m, n = len(A) - 1, len(B) - 1
    if m == 0:
        return f ** n
    if n == 0:
        return g ** m
    s = 1
    if m < n:
        A, B = B, A
        if m % 2 and n % 2:
            s = -1
    gg = h = _ONE
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        if dA % 2 and dB % 2:
            s = -s
        R = prem(A, B)
        if not R:
            return _ZERO
        A, B = B, divide_coeffs(R, gg * h ** delta)
        gg = A[-1]
        if delta == 1:
            h = gg
        elif delta > 1:
            q = exact_quotient(gg ** delta, h ** (delta - 1))
            if q is None:
                raise InternalError("inexact division in subresultant sequence")
            h = q
        if len(B) == 1:
            break
    dA = len(A) - 1
    if dA == 1:
        out = B[0]
    else:
        out = exact_quotient(B[0] ** dA, h ** (dA - 1))
        if out is None:
            raise InternalError("inexact division in subresultant sequence")
    return out if s > 0 else -out


def discriminant(f: MultiPoly, w: str) -> MultiPoly:
    """``(-1)**(d(d-1)/2) * Res_w(f, f') / lc_w(f)`` for constant ``lc_w(f)``."""
    if not f:
        raise ZeroPolynomial("discriminant of the zero polynomial")
    d, lead = f.degree_and_lead(w)
    if d < 1:
        raise DegenerateInput(f"discriminant needs degree >= 1 in {w}")
    if not lead.is_constant():
        raise UnsupportedLeadingCoefficient(f"leading coefficient {lead} in {w} is not constant")
    res = resultant(f, f.diff(w), w)
    out = res.scalar_mul(1 / lead.constant_value())
    return -out if (d * (d - 1) // 2) % 2 else out
