"""Image ``w(t) = q(x(t), y(t))`` of a branch at infinity under ``q``.

For a branch ``x = t**M``, ``y = t**M * Y(1/t)`` and ``e = deg q``,

    w(t) = t**(M*e) * sum_ij q_ij * s**(M*(e - i - j)) * Y(s)**j,   s = 1/t.

Only finitely many exponents of ``w`` are positive.  The branch is bounded
when none of them carries a nonzero coefficient, and then ``w -> b0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..algebra import MultiPoly
from ..errors import DegenerateInput, InsufficientOrder
from . import series as ser
from .expansion import PuiseuxBranch, fiber_equation


@dataclass(frozen=True)
class BranchImage:
    """``w(t) = sum c_e t**e`` exact for exponents above ``-order``.

    ``order`` is None when the series is exact in full.  ``b0`` and ``b1``
    (coefficients of ``t**0`` and ``t**-1``) are set only for bounded images.
    """

    series: tuple
    bounded: bool
    b0: object = None
    b1: object = None
    order: Optional[int] = None

    def coefficient(self, exponent: int):
        for e, c in self.series:
            if e == exponent:
                return c
        return 0

    @property
    def positive_exponents(self) -> list[int]:
        return [e for e, _ in self.series if e > 0]


def _error_valuation(rows: list, vY: int) -> Optional[int]:
    """Least ``s``-valuation of ``d/dY`` of the image polynomial, or None if ``Y``-free."""
    best = None
    for j in range(1, len(rows)):
        v = ser.valuation(rows[j])
        if v is None:
            continue
        k = v + (j - 1) * vY
        best = k if best is None else min(best, k)
    return best


def branch_image(q: MultiPoly, branch: PuiseuxBranch) -> BranchImage:
    """``w = q(x(t), y(t))`` with its boundedness verdict.

    Raises InsufficientOrder when the branch is too short to decide every
    exponent down to ``t**-1``, unless a nonzero positive exponent is already
    certain (then the image is unbounded whatever the remaining terms are).
    """
    if set(q.variables()) - {"x", "y"}:
        raise DegenerateInput("q must be a polynomial in x and y")
    if not q:
        return BranchImage((), True, 0, 0, None)
    M = branch.m
    e = q.total_degree()
    top = M * e  # w = t**top * W(s)
    rows = fiber_equation(q, 0, M)
    Y = branch.y_series()
    if branch.exact:
        W = ser.horner(rows, Y, None)
        limit, order = len(W), None
    else:
        L = M + branch.order
        vY = ser.valuation(Y)
        kappa = _error_valuation(rows, L if vY is None else vY)
        if kappa is None:
            W = ser.horner(rows, Y, None)
            limit, order = len(W), None
        else:
            limit = kappa + L  # W is exact below s**limit
            W = ser.horner(rows, Y, limit)
            order = limit - top  # exact for exponents > top - limit
    terms = tuple((top - k, c) for k, c in enumerate(W) if c and k < limit)
    positive = any(ex > 0 for ex, _ in terms)
    if order is not None and order < 2 and not positive:
        raise InsufficientOrder(
            branch.order + 2 - order,
            f"branch order {branch.order} does not determine w down to t^-1",
        )
    if positive:
        return BranchImage(terms, False, order=order)
    coef = dict(terms)
    return BranchImage(terms, True, coef.get(0, 0), coef.get(-1, 0), order)
