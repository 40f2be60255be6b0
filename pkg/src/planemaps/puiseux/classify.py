"""Critical values of ``v -> R(x, c, v)`` on a fiber ``u = c``.

Roots ``v_i`` of the specialized resultant's branching locus come in two
kinds.  First kind: ``R(x, c, v_i)`` acquires a repeated root in ``x`` while
its leading coefficient survives.  Second kind: the leading coefficient
``r_top(c, v_i)`` vanishes, so a root of ``R`` escapes to infinity.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import MultiPoly
from ..algebra.gcd import gcd_multivar, normalize, squarefree_part
from ..algebra.poly import exact_quotient
from ..errors import DegenerateInput, DegenerateResultant, InternalError
from ..maps import PolyMap2, require_monic
from ..resultants import resultant

_ONE = MultiPoly.const(1)


@dataclass(frozen=True)
class CriticalClassification:
    """``first_kind_poly`` is normalized, ``second_kind_poly`` equals ``r_top(c, v)``.

    When ``R(x, c, v)`` has a repeated factor in ``x`` its discriminant vanishes
    identically and ``first_kind_poly`` is the zero polynomial.
    """

    first_kind_poly: MultiPoly
    second_kind_poly: MultiPoly
    degenerate_flag: bool


def _strip_common(S: MultiPoly, T: MultiPoly) -> MultiPoly:
    while True:
        g = gcd_multivar(S, T)
        if g.is_constant():
            return S
        S = exact_quotient(S, g)
        if S is None:
            raise InternalError("gcd does not divide its argument")


def classify_resultant(Rc: MultiPoly, second_kind: MultiPoly | None = None) -> CriticalClassification:
    """Classify the critical values of ``Rc(x, v)``.

    ``second_kind`` defaults to the leading coefficient of ``Rc`` in ``x``; the
    fiber entry point passes ``r_top(c, v)``, which is zero in the degenerate
    case where ``Rc`` has dropped degree.
    """
    if set(Rc.variables()) - {"x", "v"}:
        raise DegenerateInput("the specialized resultant must be a polynomial in x and v")
    n, lead = Rc.degree_and_lead("x")
    if second_kind is None:
        if n == 0:
            raise DegenerateResultant(f"R = {Rc} is constant in x")
        second_kind = lead
    degenerate = not second_kind
    if n == 0:
        first = _ONE
    else:
        disc = resultant(Rc, Rc.diff("x"), "x")
        if not disc:
            first = MultiPoly.const(0)
        else:
            first = squarefree_part(disc)
            if not degenerate:
                first = _strip_common(first, second_kind)
            first = normalize(first)
    return CriticalClassification(first, second_kind, degenerate)


def classify_critical_values(F: PolyMap2, c) -> CriticalClassification:
    """Classification on the fiber ``u = c`` of a map in monic form."""
    require_monic(F)
    R = resultant(F.p - MultiPoly.var("u"), F.q - MultiPoly.var("v"), "y")
    n, r_top = R.degree_and_lead("x")
    if n == 0:
        raise DegenerateResultant(f"Res_y(p - u, q - v) = {R} is constant in x")
    return classify_resultant(R.subs({"u": c}), r_top.subs({"u": c}))
