"""Polynomial maps of the plane and the resultant invertibility test.

A map ``F = (p, q)`` is put in monic form by a shear ``(x, y) -> (x + t*y, y)``
followed by scaling each target coordinate.  In monic form ``p`` has
``y``-degree equal to its total degree with top ``y``-coefficient 1, so

    R(x, u, v) = Res_y(p - u, q - v) = r_top(u, v) * x**n + ... + r_zero(u, v)

behaves well under specialization.  ``F`` is an automorphism exactly when
``Res_y(p - u, q - v) = l1 * (x - g1)`` and ``Res_x(p - u, q - v) = l2 * (y - g2)``
with nonzero constants ``l1, l2``; then ``(g1, g2)`` is the inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Optional, Union

from gmpy2 import mpq, mpz

from .algebra import MultiPoly
from .algebra.scalars import ONE, Rat
from .errors import (
    DegenerateInput,
    DegenerateMap,
    DegreeBoundExceeded,
    InternalError,
    NotMonic,
)
from .resultants import kronecker_irreducible, resultant

X = MultiPoly.var("x")
Y = MultiPoly.var("y")
U = MultiPoly.var("u")
V = MultiPoly.var("v")

_SOURCE = {"x", "y"}


@dataclass(frozen=True)
class PolyMap2:
    """``(p, q)``, both nonzero polynomials in ``x`` and ``y``."""

    p: MultiPoly
    q: MultiPoly

    def __post_init__(self):
        for name, comp in (("p", self.p), ("q", self.q)):
            if not isinstance(comp, MultiPoly):
                raise TypeError(f"{name} must be a MultiPoly")
            if not comp:
                raise DegenerateMap(f"component {name} is the zero polynomial")
            extra = set(comp.variables()) - _SOURCE
            if extra:
                raise DegenerateInput(
                    f"component {name} uses variables {sorted(extra)} outside x, y"
                )

    @classmethod
    def identity(cls) -> "PolyMap2":
        return cls(X, Y)

    @property
    def degree(self) -> int:
        return max(self.p.total_degree(), self.q.total_degree())

    def __str__(self):
        return f"({self.p}, {self.q})"


@dataclass(frozen=True)
class JacobianReport:
    jac: MultiPoly
    is_keller: bool


@dataclass(frozen=True)
class NormalizationCertificate:
    """Monic form is ``(s1 * p(x + t*y, y), s2 * q(x + t*y, y))``."""

    shear: int
    target_scale: tuple

    def apply(self, F: PolyMap2) -> PolyMap2:
        S = {"x": X + Y.scalar_mul(self.shear), "y": Y}
        s1, s2 = self.target_scale
        return PolyMap2(F.p.subs(S).scalar_mul(s1), F.q.subs(S).scalar_mul(s2))


@dataclass(frozen=True)
class ResultantData:
    """``R = Res_y(p - u, q - v)`` with its top and bottom ``x``-coefficients.

    ``irreducible`` is ``None`` unless the Kronecker test applies to ``R``
    (at most two variables and within the degree bound).
    """

    R: MultiPoly
    n: int
    r_top: MultiPoly
    r_zero: MultiPoly
    irreducible: Optional[bool] = None


@dataclass(frozen=True)
class InverseCertificate:
    """Inverse ``(g1(u, v), g2(u, v))`` of the original map.

    ``lambda1`` and ``lambda2`` are the constant leading coefficients of the
    two resultants of the monic form.
    """

    g1: MultiPoly
    g2: MultiPoly
    lambda1: object
    lambda2: object

    def as_map(self) -> PolyMap2:
        """The inverse written in source variables (``u -> x``, ``v -> y``)."""
        ren = {"u": X, "v": Y}
        return PolyMap2(self.g1.subs(ren), self.g2.subs(ren))


@dataclass(frozen=True)
class NotInvertible:
    """Diagnostics when one of the two resultant conditions fails.

    ``failing`` lists ``"res_y"`` when ``Res_y(p - u, q - v)`` is not of the
    form ``l1 * (x - g1)`` and ``"res_x"`` for the other side.  ``n`` and
    ``n_y`` are the degrees of the two resultants in ``x`` and ``y``.
    """

    n: int
    r_top: MultiPoly
    failing: tuple
    n_y: int
    jacobian: MultiPoly = field(default_factory=lambda: MultiPoly.const(0))

    @property
    def reason(self) -> str:
        parts = []
        if "res_y" in self.failing:
            parts.append(f"Res_y(p - u, q - v) has degree {self.n} in x with leading coefficient {self.r_top}")
        if "res_x" in self.failing:
            parts.append(f"Res_x(p - u, q - v) has degree {self.n_y} in y")
        return "; ".join(parts)


def jacobian(F: PolyMap2) -> JacobianReport:
    J = F.p.diff("x") * F.q.diff("y") - F.p.diff("y") * F.q.diff("x")
    return JacobianReport(J, bool(J) and J.is_constant())


def _is_rational(P: MultiPoly) -> bool:
    return all(isinstance(c, Rat) for c in P.coefficients())


def _den_lcm(P: MultiPoly) -> int:
    return lcm(1, *(int(c.denominator) for c in P.coefficients()))


def _eval_scaled(P: MultiPoly, a, b, la, lb, d: int):
    """``den(P) * la**d * lb**d * P(a/la, b/lb)`` for integers ``a, b``.

    ``d`` must be at least the total degree of ``P``.
    """
    dP = _den_lcm(P)
    bpow = [mpz(1)]
    for _ in range(d):
        bpow.append(bpow[-1] * b)
    lbpow = [mpz(lb) ** k for k in range(d + 1)]
    rows = P.coeffs_in("x")
    r = len(rows) - 1
    acc = mpz(0)
    # Horner in a; the row for a**i enters with la**(r - i)
    for i in range(r, -1, -1):
        inner = mpz(0)
        if rows[i]:
            for j, c in enumerate(rows[i].to_dense("y")):
                if c:
                    inner += int(c * dP) * bpow[j] * lbpow[d - j]
        acc = acc * a + inner * mpz(la) ** (r - i)
    return acc * mpz(la) ** (d - r)


def _substitute_packed(P: MultiPoly, G1: MultiPoly, G2: MultiPoly) -> MultiPoly:
    """``P(G1, G2)`` for rational polynomials in ``x, y`` by Kronecker packing.

    After clearing denominators every coefficient of the result is an integer
    below ``2**(B-2)`` in absolute value and its ``x``-degree is below ``K``.
    Evaluating at ``x = 2**B``, ``y = 2**(B*K)`` therefore stores each
    coefficient in its own signed base-``2**B`` digit, and one big-integer
    evaluation recovers the whole polynomial exactly.
    """
    d = P.total_degree()
    if d == 0:
        return P
    l1, l2 = _den_lcm(G1), _den_lcm(G2)
    n1 = sum(abs(c) for c in G1.coefficients())
    n2 = sum(abs(c) for c in G2.coefficients())
    scale = _den_lcm(P) * l1**d * l2**d
    bound = scale * sum(abs(c) * n1 ** e[0] * n2 ** e[1] for e, c in P.terms())
    B = -(-((int(bound) + 1).bit_length() + 2) // 8) * 8
    K = d * max(G1.total_degree(), G2.total_degree(), 1) + 1
    x0 = mpz(1) << B
    y0 = mpz(1) << (B * K)
    a = _eval_scaled(G1, x0, y0, 1, 1, G1.total_degree())  # l1 * G1(x0, y0)
    b = _eval_scaled(G2, x0, y0, 1, 1, G2.total_degree())
    N = _eval_scaled(P, a, b, l1, l2, d)
    digits = K * K
    half = mpz(1) << (B - 1)
    offset = half * (((mpz(1) << (B * digits)) - 1) // ((mpz(1) << B) - 1))
    raw = int(N + offset).to_bytes(B // 8 * digits, "little")
    width = B // 8
    terms = {}
    inv = ONE / scale
    for k in range(digits):
        c = int.from_bytes(raw[k * width : (k + 1) * width], "little") - half
        if c:
            vec = [0] * 7
            vec[0], vec[1] = k % K, k // K
            terms[tuple(vec)] = mpq(c) * inv
    return MultiPoly(terms)


def compose(F: PolyMap2, G: PolyMap2) -> PolyMap2:
    """``F o G``."""
    if all(_is_rational(P) for P in (F.p, F.q, G.p, G.q)):
        return PolyMap2(_substitute_packed(F.p, G.p, G.q), _substitute_packed(F.q, G.p, G.q))
    sub = {"x": G.p, "y": G.q}
    return PolyMap2(F.p.subs(sub), F.q.subs(sub))


def top_form(P: MultiPoly) -> MultiPoly:
    d = P.total_degree()
    return MultiPoly({e: c for e, c in P.terms() if sum(e) == d})


def is_monic_in_y(P: MultiPoly) -> bool:
    """``y``-degree equals total degree and the ``y**d`` coefficient is 1."""
    d = P.total_degree()
    if d < 1 or P.degree("y") != d:
        return False
    return P.coeff_in("y", d) == 1


def require_monic(F: PolyMap2) -> None:
    if not is_monic_in_y(F.p):
        raise NotMonic(f"p = {F.p} is not monic in y of full degree; apply monicize first")


def monicize(F: PolyMap2) -> tuple[PolyMap2, NormalizationCertificate]:
    """Monic form of ``F`` with the minimal non-negative shear."""
    if F.p.is_constant() or F.q.is_constant():
        raise DegenerateMap("a component of the map is constant")
    tp, tq = top_form(F.p), top_form(F.q)
    t = 0
    while True:
        a = tp.subs({"x": t, "y": 1}).constant_value()
        b = tq.subs({"x": t, "y": 1}).constant_value()
        if a and b:
            break
        t += 1
    cert = NormalizationCertificate(t, (ONE / a, ONE / b))
    return cert.apply(F), cert


def _irreducibility(R: MultiPoly, degree_bound: int) -> Optional[bool]:
    if len(R.variables()) > 2 or R.total_degree() > degree_bound or R.is_constant():
        return None
    try:
        return kronecker_irreducible(R, degree_bound)
    except DegreeBoundExceeded:
        return None


def parametric_resultant(F: PolyMap2, degree_bound: int = 8) -> ResultantData:
    require_monic(F)
    R = resultant(F.p - U, F.q - V, "y")
    n, r_top = R.degree_and_lead("x")
    return ResultantData(R, n, r_top, R.coeff_in("x", 0), _irreducibility(R, degree_bound))


def sakkalis_check(D: ResultantData) -> bool:
    return D.n >= 1 and bool(D.r_zero)


def geometric_degree(F: PolyMap2) -> int:
    require_monic(F)
    if not jacobian(F).jac:
        raise DegenerateMap("the map is not dominant (Jacobian is zero)")
    return parametric_resultant(F).n


def nonproper_set(F: PolyMap2) -> MultiPoly:
    """``r_top(u, v)``; its zero set is where ``F`` fails to be proper."""
    return parametric_resultant(F).r_top


def invert(F: PolyMap2) -> Union[InverseCertificate, NotInvertible]:
    Fm, cert = monicize(F)
    Ry = resultant(Fm.p - U, Fm.q - V, "y")
    Rx = resultant(Fm.p - U, Fm.q - V, "x")
    n, lead_y = Ry.degree_and_lead("x")
    n_y, lead_x = Rx.degree_and_lead("y")
    failing = []
    if n != 1 or not lead_y.is_constant():
        failing.append("res_y")
    if n_y != 1 or not lead_x.is_constant():
        failing.append("res_x")
    if failing:
        return NotInvertible(n, lead_y, tuple(failing), n_y, jacobian(F).jac)
    lam1, lam2 = lead_y.constant_value(), lead_x.constant_value()
    g1 = -Ry.coeff_in("x", 0).scalar_mul(ONE / lam1)
    g2 = -Rx.coeff_in("y", 0).scalar_mul(ONE / lam2)
    s1, s2 = cert.target_scale
    scale = {"u": U.scalar_mul(s1), "v": V.scalar_mul(s2)}
    h1, h2 = g1.subs(scale), g2.subs(scale)
    out = InverseCertificate(h1 + h2.scalar_mul(cert.shear), h2, lam1, lam2)
    G = out.as_map()
    if compose(F, G) != PolyMap2.identity() or compose(G, F) != PolyMap2.identity():
        raise InternalError("resultant certificate does not invert the map")
    return out
