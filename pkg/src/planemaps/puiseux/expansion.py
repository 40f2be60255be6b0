"""Newton-Puiseux expansion at infinity of a fiber ``p(x, y) = c``.

With ``x = t**M`` (initially ``M = deg p``) every branch of the fiber has the
form ``y(t) = t**M * Y(1/t)`` for a power series ``Y``.  Writing ``s = 1/t``,
the series ``Y(s)`` are the roots of

    H(s, Y) = sum_ij p_ij * s**(M*(m - i - j)) * Y**j  -  c * s**(M*m),

a polynomial that is monic in ``Y`` because ``p`` is in monic form.  Roots
are separated by the Newton polygon.  An edge of slope ``a/b`` with ``b > 1``
means the branch ramifies beyond ``M``; the parameter is then refined by
``s -> s**b`` and ``M`` grows by the same factor.  Once a root is simple,
Newton iteration produces the remaining coefficients.

Coefficient fields stay within Q plus one simple extension; a root that
needs a further extension is absorbed by a primitive element.  Each
returned branch is a representative, and its ``ramification`` counts the
conjugate roots it stands for, so these counts add up to ``deg p``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from dataclasses import field as dc_field
from fractions import Fraction
from math import comb

from ..algebra import MultiPoly, dense
from ..algebra.gcd import gcd_multivar
from ..algebra.scalars import Field, field_of, to_rat
from ..errors import DegenerateFiber, DegenerateInput, InternalError, NotMonic
from . import series as ser
from .fields import root_classes

Rows = list  # Rows[j] is the dense series multiplying Y**j


@dataclass(frozen=True)
class _Seed:
    """Everything needed to extend a branch to a higher order."""

    rows: Rows | None  # simple-root equation, None when the root is exact
    prefix: tuple
    offset: int


@dataclass(frozen=True)
class PuiseuxBranch:
    """``x = t**m``, ``y(t) = sum b_e t**e`` exact for exponents ``> -order``."""

    m: int
    coeffs: tuple
    order: int
    field: Field
    ramification: int
    exact: bool = False
    _seed: _Seed | None = dc_field(default=None, repr=False, compare=False)

    def coefficient(self, exponent: int):
        for e, c in self.coeffs:
            if e == exponent:
                return c
        return 0

    def y_series(self) -> list:
        """``Y`` as a dense list: ``Y[k]`` is the coefficient of ``t**(m - k)``."""
        if not self.coeffs:
            return []
        out = [0] * (self.m - self.coeffs[-1][0] + 1)
        for e, c in self.coeffs:
            out[self.m - e] = c
        return out

    @property
    def known_terms(self) -> int | None:
        """Number of leading ``Y`` coefficients that are exact (None: all)."""
        return None if self.exact else self.m + self.order

    def refine(self, order: int) -> "PuiseuxBranch":
        if self.exact or order <= self.order:
            return replace(self, order=max(order, self.order))
        if self._seed is None:
            raise InternalError("branch carries no refinement data")
        Y, exact = _finish(self._seed, self.m + order)
        return replace(self, coeffs=_to_coeffs(Y, self.m, self.m + order), order=order, exact=exact)

    def __str__(self):
        terms = " + ".join(f"({c})*t^{e}" for e, c in self.coeffs) or "0"
        tail = "" if self.exact else f" + O(t^{-self.order})"
        return f"x = t^{self.m}, y = {terms}{tail}"


def _to_coeffs(Y: list, M: int, limit: int | None) -> tuple:
    out = []
    for k, c in enumerate(Y):
        if limit is not None and k >= limit:
            break
        if c:
            out.append((M - k, c))
    return tuple(out)


def fiber_equation(p: MultiPoly, c, M: int) -> Rows:
    """Rows of ``H(s, Y)`` for ``x = s**-M``, ``y = s**-M * Y``."""
    m = p.total_degree()
    rows: Rows = [[] for _ in range(m + 1)]
    for (i, j, *_), coef in p.terms():
        k = M * (m - i - j)
        rows[j] = dense.add(rows[j], ser.shift_up([coef], k))
    if c:
        rows[0] = dense.sub(rows[0], ser.shift_up([c], M * m))
    return rows


def _substitute(rows: Rows, gamma: int, zeta, shift: int) -> Rows:
    """Rows of ``G(s, s**gamma * (zeta + Y)) / s**shift``."""
    n = len(rows)
    out: Rows = [[] for _ in range(n)]
    for j, row in enumerate(rows):
        if not row:
            continue
        k = gamma * j - shift
        base = ser.shift_up(row, k) if k >= 0 else list(row[-k:])
        zpow = 1
        for i in range(j, -1, -1):
            coef = comb(j, i) * zpow
            if coef:
                out[i] = dense.add(out[i], dense.scale(base, coef))
            zpow = zpow * zeta
    while out and not out[-1]:
        out.pop()
    return out


def _lower_hull(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Vertices of the lower convex hull, left to right."""
    hull = [points[0]]
    i = 0
    while points[i][0] < points[-1][0]:
        best = None
        for k in range(i + 1, len(points)):
            slope = Fraction(points[k][1] - points[i][1], points[k][0] - points[i][0])
            if best is None or slope <= best[0]:
                best = (slope, k)
        i = best[1]
        hull.append(points[i])
    return hull


@dataclass
class _State:
    field: Field
    weight: int
    prefix: list
    offset: int
    M: int


class _Expander:
    def __init__(self, order: int):
        self.order = order
        self.out: list[PuiseuxBranch] = []

    def emit(self, st: _State, rows: Rows | None):
        seed = _Seed(rows, tuple(st.prefix), st.offset)
        Y, exact = _finish(seed, st.M + self.order)
        self.out.append(
            PuiseuxBranch(
                m=st.M,
                coeffs=_to_coeffs(Y, st.M, None if exact else st.M + self.order),
                order=self.order,
                field=st.field,
                ramification=st.weight,
                exact=exact,
                _seed=seed,
            )
        )

    def solve(self, rows: Rows, r: int, st: _State):
        """Expand the ``r`` roots of ``rows`` that have positive valuation."""
        if not rows[0]:
            # Y = 0 is an exact root; the remaining r - 1 are found after dividing by Y
            self.emit(st, None)
            rows = rows[1:]
            r -= 1
            if r == 0:
                return
            if not rows[0]:
                raise DegenerateFiber("the fiber polynomial has a repeated factor")
        if r == 1:
            self.emit(st, rows)
            return
        points = [(j, ser.valuation(rows[j])) for j in range(r + 1) if rows[j]]
        hull = _lower_hull(points)
        for (j0, v0), (j1, v1) in zip(hull, hull[1:]):
            gamma = Fraction(v0 - v1, j1 - j0)
            b = gamma.denominator
            sub_rows = [ser.spread(row, b) for row in rows] if b > 1 else rows
            g = int(gamma * b)
            shift = v0 * b + g * j0
            edge = [0] * (j1 - j0 + 1)
            for j in range(j0, j1 + 1):
                row = sub_rows[j]
                k = shift - g * j
                if row and 0 <= k < len(row):
                    edge[j - j0] = row[k]
            for rc in root_classes(dense.trim(edge), st.field):
                rows_k, prefix = sub_rows, st.prefix
                if rc.embed is not None:
                    rows_k = [[rc.embed(c) for c in row] for row in sub_rows]
                    prefix = [rc.embed(c) for c in prefix]
                nxt = _State(
                    field=rc.field,
                    weight=st.weight * rc.weight,
                    prefix=dense.add(ser.spread(prefix, b), ser.shift_up([rc.root], st.offset * b + g)),
                    offset=st.offset * b + g,
                    M=st.M * b,
                )
                self.solve(_substitute(rows_k, g, rc.root, shift), rc.mult, nxt)


def _finish(seed: _Seed, n: int) -> tuple[list, bool]:
    """``Y = prefix + s**offset * S`` modulo ``s**n``, and whether it is exact."""
    if seed.rows is None:
        return list(seed.prefix), True
    L = n - seed.offset
    S: list = []
    if L > 0:
        S = _newton(seed.rows, L)
    if len(S) < L and not ser.horner(seed.rows, S, None):
        exact = True
    else:
        exact = False
    Y = dense.add(list(seed.prefix), ser.shift_up(S, seed.offset))
    return (Y if exact else ser.truncate(Y, n)), exact


def _newton(rows: Rows, n: int) -> list:
    """The root ``S`` with ``S(0) = 0`` of ``G(s, S) = 0`` mod ``s**n``."""
    drows = [dense.scale(row, j) for j, row in enumerate(rows)][1:]
    S: list = []
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        g = ser.horner(rows, S, prec)
        gy = ser.horner(drows, S, prec)
        S = ser.truncate(dense.sub(S, ser.mul_trunc(g, ser.inverse(gy, prec), prec)), prec)
    return S


def _check_fiber(p: MultiPoly, c) -> None:
    P = p - MultiPoly.const(c)
    if P.is_constant():
        raise DegenerateFiber("the fiber polynomial is constant")
    g = gcd_multivar(P, P.diff("y"))
    if not g.is_constant():
        raise DegenerateFiber(f"p - c has the repeated factor {g}")


def expand_at_infinity(p: MultiPoly, c, order: int) -> list[PuiseuxBranch]:
    """Branches at infinity of ``p = c``, exact for exponents above ``-order``."""
    from ..maps import is_monic_in_y

    if order < 1:
        raise DegenerateInput("order must be at least 1")
    if set(p.variables()) - {"x", "y"}:
        raise DegenerateInput("p must be a polynomial in x and y")
    if not is_monic_in_y(p):
        raise NotMonic(f"p = {p} is not monic in y of full degree")
    if not hasattr(c, "modulus"):
        c = to_rat(c)
    _check_fiber(p, c)
    m = p.total_degree()
    K = field_of(list(p.coefficients()) + [c])
    rows = fiber_equation(p, c, m)
    top = [row[0] if row else 0 for row in rows]
    ex = _Expander(order)
    for rc in root_classes(dense.trim(top), K):
        st = _State(rc.field, rc.weight, [rc.root] if rc.root else [], 0, m)
        base = rows if rc.embed is None else [[rc.embed(a) for a in row] for row in rows]
        ex.solve(_substitute(base, 0, rc.root, 0), rc.mult, st)
    total = sum(b.ramification for b in ex.out)
    if total != m:
        raise InternalError(f"branch counts add up to {total}, expected {m}")
    return ex.out
