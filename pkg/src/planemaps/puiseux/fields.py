"""Roots of univariate polynomials over Q or a simple extension Q[z]/(mu).

Newton polygon edges produce polynomials whose roots seed the next term of
an expansion.  One representative is chosen per irreducible factor.  An
irreducible factor of degree d > 1 is realized by adjoining a root, which then
stands for d conjugate branches.

Over an extension ``K = Q(a)`` a new root ``b`` is not adjoined on top of
``K``.  Instead ``K(b)`` is rebuilt as ``Q(g)`` with the primitive element
``g = b + s*a`` (Trager): its minimal polynomial is the irreducible factor of
the norm that produced the factor of ``f``, and ``a`` is recovered as the
common root of ``mu(Z)`` and ``h(g - s*Z)``.  Every coefficient field stays a
single simple extension of Q.  Factors over Q come from FLINT.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import flint
from gmpy2 import mpq

from ..algebra import MultiPoly
from ..algebra import dense
from ..algebra.scalars import AlgNum, Field, as_rational
from ..errors import InternalError, UnsupportedTower
from ..resultants import resultant


@dataclass(frozen=True)
class RootClass:
    """A root standing for ``weight`` conjugate roots, each of multiplicity ``mult``.

    ``embed`` maps the field of the input polynomial into ``field`` when the
    root lives in a larger field.
    """

    root: object
    mult: int
    field: Field
    weight: int
    embed: Optional[Callable] = None


def factor_q(coeffs: list) -> list[list]:
    """Monic irreducible factors over Q of a squarefree rational dense polynomial."""
    f = dense.primitive_integer(coeffs)
    _, factors = flint.fmpz_poly(f).factor()
    out = [dense.monic([mpq(int(c)) for c in g.coeffs()]) for g, _ in factors]
    return sorted(out, key=lambda g: (len(g), g))


def _rational_coeffs(f: list) -> list | None:
    out = []
    for c in f:
        q = as_rational(c)
        if q is None:
            return None
        out.append(q)
    return out


def _lift(c) -> MultiPoly:
    """An element of the current field as a polynomial in ``z``."""
    if isinstance(c, AlgNum):
        return MultiPoly.from_dense(list(c.coeffs), "z")
    return MultiPoly.const(c)


def _compose_shift(f: list, s, field: Field) -> list:
    """``f(X + s*a)`` for dense ``f`` over Q, with ``a`` the generator of ``field``."""
    shift = [field.gen() * s, mpq(1)] if s else [mpq(0), mpq(1)]
    out: list = []
    for c in reversed(f):
        out = dense.add(dense.mul(out, shift), [c] if c else [])
    return out


def _squarefree_norm(f: list, field: Field) -> tuple[int, list]:
    """A shift ``s`` and the norm of ``f(X - s*a)`` over Q, squarefree."""
    mu = MultiPoly.from_dense(list(field.modulus), "z")
    Z = MultiPoly.var("z")
    Yv = MultiPoly.var("y")
    lifted = [_lift(c) for c in f]
    for k in range(0, 20):
        s = (k + 1) // 2 * (1 if k % 2 else -1)
        arg = Yv - Z.scalar_mul(s)
        F = MultiPoly.const(0)
        for c in reversed(lifted):
            F = F * arg + c
        Nd = resultant(mu, F, "z").to_dense("y")
        if len(dense.gcd(Nd, dense.derivative(Nd))) == 1:
            return s, Nd
    raise UnsupportedTower("no squarefree norm found for factorization over the extension")


def factor_over_extension(f: list, field: Field) -> list[tuple[list, int, list]]:
    """Irreducible factors over ``field`` of squarefree dense ``f``.

    Each entry is ``(h, s, G)``: ``h`` monic over ``field`` and ``G`` the
    minimal polynomial over Q of ``b + s*a`` for a root ``b`` of ``h``.
    """
    s, Nd = _squarefree_norm(f, field)
    factors = []
    rest = dense.monic(f)
    for G in factor_q(Nd):
        h = dense.gcd(rest, _compose_shift(G, s, field))
        if len(h) > 1:
            factors.append((dense.monic(h), s, G))
            rest = dense.divmod_(rest, h)[0]
    if len(rest) > 1:
        raise InternalError("norm factors do not account for the whole polynomial")
    return factors


def _adjoin(h: list, s: int, G: list, K: Field) -> tuple[Field, object, Callable]:
    """``K(b) = Q(g)`` for a root ``b`` of ``h``: the field, ``b``, and ``K -> Q(g)``."""
    L = Field(G)
    g = L.gen()
    line = [g, mpq(-s)]  # g - s*Z
    H: list = []
    for c in reversed(h):
        low = list(c.coeffs) if isinstance(c, AlgNum) else [c]
        H = dense.add(dense.mul(H, line), dense.trim(low))
    common = dense.gcd(list(K.modulus), H)
    if len(common) != 2:
        raise InternalError("primitive element does not determine the old generator")
    a = -common[0] / common[1]

    def embed(c):
        if isinstance(c, AlgNum):
            return dense.evaluate(list(c.coeffs), a)
        return c

    return L, g - a * s, embed


def root_classes(f: list, field: Field) -> list[RootClass]:
    """Representatives of the roots of ``f`` (nonzero dense polynomial over ``field``)."""
    out: list[RootClass] = []
    for part, mult in dense.squarefree_decomposition(dense.monic(f)):
        if field.is_rational:
            for g in factor_q(_rational_coeffs(part)):
                if len(g) == 2:
                    out.append(RootClass(-g[0] / g[1], mult, field, 1))
                else:
                    ext = Field(g)
                    out.append(RootClass(ext.gen(), mult, ext, len(g) - 1))
            continue
        for h, s, G in factor_over_extension(part, field):
            if len(h) == 2:
                out.append(RootClass(-h[0] / h[1], mult, field, 1))
            else:
                L, b, embed = _adjoin(h, s, G, field)
                out.append(RootClass(b, mult, L, len(h) - 1, embed))
    return out
