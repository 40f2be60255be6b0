"""Exact scalars: rationals and elements of one simple algebraic extension.

Rationals are ``gmpy2.mpq`` values, which are always reduced with a positive
denominator.  ``AlgNum`` models ``Q[z]/(mu)`` for a monic ``mu``; elements of
two different extensions never mix.  Extension arithmetic is delegated to
FLINT polynomials over Q.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

import flint
from gmpy2 import mpq, mpz

from ..errors import IncompatibleField, NonInvertibleElement
from . import dense

Rat = type(mpq(0))

ZERO = mpq(0)
ONE = mpq(1)


def to_rat(value) -> Rat:
    """Coerce ints, Fractions, ``"a/b"`` strings and mpq to an exact rational."""
    if isinstance(value, Rat):
        return value
    if isinstance(value, bool):
        return mpq(int(value))
    if isinstance(value, (int, type(mpz(0)))):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, Rational):
        return mpq(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return mpq(int(num), int(den))
        return mpq(int(text))
    raise TypeError(f"cannot convert {value!r} to an exact rational")


def format_rat(q) -> str:
    q = to_rat(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Field:
    """Q (``modulus is None``) or ``Q[z]/(modulus)`` with ``modulus`` monic."""

    __slots__ = ("modulus",)

    def __init__(self, modulus: Sequence | None = None):
        if modulus is not None:
            mod = tuple(to_rat(c) for c in modulus)
            if len(mod) < 2 or mod[-1] != 1:
                raise ValueError("extension modulus must be monic of degree >= 1")
            modulus = mod
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    @property
    def degree(self) -> int:
        return 1 if self.modulus is None else len(self.modulus) - 1

    @property
    def is_rational(self) -> bool:
        return self.modulus is None

    def gen(self) -> "AlgNum":
        if self.modulus is None:
            raise ValueError("Q has no generator")
        coeffs = [ZERO] * self.degree
        if self.degree == 1:
            coeffs[0] = -self.modulus[0]
        else:
            coeffs[1] = ONE
        return AlgNum(coeffs, self.modulus)

    def __call__(self, value):
        if isinstance(value, AlgNum):
            if self.modulus is None or value.modulus != self.modulus:
                raise IncompatibleField("element belongs to a different field")
            return value
        q = to_rat(value)
        return q if self.modulus is None else AlgNum([q], self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self.modulus == other.modulus

    def __hash__(self):
        return hash(("Field", self.modulus))

    def __repr__(self):
        if self.modulus is None:
            return "QQ"
        return f"QQ[z]/({modulus_text(self.modulus)})"

    def to_json(self):
        return None if self.modulus is None else modulus_text(self.modulus)


QQ = Field(None)


def modulus_text(mod: Sequence) -> str:
    from .poly import MultiPoly

    return str(MultiPoly.from_dense(mod, "z"))


_MODULI: dict = {}


def to_fmpq(c) -> flint.fmpq:
    q = to_rat(c)
    return flint.fmpq(int(q.numerator), int(q.denominator))


def from_fmpq(f) -> Rat:
    return mpq(int(f.p), int(f.q))


def modulus_poly(mod: tuple) -> flint.fmpq_poly:
    P = _MODULI.get(mod)
    if P is None:
        P = _MODULI[mod] = flint.fmpq_poly([to_fmpq(c) for c in mod])
    return P


class AlgNum:
    """An element of ``Q[z]/(mu)``, kept reduced modulo ``mu``.

    Arithmetic runs on FLINT rational polynomials; ``coeffs`` exposes the
    ``deg(mu)`` rational coordinates.
    """

    __slots__ = ("_p", "modulus")

    def __init__(self, coeffs: Iterable, modulus: Sequence):
        mod = tuple(to_rat(c) for c in modulus)
        P = flint.fmpq_poly([to_fmpq(c) for c in coeffs]) % modulus_poly(mod)
        object.__setattr__(self, "_p", P)
        object.__setattr__(self, "modulus", mod)

    @classmethod
    def _make(cls, P, modulus: tuple) -> "AlgNum":
        out = object.__new__(cls)
        object.__setattr__(out, "_p", P)
        object.__setattr__(out, "modulus", modulus)
        return out

    def __setattr__(self, name, value):
        raise AttributeError("AlgNum is immutable")

    @property
    def coeffs(self) -> tuple:
        d = len(self.modulus) - 1
        cs = [from_fmpq(c) for c in self._p.coeffs()]
        return tuple(cs) + (ZERO,) * (d - len(cs))

    @property
    def field(self) -> Field:
        return Field(self.modulus)

    def is_rational(self) -> bool:
        return self._p.degree() <= 0

    def _lift(self, other):
        if isinstance(other, AlgNum):
            if other.modulus is not self.modulus and other.modulus != self.modulus:
                raise IncompatibleField("arithmetic across two different algebraic extensions")
            return other._p
        if isinstance(other, (Rat, int, Fraction, type(mpz(0)))):
            return to_fmpq(other)
        return None

    def _new(self, P) -> "AlgNum":
        return AlgNum._make(P, self.modulus)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._new(self._p + o)

    __radd__ = __add__

    def __neg__(self):
        return self._new(-self._p)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._new(self._p - o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._new(o - self._p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if isinstance(o, flint.fmpq):
            return self._new(self._p * o)
        return self._new((self._p * o) % modulus_poly(self.modulus))

    __rmul__ = __mul__

    def inverse(self) -> "AlgNum":
        g, s, _ = self._p.xgcd(modulus_poly(self.modulus))
        if g.degree() != 0:
            raise NonInvertibleElement(f"{self} is not invertible modulo {modulus_text(self.modulus)}")
        return self._new(s / g[0])

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if isinstance(other, AlgNum):
            return self * other.inverse()
        if not o:
            raise ZeroDivisionError("division by zero")
        return self._new(self._p / o)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self._new(flint.fmpq_poly([1]))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return not self._p.is_zero()

    def __eq__(self, other):
        if isinstance(other, AlgNum):
            return self.modulus == other.modulus and self._p == other._p
        try:
            q = to_rat(other)
        except TypeError:
            return NotImplemented
        return self.is_rational() and self.coeffs[0] == q

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.coeffs, self.modulus))

    def __repr__(self):
        return f"AlgNum({self})"

    def __str__(self):
        from .poly import MultiPoly

        return str(MultiPoly.from_dense(self.coeffs, "z"))


Scalar = Union[Rat, AlgNum]


def field_of(values: Iterable) -> Field:
    """The smallest supported field containing all ``values``."""
    modulus = None
    for c in values:
        if isinstance(c, AlgNum):
            if modulus is None:
                modulus = c.modulus
            elif c.modulus != modulus:
                raise IncompatibleField("values from two different algebraic extensions")
    return Field(modulus)


def as_rational(c) -> Rat | None:
    """Return ``c`` as an mpq when it is rational, else ``None``."""
    if isinstance(c, AlgNum):
        return c.coeffs[0] if c.is_rational() else None
    return to_rat(c)


def format_scalar(c) -> str:
    if isinstance(c, AlgNum):
        q = as_rational(c)
        return format_rat(q) if q is not None else str(c)
    return format_rat(c)
