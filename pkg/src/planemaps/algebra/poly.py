"""Sparse multivariate polynomials over Q or a simple algebraic extension.

The variable universe is fixed to ``x, y, u, v, t, s, z``.  Internally a
monomial is one integer holding 16 bits per exponent with ``x`` in the most
significant slot, so comparing keys is lexicographic order with
``x > y > u > v > t > s > z`` and multiplying monomials is integer addition.
"""

from __future__ import annotations

import heapq
import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq, mpz

from ..errors import ZeroPolynomial
from .scalars import ONE, AlgNum, Rat, format_rat, to_rat

VARS = ("x", "y", "u", "v", "t", "s", "z")
NVARS = len(VARS)
VAR_INDEX = {name: i for i, name in enumerate(VARS)}

_BITS = 16
_MASK = (1 << _BITS) - 1
_SHIFT = tuple((NVARS - 1 - i) * _BITS for i in range(NVARS))
_GUARD = sum(1 << (sh + _BITS - 1) for sh in _SHIFT)
MAX_DEGREE = (1 << (_BITS - 1)) - 1

# degree of the zero polynomial in any variable
ZERO_DEGREE = -math.inf

_SCALAR_TYPES = (int, Rat, type(mpz(0)), Fraction, AlgNum)


def _pack(exps: Sequence[int]) -> int:
    key = 0
    for e, sh in zip(exps, _SHIFT):
        if e < 0 or e > MAX_DEGREE:
            raise ValueError(f"exponent {e} out of range")
        key |= e << sh
    return key


def _unpack(key: int) -> tuple[int, ...]:
    return tuple((key >> sh) & _MASK for sh in _SHIFT)


def _key_tdeg(key: int) -> int:
    total = 0
    while key:
        total += key & _MASK
        key >>= _BITS
    return total


def _divides(a: int, b: int) -> bool:
    """True iff monomial ``a`` divides monomial ``b``."""
    return ((b | _GUARD) - a) & _GUARD == _GUARD


def _var_index(w: str) -> int:
    try:
        return VAR_INDEX[w]
    except KeyError:
        raise ValueError(f"unknown variable {w!r}; universe is {VARS}") from None


def _coerce_coeff(c):
    if isinstance(c, AlgNum):
        return c
    return to_rat(c)


class MultiPoly:
    """Immutable sparse polynomial; ``terms`` maps exponent vectors to coefficients."""

    __slots__ = ("_t", "_tdeg", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], object] | None = None):
        d = {}
        if terms:
            for exps, c in terms.items():
                c = _coerce_coeff(c)
                if c:
                    exps = tuple(exps) + (0,) * (NVARS - len(exps))
                    key = _pack(exps)
                    d[key] = d[key] + c if key in d else c
            d = {k: c for k, c in d.items() if c}
        self._t = d
        self._tdeg = None
        self._hash = None

    @classmethod
    def _raw(cls, d: dict) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj._t = d
        obj._tdeg = None
        obj._hash = None
        return obj

    # ----------------------------------------------------------- builders
    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls._raw({1 << _SHIFT[_var_index(name)]: ONE})

    @classmethod
    def const(cls, c) -> "MultiPoly":
        c = _coerce_coeff(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, c, **exps: int) -> "MultiPoly":
        vec = [0] * NVARS
        for name, e in exps.items():
            vec[_var_index(name)] = e
        c = _coerce_coeff(c)
        return cls._raw({_pack(vec): c} if c else {})

    @classmethod
    def from_dense(cls, coeffs: Sequence, w: str) -> "MultiPoly":
        sh = _SHIFT[_var_index(w)]
        d = {}
        for k, c in enumerate(coeffs):
            c = _coerce_coeff(c)
            if c:
                d[k << sh] = c
        return cls._raw(d)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence["MultiPoly"], w: str) -> "MultiPoly":
        """Inverse of :meth:`coeffs_in`: ``sum(coeffs[k] * w**k)``."""
        sh = _SHIFT[_var_index(w)]
        d = {}
        for k, c in enumerate(coeffs):
            if c is None:
                continue
            off = k << sh
            for key, a in c._t.items():
                d[key + off] = a
        return cls._raw(d)

    # ---------------------------------------------------------- inspection
    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_value(self):
        """The constant term (zero if absent)."""
        return self._t.get(0, mpq(0))

    def terms(self) -> list[tuple[tuple[int, ...], object]]:
        """Terms in graded lexicographic order, highest first."""
        keys = sorted(self._t, key=lambda k: (_key_tdeg(k), k), reverse=True)
        return [(_unpack(k), self._t[k]) for k in keys]

    def coefficients(self) -> list:
        return list(self._t.values())

    def total_degree(self):
        if self._tdeg is None:
            self._tdeg = max((_key_tdeg(k) for k in self._t), default=ZERO_DEGREE)
        return self._tdeg

    def degree(self, w: str):
        if not self._t:
            return ZERO_DEGREE
        sh = _SHIFT[_var_index(w)]
        return max((k >> sh) & _MASK for k in self._t)

    def variables(self) -> tuple[str, ...]:
        used = 0
        for k in self._t:
            used |= k
        return tuple(name for name, sh in zip(VARS, _SHIFT) if (used >> sh) & _MASK)

    def lead_key(self) -> int:
        return max(self._t)

    def lc(self):
        """Leading coefficient in lex order ``x > y > u > v > t > s > z``."""
        if not self._t:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self._t[max(self._t)]

    def lead_exponents(self) -> tuple[int, ...]:
        return _unpack(self.lead_key())

    def coeffs_in(self, w: str) -> list["MultiPoly"]:
        """Coefficients ``c_k`` (free of ``w``) with ``self = sum c_k w**k``."""
        if not self._t:
            return []
        sh = _SHIFT[_var_index(w)]
        buckets: dict[int, dict] = {}
        for key, c in self._t.items():
            e = (key >> sh) & _MASK
            buckets.setdefault(e, {})[key - (e << sh)] = c
        out = [MultiPoly._raw({})] * (max(buckets) + 1)
        for e, d in buckets.items():
            out[e] = MultiPoly._raw(d)
        return out

    def coeff_in(self, w: str, k: int) -> "MultiPoly":
        sh = _SHIFT[_var_index(w)]
        return MultiPoly._raw({key - (k << sh): c for key, c in self._t.items() if (key >> sh) & _MASK == k})

    def degree_and_lead(self, w: str) -> tuple[int, "MultiPoly"]:
        if not self._t:
            raise ZeroPolynomial("degree_and_lead of the zero polynomial")
        d = self.degree(w)
        return d, self.coeff_in(w, d)

    def to_dense(self, w: str) -> list:
        """Coefficient list of a polynomial in ``w`` alone."""
        extra = set(self.variables()) - {w}
        if extra:
            raise ValueError(f"polynomial involves {sorted(extra)} besides {w}")
        sh = _SHIFT[_var_index(w)]
        if not self._t:
            return []
        out = [mpq(0)] * (self.degree(w) + 1)
        for key, c in self._t.items():
            out[key >> sh] = c
        return out

    # ---------------------------------------------------------- arithmetic
    @staticmethod
    def _lift(other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, _SCALAR_TYPES):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if len(o._t) > len(self._t):
            big, small = o._t, self._t
        else:
            big, small = self._t, o._t
        d = dict(big)
        for k, c in small.items():
            if k in d:
                s = d[k] + c
                if s:
                    d[k] = s
                else:
                    del d[k]
            else:
                d[k] = c
        return MultiPoly._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        d = dict(self._t)
        for k, c in o._t.items():
            if k in d:
                s = d[k] - c
                if s:
                    d[k] = s
                else:
                    del d[k]
            else:
                d[k] = -c
        return MultiPoly._raw(d)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def scalar_mul(self, c) -> "MultiPoly":
        c = _coerce_coeff(c)
        if not c:
            return MultiPoly._raw({})
        return MultiPoly._raw({k: a * c for k, a in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scalar_mul(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return MultiPoly._raw({})
        if self.total_degree() + other.total_degree() > MAX_DEGREE:
            raise OverflowError("product degree exceeds the supported exponent range")
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            return MultiPoly._raw({ka + kb: ca * cb for ka, ca in a.items()})
        d: dict = {}
        get = d.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                d[k] = get(k, 0) + ca * cb
        return MultiPoly._raw({k: c for k, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, w: str, k: int) -> "MultiPoly":
        """Multiply by ``w**k``."""
        off = k << _SHIFT[_var_index(w)]
        return MultiPoly._raw({key + off: c for key, c in self._t.items()})

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._t == other._t
        if isinstance(other, _SCALAR_TYPES):
            return self._t == MultiPoly.const(other)._t
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # ---------------------------------------------------------- calculus
    def diff(self, w: str) -> "MultiPoly":
        sh = _SHIFT[_var_index(w)]
        unit = 1 << sh
        d = {}
        for key, c in self._t.items():
            e = (key >> sh) & _MASK
            if e:
                d[key - unit] = c * e
        return MultiPoly._raw(d)

    def subs(self, mapping: Mapping[str, object]) -> "MultiPoly":
        """Simultaneous substitution of polynomials (or scalars) for variables."""
        items = [(w, v) for w, v in mapping.items()]
        if not items or not self._t:
            return self
        shifts = [_SHIFT[_var_index(w)] for w, _ in items]
        values = [v if isinstance(v, MultiPoly) else MultiPoly.const(v) for _, v in items]
        clear = 0
        for sh in shifts:
            clear |= _MASK << sh
        groups: dict[tuple, dict] = {}
        for key, c in self._t.items():
            sub = tuple((key >> sh) & _MASK for sh in shifts)
            groups.setdefault(sub, {})[key & ~clear] = c
        powers = [[MultiPoly.const(1)] for _ in values]

        def power(i, e):
            cache = powers[i]
            while len(cache) <= e:
                cache.append(cache[-1] * values[i])
            return cache[e]

        acc: dict = {}
        for sub, rest in groups.items():
            factor = MultiPoly._raw(rest)
            for i, e in enumerate(sub):
                if e:
                    factor = factor * power(i, e)
            for k, c in factor._t.items():
                s = acc.get(k, 0) + c
                if s:
                    acc[k] = s
                else:
                    acc.pop(k, None)
        return MultiPoly._raw(acc)

    def __call__(self, **assignments) -> "MultiPoly":
        return self.subs(assignments)

    def monic(self) -> "MultiPoly":
        """Scale so the lex-leading coefficient is 1 (zero stays zero)."""
        if not self._t:
            return self
        lc = self.lc()
        if lc == 1:
            return self
        inv = ONE / lc
        return MultiPoly._raw({k: c * inv for k, c in self._t.items()})

    # ---------------------------------------------------------- printing
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({format_poly(self)!r})"


def _format_monomial(exps: Sequence[int]) -> str:
    parts = []
    for name, e in zip(VARS, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(P: MultiPoly) -> str:
    """Deterministic text form: graded lex, highest term first, explicit ``*``."""
    if not P:
        return "0"
    out = []
    for exps, c in P.terms():
        mono = _format_monomial(exps)
        if isinstance(c, AlgNum) and not c.is_rational():
            body = f"({c})"
            sign = "+"
            text = f"{body}*{mono}" if mono else body
        else:
            q = c.coeffs[0] if isinstance(c, AlgNum) else c
            sign = "-" if q < 0 else "+"
            mag = format_rat(abs(q))
            if mono:
                text = mono if mag == "1" else f"{mag}*{mono}"
            else:
                text = mag
        if not out:
            out.append(text if sign == "+" else f"-{text}")
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


X, Y, U, V, T, S, Z = (MultiPoly.var(w) for w in VARS)


def poly_arith(P: MultiPoly, Q: MultiPoly | None, op: str, scalar=None) -> MultiPoly:
    """Dispatch ``add``, ``sub``, ``mul``, ``neg`` or ``scalar_mul`` by name."""
    if op == "add":
        return P + Q
    if op == "sub":
        return P - Q
    if op == "mul":
        return P * Q
    if op == "neg":
        return -P
    if op == "scalar_mul":
        return P.scalar_mul(scalar)
    raise ValueError(f"unknown operation {op!r}")


def partial_derivative(P: MultiPoly, w: str) -> MultiPoly:
    return P.diff(w)


def substitute(P: MultiPoly, assignments: Mapping[str, object]) -> MultiPoly:
    return P.subs(assignments)


def degree_and_lead(P: MultiPoly, w: str) -> tuple[int, MultiPoly]:
    return P.degree_and_lead(w)


def exact_quotient(P: MultiPoly, Q: MultiPoly) -> MultiPoly | None:
    """``P / Q`` when ``Q`` divides ``P`` exactly, else ``None``."""
    if not Q:
        raise ZeroDivisionError("division by the zero polynomial")
    if not P:
        return P
    qt = Q._t
    if len(qt) == 1:
        (kq, cq), = qt.items()
        inv = ONE / cq
        out = {}
        for k, c in P._t.items():
            if not _divides(kq, k):
                return None
            out[k - kq] = c * inv
        return MultiPoly._raw(out)
    lq = max(qt)
    inv = ONE / qt[lq]
    rest = [(k, c) for k, c in qt.items() if k != lq]
    r = dict(P._t)
    heap = [-k for k in r]
    heapq.heapify(heap)
    quo = {}
    while r:
        k = -heapq.heappop(heap)
        c = r.get(k)
        if c is None:
            continue
        if not _divides(lq, k):
            return None
        m = k - lq
        f = c * inv
        quo[m] = f
        del r[k]
        for kq, cq in rest:
            kk = kq + m
            old = r.get(kk)
            if old is None:
                r[kk] = -f * cq
                heapq.heappush(heap, -kk)
            else:
                s = old - f * cq
                if s:
                    r[kk] = s
                else:
                    del r[kk]
    return MultiPoly._raw(quo)


def divides(Q: MultiPoly, P: MultiPoly) -> bool:
    return exact_quotient(P, Q) is not None


def as_poly(value) -> MultiPoly:
    if isinstance(value, MultiPoly):
        return value
    return MultiPoly.const(value)


def product(items: Iterable[MultiPoly]) -> MultiPoly:
    acc = MultiPoly.const(1)
    for p in items:
        acc = acc * p
    return acc
