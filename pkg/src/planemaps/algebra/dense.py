"""Dense univariate polynomials over a field, as coefficient lists.

Lists are ordered low to high (``c[i]`` multiplies ``X**i``) and normalized
so the last entry is nonzero; the zero polynomial is ``[]``.  Coefficients may
be any field elements supporting ``+ - * /`` (``mpq`` or ``AlgNum``).
"""

from __future__ import annotations

from math import gcd as igcd
from typing import Sequence

from gmpy2 import mpq, mpz

_ONE = mpq(1)


def trim(a: Sequence) -> list:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def degree(a: Sequence) -> int:
    return len(a) - 1


def add(a: Sequence, b: Sequence) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(out)


def neg(a: Sequence) -> list:
    return [-c for c in a]


def sub(a: Sequence, b: Sequence) -> list:
    return add(a, neg(b))


def scale(a: Sequence, k) -> list:
    if not k:
        return []
    return trim([c * k for c in a])


def mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return trim(out)


def divmod_(a: Sequence, b: Sequence) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    inv = _ONE / b[-1]
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db] * inv
        if c:
            q[k] = c
            for j in range(db + 1):
                r[k + j] = r[k + j] - c * b[j]
    return trim(q), trim(r[:db])


def rem(a: Sequence, b: Sequence) -> list:
    return divmod_(a, b)[1]


def monic(a: Sequence) -> list:
    if not a:
        return []
    inv = _ONE / a[-1]
    return [c * inv for c in a[:-1]] + [a[-1] * inv]


def gcd(a: Sequence, b: Sequence) -> list:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def xgcd(a: Sequence, b: Sequence) -> tuple[list, list, list]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = [mpq(1)], []
    t0, t1 = [], [mpq(1)]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return [], [], []
    inv = _ONE / r0[-1]
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def derivative(a: Sequence) -> list:
    return trim([a[i] * i for i in range(1, len(a))])


def evaluate(a: Sequence, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def squarefree_decomposition(a: Sequence) -> list[tuple[list, int]]:
    """Yun's algorithm: monic squarefree ``f_i`` with ``a = lc * prod f_i**i``."""
    a = monic(trim(a))
    if len(a) <= 1:
        return []
    out = []
    da = derivative(a)
    b = gcd(a, da)
    c = divmod_(a, b)[0]
    d = sub(divmod_(da, b)[0], derivative(c))
    i = 1
    while len(c) > 1:
        g = gcd(c, d)
        if len(g) > 1:
            out.append((g, i))
        c_next = divmod_(c, g)[0]
        d = sub(divmod_(d, g)[0], derivative(c_next))
        c = c_next
        i += 1
    return out


def primitive_integer(a: Sequence) -> list[int]:
    """Scale a rational polynomial to a primitive integer one with positive lc."""
    a = trim(a)
    if not a:
        return []
    den = mpz(1)
    for c in a:
        d = int(mpq(c).denominator)
        den = den * d // igcd(int(den), d)
    ints = [int(mpq(c) * den) for c in a]
    g = 0
    for c in ints:
        g = igcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints

