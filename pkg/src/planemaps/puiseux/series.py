"""Truncated power series as dense coefficient lists (low to high).

Products are computed by packing a series over ``Q[z]/(mu)`` into a single
FLINT polynomial over Q: coefficient ``k`` occupies the slots
``k*w .. k*w + deg(mu) - 1`` with ``w = 2*deg(mu) - 1``, wide enough that
products of coordinates never overlap.  Each output slot block is then
reduced modulo ``mu``.
"""

from __future__ import annotations

from typing import Sequence

import flint
from gmpy2 import mpq

from ..algebra import dense
from ..algebra.scalars import AlgNum, from_fmpq, modulus_poly, to_fmpq

_ONE = mpq(1)


def valuation(a: Sequence) -> int | None:
    for i, c in enumerate(a):
        if c:
            return i
    return None


def truncate(a: Sequence, n: int) -> list:
    return dense.trim(list(a[:n]))


def _modulus(*series: Sequence):
    for a in series:
        for c in a:
            if isinstance(c, AlgNum):
                return c.modulus
    return None


def _pack(a: Sequence, width: int) -> flint.fmpq_poly:
    out: list = []
    for c in a:
        cs = c._p.coeffs() if isinstance(c, AlgNum) else ([to_fmpq(c)] if c else [])
        out.extend(cs)
        out.extend([0] * (width - len(cs)))
    return flint.fmpq_poly(out)


def _unpack(P: flint.fmpq_poly, width: int, n: int, mod) -> list:
    cs = P.coeffs()
    out: list = []
    if mod is None:
        out = [from_fmpq(c) for c in cs[:n]]
    else:
        M = modulus_poly(mod)
        for k in range(min(n, -(-len(cs) // width))):
            block = flint.fmpq_poly(cs[k * width : (k + 1) * width]) % M
            out.append(AlgNum._make(block, mod) if block.degree() > 0 else (from_fmpq(block[0]) if block else 0))
    return dense.trim(out)


def mul_trunc(a: Sequence, b: Sequence, n: int) -> list:
    if not a or not b or n <= 0:
        return []
    mod = _modulus(a, b)
    width = 1 if mod is None else 2 * (len(mod) - 1) - 1
    P = _pack(a[:n], width) * _pack(b[:n], width)
    return _unpack(P, width, n, mod)


def inverse(a: Sequence, n: int) -> list:
    """``1/a mod X**n`` for ``a[0] != 0``, by Newton iteration."""
    out = [_ONE / a[0]]
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        err = mul_trunc(a, out, prec)  # 1 + O(X**k)
        out = dense.sub(out, mul_trunc(out, dense.sub(err, [_ONE]), prec))
    return truncate(out, n)


def shift_up(a: Sequence, k: int) -> list:
    """``X**k * a``."""
    return [0] * k + list(a) if a else []


def spread(a: Sequence, b: int) -> list:
    """``a(X**b)``."""
    if b == 1 or not a:
        return list(a)
    out = [0] * ((len(a) - 1) * b + 1)
    for i, c in enumerate(a):
        out[i * b] = c
    return out


def horner(rows: Sequence[Sequence], S: Sequence, n: int | None) -> list:
    """``sum_j rows[j] * S**j``, truncated mod ``X**n`` unless ``n`` is None."""
    acc: list = []
    for row in reversed(rows):
        if n is None:
            acc = dense.add(dense.mul(acc, S), row)
        else:
            acc = dense.add(mul_trunc(acc, S, n), truncate(row, n))
    return acc
