"""Irreducibility over Q for small polynomials in at most two variables.

Univariate factors are found by Kronecker's method: a factor of degree k is
pinned down by its values at k + 1 integer points, each of which must divide
the value of the polynomial there.  Candidates are assembled through Newton
divided differences; for an integer polynomial every divided difference at
integer nodes is an integer, which prunes most branches early.

Bivariate input is reduced to one variable by the Kronecker substitution
``b -> a**N`` with ``N > deg_a P``; every sub-product of the univariate
factors is mapped back and trial-divided.  Both stages are exponential.

The univariate image of a degree-8 bivariate polynomial can have degree 40,
far past what interpolation handles.  Large images therefore go through an
equivalent exact route: specialize ``b = b0``, factor the univariate
specialization by interpolation, lift the factors over ``Q[[b - b0]]`` and
recombine every subset.  Factor degrees that are impossible modulo a few small
primes are skipped in the interpolation search.
"""

from __future__ import annotations

from itertools import combinations
from itertools import product as cartesian
from math import gcd as igcd

import gmpy2
from gmpy2 import mpq

from ..algebra import dense
from ..algebra.gcd import content, squarefree_part
from ..algebra.poly import NVARS, VAR_INDEX, MultiPoly, exact_quotient
from ..errors import DegenerateInput, DegreeBoundExceeded, ZeroPolynomial

DEFAULT_BOUND = 8

_TRIAL_LIMIT = 100_000


def _eval(f: list[int], x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _positive_divisors(n: int) -> list[int] | None:
    """Divisors of ``|n|``; ``None`` if ``n`` resists trial factorization."""
    n = abs(n)
    primes: list[tuple[int, int]] = []
    p = 2
    while p * p <= n and p <= _TRIAL_LIMIT:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            primes.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        if n > _TRIAL_LIMIT ** 2 and not gmpy2.is_prime(n):
            return None
        primes.append((n, 1))
    divs = [1]
    for p, e in primes:
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _divides_int(h: list[int], f: list[int]) -> bool:
    q, r = dense.divmod_([mpq(c) for c in f], [mpq(c) for c in h])
    return not r


def _pick_points(f: list[int], count: int) -> list[tuple[int, list[int]]]:
    scored = []
    span = max(12, 3 * len(f))
    for x in sorted(range(-span, span + 1), key=abs):
        val = _eval(f, x)
        if val == 0:
            continue
        divs = _positive_divisors(val)
        if divs is None:
            continue
        scored.append((len(divs), abs(x), x, divs))
    if len(scored) < count:
        raise DegreeBoundExceeded("not enough factorable interpolation nodes")
    scored.sort()
    return [(x, divs) for _, _, x, divs in scored[:count]]


def _factor_of_degree(f: list[int], k: int) -> list[int] | None:
    nodes = _pick_points(f, k + 1)
    xs = [x for x, _ in nodes]
    lead = f[-1]
    # rows[j][l] is the divided difference h[x_{j-l}, ..., x_j]
    rows: list[list[int]] = []

    def search(j: int) -> list[int] | None:
        x_j, divs = nodes[j]
        choices = divs if j == 0 else [s * d for d in divs for s in (1, -1)]
        for d in choices:
            row = [d]
            for l in range(1, j + 1):
                num = row[l - 1] - rows[j - 1][l - 1]
                den = x_j - xs[j - l]
                if num % den:
                    break
                row.append(num // den)
            else:
                if j < k:
                    rows.append(row)
                    found = search(j + 1)
                    rows.pop()
                    if found is not None:
                        return found
                    continue
                if row[k] == 0 or lead % row[k]:
                    continue
                diag = [r[i] for i, r in enumerate(rows)] + [row[k]]
                h = _newton_to_coeffs(xs, diag)
                if h is not None and f[0] % h[0] == 0 and _divides_int(h, f):
                    return h
        return None

    return search(0)


def _newton_to_coeffs(xs: list[int], diag: list[int]) -> list[int] | None:
    """Coefficients of ``sum diag[l] * prod_{i<l} (X - xs[i])``."""
    coeffs = [0]
    basis = [1]
    for l, c in enumerate(diag):
        coeffs = [a + c * b for a, b in _zip_longest(coeffs, basis)]
        basis = _mul_linear(basis, -xs[l])
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) != len(diag) or coeffs[0] == 0:
        return None
    return coeffs


def _zip_longest(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]


def _mul_linear(p: list[int], r: int) -> list[int]:
    """``p * (X + r)``."""
    out = [0] * (len(p) + 1)
    for i, c in enumerate(p):
        out[i] += c * r
        out[i + 1] += c
    return out


_SIEVE_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23)


def _ptrim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pdivmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        k = len(a) - len(b)
        q[k] = c
        for i, bc in enumerate(b):
            a[k + i] = (a[k + i] - c * bc) % p
        _ptrim(a)
    return q, a


def _pmulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pdivmod(_ptrim(out), m, p)[1]


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    return a


def _degree_pattern(f: list[int], p: int) -> list[int] | None:
    """Degrees of the irreducible factors of ``f`` mod ``p`` (squarefree case)."""
    g = _ptrim([c % p for c in f])
    if len(g) != len(f):
        return None
    df = _ptrim([(i * c) % p for i, c in enumerate(g)][1:])
    if len(_pgcd(g, df, p)) > 1:
        return None
    degrees: list[int] = []
    h = [0, 1]
    d = 0
    while len(g) - 1 >= 2 * (d + 1):
        d += 1
        # h <- h**p mod g
        r, base, e = [1], h, p
        while e:
            if e & 1:
                r = _pmulmod(r, base, g, p)
            base = _pmulmod(base, base, g, p)
            e >>= 1
        h = r
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        c = _pgcd(g, _ptrim(diff), p)
        if len(c) > 1:
            degrees += [d] * ((len(c) - 1) // d)
            g = _pdivmod(g, c, p)[0]
            h = _pdivmod(h, g, p)[1]
    if len(g) > 1:
        degrees.append(len(g) - 1)
    return degrees


def possible_factor_degrees(f: list[int], primes=_SIEVE_PRIMES) -> set[int]:
    """Degrees a factor of squarefree integer ``f`` can have, from mod-p patterns."""
    n = len(f) - 1
    allowed = set(range(n + 1))
    for p in primes:
        pattern = _degree_pattern(f, p)
        if pattern is None:
            continue
        sums = {0}
        for d in pattern:
            sums |= {s + d for s in sums}
        allowed &= sums
        if len(allowed) <= 2:
            break
    return allowed


def find_factor(f: list[int]) -> list[int] | None:
    """A nontrivial factor of a primitive integer polynomial, or ``None``."""
    n = len(f) - 1
    if n < 2:
        return None
    if f[0] == 0:
        return [0, 1]
    allowed = possible_factor_degrees(f) if n > 3 else set(range(n + 1))
    for k in range(1, n // 2 + 1):
        if k not in allowed:
            continue
        h = _factor_of_degree(f, k)
        if h is not None:
            return h
    return None


def _split(f: list[int]) -> list[list[int]]:
    h = find_factor(f)
    if h is None:
        return [f]
    q, _ = dense.divmod_([mpq(c) for c in f], [mpq(c) for c in h])
    return _split(dense.primitive_integer(h)) + _split(dense.primitive_integer(q))


def factor_integer_poly(f: list[int], bound: int | None = None) -> list[tuple[list[int], int]]:
    """Irreducible primitive factors with multiplicities (units dropped)."""
    out: dict[tuple[int, ...], int] = {}
    for part, mult in dense.squarefree_decomposition([mpq(c) for c in f]):
        g = dense.primitive_integer(part)
        if bound is not None and len(g) - 1 > bound and len(g) > 2:
            raise DegreeBoundExceeded(f"factoring degree {len(g) - 1} exceeds bound {bound}")
        for piece in _split(g):
            key = tuple(piece)
            out[key] = out.get(key, 0) + mult
    return sorted(((list(k), m) for k, m in out.items()), key=lambda km: (len(km[0]), km[0]))


def factor_rational(coeffs, bound: int | None = None) -> list[tuple[list, int]]:
    """Monic irreducible factors over Q of a dense rational polynomial."""
    f = dense.primitive_integer(coeffs)
    return [(dense.monic([mpq(c) for c in g]), m) for g, m in factor_integer_poly(f, bound)]


def _integer_primitive(P: MultiPoly) -> MultiPoly:
    den = 1
    for c in P.coefficients():
        q = mpq(c)
        den = den * int(q.denominator) // igcd(den, int(q.denominator))
    Q = P.scalar_mul(den)
    g = 0
    for c in Q.coefficients():
        g = igcd(g, int(c))
    return Q.scalar_mul(mpq(1, g))


IMAGE_LIMIT = 12


def kronecker_irreducible(P: MultiPoly, degree_bound: int = DEFAULT_BOUND) -> bool:
    """True iff ``P`` (at most two variables, rational) is irreducible over Q."""
    if not P:
        raise ZeroPolynomial("irreducibility of the zero polynomial")
    names = P.variables()
    if len(names) > 2:
        raise DegenerateInput("Kronecker test handles at most two variables")
    if P.total_degree() > degree_bound:
        raise DegreeBoundExceeded(f"total degree {P.total_degree()} exceeds bound {degree_bound}")
    if P.is_constant():
        return False
    P = _integer_primitive(P)
    if len(names) == 1:
        f = [int(c) for c in P.to_dense(names[0])]
        return len(f) == 2 or find_factor(f) is None
    a, b = sorted(names, key=lambda w: (-P.degree(w), w))
    for w in (a, b):
        if not content(P.coeffs_in(w)).is_constant():
            return False
    if P.degree(b) == 1 or P.degree(a) == 1:
        return True
    if squarefree_part(P).total_degree() < P.total_degree():
        return False
    if P.degree(a) + (P.degree(a) + 1) * P.degree(b) <= IMAGE_LIMIT:
        return _substitution_factor(P, a, b) is None
    return _lifted_factor(P, a, b) is None


def _substitution_factor(P: MultiPoly, a: str, b: str) -> MultiPoly | None:
    """A proper factor of ``P`` via ``b -> a**N``, or ``None``."""
    N = P.degree(a) + 1
    U = P.subs({b: MultiPoly.var(a) ** N})
    f = [int(c) for c in U.to_dense(a)]
    factors = factor_integer_poly(f)
    half = (len(f) - 1) // 2
    total = P.total_degree()
    for mults in cartesian(*[range(m + 1) for _, m in factors]):
        deg = sum((len(g) - 1) * e for (g, _), e in zip(factors, mults))
        if deg == 0 or deg > half:
            continue
        h = [mpq(1)]
        for (g, _), e in zip(factors, mults):
            for _ in range(e):
                h = dense.mul(h, [mpq(c) for c in g])
        H = MultiPoly({_decode(i, N, a, b): c for i, c in enumerate(h) if c})
        if H.is_constant() or H.total_degree() >= total:
            continue
        if exact_quotient(P, H) is not None:
            return H
    return None


def _decode(e: int, N: int, a: str, b: str) -> tuple[int, ...]:
    vec = [0] * NVARS
    vec[VAR_INDEX[a]] = e % N
    vec[VAR_INDEX[b]] = e // N
    return tuple(vec)


def _monic_transform(P: MultiPoly, a: str) -> MultiPoly:
    """``lc**(d-1) * P(a / lc, b)``, monic in ``a``."""
    coeffs = P.coeffs_in(a)
    d = len(coeffs) - 1
    lead = coeffs[-1]
    A = MultiPoly.var(a)
    out = A ** d
    for k in range(d):
        if coeffs[k]:
            out = out + coeffs[k] * lead ** (d - 1 - k) * A ** k
    return out


def _table(Q: MultiPoly, a: str, b: str, K: int) -> list[list]:
    """``T[k]`` is the dense ``a``-polynomial multiplying ``b**k``."""
    T = [[] for _ in range(K)]
    for k, c in enumerate(Q.coeffs_in(b)):
        if k < K:
            T[k] = c.to_dense(a) if c else []
    return T


def _series_product(factors: list[list[list]], upto: int) -> list[list]:
    out: list[list] = [[mpq(1)]] + [[] for _ in range(upto)]
    for F in factors:
        nxt: list[list] = [[] for _ in range(upto + 1)]
        for i, A in enumerate(out):
            if not A:
                continue
            for j in range(upto + 1 - i):
                if j < len(F) and F[j]:
                    nxt[i + j] = dense.add(nxt[i + j], dense.mul(A, F[j]))
        out = nxt
    return out


def _lifted_factor(P: MultiPoly, a: str, b: str) -> MultiPoly | None:
    """A proper factor of the monic transform of ``P``, or ``None``.

    ``P`` must be squarefree with no factor free of ``a``.
    """
    d, lead = P.degree_and_lead(a)
    Pm = _monic_transform(P, a)
    for b0 in range(0, 64):
        b0 = (b0 + 1) // 2 * (1 if b0 % 2 else -1)
        if not lead.subs({b: b0}):
            continue
        g0 = P.subs({b: b0}).to_dense(a)
        if len(dense.gcd(g0, dense.derivative(g0))) > 1:
            continue
        break
    else:
        raise DegenerateInput("no squarefree specialization found")
    Q = Pm.subs({b: MultiPoly.var(b) + b0})
    K = Q.degree(b) + 1
    T = _table(Q, a, b, K)
    base = [f for f, _ in factor_rational(T[0])]
    r = len(base)
    if r == 1:
        return None
    cofactor_inv = []
    for i, fi in enumerate(base):
        others = [mpq(1)]
        for j, fj in enumerate(base):
            if j != i:
                others = dense.mul(others, fj)
        g, s_, _ = dense.xgcd(others, fi)
        cofactor_inv.append(dense.rem(dense.scale(s_, 1 / g[0]), fi))
    lifted = [[f] + [[] for _ in range(K - 1)] for f in base]
    for k in range(1, K):
        prod = _series_product(lifted, k)
        err = dense.sub(T[k], prod[k])
        if not err:
            continue
        for i, fi in enumerate(base):
            lifted[i][k] = dense.rem(dense.mul(cofactor_inv[i], err), fi)
    B = MultiPoly.var(b)
    for size in range(1, r // 2 + 1):
        for subset in combinations(range(r), size):
            G = _series_product([lifted[i] for i in subset], K - 1)
            H = MultiPoly.const(0)
            for k, coeffs in enumerate(G):
                if coeffs:
                    H = H + MultiPoly.from_dense(coeffs, a) * B ** k
            if exact_quotient(Q, H) is not None:
                return H.subs({b: B - b0})
    return None
