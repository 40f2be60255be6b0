"""Kronecker irreducibility test and univariate factoring, checked against sympy."""

from __future__ import annotations

import random

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from conftest import nonzero, polys
from planemaps.algebra import MultiPoly, dense, squarefree_part
from planemaps.algebra.gcd import content
from planemaps.errors import DegenerateInput, DegreeBoundExceeded, ZeroPolynomial
from planemaps.resultants import factor_integer_poly, factor_rational, kronecker_irreducible
from planemaps.resultants.kronecker import _integer_primitive, _lifted_factor, _substitution_factor

sympy = pytest.importorskip("sympy")

x, y, u, v = (MultiPoly.var(w) for w in "xyuv")


def sympy_irreducible(P: MultiPoly) -> bool:
    expr = sympy.sympify(str(P).replace("^", "**"))
    _, factors = sympy.factor_list(expr)
    return len(factors) == 1 and factors[0][1] == 1 and sympy.Poly(factors[0][0]).total_degree() > 0


def random_poly(rng: random.Random, names, degree: int, terms: int, height: int = 3) -> MultiPoly:
    out = MultiPoly.const(0)
    for _ in range(terms):
        budget = rng.randint(0, degree)
        i = rng.randint(0, budget)
        out = out + MultiPoly.monomial(rng.randint(-height, height), **{names[0]: i, names[1]: budget - i})
    return out


def test_examples():
    assert kronecker_irreducible(v**2 - u**3)
    assert kronecker_irreducible(v - u**2)
    assert not kronecker_irreducible((v - u) * (v + u))


def test_errors_and_units():
    with pytest.raises(DegreeBoundExceeded):
        kronecker_irreducible(u**9 + v)
    with pytest.raises(ZeroPolynomial):
        kronecker_irreducible(MultiPoly.const(0))
    with pytest.raises(DegenerateInput):
        kronecker_irreducible(x + y + u)
    assert not kronecker_irreducible(MultiPoly.const(3))
    assert kronecker_irreducible(u**9 + v, degree_bound=9)


def test_content_and_squares_are_reducible():
    assert not kronecker_irreducible(u * (v**2 + 1))
    assert not kronecker_irreducible((u**2 - v) ** 2)
    assert not kronecker_irreducible((u**2 + v**2 + 1) * (u**3 - v**2 + 2))


def test_univariate_factoring():
    f = [-6, 11, -6, 1]  # (t-1)(t-2)(t-3)
    assert sorted(g for g, _ in factor_integer_poly(f)) == [[-3, 1], [-2, 1], [-1, 1]]
    facs = factor_rational([mpq(1, 4), 0, 1])  # t^2 + 1/4
    assert facs == [([mpq(1, 4), 0, 1], 1)]
    facs = factor_rational([1, 2, 1])
    assert facs == [([1, 1], 2)]


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=8).filter(lambda c: c[-1] != 0))
def test_univariate_factoring_matches_sympy(coeffs):
    T = sympy.Symbol("t")
    expr = sum(c * T**i for i, c in enumerate(coeffs))
    expected = sorted(
        (sympy.Poly(g, T).degree(), m) for g, m in sympy.factor_list(expr)[1] if sympy.Poly(g, T).degree() > 0
    )
    factors = factor_rational([mpq(c) for c in coeffs])
    assert sorted((len(g) - 1, m) for g, m in factors) == expected
    product = [mpq(coeffs[-1])]
    for g, m in factors:
        for _ in range(m):
            product = dense.mul(product, g)
    assert product == [mpq(c) for c in coeffs]


@pytest.mark.parametrize("seed", range(4))
def test_bivariate_matches_sympy(seed):
    rng = random.Random(seed)
    for _ in range(25):
        if rng.random() < 0.5:
            P = random_poly(rng, "uv", 4, 5)
        else:
            P = random_poly(rng, "uv", 3, 3) * random_poly(rng, "uv", 3, 3)
        if P.is_constant() or P.total_degree() > 8:
            continue
        assert kronecker_irreducible(P) == sympy_irreducible(P), str(P)


def test_both_routes_agree():
    rng = random.Random(11)
    checked = 0
    while checked < 30:
        A = random_poly(rng, "uv", 2, 3)
        B = random_poly(rng, "uv", 2, 3)
        P = A * B if checked % 2 else A * B + 1
        if len(P.variables()) < 2 or P.degree("u") < 2 or P.degree("v") < 2:
            continue
        P = _integer_primitive(P)
        if squarefree_part(P).total_degree() < P.total_degree():
            continue
        if any(not content(P.coeffs_in(w)).is_constant() for w in "uv"):
            continue  # both routes assume no factor free of either variable
        a, b = sorted(P.variables(), key=lambda w: (-P.degree(w), w))
        by_substitution = _substitution_factor(P, a, b) is None
        by_lifting = _lifted_factor(P, a, b) is None
        assert by_substitution == by_lifting, str(P)
        checked += 1


@given(nonzero(polys(("u", "v"), max_degree=3, max_terms=3)), nonzero(polys(("u", "v"), max_degree=3, max_terms=3)))
def test_products_are_reducible(A, B):
    if A.is_constant() or B.is_constant():
        return
    assert not kronecker_irreducible(A * B)
