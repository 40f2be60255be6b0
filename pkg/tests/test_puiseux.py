"""Newton-Puiseux expansion at infinity and branch images.

Residuals are checked by the Laurent-polynomial oracle in ``conftest``.
"""

from __future__ import annotations

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from conftest import assert_residual_vanishes, binomial_half, rationals, residual
from planemaps.algebra import MultiPoly
from planemaps.cli.corpus import CorpusConfig, generate_corpus
from planemaps.errors import (
    DegenerateFiber,
    DegenerateInput,
    InsufficientOrder,
    NotMonic,
)
from planemaps.maps import PolyMap2, monicize
from planemaps.puiseux import branch_image, expand_at_infinity

x, y = MultiPoly.var("x"), MultiPoly.var("y")


FIBERS = [
    (y**2 - x, 0),
    (y**2 - x, 1),
    (y**2 - x - 1, 0),
    (y**2 - x - 1, 1),
    (y**3 - x**2, 0),
    (y**3 - x**2, 1),
    (monicize(PolyMap2(y**2 - x**3, x))[0].p, 0),
    (monicize(PolyMap2(y**2 - x**3, x))[0].p, 1),
    (y**3 + x * y + x**2, 1),
]


def test_basic_examples():
    a, b = expand_at_infinity(y**2 - x, 0, 8)
    assert a.m == 2 and a.exact and b.exact
    assert sorted(br.coeffs for br in (a, b)) == [((1, -1),), ((1, 1),)]
    (br,) = expand_at_infinity(y, 5, 4)
    assert br.m == 1 and br.coeffs == ((0, 5),)


@pytest.mark.parametrize("p,c", FIBERS)
def test_residuals_and_counts(p, c):
    branches = expand_at_infinity(p, c, 12)
    assert sum(b.ramification for b in branches) == p.total_degree()
    for b in branches:
        assert b.m % p.total_degree() == 0
        assert 1 <= b.ramification <= p.total_degree()
        assert all(e <= b.m for e, _ in b.coeffs)
        assert_residual_vanishes(p, c, b)


def test_binomial_oracle():
    plus = [b for b in expand_at_infinity(y**2 - x, 1, 12) if b.coefficient(1) == 1]
    assert len(plus) == 1
    br = plus[0]
    assert [br.coefficient(1 - 2 * k) for k in range(4)] == [1, mpq(1, 2), mpq(-1, 8), mpq(1, 16)]
    for k in range(7):
        assert br.coefficient(1 - 2 * k) == mpq(binomial_half(k))
        assert br.coefficient(-2 * k) == 0


@given(rationals(height=5, allow_zero=False))
def test_binomial_oracle_any_fiber(c):
    # y = t * (1 + c/t**2)**(1/2) on y**2 - x = c
    for br in expand_at_infinity(y**2 - x, c, 10):
        sign = br.coefficient(1)
        for k in range(5):
            assert br.coefficient(1 - 2 * k) == sign * mpq(binomial_half(k)) * c**k


def test_algebraic_branch_representatives():
    branches = expand_at_infinity(y**3 - x**2, 1, 12)
    assert sorted(b.ramification for b in branches) == [1, 2]
    ext = [b for b in branches if b.ramification == 2][0]
    assert str(ext.field) == "QQ[z]/(z^2 + z + 1)"


@pytest.mark.parametrize("p", [(y**2 - 2 * x) ** 2 - 3 * x, (y**2 - 2 * x) ** 3 - 3 * x])
def test_nested_radicals_use_one_primitive_element(p):
    # sqrt(2x) and then a further radical: the tower collapses to Q(g)
    for c in (0, 1):
        (br,) = expand_at_infinity(p, c, 10)
        assert br.ramification == p.total_degree() == br.field.degree
        assert_residual_vanishes(p, c, br)


def test_refine_extends_without_changing_prefix():
    (b,) = [b for b in expand_at_infinity(y**2 - x, 1, 3) if b.coefficient(1) == 1]
    r = b.refine(11)
    assert r.order == 11
    for e, c in b.coeffs:
        assert r.coefficient(e) == c
    assert_residual_vanishes(y**2 - x, 1, r)


def test_expansion_errors():
    with pytest.raises(NotMonic):
        expand_at_infinity(x * y + 1, 0, 4)
    with pytest.raises(DegenerateInput):
        expand_at_infinity(y**2 - x, 0, 0)
    with pytest.raises(DegenerateFiber):
        expand_at_infinity((y - x) ** 2, 0, 4)


CORPUS = generate_corpus(CorpusConfig(n=40, seed=3, max_degree=9))


def test_corpus_fibers():
    for k, F in enumerate(CORPUS):
        W = monicize(F)[0]
        for c in (0, 1, mpq(k - 20, 7)):
            branches = expand_at_infinity(W.p, c, 6)
            assert sum(b.ramification for b in branches) == W.p.total_degree()
            for b in branches:
                assert_residual_vanishes(W.p, c, b)


# branch images


def test_branch_image_examples():
    (br,) = expand_at_infinity(y, 5, 4)
    img = branch_image(x + y**2, br)
    assert not img.bounded and img.series == ((1, 1), (0, 25))
    (br,) = expand_at_infinity(y, 0, 4)
    img = branch_image(x * y, br)
    assert img.bounded and img.b0 == 0 and img.b1 == 0
    a = [b for b in expand_at_infinity(y**2 - x, 0, 4) if b.coefficient(1) == 1][0]
    img = branch_image(y, a)
    assert not img.bounded and img.series == ((1, 1),)


def test_insufficient_order_reports_need():
    (b,) = [b for b in expand_at_infinity(y**2 - x, 1, 1) if b.coefficient(1) == 1]
    with pytest.raises(InsufficientOrder) as info:
        branch_image(y**2 - x, b)
    needed = info.value.needed
    assert needed > b.order
    img = branch_image(y**2 - x, b.refine(needed))
    assert img.bounded and img.b0 == 1 and img.b1 == 0


@given(st.integers(-3, 3), st.integers(-3, 3), rationals(height=4))
def test_image_matches_substitution(a, b, c):
    # on y**2 - x = c, q = a*y + b*x*y has w = a*y + b*(y**3 - c*y)
    q = y.scalar_mul(a) + (x * y).scalar_mul(b)
    for br in expand_at_infinity(y**2 - x, c, 10):
        img = branch_image(q, br)
        w = residual(q, 0, br.refine(12))
        if not (a or b):
            assert img.bounded and img.b0 == 0
            continue
        assert not img.bounded
        top = max(w)
        assert img.series[0] == (top, w[top])
        for e, val in img.series:  # the refined w is exact above t**-10
            assert w.get(e, 0) == val
