import itertools
from fractions import Fraction
from math import comb, isqrt, sqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simplexcodes.combinat import (
    RadicalSum,
    SqrtRational,
    composition,
    d1,
    enumerate_simplex,
    generalized_binomial,
    multinomial,
    multinomial_ratio_check,
    simplex_index,
    simplex_size,
    squarefree_decompose,
    vandermonde_identity_check,
)


def brute_simplex(q, N):
    return sorted(p for p in itertools.product(range(N + 1), repeat=q) if sum(p) == N)


@pytest.mark.parametrize("q,N,size", [(3, 3, 10), (1, 5, 1), (4, 4, 35)])
def test_simplex_sizes(q, N, size):
    pts = enumerate_simplex(q, N)
    assert len(pts) == size == simplex_size(q, N) == comb(N + q - 1, q - 1)
    assert sorted(pts) == brute_simplex(q, N)


def test_single_part_simplex():
    assert enumerate_simplex(1, 5) == [(5,)]


def test_index_is_canonical_order():
    pts = enumerate_simplex(3, 4)
    assert simplex_index(3, 4) == {p: i for i, p in enumerate(pts)}
    assert len(set(pts)) == len(pts)


@pytest.mark.parametrize(
    "N,n,value", [(3, (1, 0, 2), 3), (5, (5, 0), 1), (4, (1, 1, 2, 1), 0)]
)
def test_multinomial(N, n, value):
    assert multinomial(N, n) == value


def test_multinomial_counts_strings():
    for n in enumerate_simplex(3, 4):
        strings = [s for s in itertools.product(range(3), repeat=4) if composition(s, 3) == n]
        assert len(strings) == multinomial(4, n)


@pytest.mark.parametrize("x,q,value", [("022", 3, (1, 0, 2)), ("", 2, (0, 0)), ("210210", 3, (2, 2, 2))])
def test_composition(x, q, value):
    assert composition(x, q) == value


@pytest.mark.parametrize(
    "x,y,value",
    [((3, 0, 0), (1, 1, 1), 2), ((2, 1), (2, 1), 0), ((6, 0, 0, 0, 0, 0), (3, 3, 0, 0, 0, 0), 3)],
)
def test_d1(x, y, value):
    assert d1(x, y) == value


@pytest.mark.parametrize(
    "top,k,value",
    [(Fraction(7, 2), 2, Fraction(35, 8)), (5, 2, 10), (Fraction(5, 2), 2, Fraction(15, 8)), (Fraction(1, 3), 0, 1)],
)
def test_generalized_binomial(top, k, value):
    assert generalized_binomial(top, k) == value


@given(st.integers(0, 30), st.integers(0, 8))
def test_generalized_binomial_matches_integer(n, k):
    assert generalized_binomial(n, k) == comb(n, k)


@pytest.mark.parametrize(
    "N,t,n", [(3, 1, (1, 0, 2)), (6, 2, (3, 3, 0, 0, 0, 0)), (4, 2, (2, 2, 0, 0))]
)
def test_vandermonde(N, t, n):
    assert vandermonde_identity_check(N, t, n)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 7), st.data())
def test_vandermonde_and_ratio_random(q, N, data):
    t = data.draw(st.integers(0, N))
    n = data.draw(st.sampled_from(enumerate_simplex(q, N)))
    e = data.draw(st.sampled_from(enumerate_simplex(q, t)))
    assert vandermonde_identity_check(N, t, n)
    assert multinomial_ratio_check(N, t, n, e)


@given(st.integers(1, 10**7))
def test_squarefree_decompose(n):
    s, k = squarefree_decompose(n)
    assert s * s * k == n
    assert all(k % (p * p) for p in range(2, isqrt(k) + 1))


@given(st.fractions(min_value=-50, max_value=50, max_denominator=60))
def test_sqrt_rational_signed_square(v):
    x = SqrtRational.from_signed_square(v)
    assert x.sign * x.radicand == v
    assert x * x == SqrtRational.rational(abs(v))
    assert float(x) == pytest.approx((1 if v >= 0 else -1) * sqrt(abs(v)))


def test_sqrt_products_reduce():
    assert SqrtRational(1, 2) * SqrtRational(1, 8) == SqrtRational.rational(4)
    assert SqrtRational(1, Fraction(3, 10)) * SqrtRational(1, Fraction(7, 10)) == SqrtRational(1, Fraction(21, 100))


def test_radical_sum_zero_iff_empty():
    a = SqrtRational(1, 2)
    b = SqrtRational(1, 8)  # 2 sqrt 2
    s = RadicalSum.of(a) + RadicalSum.of(a) - RadicalSum.of(b)
    assert s.is_zero() and not s and float(s) == 0.0
    assert RadicalSum.of(SqrtRational(1, 2)) + RadicalSum.of(SqrtRational(1, 3))
    assert RadicalSum.of(SqrtRational(1, 2)) != RadicalSum.of(SqrtRational(1, 3))


@settings(max_examples=50)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(1, 30)), max_size=6))
def test_radical_sum_float_agrees(terms):
    s = RadicalSum()
    for c, k in terms:
        if c:
            s.add_term(SqrtRational(1 if c > 0 else -1, Fraction(c * c * k)))
    expect = sum(c * sqrt(k) for c, k in terms)
    assert float(s) == pytest.approx(expect, abs=1e-9)
