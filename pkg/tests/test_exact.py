from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from flaghilbert.errors import DomainError
from flaghilbert.exact import (
    Polynomial,
    as_int,
    binomial,
    falling_factorial,
    poly_eval,
    poly_mul,
    rising_factorial,
)
from flaghilbert.errors import NonIntegerProduct

P = Polynomial.from_coeffs


@pytest.mark.parametrize("n,k,expected", [(5, 2, 10), (7, 0, 1), (4, 7, 0), (4, -1, 0), (0, 0, 1)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_negative_n():
    with pytest.raises(DomainError):
        binomial(-1, 0)


def test_pascal_and_row_sums():
    for n in range(1, 41):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)
        assert sum(binomial(n, k) for k in range(n + 1)) == 2**n


@pytest.mark.parametrize("x,m,expected", [(6, 2, 30), (9, 0, 1), (7, 2, 42), (3, 5, 0)])
def test_falling_factorial(x, m, expected):
    assert falling_factorial(x, m) == expected


def test_rising_factorial_relation():
    # x^(m) = (x+m-1)_m
    for x in range(-3, 8):
        for m in range(6):
            assert rising_factorial(x, m) == falling_factorial(x + m - 1, m)
    with pytest.raises(DomainError):
        falling_factorial(3, -1)


def test_poly_mul_examples():
    assert poly_mul(P([1, 1]), P([1, 1])) == P([1, 2, 1])
    assert poly_mul(Polynomial(), P([3, 4, 5])).is_zero()
    hp = poly_mul(P([1, 1]), P([1, Fraction(1, 2)]))
    assert hp == P([1, Fraction(3, 2), Fraction(1, 2)])
    # Hilbert polynomial of the projective plane
    for n in range(3):
        assert hp(n) == Fraction((n + 1) * (n + 2), 2)


def test_poly_eval_examples():
    assert poly_eval(P([1, 2, 1]), 1) == 4
    assert poly_eval(P([7, 3, 2]), 0) == 7
    assert poly_eval(P([1, Fraction(3, 2), Fraction(1, 2)]), 3) == 10


def test_trailing_zeros_trimmed():
    p = P([1, 2, 0, 0])
    assert p.coeffs == (1, 2) and p.degree == 1
    assert P([0, 0]).degree == -1


def test_as_int():
    assert as_int(Fraction(6, 3)) == 2
    with pytest.raises(NonIntegerProduct):
        as_int(Fraction(1, 2))


def test_str():
    assert str(P([1, Fraction(3, 2), Fraction(1, 2)])) == "1 + (3/2)x + (1/2)x^2"
    assert str(P([0, -1, 0, 2])) == "-x + 2x^3"


fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(fractions, max_size=9).map(P)


@given(polys, polys)
def test_mul_commutative(p, q):
    assert poly_mul(p, q) == poly_mul(q, p)


@given(polys, polys, polys)
def test_mul_associative(p, q, r):
    assert poly_mul(poly_mul(p, q), r) == poly_mul(p, poly_mul(q, r))


@given(polys, polys, fractions)
def test_eval_is_ring_hom(p, q, t):
    assert poly_mul(p, q)(t) == p(t) * q(t)
    assert (p + q)(t) == p(t) + q(t)


@given(polys)
def test_coefficients_in_lowest_terms(p):
    from math import gcd

    for c in poly_mul(p, p).coeffs:
        assert c.denominator > 0
        assert gcd(c.numerator, c.denominator) == 1
