from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dclab.core import (
    RatPolynomial,
    double,
    format_partition,
    format_rational,
    is_proper,
    lagrange_fit,
    pad,
    parse_partition,
    parse_rational,
    partition,
    partitions_of,
    proper_partitions,
    strip,
    z_lambda,
)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 10**6)
parts = st.lists(st.integers(min_value=1, max_value=6), max_size=6).map(partition)


def test_partition_counts():
    assert [len(list(partitions_of(n))) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_partitions_are_decreasing_and_sum_to_n():
    for n in range(7):
        for lam in partitions_of(n):
            assert sum(lam) == n
            assert list(lam) == sorted(lam, reverse=True)


def test_proper_partitions():
    assert proper_partitions(4) == [(), (2,), (3,), (4,), (2, 2)]
    assert all(is_proper(p) for p in proper_partitions(6))


def test_pad_strip_double():
    assert pad((3, 2), 7) == (3, 2, 1, 1)
    assert strip((3, 2, 1, 1)) == (3, 2)
    assert double((2, 1)) == (4, 2)
    with pytest.raises(ValueError):
        pad((3, 2), 4)


def test_z_lambda():
    assert z_lambda((1, 1, 1)) == 6
    assert z_lambda((2, 2)) == 8
    assert z_lambda((3, 2, 1)) == 6
    assert z_lambda(()) == 1


@given(parts)
def test_partition_text_round_trip(lam):
    assert parse_partition(format_partition(lam)) == lam


@pytest.mark.parametrize("bad", ["2,0", "a", "2,,3", "-1"])
def test_parse_partition_rejects(bad):
    with pytest.raises(ValueError):
        parse_partition(bad)


@given(rationals)
def test_rational_text_round_trip(q):
    assert parse_rational(format_rational(q)) == q


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a


def test_polynomial_basics():
    n = RatPolynomial.n()
    p = n * (n - 1) * Fraction(1, 2)
    assert p(4) == 6 and p(5) == 10
    assert p.degree == 2
    assert RatPolynomial().degree == "-inf"
    assert str(p) == "1/2*n^2 - 1/2*n"
    assert RatPolynomial.falling_in_n(0, 2)(5) == 20
    assert RatPolynomial.binomial_in_n(0, 2)(5) == 10


@given(st.lists(rationals, min_size=1, max_size=5))
def test_lagrange_recovers_polynomial(coeffs):
    p = RatPolynomial(coeffs)
    pts = [(x, p(x)) for x in range(3, 3 + len(coeffs))]
    assert lagrange_fit(pts) == p


def test_lagrange_rejects_duplicates():
    with pytest.raises(ValueError):
        lagrange_fit([(1, Fraction(1)), (1, Fraction(2))])
