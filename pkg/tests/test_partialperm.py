import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dclab.classalg import class_product
from dclab.core import RatPolynomial, partitions_of, proper_partitions, size
from dclab.partialperm import (
    NEUTRAL,
    PartialPerm,
    a_class,
    a_class_size,
    all_partial_perms,
    brute_a_product,
    c_poly_reconstruct,
    degree_bounds,
    filtration_degree,
    pp_product,
    pp_project,
    universal_coeffs,
    universal_coeffs_at,
)
from dclab.permgroups import Setting, compose

PP4 = list(all_partial_perms(4))
pp4 = st.sampled_from(PP4)


def test_counts():
    assert len(list(all_partial_perms(3))) == 16
    assert len(PP4) == 1 + 4 + 12 + 24 + 24


def test_associative_exhaustive_on_3():
    pps = list(all_partial_perms(3))
    for a, b, c in itertools.product(pps, repeat=3):
        assert pp_product(pp_product(a, b), c) == pp_product(a, pp_product(b, c))


@given(pp4, pp4, pp4)
def test_associative_random_on_4(a, b, c):
    assert pp_product(pp_product(a, b), c) == pp_product(a, pp_product(b, c))


@given(pp4)
def test_neutral(a):
    assert pp_product(NEUTRAL, a) == a == pp_product(a, NEUTRAL)


@given(pp4, pp4)
def test_product_extends_group_law(a, b):
    # forgetting supports gives the product in S_4
    assert pp_product(a, b).extend(4) == compose(a.extend(4), b.extend(4))


@given(pp4, pp4)
def test_filtrations_subadditive(a, b):
    p = pp_product(a, b)
    for i in (1, 2, 3, 4):
        assert filtration_degree(i, p) <= filtration_degree(i, a) + filtration_degree(i, b)


def test_make_rejects_bad_support():
    with pytest.raises(ValueError):
        PartialPerm.make({1: 2})


@pytest.mark.parametrize("rho, n", [((2,), 4), ((1,), 3), ((2, 1), 4), ((1, 1), 4), ((3,), 5)])
def test_class_size_closed_form(rho, n):
    assert len(a_class(rho, n)) == a_class_size(rho, n)


def test_universal_coeffs_do_not_depend_on_n():
    for lam, dlt in [((2,), (2,)), ((2,), (1,)), ((2,), (3,))]:
        base = universal_coeffs(lam, dlt)
        for n in range(size(lam) + size(dlt), 7):
            assert universal_coeffs_at(lam, dlt, n) == base


def test_canonical_count_matches_full_count():
    for lam, dlt in [((2,), (2,)), ((1,), (2,))]:
        for n in (4, 5):
            assert brute_a_product(lam, dlt, n) == {r: c for r, c in universal_coeffs(lam, dlt).items()}


def test_projection_of_a2():
    assert pp_project({(2,): 1}, 5).terms == {(2,): 1}
    # A_(1)(n) is n times the identity
    assert pp_project({(1,): 1}, 5).terms == {(): 5}


@pytest.mark.parametrize("n", [3, 4])
def test_projection_is_multiplicative(n):
    labels = [r for k in range(1, 4) for r in partitions_of(k) if size(r) <= n]
    for lam in labels:
        for dlt in labels:
            lhs = pp_project(brute_a_product(lam, dlt, n), n).terms
            rhs = {}
            for l1, c1 in pp_project({lam: 1}, n).terms.items():
                for l2, c2 in pp_project({dlt: 1}, n).terms.items():
                    for r, c in class_product(Setting.SYM, l1, l2, n).terms.items():
                        rhs[r] = rhs.get(r, 0) + c1 * c2 * c
            assert lhs == {k: v for k, v in rhs.items() if v}


def test_reconstructed_polynomials():
    n = RatPolynomial.n()
    assert c_poly_reconstruct((2,), (2,), ()) == n * (n - 1) * Fraction(1, 2)
    assert c_poly_reconstruct((2,), (3,), (2,)) == 2 * n - 4
    assert c_poly_reconstruct((2,), (2,), (2, 2)) == RatPolynomial.constant(2)
    assert c_poly_reconstruct((2,), (2,), (2,)) == RatPolynomial()


@settings(deadline=None)
@given(st.sampled_from([(l, d, r) for l in proper_partitions(3) for d in proper_partitions(3)
                        for r in proper_partitions(size(l) + size(d))]))
def test_reconstruction_matches_brute(ldr):
    lam, dlt, rho = ldr
    p = c_poly_reconstruct(lam, dlt, rho)
    for n in range(max(size(lam), size(dlt), size(rho), 1), 7):
        assert p(n) == class_product(Setting.SYM, lam, dlt, n)[rho]


def test_degree_bounds():
    for lam in proper_partitions(3):
        for dlt in proper_partitions(3):
            for rho in proper_partitions(size(lam) + size(dlt)):
                assert degree_bounds(lam, dlt, rho).ok
