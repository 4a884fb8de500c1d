import functools
import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dclab.classalg import class_product
from dclab.core import RatPolynomial, partitions_of, proper_partitions, size
from dclab.partialbij import (
    EMPTY_PB,
    PartialBijection,
    a_class,
    a_class_size,
    act,
    all_partial_bijections,
    alpha_degree_bounds,
    alpha_poly,
    c_from_t,
    e_size,
    extension_count,
    from_perm,
    ga_product,
    invariant_product,
    invariant_product_brute,
    pb_coset_type,
    pb_filtration_degree,
    pb_product,
    pb_project,
    pb_project_combination,
    psi,
    psi_sum,
    t_coeffs,
    ws_product,
)
from dclab.permgroups import Setting, bn_elements, coset_type, enumerate_class

PB2 = all_partial_bijections(2)
PB3 = all_partial_bijections(3)


def test_counts():
    assert len(PB2) == 1 + 4 * 2 + 24
    assert len(PB3) == 1 + 9 * 2 + 9 * 24 + 720


def test_make_validates():
    with pytest.raises(ValueError):
        PartialBijection.make({1: 3})
    with pytest.raises(ValueError):
        PartialBijection.make({1: 3, 2: 3})


def test_full_bijections_have_coset_type():
    for w in itertools.permutations(range(6)):
        assert pb_coset_type(from_perm(w)) == coset_type(w)


def test_e_size_formula():
    rng = random.Random(2)
    for _ in range(40):
        a, b = rng.choice(PB3), rng.choice(PB3)
        u = set(a.d) | set(b.dp)
        want = extension_count(len(a.d), len(u) - len(a.d), 3) * extension_count(len(b.dp), len(u) - len(b.dp), 3)
        assert e_size(a, b, 3) == want


def test_product_weights_sum_to_one():
    for a in PB2:
        for b in PB2:
            assert sum(pb_product(a, b, 2).values()) == 1


def test_empty_is_neutral_on_invariant_basis():
    for dlt in [(1,), (2,), (1, 1), (2, 1)]:
        assert invariant_product((), dlt, 3) == {dlt: 1}
    # on single elements it only averages: psi(empty) is the B_n idempotent
    bn = bn_elements(2)
    assert psi(EMPTY_PB, 2) == {b: Fraction(1, len(bn)) for b in bn}


def test_associative_exhaustive_on_2():
    prod = functools.lru_cache(maxsize=None)(lambda x, y: pb_product(x, y, 2))
    for a, b, c in itertools.product(PB2, repeat=3):
        left = ws_product(ws_product({a: 1}, {b: 1}, 2, prod), {c: 1}, 2, prod)
        right = ws_product({a: 1}, ws_product({b: 1}, {c: 1}, 2, prod), 2, prod)
        assert left == right


pb3 = st.sampled_from(PB3)


@settings(deadline=None, max_examples=60)
@given(pb3, pb3, pb3)
def test_associative_random_on_3(a, b, c):
    left = ws_product(ws_product({a: 1}, {b: 1}, 3), {c: 1}, 3)
    right = ws_product({a: 1}, ws_product({b: 1}, {c: 1}, 3), 3)
    assert left == right


@settings(deadline=None, max_examples=40)
@given(pb3, pb3, st.data())
def test_product_is_equivariant(a1, a2, data):
    g = bn_elements(3)
    a, b, c = (data.draw(st.sampled_from(g)) for _ in range(3))
    lhs = pb_product(act(a, b, a1), act(b, c, a2), 3)
    rhs = {}
    for k, v in pb_product(a1, a2, 3).items():
        rhs[act(a, c, k)] = rhs.get(act(a, c, k), 0) + v
    assert lhs == rhs


def test_two_sided_orbits_are_classes():
    g = bn_elements(2)
    for k in range(3):
        for rho in partitions_of(k):
            rep = a_class(rho, 2)[0]
            assert {act(a, b, rep) for a in g for b in g} == set(a_class(rho, 2))


def test_class_sizes_partition_everything():
    for n in (2, 3):
        total = sum(a_class_size(r, n) for k in range(n + 1) for r in partitions_of(k))
        assert total == len(all_partial_bijections(n))


def test_invariant_product_matches_brute():
    for lam, dlt in [((1,), (1,)), ((2,), (1,)), ((1, 1), (1,))]:
        assert invariant_product(lam, dlt, 3) == invariant_product_brute(lam, dlt, 3)


def test_ratio_law():
    for lam, dlt in [((2,), (2,)), ((1,), (2,))]:
        for n in (3, 4):
            c = invariant_product(lam, dlt, n)
            for rho, v in c.items():
                assert c_from_t(lam, dlt, rho, n) == v


def test_t_coefficients():
    assert t_coeffs((2,), (2,)) == {(1, 1): 16, (2,): 8, (3,): 4, (2, 2): Fraction(1, 3)}


@settings(deadline=None, max_examples=25)
@given(pb3, pb3)
def test_psi_is_multiplicative(a, b):
    assert psi_sum(pb_product(a, b, 3), 3) == ga_product(psi(a, 3), psi(b, 3))


@pytest.mark.parametrize("rho", [(), (1,), (2,), (1, 1), (2, 1), (3,)])
def test_projection_of_classes(rho):
    n = 3
    total = {}
    for a in a_class(rho, n):
        for w, c in psi(a, n).items():
            total[w] = total.get(w, 0) + c
    el = pb_project(rho, n)
    (lab, coeff), = el.terms.items()
    want = {w: coeff for w in enumerate_class(Setting.HECKE, lab, n)}
    assert total == want


def test_projection_is_multiplicative():
    n = 3
    for lam, dlt in [((2,), (2,)), ((1,), (2,)), ((2,), (1, 1))]:
        lhs = pb_project_combination(invariant_product(lam, dlt, n), n)
        (l1, c1), = pb_project(lam, n).terms.items()
        (l2, c2), = pb_project(dlt, n).terms.items()
        assert lhs == class_product(Setting.HECKE, l1, l2, n).scale(c1 * c2)


def test_alpha_polynomials():
    n = RatPolynomial.n()
    assert alpha_poly((2,), (2,), ()) == n * (n - 1)
    assert alpha_poly((2,), (2,), (3,)) == RatPolynomial.constant(3)


@pytest.mark.parametrize("lam, dlt", [((2,), (2,)), ((), (2,)), ((2,), ())])
def test_alpha_matches_brute(lam, dlt):
    for rho in proper_partitions(size(lam) + size(dlt)):
        f = alpha_poly(lam, dlt, rho)
        for n in range(max(size(lam), size(dlt), size(rho), 1), 5):
            assert f(n) * 2**n * math.factorial(n) == class_product(Setting.HECKE, lam, dlt, n)[rho]
        deg = f.degree
        if deg != "-inf":
            assert all(deg <= b for b in alpha_degree_bounds(lam, dlt, rho))


def test_filtration_degrees():
    assert [pb_filtration_degree(i, (2, 1)) for i in (1, 2, 3)] == [3, 1, 2]
    with pytest.raises(ValueError):
        pb_filtration_degree(4, (2,))
