import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dclab.permgroups import (
    FILTER_LIMIT,
    Setting,
    bn_elements,
    bn_type,
    class_size,
    classify,
    compose,
    coset_type,
    coset_type_by_matchings,
    cycle_type,
    diag_class_by_products,
    enumerate_class,
    format_label,
    format_perm,
    from_cycles,
    hecke_class_by_matchings,
    identity,
    inverse,
    parse_label,
    parse_perm,
    proper_labels,
)

perms = st.integers(min_value=1, max_value=7).flatmap(lambda m: st.permutations(list(range(m)))).map(tuple)
even_perms = st.integers(min_value=1, max_value=4).flatmap(lambda n: st.permutations(list(range(2 * n)))).map(tuple)


def test_compose_applies_left_factor_first():
    f = from_cycles(3, [[1, 2]])
    g = from_cycles(3, [[2, 3]])
    # x -> g(f(x)): 1 -> 2 -> 3
    assert compose(f, g)[0] == 2


@given(perms)
def test_inverse(f):
    assert compose(f, inverse(f)) == identity(len(f))


@given(st.integers(min_value=1, max_value=7).flatmap(
    lambda m: st.tuples(*[st.permutations(list(range(m))).map(tuple)] * 3)))
def test_compose_associative(fgh):
    f, g, h = fgh
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@given(perms)
def test_perm_text_round_trip(f):
    assert parse_perm(format_perm(f)) == f


def test_parse_perm_errors():
    with pytest.raises(ValueError):
        parse_perm("1,1,2")
    with pytest.raises(ValueError):
        parse_perm("0,1")


def test_cycle_type_example():
    assert cycle_type(from_cycles(10, [[1, 5, 6, 7], [2, 10], [3, 9, 4], [8]])) == (4, 3, 2, 1)


def test_coset_type_example():
    assert coset_type(parse_perm("2,4,9,3,1,10,5,8,6,7")) == (3, 2)


def test_coset_type_routes_agree_on_s6():
    for w in itertools.permutations(range(6)):
        ct = coset_type(w)
        assert ct == coset_type_by_matchings(w)
        assert ct == coset_type(inverse(w))


@given(even_perms, st.data())
def test_coset_type_is_double_coset_invariant(w, data):
    bs = bn_elements(len(w) // 2)
    a = data.draw(st.sampled_from(bs))
    b = data.draw(st.sampled_from(bs))
    assert coset_type(compose(compose(a, w), b)) == coset_type(w)


def test_bn_type_examples():
    assert bn_type(from_cycles(6, [[1, 2], [3, 4], [5, 6]])) == ((), (1, 1, 1))
    assert bn_type(from_cycles(6, [[1, 3], [2, 4], [5, 6]])) == ((2,), (1,))


def test_bn_elements_count():
    assert [len(bn_elements(n)) for n in range(1, 5)] == [2, 8, 48, 384]


SIZE_RANGE = {Setting.SYM: 6, Setting.HECKE: 4, Setting.BN: 4, Setting.DIAG: 5}


@pytest.mark.parametrize("setting", list(Setting))
def test_class_sizes_match_enumeration(setting):
    for n in range(1, SIZE_RANGE[setting] + 1):
        cls = classify(setting, n)
        assert sum(len(v) for v in cls.values()) == sum(class_size(setting, lab, n)
                                                         for lab in proper_labels(setting, n))
        for lab in proper_labels(setting, n):
            assert len(enumerate_class(setting, lab, n)) == class_size(setting, lab, n)


def test_hecke_classes_by_matchings_equal_filtering():
    for n in (2, 3, 4):
        for full, elems in classify(Setting.HECKE, n).items():
            assert sorted(hecke_class_by_matchings(full, n)) == sorted(elems)


def test_diag_classes_by_products_equal_filtering():
    for n in (3, 4, 5):
        for full, elems in classify(Setting.DIAG, n).items():
            assert sorted(diag_class_by_products(full, n)) == sorted(elems)


def test_class_sizes_closed_forms():
    assert class_size(Setting.SYM, (2,), 6) == 15
    assert class_size(Setting.HECKE, (2,), 4) == 384 * 384 // (4 * 2 * 2 * 2)
    assert class_size(Setting.HECKE, (), 3) == 48
    assert class_size(Setting.SYM, (5,), 4) == 0


def test_enumeration_refused_beyond_limit():
    with pytest.raises(ValueError):
        classify(Setting.BN, FILTER_LIMIT[Setting.BN] + 1)


@pytest.mark.parametrize("setting, text", [
    (Setting.SYM, "3,2"), (Setting.HECKE, "-"), (Setting.BN, "2|1,1"), (Setting.BN, "-|-"),
    (Setting.DIAG, "2;3"), (Setting.DIAG, "1;-"),
])
def test_label_round_trip(setting, text):
    assert format_label(setting, parse_label(setting, text)) == text


@pytest.mark.parametrize("setting, text", [(Setting.BN, "2"), (Setting.DIAG, "x;2"), (Setting.DIAG, "2")])
def test_bad_labels(setting, text):
    with pytest.raises(ValueError):
        parse_label(setting, text)


def test_ambient_counts():
    assert sum(len(v) for v in classify(Setting.DIAG, 4).values()) == math.factorial(4) * math.factorial(3)
