import itertools
import math
from fractions import Fraction

import pytest

from dclab.characters import (
    ZONAL_MAX_N,
    border_strips,
    character_table,
    dim_irrep,
    mn_character,
    plancherel_mean,
    plancherel_moment,
    plancherel_moment3,
    structure_coeff_frobenius,
    structure_coeff_zonal,
    zonal_inner,
    zonal_spherical,
)
from dclab.classalg import class_product
from dclab.core import double, pad, partitions_of, z_lambda
from dclab.permgroups import Setting, proper_labels


def test_s3_table():
    rows, cols, vals = character_table(3)
    assert rows == [(3,), (2, 1), (1, 1, 1)]
    assert vals == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]


def test_dimensions():
    assert [dim_irrep(l) for l in partitions_of(4)] == [1, 3, 2, 3, 1]
    assert dim_irrep((3, 2, 1)) == 16


def test_sum_of_squares():
    for n in range(1, 9):
        assert sum(dim_irrep(t) ** 2 for t in partitions_of(n)) == math.factorial(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_row_and_column_orthogonality(n):
    rows, cols, vals = character_table(n)
    k = len(rows)
    for i in range(k):
        for j in range(k):
            s = sum(Fraction(vals[i][c] * vals[j][c], z_lambda(mu)) for c, mu in enumerate(cols))
            assert s == (1 if i == j else 0)
            col = sum(vals[r][i] * vals[r][j] for r in range(k))
            assert col == (z_lambda(cols[i]) if i == j else 0)


def test_order_of_parts_does_not_matter():
    for lam in partitions_of(6):
        for mu in partitions_of(6):
            assert mn_character(lam, mu) == mn_character(lam, mu, ascending=True)


def test_border_strips():
    # (3,1) has no hook of length 3; (2,2) has one, of height 1
    assert list(border_strips((3, 1), 3)) == []
    assert list(border_strips((2, 2), 3)) == [(-1, (1,))]
    assert list(border_strips((3,), 3)) == [(1, ())]


@pytest.mark.parametrize("n", range(1, 6))
def test_frobenius_matches_brute(n):
    labels = proper_labels(Setting.SYM, n)
    for lam in labels:
        for dlt in labels:
            brute = class_product(Setting.SYM, lam, dlt, n).terms
            for rho in labels:
                assert structure_coeff_frobenius(pad(lam, n), pad(dlt, n), pad(rho, n)) == brute.get(rho, 0)


def test_zonal_known_values():
    assert zonal_spherical((2,), (2,)) == 1
    assert zonal_spherical((1, 1), (2,)) == Fraction(-1, 2)
    assert zonal_spherical((1, 1), (1, 1)) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_zonal_route_matches_brute(n):
    labels = proper_labels(Setting.HECKE, n)
    for lam in labels:
        for dlt in labels:
            brute = class_product(Setting.HECKE, lam, dlt, n).terms
            for rho in labels:
                assert structure_coeff_zonal(pad(lam, n), pad(dlt, n), pad(rho, n)) == brute.get(rho, 0)


def test_zonal_orthogonality():
    for n in (1, 2):
        for a in partitions_of(n):
            for b in partitions_of(n):
                want = Fraction(1, dim_irrep(double(a))) if a == b else 0
                assert zonal_inner(a, b) == want


def test_zonal_scale_guard():
    with pytest.raises(NotImplementedError):
        zonal_spherical((ZONAL_MAX_N + 1,), (ZONAL_MAX_N + 1,))


@pytest.mark.parametrize("n", [4, 5])
def test_transposition_second_moment(n):
    want = Fraction(2, n * (n - 1))
    assert plancherel_moment((2,), (2,), n) == want
    assert plancherel_moment((2,), (2,), n, method="characters") == want


def test_orthogonal_moment():
    assert plancherel_moment((2,), (3,), 5) == 0
    assert plancherel_moment((2,), (3,), 5, method="characters") == 0


def test_mean_is_delta_identity():
    for n in range(1, 5):
        for g in itertools.permutations(range(n)):
            assert plancherel_mean(g) == (1 if g == tuple(range(n)) else 0)


@pytest.mark.parametrize("lam", [(2,), (3,), (4,), (2, 2)])
def test_third_moment_routes(lam):
    assert plancherel_moment3(lam, 4) == plancherel_moment3(lam, 4, method="characters")
