import itertools
import math
import random
from fractions import Fraction

import pytest

from dclab import framework as fw
from dclab.classalg import structure_coeff_brute
from dclab.permgroups import Setting, first_in_class, from_cycles, proper_labels


@pytest.mark.parametrize("n", range(1, 6))
def test_sym_hypotheses(n):
    rep = fw.check_hypotheses(fw.SymTower(), n, 3)
    assert fw.all_ok(rep), {h: r.counterexample for h, r in rep.items() if not r.ok}
    assert set(rep) >= {f"H.{i}" for i in range(7)}


@pytest.mark.parametrize("n", range(1, 4))
def test_hyp_hypotheses_with_hecke_pair(n):
    rep = fw.check_hypotheses(fw.HypTower(), n, 2, fw.HeckeInstance())
    assert fw.all_ok(rep)


@pytest.mark.parametrize("m", range(1, 5))
def test_fix1_hypotheses_with_diag_pair(m):
    rep = fw.check_hypotheses(fw.DiagonalTower(fw.Fix1Tower()), m, 3, fw.DiagInstance())
    assert fw.all_ok(rep)


class CollapsedTower(fw.SymTower):
    """Every K_n^k is all of S_n: the structure the hypotheses rule out."""

    def enum_Kk(self, n, k):
        return super().enum_Kk(n, 0)

    def gens_Kk(self, n, k):
        return super().gens_Kk(n, 0)

    def in_Kk(self, x, n, k):
        return True


def test_broken_tower_is_detected():
    rep = fw.check_hypotheses(CollapsedTower(), 3, 2)
    assert not fw.all_ok(rep)
    bad = [r for r in rep.values() if not r.ok]
    assert all(r.counterexample for r in bad)


def test_formula_refuses_without_certificate(monkeypatch):
    monkeypatch.setattr(fw, "_certified", lambda kind, pair: False)
    g = from_cycles(4, [[1, 2]])
    with pytest.raises(fw.HypothesisError):
        fw.center_theorem_coeff(fw.SymTower(), g, g, g, 4)


def test_r_lemma_exhaustive():
    t = fw.SymTower()
    n = 4
    count = 0
    for z in itertools.permutations(range(n)):
        zi = t.inv(z)
        for k1 in range(n + 1):
            conj = {t.mul(t.mul(z, a), zi) for a in t.enum_Kk(n, k1)}
            for k2 in range(n + 1):
                meet = sum(1 for a in conj if t.in_Kk(a, n, k2))
                assert meet == math.factorial(n - fw.sym_r(z, k1, k2))
                count += 1
    assert count == 600


def test_double_coset_routes_agree():
    t = fw.SymTower()
    rng = random.Random(1)
    for _ in range(20):
        y = tuple(rng.sample(range(5), 5))
        k1, k2 = rng.randint(0, 3), rng.randint(0, 3)
        assert fw.double_coset(t, y, 5, k1, k2) == fw.double_coset_bfs(t, y, 5, k1, k2)


def test_k_bound():
    t = fw.SymTower()
    for z in itertools.permutations(range(4)):
        for k1 in range(3):
            for k2 in range(3):
                bound = len(set(range(k2)) | {z[i] for i in range(k1)})
                assert fw.k_of(fw.double_coset(t, z, 4, k1, k2), t, 4) <= bound


@pytest.mark.parametrize("tower", [fw.SymTower(), fw.HypTower()], ids=["sym", "hyp"])
def test_minimality_stable_under_embedding(tower):
    n = 3
    for x in tower.enum_K(3 if tower.name == "sym" else 2, n):
        for k1 in range(3):
            for k2 in range(3):
                a = fw.minimality(tower, x, n, k1, k2)
                b = fw.minimality(tower, tower.embed(x, n + 1), n + 1, k1, k2)
                assert (a.is_minimal, a.m) == (b.is_minimal, b.m)


def test_center_formula_value_two():
    t = fw.SymTower()
    for n in (4, 5, 6):
        g = from_cycles(n, [[1, 2]])
        assert fw.center_theorem_coeff(t, g, g, from_cycles(n, [[1, 2], [3, 4]]), n) == 2


@pytest.mark.parametrize("setting, n", [(Setting.SYM, 5), (Setting.BN, 2)])
def test_center_formula_matches_brute(setting, n):
    tower = fw.SymTower() if setting is Setting.SYM else fw.HypTower()
    labels = proper_labels(setting, n)
    for lam, dlt in itertools.combinations_with_replacement(labels[1:5], 2):
        for rho in labels:
            f, h, g = (first_in_class(setting, x, n) for x in (lam, dlt, rho))
            want = structure_coeff_brute(setting, lam, dlt, rho, n)
            assert fw.center_theorem_coeff(tower, f, h, g, n) == want


@pytest.mark.parametrize("setting, n", [(Setting.HECKE, 3), (Setting.DIAG, 4)])
def test_main_formula_matches_brute(setting, n):
    pair = fw.HeckeInstance() if setting is Setting.HECKE else fw.DiagInstance()
    labels = proper_labels(setting, n)
    for lam, dlt in itertools.combinations_with_replacement(labels[:4], 2):
        for rho in labels:
            x1, x2, x3 = (first_in_class(setting, x, n) for x in (lam, dlt, rho))
            want = structure_coeff_brute(setting, lam, dlt, rho, n)
            assert fw.main_theorem_coeff(pair, x1, x2, x3, n - pair.offset) == want


def test_main_formula_hecke_example():
    n = 4
    bn = 2**n * math.factorial(n)
    x = first_in_class(Setting.HECKE, (2,), n)
    got = {r: fw.main_theorem_coeff(fw.HeckeInstance(), x, x, first_in_class(Setting.HECKE, r, n), n) / bn
           for r in [(), (2,), (3,), (2, 2)]}
    assert got == {(): 12, (2,): 1, (3,): 3, (2, 2): 2}


def test_terms_reassemble():
    n = 5
    g = from_cycles(n, [[1, 2]])
    t = fw.center_theorem_terms(fw.SymTower(), g, g, from_cycles(n, [[1, 2, 3]]), n)
    assert (t.k1, t.k2) == (2, 2)
    assert t.value() == 3
    assert all(v >= 0 for v in t.a.values())


def test_mini_theorem_sym():
    r = fw.mini_theorem_decompose(Setting.SYM, (2,), (2,), ())
    assert r.consistent and r.nonnegative
    assert [r.values[n] for n in sorted(r.values)] + [r.actual] == [6, 10, 15, 21]


@pytest.mark.parametrize("setting, lam, dlt, rho", [
    (Setting.SYM, (2,), (2,), (3,)),
    (Setting.HECKE, (2,), (2,), (2, 2)),
    (Setting.BN, ((), (1,)), ((), (1,)), ((), ())),
    (Setting.DIAG, (2, ()), (2, ()), (3, ())),
])
def test_mini_theorem_consistent(setting, lam, dlt, rho):
    r = fw.mini_theorem_decompose(setting, lam, dlt, rho)
    assert r.solvable and r.consistent and r.nonnegative


def test_solve_linear():
    F = Fraction
    assert fw.solve_linear([[F(1), F(1)], [F(1), F(-1)]], [F(3), F(1)]) == [2, 1]
    assert fw.solve_linear([[F(1), F(1)], [F(2), F(2)]], [F(1), F(2)]) is None
