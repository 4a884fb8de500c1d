"""Worked examples kept as a regression suite, grouped by module.

Each check pairs a frozen expected value with a thunk computing it.
``run`` compares them by exact equality; values are rendered with
``show`` so reports are deterministic text.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .core import RatPolynomial, format_rational, lagrange_fit, pad

MODULES = ("core", "permgroups", "classalg", "characters", "partialperm", "partialbij", "framework", "cli")


@dataclass(frozen=True)
class Check:
    module: str
    name: str
    expected: object
    compute: Callable[[], object]


def show(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (Fraction, int)):
        return format_rational(v)
    if isinstance(v, dict):
        items = sorted((show(k), show(x)) for k, x in v.items())
        return "{" + ", ".join(f"{k}: {x}" for k, x in items) + "}"
    if isinstance(v, (tuple, list)):
        return "(" + ", ".join(show(x) for x in v) + ")"
    return str(v)


def run(checks) -> list[dict]:
    out = []
    for c in checks:
        try:
            actual = c.compute()
            ok = actual == c.expected
            got = show(actual)
        except Exception as e:  # a crashing check is a failure, not an abort
            ok, got = False, f"error: {type(e).__name__}: {e}"
        out.append({"module": c.module, "name": c.name, "expected": show(c.expected), "actual": got, "ok": ok})
    return out


# thunks ------------------------------------------------------------------

def _sym_product(n):
    from .classalg import class_product
    from .permgroups import Setting

    return class_product(Setting.SYM, (2,), (2,), n).terms


def _c2c3(n):
    from .classalg import class_product
    from .permgroups import Setting

    return class_product(Setting.SYM, (2,), (3,), n).terms


def _hecke_k2k2_over_bn():
    from .classalg import class_product
    from .permgroups import Setting

    bn = 2**4 * math.factorial(4)
    return {k: v / bn for k, v in class_product(Setting.HECKE, (2,), (2,), 4).terms.items()}


def _coset_invariance():
    from .permgroups import bn_elements, compose, coset_type

    rng = random.Random(7)
    bs = bn_elements(3)
    for _ in range(200):
        w = tuple(rng.sample(range(6), 6))
        b, b2 = rng.choice(bs), rng.choice(bs)
        if coset_type(compose(compose(b, w), b2)) != coset_type(w):
            return False
    return True


def _sum_f2(n):
    from .characters import dim_irrep
    from .core import partitions_of

    return sum(dim_irrep(t) ** 2 for t in partitions_of(n))


def _zonal_gram(n):
    from .characters import zonal_inner
    from .core import partitions_of

    ps = list(partitions_of(n))
    return {(a, b): zonal_inner(a, b) for a in ps for b in ps}


def _zonal_gram_expected(n):
    from .characters import dim_irrep
    from .core import double, partitions_of

    ps = list(partitions_of(n))
    return {(a, b): (Fraction(1, dim_irrep(double(a))) if a == b else Fraction(0)) for a in ps for b in ps}


def _zonal_functional_equation():
    from .characters import zonal_on
    from .core import partitions_of
    from .permgroups import bn_elements, compose

    rng = random.Random(3)
    ks = bn_elements(2)
    for _ in range(6):
        x = tuple(rng.sample(range(4), 4))
        y = tuple(rng.sample(range(4), 4))
        for th in partitions_of(2):
            rhs = sum((zonal_on(th, compose(compose(x, k), y)) for k in ks), Fraction(0)) / len(ks)
            if zonal_on(th, x) * zonal_on(th, y) != rhs:
                return False
    return True


def _plancherel_means():
    from .characters import plancherel_mean

    return {g: plancherel_mean(g) for g in itertools.permutations(range(3))}


def _bn_type(cyc):
    from .permgroups import bn_type, from_cycles

    return bn_type(from_cycles(6, cyc))


def _pp_project_a2(n):
    from .partialperm import pp_project

    return pp_project({(2,): 1}, n).terms


def _support_bound():
    from .core import proper_partitions, size
    from .partialperm import universal_coeffs

    for lam in proper_partitions(3):
        for dlt in proper_partitions(3):
            if any(size(r) > size(lam) + size(dlt) for r in universal_coeffs(lam, dlt)):
                return False
    return True


def _bounds(lam, dlt, rho):
    from .partialperm import degree_bounds

    b = degree_bounds(lam, dlt, rho)
    return (b.bound1, b.bound2, b.actual)


def _sample_alphas():
    from .partialbij import PartialBijection

    a1 = PartialBijection.make({1: 3, 2: 2, 5: 1, 6: 4})
    a2 = PartialBijection.make({3: 5, 4: 6, 5: 3, 6: 4})
    a3 = PartialBijection.make({1: 5, 2: 1, 3: 6, 4: 2})
    return a1, a2, a3


def _one_line_sum(ws):
    return {tuple(k.one_line()): v for k, v in ws.items()}


def _pb_example_ct():
    from .partialbij import PartialBijection, pb_coset_type

    src = [3, 4, 5, 6, 9, 10, 11, 12, 13, 14]
    dst = [9, 16, 1, 15, 10, 2, 4, 8, 3, 7]
    return pb_coset_type(PartialBijection.make(dict(zip(src, dst))))


def _e_set():
    from .partialbij import e_set

    a1, a2, _ = _sample_alphas()
    return sorted((tuple(x.one_line()), tuple(y.one_line())) for x, y in e_set(a1, a2, 3))


def _a1a2():
    from .partialbij import pb_product

    a1, a2, _ = _sample_alphas()
    return _one_line_sum(pb_product(a1, a2, 3))


def _a2a3():
    from .partialbij import pb_product

    _, a2, a3 = _sample_alphas()
    return _one_line_sum(pb_product(a2, a3, 3))


def _triple(left: bool):
    from .partialbij import ws_product

    a1, a2, a3 = _sample_alphas()
    if left:
        return _one_line_sum(ws_product(ws_product({a1: 1}, {a2: 1}, 3), {a3: 1}, 3))
    return _one_line_sum(ws_product({a1: 1}, ws_product({a2: 1}, {a3: 1}, 3), 3))


def _psi_morphism():
    from .partialbij import a_class, ga_product, pb_product, psi, psi_sum

    rng = random.Random(11)
    pool = [a for rho in [(1,), (2,), (1, 1)] for a in a_class(rho, 3)]
    for _ in range(5):
        a, b = rng.choice(pool), rng.choice(pool)
        if psi_sum(pb_product(a, b, 3), 3) != ga_product(psi(a, 3), psi(b, 3)):
            return False
    return True


def _hyp_ok(kind, n_max, kmax, pair=None):
    from .framework import HeckeInstance, HypTower, SymTower, all_ok, check_hypotheses

    tower = {"sym": SymTower(), "hyp": HypTower()}[kind]
    p = HeckeInstance() if pair == "hecke" else None
    return all(all_ok(check_hypotheses(tower, n, kmax, p)) for n in range(1, n_max + 1))


def _h0_hecke():
    from .framework import HeckeInstance, HypTower, check_hypotheses

    return check_hypotheses(HypTower(), 2, 2, HeckeInstance())["H.0"].ok


def _h5_lemma():
    from .framework import SymTower, double_coset, k_of

    t = SymTower()
    n = 4
    for z in itertools.permutations(range(n)):
        for k1 in range(3):
            for k2 in range(3):
                bound = len(set(range(k2)) | {z[i] for i in range(k1)})
                if k_of(double_coset(t, z, n, k1, k2), t, n) > bound:
                    return False
    return True


def _main_hecke():
    from .framework import HeckeInstance, main_theorem_coeff
    from .permgroups import Setting, first_in_class, identity

    p = HeckeInstance()
    x = first_in_class(Setting.HECKE, (2,), 4)
    bn = 2**4 * math.factorial(4)
    out = {}
    for r in [(), (2,), (3,), (2, 2)]:
        z = first_in_class(Setting.HECKE, r, 4) if r else identity(8)
        out[r] = main_theorem_coeff(p, x, x, z, 4) / bn
    return out


def _center_two():
    from .framework import SymTower, center_theorem_coeff
    from .permgroups import from_cycles

    t = SymTower()
    return tuple(center_theorem_coeff(t, from_cycles(n, [[1, 2]]), from_cycles(n, [[1, 2]]),
                                      from_cycles(n, [[1, 2], [3, 4]]), n) for n in (4, 5, 6))


def _mini(setting_name, lam, dlt, rho):
    from .framework import mini_theorem_decompose
    from .permgroups import Setting

    r = mini_theorem_decompose(Setting.parse(setting_name), lam, dlt, rho)
    return r.consistent and r.nonnegative


def _mini_sym_values():
    from .framework import mini_theorem_decompose
    from .permgroups import Setting

    r = mini_theorem_decompose(Setting.SYM, (2,), (2,), ())
    return tuple(r.values[n] for n in sorted(r.values)) + (r.actual,)


def _cli(argv):
    import contextlib
    import io

    from .cli import main

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue().strip()


def _brute(setting, lam, dlt, rho, n):
    from .classalg import structure_coeff_brute
    from .permgroups import Setting

    return structure_coeff_brute(Setting.parse(setting), lam, dlt, rho, n)


def _frob(lam, dlt, rho):
    from .characters import structure_coeff_frobenius

    return structure_coeff_frobenius(lam, dlt, rho)


def _n2(k):
    return RatPolynomial.n() * (RatPolynomial.n() - 1) * Fraction(1, k)


def checks() -> list[Check]:
    from .characters import plancherel_moment
    from .partialbij import alpha_poly, invariant_product, t_coeffs
    from .partialperm import c_poly_reconstruct
    from .permgroups import coset_type, cycle_type, from_cycles, parse_perm

    quarter = Fraction(1, 4)
    eighth = Fraction(1, 8)
    c = [
        Check("core", "lagrange fit of (4,6),(5,10),(6,15)", _n2(2),
              lambda: lagrange_fit([(4, Fraction(6)), (5, Fraction(10)), (6, Fraction(15))])),
        Check("permgroups", "cycle type of (1 5 6 7)(2 10)(3 9 4)(8)", (4, 3, 2, 1),
              lambda: cycle_type(from_cycles(10, [[1, 5, 6, 7], [2, 10], [3, 9, 4], [8]]))),
        Check("permgroups", "coset type of 2,4,9,3,1,10,5,8,6,7", (3, 2),
              lambda: coset_type(parse_perm("2,4,9,3,1,10,5,8,6,7"))),
        Check("permgroups", "coset type constant on B3 double cosets (sampled)", True, _coset_invariance),
        Check("permgroups", "bn type of (1 2)(3 4)(5 6)", ((), (1, 1, 1)), lambda: _bn_type([[1, 2], [3, 4], [5, 6]])),
        Check("permgroups", "bn type of (1 3)(2 4)(5 6)", ((2,), (1,)), lambda: _bn_type([[1, 3], [2, 4], [5, 6]])),
        Check("classalg", "sym (2)(2) -> (2,2) at n=4", Fraction(2), lambda: _brute("sym-center", (2,), (2,), (2, 2), 4)),
        Check("classalg", "sym (2)(3) -> (2) at n=5", Fraction(6), lambda: _brute("sym-center", (2,), (3,), (2,), 5)),
        Check("classalg", "hecke (2)(2) -> (2,2) at n=4", Fraction(768), lambda: _brute("hecke-pair", (2,), (2,), (2, 2), 4)),
        Check("classalg", "sym C2^2 at n=5", {(): 10, (3,): 3, (2, 2): 2}, lambda: _sym_product(5)),
        Check("classalg", "sym C2 C3 at n=6", {(2,): 8, (4,): 4, (3, 2): 1}, lambda: _c2c3(6)),
        Check("classalg", "hecke K2^2 at n=4 over 2^4 4!", {(): 12, (2,): 1, (3,): 3, (2, 2): 2}, _hecke_k2k2_over_bn),
        Check("characters", "sum of f^2 equals n! for n <= 6", tuple(math.factorial(n) for n in range(1, 7)),
              lambda: tuple(_sum_f2(n) for n in range(1, 7))),
        Check("characters", "frobenius pad(2,4)^2 -> (2,2)", Fraction(2),
              lambda: _frob(pad((2,), 4), pad((2,), 4), (2, 2))),
        Check("characters", "zonal orthogonality at n=2", _zonal_gram_expected(2), lambda: _zonal_gram(2)),
        Check("characters", "zonal functional equation at n=2", True, _zonal_functional_equation),
        Check("characters", "E[F_(2)^2] at n=4,5", (Fraction(1, 6), Fraction(1, 10)),
              lambda: tuple(plancherel_moment((2,), (2,), n) for n in (4, 5))),
        Check("characters", "E[F_(2) F_(3)] at n=4", Fraction(0), lambda: plancherel_moment((2,), (3,), 4)),
        Check("characters", "E[F_g] on S3", {g: Fraction(int(g == (0, 1, 2))) for g in itertools.permutations(range(3))},
              _plancherel_means),
        Check("partialperm", "A-coefficients vanish beyond |lam|+|dlt|", True, _support_bound),
        Check("partialperm", "A_(2)(n) projects to C_(2) at n=5", {(2,): 1}, lambda: _pp_project_a2(5)),
        Check("partialperm", "c((2),(2),()) = n(n-1)/2", _n2(2), lambda: c_poly_reconstruct((2,), (2,), ())),
        Check("partialperm", "c((2),(3),(2)) = 2(n-2)", RatPolynomial((-4, 2)), lambda: c_poly_reconstruct((2,), (3,), (2,))),
        Check("partialperm", "c((2),(2),(2,2)) = 2", RatPolynomial.constant(2), lambda: c_poly_reconstruct((2,), (2,), (2, 2))),
        Check("partialperm", "degree bounds ((2),(3),(2))", (Fraction(3, 2), 2, 1), lambda: _bounds((2,), (3,), (2,))),
        Check("partialperm", "degree bounds ((2,2),(2,2),(3,3))", (Fraction(1), 0, 0),
              lambda: _bounds((2, 2), (2, 2), (3, 3))),
        Check("partialperm", "degree bounds ((2),(2),())", (Fraction(2), 2, 2), lambda: _bounds((2,), (2,), ())),
        Check("partialbij", "coset type of the 16-point example", (3, 2), _pb_example_ct),
        Check("partialbij", "E set of alpha1, alpha2 at n=3", [
            ((3, 2, 5, 6, 1, 4), (1, 2, 5, 6, 3, 4)), ((3, 2, 5, 6, 1, 4), (2, 1, 5, 6, 3, 4)),
            ((3, 2, 6, 5, 1, 4), (1, 2, 5, 6, 3, 4)), ((3, 2, 6, 5, 1, 4), (2, 1, 5, 6, 3, 4))], _e_set),
        Check("partialbij", "alpha1 * alpha2", {(3, 2, 1, 4, 5, 6): quarter, (3, 2, 1, 4, 6, 5): quarter,
                                               (2, 3, 1, 4, 5, 6): quarter, (2, 3, 1, 4, 6, 5): quarter}, _a1a2),
        Check("partialbij", "alpha2 * alpha3", {(3, 1, 4, 2, 5, 6): quarter, (3, 1, 4, 2, 6, 5): quarter,
                                               (3, 2, 4, 1, 5, 6): quarter, (3, 2, 4, 1, 6, 5): quarter}, _a2a3),
        Check("partialbij", "(alpha1 * alpha2) * alpha3", {p: eighth for p in _EIGHT}, lambda: _triple(True)),
        Check("partialbij", "alpha1 * (alpha2 * alpha3)", {p: eighth for p in _EIGHT}, lambda: _triple(False)),
        Check("partialbij", "A_(2),4 * A_(2),4", {(1, 1): 96, (2,): 48, (3,): 36, (2, 2): 12},
              lambda: invariant_product((2,), (2,), 4)),
        Check("partialbij", "T_(2) * T_(2)", {(1, 1): 16, (2,): 8, (3,): 4, (2, 2): Fraction(1, 3)},
              lambda: t_coeffs((2,), (2,))),
        Check("partialbij", "alpha((2),(2),()) = n(n-1)", _n2(1), lambda: alpha_poly((2,), (2,), ())),
        Check("partialbij", "alpha((2),(2),(3)) = 3", RatPolynomial.constant(3), lambda: alpha_poly((2,), (2,), (3,))),
        Check("partialbij", "psi_3 is multiplicative on samples", True, _psi_morphism),
        Check("framework", "sym tower H.0-H.6 for n <= 5, k <= 3", True, lambda: _hyp_ok("sym", 5, 3)),
        Check("framework", "hyp tower H.0-H.6 for n <= 3, k <= 2", True, lambda: _hyp_ok("hyp", 3, 2)),
        Check("framework", "H.0 for (S_2n, B_n) from n=2 to 3", True, _h0_hecke),
        Check("framework", "k(S^k1 z S^k2) <= |{1..k2} u z{1..k1}| at n=4", True, _h5_lemma),
        Check("framework", "main formula, hecke K2^2 at n=4 over 2^4 4!",
              {(): 12, (2,): 1, (3,): 3, (2, 2): 2}, _main_hecke),
        Check("framework", "center formula (1 2)(1 2) -> (1 2)(3 4), n=4..6", (2, 2, 2), _center_two),
        Check("framework", "mini theorem sym ((2),(2),()) follows n(n-1)/2", (6, 10, 15, 21), _mini_sym_values),
        Check("framework", "mini theorem diag (2;-)(1;2) -> (2;2) consistent", True,
              lambda: _mini("diag-pair", (2, ()), (1, (2,)), (2, (2,)))),
        Check("cli", "coset-type command", (0, "3,2"), lambda: _cli(["coset-type", "2,4,9,3,1,10,5,8,6,7"])),
        Check("cli", "coeff sym-center 2 2 2,2 4 all", (0, "2"),
              lambda: _cli(["coeff", "sym-center", "2", "2", "2,2", "4", "--method", "all", "--quiet"])),
    ]
    return c


_EIGHT = [(5, 3, 6, 2, 1, 4), (5, 3, 6, 2, 4, 1), (6, 3, 5, 2, 1, 4), (6, 3, 5, 2, 4, 1),
          (5, 2, 6, 3, 1, 4), (5, 2, 6, 3, 4, 1), (6, 2, 5, 3, 1, 4), (6, 2, 5, 3, 4, 1)]


def select(module: str | None = None) -> list[Check]:
    cs = checks()
    if module is None:
        return cs
    if module not in MODULES:
        raise ValueError(f"unknown module {module!r}; choose from {', '.join(MODULES)}")
    return [c for c in cs if c.module == module]
