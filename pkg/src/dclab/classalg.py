"""Class-sum products by brute force in the four settings, and map counts."""
from __future__ import annotations

import math
import multiprocessing
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .core import Partition, format_rational, length, size, strip, z_lambda
from .permgroups import (
    Setting,
    class_size,
    element_label,
    enumerate_class,
    first_in_class,
    format_label,
    full_label,
    group_inv,
    group_mul,
    label_sort_key,
    matching_union_type,
    parse_label,
    perfect_matchings,
    proper_labels,
)


@dataclass
class AlgebraElement:
    """Sparse combination of class sums with proper labels at level n."""

    setting: Setting
    n: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {k: Fraction(v) for k, v in self.terms.items() if v != 0}

    def __getitem__(self, label) -> Fraction:
        return self.terms.get(label, Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.setting, self.n, self.terms) == (other.setting, other.n, other.terms)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return AlgebraElement(self.setting, self.n, out)

    def scale(self, c) -> "AlgebraElement":
        return AlgebraElement(self.setting, self.n, {k: v * c for k, v in self.terms.items()})

    def _check(self, other):
        if (self.setting, self.n) != (other.setting, other.n):
            raise ValueError("cannot combine elements of different algebras")

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: label_sort_key(self.setting, kv[0]))

    def to_json(self) -> dict:
        return {
            "setting": self.setting.value,
            "n": self.n,
            "terms": [{"label": format_label(self.setting, k), "coeff": format_rational(v)}
                      for k, v in self.sorted_items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraElement":
        s = Setting.parse(data["setting"])
        return cls(s, int(data["n"]), {parse_label(s, t["label"]): Fraction(t["coeff"]) for t in data["terms"]})

    def to_csv_rows(self) -> list[list[str]]:
        return [["label", "coeff"]] + [[format_label(self.setting, k), format_rational(v)]
                                       for k, v in self.sorted_items()]


def _count_slice(setting, lam, n, start, stop, z, target):
    mul, inv = group_mul(setting), group_inv(setting)
    xs = enumerate_class(setting, lam, n)[start:stop]
    return sum(1 for x in xs if element_label(setting, mul(inv(x), z)) == target)


def _count(setting, lam, n, z, target, jobs):
    total = len(enumerate_class(setting, lam, n))
    if jobs <= 1 or total < 2000:
        return _count_slice(setting, lam, n, 0, total, z, target)
    step = -(-total // jobs)
    ctx = multiprocessing.get_context("fork")
    with ProcessPoolExecutor(max_workers=jobs, mp_context=ctx) as ex:
        futs = [ex.submit(_count_slice, setting, lam, n, a, min(a + step, total), z, target)
                for a in range(0, total, step)]
        return sum(f.result() for f in futs)


def default_jobs() -> int:
    return max(1, len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else os.cpu_count() or 1)


def structure_coeff_brute(setting: Setting, lam, dlt, rho, n: int, jobs: int = 1,
                          debug: bool = False, seed: int = 0) -> Fraction:
    """Number of pairs (x, y) in C_lam x C_dlt with xy = z, for a fixed z in C_rho.

    z is the first element of its class.  With debug=True the count is
    redone with a random representative and both must agree.
    """
    target = full_label(setting, dlt, n)
    z = first_in_class(setting, rho, n)
    if target is None or z is None or full_label(setting, lam, n) is None:
        return Fraction(0)
    c = _count(setting, lam, n, z, target, jobs)
    if debug:
        z2 = random.Random(seed).choice(enumerate_class(setting, rho, n))
        c2 = _count(setting, lam, n, z2, target, 1)
        if c2 != c:
            raise AssertionError(f"representative dependence: {c} vs {c2}")
    return Fraction(c)


def class_product(setting: Setting, lam, dlt, n: int, jobs: int = 1) -> AlgebraElement:
    """Full expansion of C_lam C_dlt at level n by brute force."""
    terms = {}
    for rho in proper_labels(setting, n):
        c = structure_coeff_brute(setting, lam, dlt, rho, n, jobs=jobs)
        if c:
            terms[rho] = c
    out = AlgebraElement(setting, n, terms)
    if setting in (Setting.SYM, Setting.HECKE):
        bound = size(lam) + size(dlt)
        bad = [r for r in out.terms if size(r) > bound]
        assert not bad, f"support bound violated by {bad}"
    return out


def _check_sizes(*parts: Partition) -> int:
    n = size(parts[0])
    if any(size(p) != n for p in parts):
        raise ValueError(f"partitions must have equal sizes: {parts}")
    return n


def map_count_oriented(lam: Partition, dlt: Partition, rho: Partition) -> Fraction:
    """Bicolored oriented maps with vertex degrees lam, dlt and face degrees rho."""
    n = _check_sizes(lam, dlt, rho)
    c = structure_coeff_brute(Setting.SYM, strip(lam), strip(dlt), strip(rho), n)
    return Fraction(math.factorial(n), z_lambda(rho)) * c


def map_count_nonoriented(lam: Partition, dlt: Partition, rho: Partition) -> Fraction:
    """Locally orientable analogue, from the Hecke structure coefficient.

    The normalizing factor is taken on the face partition rho: with it the
    count agrees with direct enumeration of pairing triples.
    """
    n = _check_sizes(lam, dlt, rho)
    alpha = structure_coeff_brute(Setting.HECKE, strip(lam), strip(dlt), strip(rho), n)
    pref = Fraction(math.factorial(2 * n) * math.factorial(n), z_lambda(rho))
    pref /= math.factorial(n) ** 2 * 2 ** (n + length(rho))
    return pref * alpha


def pairing_triples_count(lam: Partition, dlt: Partition, rho: Partition) -> int:
    """Triples (B, N, A) of pairings of [2n] with prescribed pairwise coset types."""
    n = _check_sizes(lam, dlt, rho)
    ms = [[frozenset(e) for e in m] for m in perfect_matchings(range(2 * n))]
    count = 0
    for b in ms:
        for a in ms:
            if matching_union_type(b, a) != lam:
                continue
            for nn in ms:
                if matching_union_type(nn, a) == dlt and matching_union_type(b, nn) == rho:
                    count += 1
    return count
