"""Partial permutations (Ivanov-Kerov) and polynomiality of class coefficients.

A partial permutation is a pair (d, w) with d a finite set of positive
integers and w a permutation of d.  The product extends both factors by
the identity to the union of the supports and composes them with
``compose``, so forgetting supports is an honest morphism to S_n.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple, Union

from .core import (
    Partition,
    RatPolynomial,
    is_proper,
    length,
    multiplicity,
    pad,
    partition,
    partitions_of,
    size,
    strip,
    union,
)
from .permgroups import Setting, class_size, compose
from .classalg import AlgebraElement


@dataclass(frozen=True)
class PartialPerm:
    d: frozenset
    w: tuple  # sorted (point, image) pairs

    @classmethod
    def make(cls, mapping: dict) -> "PartialPerm":
        if set(mapping) != set(mapping.values()):
            raise ValueError("a partial permutation maps its support onto itself")
        return cls(frozenset(mapping), tuple(sorted(mapping.items())))

    @classmethod
    def from_cycles(cls, support, cycles) -> "PartialPerm":
        m = {x: x for x in support}
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                m[a] = b
        return cls.make(m)

    def mapping(self) -> dict:
        return dict(self.w)

    def cycle_type(self) -> Partition:
        m = self.mapping()
        seen, parts = set(), []
        for x in sorted(m):
            if x in seen:
                continue
            c, y = 0, x
            while y not in seen:
                seen.add(y)
                y = m[y]
                c += 1
            parts.append(c)
        return partition(parts)

    def extend(self, n: int) -> tuple:
        """The permutation of [n] (0-based tuple) fixing the complement of d."""
        m = self.mapping()
        return tuple(m.get(i + 1, i + 1) - 1 for i in range(n))


NEUTRAL = PartialPerm(frozenset(), ())


def pp_product(a: PartialPerm, b: PartialPerm) -> PartialPerm:
    d = a.d | b.d
    ma, mb = a.mapping(), b.mapping()
    return PartialPerm.make({x: mb.get(ma.get(x, x), ma.get(x, x)) for x in d})


def all_partial_perms(n: int) -> Iterator[PartialPerm]:
    pts = range(1, n + 1)
    for k in range(n + 1):
        for d in itertools.combinations(pts, k):
            for img in itertools.permutations(d):
                yield PartialPerm.make(dict(zip(d, img)))


def a_class(rho: Partition, n: int) -> list[PartialPerm]:
    """A_rho(n): partial permutations of [n] with |d| = |rho| and type rho."""
    out = []
    k = size(rho)
    if k > n:
        return out
    for d in itertools.combinations(range(1, n + 1), k):
        for img in itertools.permutations(d):
            x = PartialPerm.make(dict(zip(d, img)))
            if x.cycle_type() == rho:
                out.append(x)
    return out


def a_class_size(rho: Partition, n: int) -> int:
    if size(rho) > n:
        return 0
    m1 = multiplicity(rho, 1)
    return math.comb(n - size(rho) + m1, m1) * class_size(Setting.SYM, strip(rho), n)


def canonical_target(rho: Partition) -> PartialPerm:
    """Support {1..|rho|} with consecutive cycles (1..rho_1)(rho_1+1..)..."""
    cycles, start = [], 1
    for p in rho:
        cycles.append(tuple(range(start, start + p)))
        start += p
    return PartialPerm.from_cycles(range(1, size(rho) + 1), cycles)


def _products_by_target(lam: Partition, dlt: Partition, n: int) -> dict:
    targets = {}
    for x in a_class(lam, n):
        for y in a_class(dlt, n):
            p = pp_product(x, y)
            t = p.cycle_type()
            if p == canonical_target(t):
                targets[t] = targets.get(t, 0) + 1
    return targets


def universal_coeffs_at(lam: Partition, dlt: Partition, n: int) -> dict:
    """Coefficients of A_lam(n) A_dlt(n) in the A-basis at level n."""
    return _products_by_target(tuple(lam), tuple(dlt), n)


@lru_cache(maxsize=None)
def _universal(lam: Partition, dlt: Partition) -> tuple:
    return tuple(sorted(universal_coeffs_at(lam, dlt, size(lam) + size(dlt)).items()))


def universal_coeffs(lam: Partition, dlt: Partition) -> dict:
    """n-independent coefficients k^rho with A_lam A_dlt = sum_rho k^rho A_rho."""
    return dict(_universal(tuple(lam), tuple(dlt)))


def brute_a_product(lam: Partition, dlt: Partition, n: int) -> dict:
    """Same expansion from all products at level n, divided by class sizes."""
    counts = {}
    for x in a_class(lam, n):
        for y in a_class(dlt, n):
            t = pp_product(x, y).cycle_type()
            counts[t] = counts.get(t, 0) + 1
    return {t: Fraction(c, a_class_size(t, n)) for t, c in counts.items()}


def pp_project(element: dict, n: int) -> AlgebraElement:
    """Image in Z(C[S_n]) of a combination of A-basis elements."""
    out = AlgebraElement(Setting.SYM, n, {})
    for rho, coeff in element.items():
        if size(rho) > n:
            raise ValueError(f"A_{rho} does not exist at n={n}")
        m1 = multiplicity(rho, 1)
        out = out + AlgebraElement(Setting.SYM, n, {strip(rho): coeff * math.comb(n - size(rho) + m1, m1)})
    return out


def c_poly_reconstruct(lam: Partition, dlt: Partition, rho: Partition) -> RatPolynomial:
    """c^rho_{lam dlt}(n) = sum_k k^{rho u 1^k} binom(n - |rho|, k)."""
    k = universal_coeffs(lam, dlt)
    out = RatPolynomial()
    for j in range(size(lam) + size(dlt) - size(rho) + 1):
        coeff = k.get(union(rho, (1,) * j), 0)
        if coeff:
            out = out + RatPolynomial.binomial_in_n(size(rho), j) * coeff
    return out


def _stats(x: Union[PartialPerm, Partition]) -> tuple[int, int, int]:
    t = x.cycle_type() if isinstance(x, PartialPerm) else tuple(x)
    return size(t), length(t), multiplicity(t, 1)


def filtration_degree(which: int, x: Union[PartialPerm, Partition]) -> int:
    s, l, m1 = _stats(x)
    if which == 1:
        return s
    if which == 2:
        return s + m1
    if which == 3:
        return s - l
    if which == 4:
        return s - l + m1
    raise ValueError(f"unknown filtration {which}")


class DegreeBounds(NamedTuple):
    bound1: Fraction
    bound2: int
    actual: Union[int, str]

    @property
    def ok(self) -> bool:
        if self.actual == "-inf":
            return True
        return self.actual <= math.floor(self.bound1) and self.actual <= self.bound2


def degree_bounds(lam: Partition, dlt: Partition, rho: Partition) -> DegreeBounds:
    b = size(lam) + size(dlt) - size(rho)
    bound1 = Fraction(b, 2)
    bound2 = b + length(rho) - length(lam) - length(dlt)
    return DegreeBounds(bound1, bound2, c_poly_reconstruct(lam, dlt, rho).degree)
