"""Partial bijections of [2n] between unions of pairs p(k) = {2k-1, 2k}.

The averaged product composes trivial extensions of both factors (the
right factor acts first, as for maps) and weights each result by 1/|E|.
Points are 1-based throughout this module.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

from .core import (
    Partition,
    RatPolynomial,
    falling,
    is_proper,
    length,
    multiplicity,
    partition,
    partitions_of,
    size,
    strip,
    union,
)
from .permgroups import Setting, compose
from .classalg import AlgebraElement


def block_points(blocks) -> tuple:
    return tuple(p for k in blocks for p in (2 * k - 1, 2 * k))


def block_of(x: int) -> int:
    return (x + 1) // 2


def partner(x: int) -> int:
    return x + 1 if x % 2 else x - 1


@dataclass(frozen=True, order=True)
class PartialBijection:
    d: tuple   # sorted block indices of the domain
    dp: tuple  # sorted block indices of the codomain
    s: tuple   # sorted (point, image) pairs

    @classmethod
    def make(cls, mapping: dict) -> "PartialBijection":
        d = tuple(sorted({block_of(x) for x in mapping}))
        dp = tuple(sorted({block_of(y) for y in mapping.values()}))
        if set(mapping) != set(block_points(d)) or set(mapping.values()) != set(block_points(dp)):
            raise ValueError("domain and codomain must be unions of pairs")
        if len(set(mapping.values())) != len(mapping):
            raise ValueError("not injective")
        return cls(d, dp, tuple(sorted(mapping.items())))

    def mapping(self) -> dict:
        return dict(self.s)

    def one_line(self) -> list[int]:
        return [y for _, y in self.s]


EMPTY_PB = PartialBijection((), (), ())


def from_perm(w) -> PartialBijection:
    """A permutation of [2n] (0-based tuple) seen as a full partial bijection."""
    return PartialBijection.make({i + 1: j + 1 for i, j in enumerate(w)})


def pb_coset_type(a: PartialBijection) -> Partition:
    """Half-lengths of the cycles of the graph alternating pair edges of d
    and edges joining points whose images form a pair of d'."""
    m = a.mapping()
    inv = {y: x for x, y in m.items()}
    seen = set()
    parts = []
    for start in sorted(m):
        if start in seen:
            continue
        v, count = start, 0
        while True:
            seen.add(v)
            u = partner(v)
            seen.add(u)
            v = inv[partner(m[u])]
            count += 1
            if v == start:
                break
        parts.append(count)
    return partition(parts)


def _injections(src: list, dst: list) -> Iterator[list]:
    for img in itertools.permutations(dst, len(src)):
        yield list(img)


def trivial_extensions(a: PartialBijection, target_d, n: int) -> Iterator[PartialBijection]:
    """Extensions of a to domain target_d sending each new pair onto a free pair."""
    target_d = tuple(sorted(target_d))
    if not set(a.d) <= set(target_d):
        raise ValueError(f"domain {a.d} is not contained in {target_d}")
    new = [k for k in target_d if k not in a.d]
    free = [k for k in range(1, n + 1) if k not in a.dp]
    base = a.mapping()
    for img in _injections(new, free):
        for flips in itertools.product((0, 1), repeat=len(new)):
            m = dict(base)
            for k, kk, f in zip(new, img, flips):
                m[2 * k - 1] = 2 * kk - 1 + f
                m[2 * k] = 2 * kk - f
            yield PartialBijection.make(m)


def codomain_extensions(a: PartialBijection, target_dp, n: int) -> Iterator[PartialBijection]:
    """Extensions of a whose codomain becomes target_dp, new preimages taken among free pairs."""
    target_dp = tuple(sorted(target_dp))
    if not set(a.dp) <= set(target_dp):
        raise ValueError(f"codomain {a.dp} is not contained in {target_dp}")
    new = [k for k in target_dp if k not in a.dp]
    free = [k for k in range(1, n + 1) if k not in a.d]
    base = a.mapping()
    for pre in _injections(new, free):
        for flips in itertools.product((0, 1), repeat=len(new)):
            m = dict(base)
            for k, kk, f in zip(new, pre, flips):
                m[2 * kk - 1] = 2 * k - 1 + f
                m[2 * kk] = 2 * k - f
            yield PartialBijection.make(m)


def extension_count(blocks: int, added: int, n: int) -> int:
    """Number of trivial extensions adding `added` pairs to a bijection with `blocks` pairs."""
    return 2**added * falling(n - blocks, added)


def e_size(a1: PartialBijection, a2: PartialBijection, n: int) -> int:
    """|E| for the product a1 * a2: both extensions to d1 u d2'."""
    u1 = len(set(a2.dp) - set(a1.d))
    u2 = len(set(a1.d) - set(a2.dp))
    return extension_count(len(a1.dp), u1, n) * extension_count(len(a2.d), u2, n)


def e_set(a1: PartialBijection, a2: PartialBijection, n: int) -> list:
    u = sorted(set(a1.d) | set(a2.dp))
    return [(e1, e2) for e1 in trivial_extensions(a1, u, n) for e2 in codomain_extensions(a2, u, n)]


def compose_pb(e1: PartialBijection, e2: PartialBijection) -> PartialBijection:
    """e1 after e2, defined when the domain of e1 is the codomain of e2."""
    m1 = e1.mapping()
    return PartialBijection.make({x: m1[y] for x, y in e2.s})


WeightedSum = dict


def pb_product(a1: PartialBijection, a2: PartialBijection, n: int) -> WeightedSum:
    """Average of the compositions of all pairs of trivial extensions in E."""
    pairs = e_set(a1, a2, n)
    w = Fraction(1, len(pairs))
    out: dict = {}
    for e1, e2 in pairs:
        c = compose_pb(e1, e2)
        out[c] = out.get(c, 0) + w
    return out


def ws_add(a: WeightedSum, b: WeightedSum, scale=1) -> WeightedSum:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + scale * v
        if out[k] == 0:
            del out[k]
    return out


def ws_product(a: WeightedSum, b: WeightedSum, n: int, product: Callable | None = None) -> WeightedSum:
    """Bilinear extension of pb_product (or of a memoized variant)."""
    product = product or (lambda x, y: pb_product(x, y, n))
    out: dict = {}
    for x, cx in a.items():
        for y, cy in b.items():
            for z, cz in product(x, y).items():
                out[z] = out.get(z, 0) + cx * cy * cz
    return {k: v for k, v in out.items() if v != 0}


def all_partial_bijections(n: int, max_blocks: int | None = None) -> list[PartialBijection]:
    if max_blocks is None:
        max_blocks = n
    out = []
    for k in range(max_blocks + 1):
        for d in itertools.combinations(range(1, n + 1), k):
            pts = block_points(d)
            for dp in itertools.combinations(range(1, n + 1), k):
                for img in itertools.permutations(block_points(dp)):
                    out.append(PartialBijection(d, dp, tuple(zip(pts, img))))
    return out


# the action of B_n x B_n

def _bn_apply(b, x: int) -> int:
    return b[x - 1] + 1


def act(a, b, alpha: PartialBijection) -> PartialBijection:
    """(a, b) . alpha = a o sigma o b^-1 for a, b in B_n (0-based tuples)."""
    binv = {_bn_apply(b, x): x for x in range(1, len(b) + 1)}
    m = alpha.mapping()
    return PartialBijection.make({bx: _bn_apply(a, m[x]) for bx, x in binv.items() if x in m})


# invariant classes A_{rho, n}

@lru_cache(maxsize=None)
def a_class(rho: Partition, n: int) -> tuple:
    """Partial bijections of [2n] with |rho| pairs and coset type rho."""
    k = size(rho)
    out = []
    if k > n:
        return ()
    for d in itertools.combinations(range(1, n + 1), k):
        pts = block_points(d)
        for dp in itertools.combinations(range(1, n + 1), k):
            for img in itertools.permutations(block_points(dp)):
                a = PartialBijection(d, dp, tuple(zip(pts, img)))
                if pb_coset_type(a) == rho:
                    out.append(a)
    return tuple(out)


@lru_cache(maxsize=None)
def _index_by(rho: Partition, n: int, field: str) -> dict:
    out: dict = {}
    for a in a_class(rho, n):
        out.setdefault(getattr(a, field), []).append(a)
    return out


def a_class_size(rho: Partition, n: int) -> int:
    return len(a_class(rho, n))


def _weight_if_arises(a1: PartialBijection, a2: PartialBijection, target: PartialBijection, n: int) -> Fraction:
    """Weight of target in a1 * a2 (extensions are forced by the target)."""
    m1, m2, mt = a1.mapping(), a2.mapping(), target.mapping()
    inv1 = {y: x for x, y in m1.items()}
    inv2 = {y: x for x, y in m2.items()}
    d1, dp2 = set(a1.d), set(a2.dp)
    # extension of a2: new domain pairs go to the pairs of d1 outside d2'
    ext2 = dict(m2)
    for k in target.d:
        if k in a2.d:
            continue
        ys = []
        for x in (2 * k - 1, 2 * k):
            y = inv1.get(mt[x])
            if y is None or block_of(y) in dp2:
                return Fraction(0)
            ys.append(y)
        if partner(ys[0]) != ys[1]:
            return Fraction(0)
        ext2[2 * k - 1], ext2[2 * k] = ys
    # extension of a1 on the pairs of d2' outside d1
    ext1 = dict(m1)
    for k in dp2 - d1:
        zs = []
        for y in (2 * k - 1, 2 * k):
            z = mt.get(inv2[y])
            if z is None or block_of(z) in a1.dp:
                return Fraction(0)
            zs.append(z)
        if partner(zs[0]) != zs[1]:
            return Fraction(0)
        ext1[2 * k - 1], ext1[2 * k] = zs
    for x, z in mt.items():
        y = ext2.get(x)
        if y is None or ext1.get(y) != z:
            return Fraction(0)
    return Fraction(1, e_size(a1, a2, n))


def _coefficient(lam: Partition, dlt: Partition, target: PartialBijection, n: int) -> Fraction:
    big_d, big_dp = set(target.d), set(target.dp)
    nb = len(target.d)
    by_d1 = _index_by(lam, n, "d")
    total = Fraction(0)
    for a2 in a_class(dlt, n):
        if not set(a2.d) <= big_d:
            continue
        for d1, group in by_d1.items():
            if len(set(d1) | set(a2.dp)) != nb:
                continue
            for a1 in group:
                if set(a1.dp) <= big_dp:
                    w = _weight_if_arises(a1, a2, target, n)
                    if w:
                        total += w
    return total


def invariant_product(lam: Partition, dlt: Partition, n: int) -> dict:
    """Coefficients c^rho(n) in A_{lam,n} * A_{dlt,n} = sum c^rho(n) A_{rho,n}."""
    out = {}
    for s in range(n + 1):
        for rho in partitions_of(s):
            cls = a_class(rho, n)
            if not cls:
                continue
            c = _coefficient(tuple(lam), tuple(dlt), cls[0], n)
            if c:
                out[rho] = c
    return out


def invariant_product_brute(lam: Partition, dlt: Partition, n: int) -> dict:
    """Same expansion by multiplying every pair with pb_product (slow oracle)."""
    acc: dict = {}
    for a1 in a_class(tuple(lam), n):
        for a2 in a_class(tuple(dlt), n):
            for z, w in pb_product(a1, a2, n).items():
                acc[z] = acc.get(z, 0) + w
    out = {}
    for z, w in acc.items():
        out.setdefault(pb_coset_type(z), set()).add(w)
    for rho, ws in out.items():
        if len(ws) != 1:
            raise AssertionError(f"coefficient not constant on A_{rho}")
    return {rho: ws.pop() for rho, ws in out.items()}


@lru_cache(maxsize=None)
def _t_coeffs(lam: Partition, dlt: Partition) -> tuple:
    big_n = size(lam) + size(dlt)
    c = invariant_product(lam, dlt, big_n)
    denom = math.comb(big_n, size(lam)) * math.comb(big_n, size(dlt))
    return tuple(sorted((rho, v * math.comb(big_n, size(rho)) / denom) for rho, v in c.items()))


def t_coeffs(lam: Partition, dlt: Partition) -> dict:
    """b^rho = c^rho(|rho|) / (binom(|rho|,|lam|) binom(|rho|,|dlt|)).

    Evaluated from one product at level |lam|+|dlt| and transported to
    level |rho| with the binomial ratio law.
    """
    return dict(_t_coeffs(tuple(lam), tuple(dlt)))


def c_from_t(lam: Partition, dlt: Partition, rho: Partition, n: int) -> Fraction:
    """c^rho(n) predicted by the ratio law from b^rho."""
    b = t_coeffs(lam, dlt).get(tuple(rho), Fraction(0))
    if n < size(rho):
        return Fraction(0)
    return b * math.comb(n, size(lam)) * math.comb(n, size(dlt)) / math.comb(n, size(rho))


# projection to the Hecke algebra

def psi(alpha: PartialBijection, n: int) -> dict:
    """Average of the full trivial extensions, as an element of Q[S_2n] (0-based perms)."""
    exts = list(trivial_extensions(alpha, range(1, n + 1), n))
    w = Fraction(1, len(exts))
    out: dict = {}
    for e in exts:
        p = tuple(y - 1 for _, y in e.s)
        out[p] = out.get(p, 0) + w
    return out


def psi_sum(ws: WeightedSum, n: int) -> dict:
    out: dict = {}
    for a, c in ws.items():
        for p, w in psi(a, n).items():
            out[p] = out.get(p, 0) + c * w
    return {k: v for k, v in out.items() if v != 0}


def maps_product(f, g):
    """Group product with the right factor acting first: (fg)(x) = f(g(x))."""
    return compose(g, f)


def ga_product(a: dict, b: dict, mul: Callable = maps_product) -> dict:
    """Product in the group algebra with group law mul."""
    out: dict = {}
    for x, cx in a.items():
        for y, cy in b.items():
            z = mul(x, y)
            out[z] = out.get(z, 0) + cx * cy
    return {k: v for k, v in out.items() if v != 0}


def projection_factor(lam: Partition, n: int) -> Fraction:
    m1 = multiplicity(lam, 1)
    return Fraction(math.comb(n - size(strip(lam)), m1), 2 ** (n - size(lam)) * math.factorial(n - size(lam)))


def pb_project(lam: Partition, n: int) -> AlgebraElement:
    """psi_n(A_{lam,n}) as a multiple of the Hecke class sum of pad(strip(lam))."""
    if size(lam) > n:
        raise ValueError(f"A_{lam} does not exist at n={n}")
    return AlgebraElement(Setting.HECKE, n, {strip(tuple(lam)): projection_factor(lam, n)})


def pb_project_combination(element: dict, n: int) -> AlgebraElement:
    out = AlgebraElement(Setting.HECKE, n, {})
    for rho, c in element.items():
        out = out + pb_project(rho, n).scale(c)
    return out


def alpha_poly(lam: Partition, dlt: Partition, tau: Partition) -> RatPolynomial:
    """f(n) with alpha^tau_{lam dlt}(n) = 2^n n! f(n) in the Hecke algebra."""
    b = t_coeffs(lam, dlt)
    s = size(lam) + size(dlt)
    t = size(tau)
    out = RatPolynomial()
    for j in range(s - t + 1):
        coeff = b.get(union(tuple(tau), (1,) * j), 0)
        if not coeff:
            continue
        const = coeff * falling(t + j, t) * Fraction(2) ** (t + j - s)
        out = out + RatPolynomial.falling_in_n(t, j) * const
    return out * Fraction(1, math.factorial(size(lam)) * math.factorial(size(dlt)))


def pb_filtration_degree(which: int, rho: Partition) -> int:
    if which == 1:
        return size(rho)
    if which == 2:
        return size(rho) - length(rho)
    if which == 3:
        return size(rho) - length(rho) + multiplicity(rho, 1)
    raise ValueError(f"unknown filtration {which}")


def alpha_degree_bounds(lam: Partition, dlt: Partition, rho: Partition) -> tuple[int, int]:
    b = size(lam) + size(dlt) - size(rho)
    return b, b - length(lam) - length(dlt) + length(rho)
