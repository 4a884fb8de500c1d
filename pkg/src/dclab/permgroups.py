"""Permutations, the groups S_n, B_n and S_n x S_{n-1}^opp, and class invariants.

Permutations are stored 0-based as tuples of images; parsing and printing
are 1-based.  The product of f and g is ``compose(f, g)``, the map
x -> g(f(x)): f acts first.
"""
from __future__ import annotations

import itertools
import math
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .core import (
    Partition,
    format_partition,
    is_proper,
    pad,
    parse_partition,
    partition,
    partitions_of,
    size,
    strip,
    z_lambda,
    double,
    length,
)

Perm = tuple


class Setting(str, Enum):
    SYM = "sym-center"
    HECKE = "hecke-pair"
    BN = "bn-center"
    DIAG = "diag-pair"

    @classmethod
    def parse(cls, text: str) -> "Setting":
        for s in cls:
            if text in (s.value, s.name.lower(), s.name):
                return s
        raise ValueError(f"unknown setting {text!r}; expected one of {[s.value for s in cls]}")


# basic permutation arithmetic

def identity(m: int) -> Perm:
    return tuple(range(m))


def compose(f: Perm, g: Perm) -> Perm:
    """The product fg, which maps x to g(f(x))."""
    if len(f) != len(g):
        raise ValueError(f"degree mismatch: {len(f)} vs {len(g)}")
    return tuple(g[i] for i in f)


def inverse(f: Perm) -> Perm:
    out = [0] * len(f)
    for i, j in enumerate(f):
        out[j] = i
    return tuple(out)


def embed(f: Perm, m: int) -> Perm:
    """Extend f to degree m by fixing the new points."""
    if m < len(f):
        raise ValueError(f"cannot embed degree {len(f)} into {m}")
    return tuple(f) + tuple(range(len(f), m))


def is_permutation(images: Sequence[int]) -> bool:
    return sorted(images) == list(range(len(images)))


def parse_perm(text: str) -> Perm:
    """Parse a 1-based one-line string such as "2,4,9,3,1,10,5,8,6,7"."""
    vals = []
    for pos, tok in enumerate(text.split(",")):
        tok = tok.strip()
        if not tok.lstrip("-").isdigit():
            raise ValueError(f"bad permutation entry {tok!r} at position {pos + 1}")
        vals.append(int(tok) - 1)
    if not is_permutation(vals):
        raise ValueError(f"{text!r} is not a permutation of 1..{len(vals)}")
    return tuple(vals)


def format_perm(f: Perm) -> str:
    return ",".join(str(i + 1) for i in f)


def from_cycles(m: int, cycles: Sequence[Sequence[int]]) -> Perm:
    """Build a permutation of degree m from 1-based cycles."""
    out = list(range(m))
    for cyc in cycles:
        for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
            out[a - 1] = b - 1
    return tuple(out)


def cycles(f: Perm) -> list[list[int]]:
    seen = [False] * len(f)
    out = []
    for start in range(len(f)):
        if not seen[start]:
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = f[x]
            out.append(cyc)
    return out


def cycle_type(f: Perm) -> Partition:
    return partition(len(c) for c in cycles(f))


def moved_max(f: Perm) -> int:
    """Largest 1-based point moved by f, 0 for the identity."""
    for i in range(len(f) - 1, -1, -1):
        if f[i] != i:
            return i + 1
    return 0


# coset type and the hyperoctahedral group

def coset_type(w: Perm) -> Partition:
    """Half-lengths of the cycles of the graph built from w.

    Vertex v is joined to v's partner in its pair (outer edge) and to the
    vertex whose image is the partner of w(v) (inner edge).
    """
    m = len(w)
    if m % 2:
        raise ValueError("coset type needs an even degree")
    winv = inverse(w)
    seen = [False] * m
    parts = []
    for start in range(m):
        if seen[start]:
            continue
        v, count = start, 0
        while True:
            seen[v] = True
            u = v ^ 1
            seen[u] = True
            v = winv[w[u] ^ 1]
            count += 1
            if v == start:
                break
        parts.append(count)
    return partition(parts)


def matching_of(w: Perm) -> frozenset:
    """The pairing {w^-1(p(k))} of the points; the coset type only depends on it."""
    winv = inverse(w)
    return frozenset(frozenset((winv[2 * k], winv[2 * k + 1])) for k in range(len(w) // 2))


def matching_union_type(m1, m2) -> Partition:
    """Half-sizes of the connected components of two perfect matchings."""
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in (tuple(e) for e in itertools.chain(m1, m2)):
        parent[find(a)] = find(b)
    comp = {}
    for x in list(parent):
        r = find(x)
        comp[r] = comp.get(r, 0) + 1
    return partition(c // 2 for c in comp.values())


def standard_matching(n: int) -> frozenset:
    return frozenset(frozenset((2 * k, 2 * k + 1)) for k in range(n))


def coset_type_by_matchings(w: Perm) -> Partition:
    """Independent route to the coset type via union-find on two matchings."""
    return matching_union_type(standard_matching(len(w) // 2), matching_of(w))


def perfect_matchings(points: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    pts = list(points)
    if not pts:
        yield []
        return
    a = pts[0]
    for i in range(1, len(pts)):
        rest = pts[1:i] + pts[i + 1:]
        for m in perfect_matchings(rest):
            yield [(a, pts[i])] + m


def is_bn(w: Perm) -> bool:
    return len(w) % 2 == 0 and all(w[2 * k] ^ 1 == w[2 * k + 1] for k in range(len(w) // 2))


def bn_type(w: Perm) -> tuple[Partition, Partition]:
    """Type (λ, δ) of an element of B_n.

    λ collects the cycles that come with a disjoint mirror cycle, δ the
    cycles that contain both points of some pair (one part of half length).
    """
    if not is_bn(w):
        raise ValueError("element is not in the hyperoctahedral group")
    n = len(w) // 2
    seen = [False] * n
    lam, dlt = [], []
    for k in range(n):
        if seen[k]:
            continue
        x, r = 2 * k, 0
        while True:
            seen[x // 2] = True
            x = w[x]
            r += 1
            if x // 2 == k:
                break
        (lam if x == 2 * k else dlt).append(r)
    return partition(lam), partition(dlt)


def diag_type(s: Perm) -> tuple[int, Partition]:
    """(length of the cycle through 1, cycle type of the other cycles)."""
    rest = []
    i = 0
    for c in cycles(s):
        if 0 in c:
            i = len(c)
        else:
            rest.append(len(c))
    return i, partition(rest)


@lru_cache(maxsize=None)
def sym_elements(m: int) -> tuple:
    return tuple(itertools.permutations(range(m)))


@lru_cache(maxsize=None)
def bn_elements(n: int) -> tuple:
    """B_n inside S_2n in lexicographic order, by filtering."""
    return tuple(w for w in itertools.permutations(range(2 * n)) if is_bn(w))


def bn_generate(n: int) -> list[Perm]:
    """B_n built from block permutations and flips (independent of filtering)."""
    out = []
    for pi in itertools.permutations(range(n)):
        for flips in itertools.product((0, 1), repeat=n):
            w = [0] * (2 * n)
            for k in range(n):
                w[2 * k] = 2 * pi[k] + flips[k]
                w[2 * k + 1] = 2 * pi[k] + 1 - flips[k]
            out.append(tuple(w))
    return sorted(out)


# settings: groups, labels and classes

def group_mul(setting: Setting) -> Callable:
    if setting is Setting.DIAG:
        return lambda x, y: (compose(x[0], y[0]), compose(y[1], x[1]))
    return compose


def group_inv(setting: Setting) -> Callable:
    if setting is Setting.DIAG:
        return lambda x: (inverse(x[0]), inverse(x[1]))
    return inverse


def group_identity(setting: Setting, n: int):
    if setting is Setting.SYM:
        return identity(n)
    if setting is Setting.DIAG:
        return identity(n), identity(n)
    return identity(2 * n)


def element_label(setting: Setting, x):
    """Full (unpadded) class invariant of a group element."""
    if setting is Setting.SYM:
        return cycle_type(x)
    if setting is Setting.HECKE:
        return coset_type(x)
    if setting is Setting.BN:
        return bn_type(x)
    a, b = x
    return diag_type(compose(a, b))


def full_label(setting: Setting, label, n: int):
    """Padded label at level n, or None when the class is empty at n."""
    if setting in (Setting.SYM, Setting.HECKE):
        if not is_proper(label):
            raise ValueError(f"label {label} is not proper")
        return pad(label, n) if size(label) <= n else None
    if setting is Setting.BN:
        lam, dlt = label
        if not is_proper(lam):
            raise ValueError(f"label {label} is not proper")
        r = n - size(lam) - size(dlt)
        return (tuple(lam) + (1,) * r, tuple(dlt)) if r >= 0 else None
    i, lam = label
    if i < 1 or not is_proper(lam):
        raise ValueError(f"label {label} is not proper")
    return (i, pad(lam, n - i)) if i + size(lam) <= n else None


def proper_label(setting: Setting, full):
    if setting in (Setting.SYM, Setting.HECKE):
        return strip(full)
    if setting is Setting.BN:
        return strip(full[0]), full[1]
    return full[0], strip(full[1])


def label_size(setting: Setting, label) -> int:
    """Smallest n at which a proper label exists."""
    if setting in (Setting.SYM, Setting.HECKE):
        return size(label)
    if setting is Setting.BN:
        return size(label[0]) + size(label[1])
    return label[0] + size(label[1])


def format_label(setting: Setting, label) -> str:
    if setting in (Setting.SYM, Setting.HECKE):
        return format_partition(label)
    if setting is Setting.BN:
        return f"{format_partition(label[0])}|{format_partition(label[1])}"
    return f"{label[0]};{format_partition(label[1])}"


def parse_label(setting: Setting, text: str):
    text = text.strip()
    if setting in (Setting.SYM, Setting.HECKE):
        return parse_partition(text)
    if setting is Setting.BN:
        if "|" not in text:
            raise ValueError(f"bn-center label needs the form 'λ|δ', got {text!r}")
        a, b = text.split("|", 1)
        return parse_partition(a), parse_partition(b)
    if ";" not in text:
        raise ValueError(f"diag-pair label needs the form 'i;λ', got {text!r}")
    a, b = text.split(";", 1)
    if not a.strip().isdigit():
        raise ValueError(f"bad cycle length {a!r} in {text!r}")
    return int(a), parse_partition(b)


def label_sort_key(setting: Setting, label):
    if setting in (Setting.SYM, Setting.HECKE):
        return (size(label), tuple(-p for p in label))
    if setting is Setting.BN:
        return (size(label[0]) + size(label[1]), tuple(-p for p in label[0]), tuple(-p for p in label[1]))
    return (label[0] + size(label[1]), label[0], tuple(-p for p in label[1]))


def proper_labels(setting: Setting, n: int) -> list:
    """Every proper label whose class is nonempty at level n."""
    out = []
    if setting in (Setting.SYM, Setting.HECKE):
        out = [p for s in range(n + 1) for p in partitions_of(s) if is_proper(p)]
    elif setting is Setting.BN:
        for a in range(n + 1):
            for lam in partitions_of(a):
                if not is_proper(lam):
                    continue
                for b in range(n - a + 1):
                    out.extend((lam, d) for d in partitions_of(b))
    else:
        for i in range(1, n + 1):
            out.extend((i, p) for s in range(n - i + 1) for p in partitions_of(s) if is_proper(p))
    return sorted(out, key=lambda lab: label_sort_key(setting, lab))


def ambient(setting: Setting, n: int) -> Iterator:
    """The ambient group in lexicographic order."""
    if setting is Setting.SYM:
        yield from itertools.permutations(range(n))
    elif setting is Setting.HECKE:
        yield from itertools.permutations(range(2 * n))
    elif setting is Setting.BN:
        yield from bn_elements(n)
    else:
        tails = [(0,) + p for p in itertools.permutations(range(1, n))] if n else [()]
        for a in itertools.permutations(range(n)):
            for b in tails:
                yield a, b


def ambient_size(setting: Setting, n: int) -> int:
    if setting is Setting.SYM:
        return math.factorial(n)
    if setting is Setting.HECKE:
        return math.factorial(2 * n)
    if setting is Setting.BN:
        return 2**n * math.factorial(n)
    return math.factorial(n) * math.factorial(max(n - 1, 0))


# Levels up to which classes are produced by filtering the ambient group.
FILTER_LIMIT = {Setting.SYM: 8, Setting.HECKE: 4, Setting.BN: 4, Setting.DIAG: 6}


@lru_cache(maxsize=None)
def classify(setting: Setting, n: int) -> dict:
    """Map full label -> tuple of elements in lexicographic order."""
    if n > FILTER_LIMIT[setting]:
        raise ValueError(f"{setting.value}: full enumeration refused at n={n} (> {FILTER_LIMIT[setting]})")
    out: dict = {}
    for x in ambient(setting, n):
        out.setdefault(element_label(setting, x), []).append(x)
    return {k: tuple(v) for k, v in out.items()}


def hecke_class_by_matchings(full: Partition, n: int) -> list[Perm]:
    """All w in S_2n with coset type full, generated from their matchings.

    The coset type of w only depends on the matching w^-1 of the standard
    pairs, and each matching is hit by exactly 2^n n! permutations.
    """
    std = standard_matching(n)
    out = []
    for m in perfect_matchings(range(2 * n)):
        if matching_union_type(std, [frozenset(e) for e in m]) != full:
            continue
        for pi in itertools.permutations(range(n)):
            for flips in itertools.product((0, 1), repeat=n):
                w = [0] * (2 * n)
                for j, (a, b) in enumerate(m):
                    w[a] = 2 * pi[j] + flips[j]
                    w[b] = 2 * pi[j] + 1 - flips[j]
                out.append(tuple(w))
    out.sort()
    return out


def diag_class_by_products(full, n: int) -> list:
    """All pairs (a, b) in S_n x S_{n-1} with diag_type(ab) = full.

    Each u of the right S_{n-1}-conjugacy type gives one pair per b,
    with a = u b^-1.
    """
    tails = [(0,) + p for p in itertools.permutations(range(1, n))] if n else [()]
    out = []
    for u in itertools.permutations(range(n)):
        if diag_type(u) != full:
            continue
        for b in tails:
            out.append((compose(u, inverse(b)), b))
    out.sort()
    return out


@lru_cache(maxsize=None)
def _class_tuple(setting: Setting, full, n: int) -> tuple:
    if setting is Setting.HECKE and n > FILTER_LIMIT[setting]:
        return tuple(hecke_class_by_matchings(full, n))
    if setting is Setting.DIAG and n > FILTER_LIMIT[setting]:
        return tuple(diag_class_by_products(full, n))
    return classify(setting, n).get(full, ())


def enumerate_class(setting: Setting, label, n: int) -> tuple:
    """Elements of the class with the given proper label at level n."""
    full = full_label(setting, label, n)
    if full is None:
        return ()
    return _class_tuple(setting, full, n)


@lru_cache(maxsize=None)
def first_in_class(setting: Setting, label, n: int):
    """First element of the class in lexicographic order, None if empty."""
    full = full_label(setting, label, n)
    if full is None:
        return None
    if n <= FILTER_LIMIT[setting]:
        cls = classify(setting, n).get(full, ())
        return cls[0] if cls else None
    for x in ambient(setting, n):
        if element_label(setting, x) == full:
            return x
    return None


def class_size(setting: Setting, label, n: int) -> int:
    """Closed-form size of the class with a proper label; 0 if empty at n."""
    full = full_label(setting, label, n)
    if full is None:
        return 0
    if setting is Setting.SYM:
        return math.factorial(n) // z_lambda(full)
    if setting is Setting.HECKE:
        bn = 2**n * math.factorial(n)
        return bn * bn // z_lambda(double(full))
    if setting is Setting.BN:
        lam, dlt = full
        return (2**n * math.factorial(n)) // (2 ** (length(lam) + length(dlt)) * z_lambda(lam) * z_lambda(dlt))
    i, lam = full
    f = math.factorial(n - 1)
    return f * f // z_lambda(lam)
