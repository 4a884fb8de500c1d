"""Exact rationals, partitions and polynomials in n.

Partitions are plain tuples sorted in decreasing order, so they hash and
compare cheaply and can be used directly as basis labels.
"""
from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Rational = Fraction
Partition = tuple

EMPTY: Partition = ()


def partition(parts: Iterable[int]) -> Partition:
    """Normalize an iterable of positive integers into a partition."""
    out = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p <= 0 for p in out):
        raise ValueError(f"partition parts must be positive: {out}")
    return out


def size(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def multiplicity(lam: Partition, i: int) -> int:
    return sum(1 for p in lam if p == i)


def union(lam: Partition, mu: Partition) -> Partition:
    return partition(lam + mu)


def double(lam: Partition) -> Partition:
    """The partition 2λ, every part doubled."""
    return tuple(2 * p for p in lam)


def is_proper(lam: Partition) -> bool:
    return all(p > 1 for p in lam)


def z_lambda(lam: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type lam."""
    out = 1
    for part, m in Counter(lam).items():
        out *= part**m * math.factorial(m)
    return out


def pad(lam: Partition, n: int) -> Partition:
    """Complete a proper partition with parts equal to 1 up to size n."""
    if not is_proper(lam):
        raise ValueError(f"pad expects a proper partition, got {lam}")
    if n < size(lam):
        raise ValueError(f"cannot pad {lam} to size {n}")
    return tuple(lam) + (1,) * (n - size(lam))


def strip(lam: Partition) -> Partition:
    """Remove the parts equal to 1."""
    return tuple(p for p in lam if p != 1)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def proper_partitions(max_size: int) -> list[Partition]:
    """Proper partitions of size at most max_size, ordered by size."""
    return [p for s in range(max_size + 1) for p in partitions_of(s) if is_proper(p)]


def falling(x: int, k: int) -> int:
    """Falling factorial x(x-1)...(x-k+1)."""
    out = 1
    for i in range(k):
        out *= x - i
    return out


# string formats

def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam) if lam else "-"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("-", "", "()", "∅"):
        return EMPTY
    parts = []
    for pos, tok in enumerate(text.split(",")):
        tok = tok.strip()
        if not tok.isdigit() or int(tok) == 0:
            raise ValueError(f"bad partition part {tok!r} at position {pos + 1} in {text!r}")
        parts.append(int(tok))
    return partition(parts)


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


class RatPolynomial:
    """Univariate polynomial in n with Fraction coefficients (index = power)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> "RatPolynomial":
        return cls([c])

    @classmethod
    def n(cls) -> "RatPolynomial":
        return cls([0, 1])

    @classmethod
    def falling_in_n(cls, shift: int, k: int) -> "RatPolynomial":
        """(n - shift)(n - shift - 1)...(n - shift - k + 1)."""
        out = cls([1])
        for i in range(k):
            out = out * cls([-(shift + i), 1])
        return out

    @classmethod
    def binomial_in_n(cls, shift: int, k: int) -> "RatPolynomial":
        """binom(n - shift, k) as a polynomial in n."""
        return cls.falling_in_n(shift, k) * Fraction(1, math.factorial(k))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else "-inf"

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other) -> "RatPolynomial":
        other = _as_poly(other)
        m = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (m - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (m - len(other.coeffs))
        return RatPolynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> "RatPolynomial":
        return RatPolynomial([-c for c in self.coeffs])

    def __sub__(self, other) -> "RatPolynomial":
        return self + (-_as_poly(other))

    def __mul__(self, other) -> "RatPolynomial":
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return RatPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        try:
            return self.coeffs == _as_poly(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPolynomial({[format_rational(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(format_rational(c))
                continue
            mono = "n" if i == 1 else f"n^{i}"
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{format_rational(c)}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def _as_poly(x) -> RatPolynomial:
    if isinstance(x, RatPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return RatPolynomial([x])
    raise TypeError(f"cannot treat {type(x).__name__} as a polynomial")


def lagrange_fit(points: Sequence[tuple[int, Fraction]]) -> RatPolynomial:
    """Interpolating polynomial of degree < len(points), exact."""
    if not points:
        raise ValueError("lagrange_fit needs at least one point")
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError(f"duplicate abscissa in {xs}")
    out = RatPolynomial()
    for i, (xi, yi) in enumerate(points):
        basis = RatPolynomial([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * RatPolynomial([-xj, 1])
                denom *= xi - xj
        out = out + basis * (Fraction(yi) / denom)
    return out
