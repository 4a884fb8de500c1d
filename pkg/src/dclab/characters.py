"""Characters of S_n, Frobenius coefficients, zonal spherical functions of
(S_2n, B_n) and Plancherel moments.

Character values come from the Murnaghan-Nakayama rule on beta-sets: a
border strip of size r is removed by lowering one bead by r, with sign
(-1)^(beads jumped over).
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .core import EMPTY, Partition, double, pad, partition, partitions_of, size, z_lambda
from .permgroups import (
    Setting,
    bn_elements,
    class_size,
    compose,
    coset_type,
    cycle_type,
    first_in_class,
)

# Direct zonal summation over B_n inside S_2n is only offered up to this n.
ZONAL_MAX_N = 3


def _beta(lam: Partition) -> tuple:
    l = len(lam)
    return tuple(lam[i] + (l - 1 - i) for i in range(l))


def _from_beta(beta) -> Partition:
    bs = sorted(beta, reverse=True)
    l = len(bs)
    return partition(p for p in (bs[i] - (l - 1 - i) for i in range(l)) if p > 0)


def border_strips(lam: Partition, r: int):
    """Yield (sign, lam minus a border strip of size r) over all such strips."""
    beta = _beta(lam)
    present = set(beta)
    for b in beta:
        nb = b - r
        if nb < 0 or nb in present:
            continue
        jumped = sum(1 for c in beta if nb < c < b)
        newbeta = [c for c in beta if c != b] + [nb]
        yield (-1) ** jumped, _from_beta(newbeta)


@lru_cache(maxsize=None)
def _mn(lam: Partition, parts: tuple) -> int:
    if not parts:
        return 1 if not lam else 0
    r, rest = parts[0], parts[1:]
    return sum(sign * _mn(mu, rest) for sign, mu in border_strips(lam, r))


def mn_character(lam: Partition, mu: Partition, ascending: bool = False) -> int:
    """Irreducible character value chi^lam on the class of cycle type mu."""
    if size(lam) != size(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    parts = tuple(sorted(mu, reverse=not ascending))
    return _mn(tuple(lam), parts)


@lru_cache(maxsize=None)
def dim_irrep(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam, by removing corners."""
    lam = tuple(lam)
    if not lam:
        return 1
    total = 0
    for i, p in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < p:
            total += dim_irrep(partition(lam[:i] + (p - 1,) + lam[i + 1:]) if p > 1
                               else lam[:i] + lam[i + 1:])
    return total


def character_table(n: int) -> tuple[list, list, list]:
    """(rows, columns, values) with rows indexed by irreducibles."""
    parts = list(partitions_of(n))
    return parts, parts, [[mn_character(l, m) for m in parts] for l in parts]


def structure_coeff_frobenius(lam: Partition, dlt: Partition, rho: Partition) -> Fraction:
    """Class structure coefficient of Z(C[S_n]) from the character sum."""
    n = size(lam)
    if size(dlt) != n or size(rho) != n:
        raise ValueError("partitions must have equal sizes")
    total = Fraction(0)
    for th in partitions_of(n):
        total += Fraction(mn_character(th, lam) * mn_character(th, dlt) * mn_character(th, rho),
                          dim_irrep(th))
    return Fraction(math.factorial(n), z_lambda(lam) * z_lambda(dlt)) * total


def _check_zonal_n(n: int):
    if n > ZONAL_MAX_N:
        raise NotImplementedError(f"zonal route: direct summation over B_n is unsupported for n={n} > {ZONAL_MAX_N}")


def zonal_on(rho: Partition, x) -> Fraction:
    """Zonal spherical function omega^rho evaluated at x in S_2n."""
    n = len(x) // 2
    _check_zonal_n(n)
    rr = double(rho)
    total = sum(mn_character(rr, cycle_type(compose(x, k))) for k in bn_elements(n))
    return Fraction(total, 2**n * math.factorial(n))


@lru_cache(maxsize=None)
def zonal_spherical(rho: Partition, lam: Partition) -> Fraction:
    """omega^rho on the double coset of coset type lam (both partitions of n)."""
    n = size(rho)
    if size(lam) != n:
        raise ValueError("size mismatch")
    _check_zonal_n(n)
    x = first_in_class(Setting.HECKE, tuple(p for p in lam if p > 1), n)
    return zonal_on(rho, x)


def structure_coeff_zonal(lam: Partition, dlt: Partition, rho: Partition) -> Fraction:
    """Hecke structure coefficient from zonal spherical functions."""
    n = size(lam)
    if size(dlt) != n or size(rho) != n:
        raise ValueError("partitions must have equal sizes")
    _check_zonal_n(n)
    strip = lambda p: tuple(q for q in p if q > 1)
    kl = class_size(Setting.HECKE, strip(lam), n)
    kd = class_size(Setting.HECKE, strip(dlt), n)
    total = Fraction(0)
    for th in partitions_of(n):
        total += dim_irrep(double(th)) * zonal_spherical(th, lam) * zonal_spherical(th, dlt) * zonal_spherical(th, rho)
    return Fraction(kl * kd, math.factorial(2 * n)) * total


def zonal_inner(theta: Partition, psi: Partition) -> Fraction:
    """<omega^theta, omega^psi> = (1/|G|) sum over S_2n, grouped by double coset."""
    n = size(theta)
    total = Fraction(0)
    for lam in partitions_of(n):
        k = class_size(Setting.HECKE, tuple(p for p in lam if p > 1), n)
        total += k * zonal_spherical(theta, lam) * zonal_spherical(psi, lam)
    return total / math.factorial(2 * n)


def plancherel_moment(lam: Partition, dlt: Partition, n: int, method: str = "structure") -> Fraction:
    """E[F_lam F_dlt] under the Plancherel measure, for proper lam, dlt.

    F_lam is the normalized character chi(g)/f on a fixed g of type pad(lam, n).
    method="structure" uses c^empty / (|C_lam||C_dlt|), "characters" sums directly.
    """
    from .classalg import structure_coeff_brute

    if size(lam) > n or size(dlt) > n:
        return Fraction(0)
    if method == "structure":
        c = structure_coeff_brute(Setting.SYM, lam, dlt, EMPTY, n)
        return c / (class_size(Setting.SYM, lam, n) * class_size(Setting.SYM, dlt, n))
    a, b = pad(lam, n), pad(dlt, n)
    return sum((Fraction(mn_character(t, a) * mn_character(t, b), math.factorial(n)) for t in partitions_of(n)),
               Fraction(0))


def plancherel_moment3(lam: Partition, n: int, method: str = "structure") -> Fraction:
    """E[F_lam^3] under the Plancherel measure."""
    from .classalg import structure_coeff_brute

    if size(lam) > n:
        return Fraction(0)
    if method == "structure":
        c = structure_coeff_brute(Setting.SYM, lam, lam, lam, n)
        return c / class_size(Setting.SYM, lam, n) ** 2
    a = pad(lam, n)
    return sum((Fraction(mn_character(t, a) ** 3, dim_irrep(t) * math.factorial(n)) for t in partitions_of(n)),
               Fraction(0))


def plancherel_mean(g) -> Fraction:
    """E[F_g] for a permutation g, summed directly over irreducibles."""
    n = len(g)
    mu = cycle_type(g)
    return sum((Fraction(dim_irrep(t) * mn_character(t, mu), math.factorial(n)) for t in partitions_of(n)),
               Fraction(0))
