"""Fit structure coefficients on a minimal window of n and predict the next one.

For the symmetric group c(n) itself is a polynomial; for the Hecke pair
it is c(n) = 2^n n! f(n) with f a polynomial.  The window length is one
more than the best available degree bound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .classalg import structure_coeff_brute
from .core import RatPolynomial, lagrange_fit, length, size
from .permgroups import Setting

SUPPORTED = (Setting.SYM, Setting.HECKE)


def degree_bound(setting: Setting, lam, dlt, rho) -> int:
    b = size(lam) + size(dlt) - size(rho)
    if setting is Setting.SYM:
        d = min(b // 2, b + length(rho) - length(lam) - length(dlt))
    elif setting is Setting.HECKE:
        d = min(b, b - length(lam) - length(dlt) + length(rho))
    else:
        raise ValueError(f"no polynomial form known for {setting.value}")
    return max(d, 0)


def normalizer(setting: Setting, n: int) -> int:
    return 2**n * math.factorial(n) if setting is Setting.HECKE else 1


@dataclass
class PolyFit:
    setting: Setting
    lam: tuple
    dlt: tuple
    rho: tuple
    window: list
    values: dict
    poly: RatPolynomial
    predicted_n: int
    predicted: Fraction
    actual: Fraction
    reconstructed: RatPolynomial | None = None

    @property
    def ok(self) -> bool:
        same = self.reconstructed is None or self.reconstructed == self.poly
        return self.predicted == self.actual and same


def reconstructed_poly(setting: Setting, lam, dlt, rho) -> RatPolynomial:
    """The polynomial from the partial-element algebras (f for Hecke)."""
    if setting is Setting.SYM:
        from .partialperm import c_poly_reconstruct

        return c_poly_reconstruct(lam, dlt, rho)
    from .partialbij import alpha_poly

    return alpha_poly(lam, dlt, rho)


def fit_window(setting: Setting, lam, dlt, rho, jobs: int = 1, reconstruct: bool = True) -> PolyFit:
    if setting not in SUPPORTED:
        raise ValueError(f"polyfit supports sym-center and hecke-pair, not {setting.value}")
    d = degree_bound(setting, lam, dlt, rho)
    start = max(size(lam), size(dlt), size(rho), 1)
    window = list(range(start, start + d + 1))

    def value(n):
        return structure_coeff_brute(setting, lam, dlt, rho, n, jobs=jobs) / normalizer(setting, n)

    values = {n: value(n) for n in window}
    poly = lagrange_fit(sorted(values.items()))
    nxt = window[-1] + 1
    rec = reconstructed_poly(setting, lam, dlt, rho) if reconstruct else None
    return PolyFit(setting, lam, dlt, rho, window, values, poly, nxt, poly(nxt), value(nxt), rec)
