"""Exact structure coefficients of class and double-class algebras.

Settings: the center of Z[S_n], the Hecke algebra of (S_2n, B_n), the
center of Z[B_n] and the diagonal pair (S_n x S_(n-1), diag S_(n-1)).
"""
from .core import RatPolynomial, format_rational, lagrange_fit, parse_partition
from .permgroups import Setting, class_size, coset_type, cycle_type, parse_label
from .classalg import AlgebraElement, class_product, structure_coeff_brute

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "RatPolynomial",
    "Setting",
    "class_product",
    "class_size",
    "coset_type",
    "cycle_type",
    "format_rational",
    "lagrange_fit",
    "parse_label",
    "parse_partition",
    "structure_coeff_brute",
]
