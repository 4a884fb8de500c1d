"""Fit c(n) on its minimal window for small proper labels and print the result."""
import argparse

from dclab.core import format_partition, format_rational, proper_partitions, size
from dclab.permgroups import Setting
from dclab.polynomiality import fit_window

p = argparse.ArgumentParser()
p.add_argument("--setting", choices=["sym-center", "hecke-pair"], default="sym-center")
p.add_argument("--max-size", type=int, default=2)
args = p.parse_args()

setting = Setting.parse(args.setting)
labels = proper_partitions(args.max_size)
for i, lam in enumerate(labels):
    for dlt in labels[i:]:
        for rho in proper_partitions(size(lam) + size(dlt)):
            f = fit_window(setting, lam, dlt, rho)
            if f.poly.degree == "-inf":
                continue
            tag = "ok" if f.ok else "MISMATCH"
            print(f"{format_partition(lam):>4} {format_partition(dlt):>4} -> {format_partition(rho):<6}"
                  f" {str(f.poly):<24} c({f.predicted_n}) = {format_rational(f.actual):<6} {tag}")
