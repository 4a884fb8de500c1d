"""Print a few class products and check them against the Frobenius route."""
from dclab.characters import structure_coeff_frobenius
from dclab.classalg import class_product
from dclab.core import format_rational, pad
from dclab.permgroups import Setting, format_label


def show(setting, lam, dlt, n):
    el = class_product(setting, lam, dlt, n)
    terms = " + ".join(f"{format_rational(c)}*[{format_label(setting, r)}]" for r, c in el.sorted_items())
    print(f"{setting.value} n={n}: [{format_label(setting, lam)}][{format_label(setting, dlt)}] = {terms}")
    return el


if __name__ == "__main__":
    for n in (4, 5, 6):
        el = show(Setting.SYM, (2,), (2,), n)
        for rho, c in el.terms.items():
            assert structure_coeff_frobenius(pad((2,), n), pad((2,), n), pad(rho, n)) == c
    show(Setting.SYM, (2,), (3,), 6)
    show(Setting.HECKE, (2,), (2,), 4)
    show(Setting.BN, ((), (1,)), ((), (1,)), 3)
    show(Setting.DIAG, (2, ()), (2, ()), 4)
