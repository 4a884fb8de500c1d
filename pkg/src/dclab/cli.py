"""Command-line interface: ``dclab <subcommand> ...`` (or ``python3 -m dclab``)."""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from fractions import Fraction

from .core import format_partition, format_rational, pad, size
from .permgroups import (
    FILTER_LIMIT,
    Setting,
    class_size,
    coset_type,
    cycle_type,
    enumerate_class,
    first_in_class,
    format_label,
    full_label,
    parse_label,
    parse_perm,
    proper_labels,
)

METHODS = ("brute", "char", "zonal", "framework", "poly")

# max n per (method, setting); None means the method does not apply
GUARDS = {
    "brute": {Setting.SYM: 8, Setting.HECKE: 5, Setting.BN: 5, Setting.DIAG: 7},
    "char": {Setting.SYM: 14},
    "zonal": {Setting.HECKE: 3},
    "framework": {Setting.SYM: 6, Setting.HECKE: 4, Setting.BN: 3, Setting.DIAG: 5},
    "poly": {Setting.SYM: 10**6, Setting.HECKE: 10**6},
}
# the polynomial route computes at level |lam|+|dlt|
POLY_INPUT_LIMIT = {Setting.SYM: 8, Setting.HECKE: 4}


class Refusal(Exception):
    pass


def max_n(method: str, setting: Setting) -> int:
    table = GUARDS[method]
    if setting not in table:
        supported = ", ".join(s.value for s in table)
        raise Refusal(f"method {method} is not available for {setting.value} (supported: {supported})")
    env = os.environ.get("DCLAB_MAX_N")
    return int(env) if env else table[setting]


def guard(method: str, setting: Setting, n: int):
    limit = max_n(method, setting)
    if n > limit:
        raise Refusal(f"method {method} for {setting.value} is limited to n <= {limit} "
                      f"(set DCLAB_MAX_N to override at your own risk)")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def report(command: str, inputs: dict, outputs: dict, methods=(), verdict="n/a", t0=None) -> dict:
    wall = 0 if t0 is None else int(round((time.perf_counter() - t0) * 1000))
    return {"command": command, "inputs": inputs, "outputs": outputs, "methods": list(methods),
            "verdict": verdict, "wall_time_ms": wall}


def emit(args, rep: dict, text: str, rows=None):
    if args.format == "json":
        print(dumps(rep))
    elif args.format == "csv" and rows is not None:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerows(rows)
    else:
        print(text)


# coefficient routes ---------------------------------------------------------

def coeff_by(method: str, setting: Setting, lam, dlt, rho, n: int, jobs: int = 1) -> Fraction:
    guard(method, setting, n)
    if any(full_label(setting, x, n) is None for x in (lam, dlt, rho)):
        return Fraction(0)
    if method == "brute":
        from .classalg import structure_coeff_brute

        return structure_coeff_brute(setting, lam, dlt, rho, n, jobs=jobs)
    if method == "char":
        from .characters import structure_coeff_frobenius

        return structure_coeff_frobenius(pad(lam, n), pad(dlt, n), pad(rho, n))
    if method == "zonal":
        from .characters import structure_coeff_zonal

        return structure_coeff_zonal(pad(lam, n), pad(dlt, n), pad(rho, n))
    if method == "framework":
        return framework_terms(setting, lam, dlt, rho, n).value()
    if method == "poly":
        if size(lam) + size(dlt) > POLY_INPUT_LIMIT[setting]:
            raise Refusal(f"poly route needs |lam|+|dlt| <= {POLY_INPUT_LIMIT[setting]}")
        from .polynomiality import normalizer, reconstructed_poly

        return reconstructed_poly(setting, lam, dlt, rho)(n) * normalizer(setting, n)
    raise Refusal(f"unknown method {method}")


def framework_terms(setting: Setting, lam, dlt, rho, n: int):
    from . import framework as fw

    f, h, g = (first_in_class(setting, x, n) for x in (lam, dlt, rho))
    if setting is Setting.SYM:
        return fw.center_theorem_terms(fw.SymTower(), f, h, g, n)
    if setting is Setting.BN:
        return fw.center_theorem_terms(fw.HypTower(), f, h, g, n)
    pair = fw.HeckeInstance() if setting is Setting.HECKE else fw.DiagInstance()
    return fw.main_theorem_terms(pair, f, h, g, n - pair.offset)


def available_methods(setting: Setting, n: int) -> list[str]:
    out = []
    for m in METHODS:
        try:
            guard(m, setting, n)
        except Refusal:
            continue
        out.append(m)
    return out


# subcommands ----------------------------------------------------------------

def cmd_coset_type(args):
    t0 = time.perf_counter()
    w = parse_perm(args.perm)
    if len(w) % 2:
        raise ValueError(f"coset type needs a permutation of even degree, got degree {len(w)}")
    ct = format_partition(coset_type(w))
    emit(args, report("coset-type", {"perm": args.perm}, {"coset_type": ct}, t0=t0), ct)
    return 0


def cmd_cycle_type(args):
    t0 = time.perf_counter()
    ct = format_partition(cycle_type(parse_perm(args.perm)))
    emit(args, report("cycle-type", {"perm": args.perm}, {"cycle_type": ct}, t0=t0), ct)
    return 0


def cmd_class_size(args):
    t0 = time.perf_counter()
    s = Setting.parse(args.setting)
    lab = parse_label(s, args.label)
    k = class_size(s, lab, args.n)
    out = {"size": str(k)}
    verdict = "n/a"
    if args.enumerate:
        if args.n > FILTER_LIMIT[s] and s not in (Setting.HECKE, Setting.DIAG):
            raise Refusal(f"enumeration for {s.value} is limited to n <= {FILTER_LIMIT[s]}")
        e = len(enumerate_class(s, lab, args.n))
        out["enumerated"] = str(e)
        verdict = "agree" if e == k else "disagree"
    rep = report("class-size", {"setting": s.value, "label": format_label(s, lab), "n": args.n}, out,
                 verdict=verdict, t0=t0)
    emit(args, rep, str(k) if not args.enumerate else f"{k} (enumerated {out['enumerated']}: {verdict})")
    return 0 if verdict != "disagree" else 1


def _labels(args):
    s = Setting.parse(args.setting)
    return s, parse_label(s, args.lam), parse_label(s, args.dlt)


def cmd_coeff(args):
    t0 = time.perf_counter()
    s, lam, dlt = _labels(args)
    rho = parse_label(s, args.rho)
    methods = available_methods(s, args.n) if args.method == "all" else [args.method]
    if not methods:
        raise Refusal(f"no method is available for {s.value} at n={args.n}")
    values = {m: coeff_by(m, s, lam, dlt, rho, args.n, jobs=args.jobs) for m in methods}
    distinct = set(values.values())
    verdict = ("agree" if len(distinct) == 1 else "disagree") if len(values) > 1 else "n/a"
    first = values[methods[0]]
    inputs = {"setting": s.value, "lam": format_label(s, lam), "dlt": format_label(s, dlt),
              "rho": format_label(s, rho), "n": args.n}
    outputs = {"value": format_rational(first), "by_method": {m: format_rational(v) for m, v in values.items()}}
    rep = report("coeff", inputs, outputs, methods, verdict, t0)
    if args.quiet:
        text = format_rational(first)
    else:
        text = "\n".join([f"{m}: {format_rational(v)}" for m, v in values.items()] + [f"verdict: {verdict}"])
    emit(args, rep, text, rows=[["method", "value"]] + [[m, format_rational(v)] for m, v in values.items()])
    return 1 if verdict == "disagree" else 0


def cmd_product(args):
    from .classalg import AlgebraElement

    s, lam, dlt = _labels(args)
    guard(args.method, s, args.n)
    terms = {}
    for rho in proper_labels(s, args.n):
        c = coeff_by(args.method, s, lam, dlt, rho, args.n, jobs=args.jobs)
        if c:
            terms[rho] = c
    el = AlgebraElement(s, args.n, terms)
    if args.format == "json":
        print(dumps(el.to_json()))
    elif args.format == "csv":
        csv.writer(sys.stdout, lineterminator="\n").writerows(el.to_csv_rows())
    else:
        print(" + ".join(f"{format_rational(v)}*[{format_label(s, k)}]" for k, v in el.sorted_items()) or "0")
    return 0


def cmd_polyfit(args):
    from .polynomiality import fit_window

    t0 = time.perf_counter()
    s, lam, dlt = _labels(args)
    rho = parse_label(s, args.rho)
    f = fit_window(s, lam, dlt, rho, jobs=args.jobs, reconstruct=not args.no_reconstruct)
    guard("brute", s, f.predicted_n)
    verdict = "agree" if f.ok else "disagree"
    outputs = {
        "window": f.window,
        "values": {str(n): format_rational(v) for n, v in f.values.items()},
        "polynomial": str(f.poly),
        "predicted_n": f.predicted_n,
        "predicted": format_rational(f.predicted),
        "actual": format_rational(f.actual),
        "reconstructed": None if f.reconstructed is None else str(f.reconstructed),
        "normalized_by": "2^n n!" if s is Setting.HECKE else "1",
    }
    inputs = {"setting": s.value, "lam": format_label(s, lam), "dlt": format_label(s, dlt), "rho": format_label(s, rho)}
    rep = report("polyfit", inputs, outputs, ["brute", "poly"], verdict, t0)
    text = (f"fit on n={f.window}: {f.poly}\n"
            f"predicted c({f.predicted_n}) = {format_rational(f.predicted)}, brute = {format_rational(f.actual)}\n"
            f"verdict: {verdict}")
    emit(args, rep, text)
    return 0 if f.ok else 1


def cmd_bounds(args):
    t0 = time.perf_counter()
    s, lam, dlt = _labels(args)
    rho = parse_label(s, args.rho)
    if s is Setting.SYM:
        from .partialperm import degree_bounds

        b = degree_bounds(lam, dlt, rho)
        outputs = {"bound1": format_rational(b.bound1), "bound2": str(b.bound2), "actual": str(b.actual)}
        ok = b.ok
    elif s is Setting.HECKE:
        from .partialbij import alpha_degree_bounds, alpha_poly

        b1, b2 = alpha_degree_bounds(lam, dlt, rho)
        deg = alpha_poly(lam, dlt, rho).degree
        outputs = {"bound1": str(b1), "bound2": str(b2), "actual": str(deg)}
        ok = deg == "-inf" or (deg <= b1 and deg <= b2)
    else:
        raise Refusal("bounds are available for sym-center and hecke-pair")
    verdict = "agree" if ok else "disagree"
    rep = report("bounds", {"setting": s.value, "lam": args.lam, "dlt": args.dlt, "rho": args.rho},
                 outputs, ["poly"], verdict, t0)
    emit(args, rep, f"degree {outputs['actual']} (bounds {outputs['bound1']}, {outputs['bound2']}): {verdict}")
    return 0 if ok else 1


def cmd_char_table(args):
    from .characters import character_table

    if args.n > GUARDS["char"][Setting.SYM]:
        raise Refusal(f"character table limited to n <= {GUARDS['char'][Setting.SYM]}")
    rows, cols, vals = character_table(args.n)
    table = [["chi\\mu"] + [format_partition(c) for c in cols]]
    table += [[format_partition(r)] + [str(v) for v in line] for r, line in zip(rows, vals)]
    if args.format == "json":
        print(dumps({"n": args.n, "rows": table[0][1:], "table": {r[0]: r[1:] for r in table[1:]}}))
    elif args.format == "csv":
        csv.writer(sys.stdout, lineterminator="\n").writerows(table)
    else:
        width = max(len(x) for r in table for x in r)
        print("\n".join(" ".join(x.rjust(width) for x in r) for r in table))
    return 0


def cmd_zonal(args):
    from .characters import ZONAL_MAX_N, zonal_spherical
    from .core import partitions_of

    if args.n > ZONAL_MAX_N and not os.environ.get("DCLAB_MAX_N"):
        raise Refusal(f"zonal functions limited to n <= {ZONAL_MAX_N}")
    ps = list(partitions_of(args.n))
    table = [["omega\\lambda"] + [format_partition(p) for p in ps]]
    table += [[format_partition(t)] + [format_rational(zonal_spherical(t, p)) for p in ps] for t in ps]
    if args.format == "json":
        print(dumps({"n": args.n, "columns": table[0][1:], "table": {r[0]: r[1:] for r in table[1:]}}))
    elif args.format == "csv":
        csv.writer(sys.stdout, lineterminator="\n").writerows(table)
    else:
        width = max(len(x) for r in table for x in r)
        print("\n".join(" ".join(x.rjust(width) for x in r) for r in table))
    return 0


def cmd_plancherel(args):
    from .characters import plancherel_moment, plancherel_moment3
    from .core import parse_partition

    t0 = time.perf_counter()
    lam = parse_partition(args.lam)
    guard("brute", Setting.SYM, args.n)
    if args.cube:
        vals = {m: plancherel_moment3(lam, args.n, method=m) for m in ("structure", "characters")}
        what = f"E[F_{format_partition(lam)}^3]"
        inputs = {"lam": args.lam, "n": args.n, "moment": 3}
    else:
        dlt = parse_partition(args.dlt if args.dlt is not None else args.lam)
        vals = {m: plancherel_moment(lam, dlt, args.n, method=m) for m in ("structure", "characters")}
        what = f"E[F_{format_partition(lam)} F_{format_partition(dlt)}]"
        inputs = {"lam": args.lam, "dlt": format_partition(dlt), "n": args.n, "moment": 2}
    verdict = "agree" if len(set(vals.values())) == 1 else "disagree"
    outputs = {"value": format_rational(vals["structure"]), "by_method": {k: format_rational(v) for k, v in vals.items()}}
    rep = report("plancherel", inputs, outputs, list(vals), verdict, t0)
    emit(args, rep, f"{what} = {format_rational(vals['structure'])} ({verdict})")
    return 0 if verdict == "agree" else 1


def cmd_check(args):
    t0 = time.perf_counter()
    if args.suite:
        from . import regression

        results = regression.run(regression.select(args.module))
        failed = [r for r in results if not r["ok"]]
        rep = report("check", {"suite": args.suite, "module": args.module},
                     {"results": results, "passed": len(results) - len(failed), "failed": len(failed)},
                     verdict="pass" if not failed else "fail", t0=t0)
        lines = [f"{'PASS' if r['ok'] else 'FAIL'} [{r['module']}] {r['name']}"
                 + ("" if r["ok"] else f": expected {r['expected']}, got {r['actual']}") for r in results]
        lines.append(f"{len(results) - len(failed)}/{len(results)} passed")
        emit(args, rep, "\n".join(lines))
        return 0 if not failed else 1
    if args.tower is None or args.n is None:
        raise ValueError("check needs --suite, or --tower and --n")
    from . import framework as fw

    tower = {"sym": fw.SymTower(), "hyp": fw.HypTower(), "fix1": fw.DiagonalTower(fw.Fix1Tower())}[args.tower]
    pair = {"hecke": fw.HeckeInstance(), "diag": fw.DiagInstance(), None: None}[args.pair]
    kmax = args.kmax if args.kmax is not None else args.n
    rep_h = fw.check_hypotheses(tower, args.n, kmax, pair)
    ok = fw.all_ok(rep_h)
    rep = report("check", {"tower": args.tower, "n": args.n, "kmax": kmax, "pair": args.pair},
                 {h: r.to_json() for h, r in rep_h.items()}, verdict="pass" if ok else "fail", t0=t0)
    if args.format == "text":
        for h, r in rep_h.items():
            print(f"{h}: {'ok' if r.ok else 'FAIL'} ({r.checked} checked)" + ("" if r.ok else f" {r.counterexample}"))
    else:
        print(dumps(rep))
    return 0 if ok else 1


def cmd_framework_coeff(args):
    t0 = time.perf_counter()
    s, lam, dlt = _labels(args)
    rho = parse_label(s, args.rho)
    inputs = {"setting": s.value, "lam": format_label(s, lam), "dlt": format_label(s, dlt), "rho": format_label(s, rho)}
    if args.mini:
        from .framework import mini_theorem_decompose

        r = mini_theorem_decompose(s, lam, dlt, rho)
        outputs = {"ks": r.ks, "window": r.window, "a": {str(k): format_rational(v) for k, v in r.a.items()},
                   "predicted_n": r.predicted_n,
                   "predicted": None if r.predicted is None else format_rational(r.predicted),
                   "actual": None if r.actual is None else format_rational(r.actual),
                   "nonnegative": r.nonnegative}
        ok = r.consistent and r.nonnegative
        rep = report("framework-coeff", inputs, outputs, ["framework", "brute"], "agree" if ok else "disagree", t0)
        text = (f"a(k) = {outputs['a']} on window {r.window}\n"
                f"predicted c({r.predicted_n}) = {outputs['predicted']}, brute = {outputs['actual']}")
        emit(args, rep, text)
        return 0 if ok else 1
    if args.n is None:
        raise ValueError("framework-coeff needs n (or --mini)")
    inputs["n"] = args.n
    guard("framework", s, args.n)
    if any(full_label(s, x, args.n) is None for x in (lam, dlt, rho)):
        raise ValueError(f"a label does not exist at n={args.n}")
    t = framework_terms(s, lam, dlt, rho, args.n)
    value = t.value()
    outputs = {"value": format_rational(value), "k1": t.k1, "k2": t.k2, "k3": t.k3,
               "outer": format_rational(t.outer), "a": {str(k): format_rational(v) for k, v in t.a.items()}}
    methods = ["framework"]
    verdict = "n/a"
    if args.n <= max_n("brute", s):
        b = coeff_by("brute", s, lam, dlt, rho, args.n, jobs=args.jobs)
        outputs["brute"] = format_rational(b)
        methods.append("brute")
        verdict = "agree" if b == value else "disagree"
    rep = report("framework-coeff", inputs, outputs, methods, verdict, t0)
    emit(args, rep, f"{format_rational(value)}" + ("" if verdict == "n/a" else f" (brute: {outputs['brute']}, {verdict})"))
    return 1 if verdict == "disagree" else 0


# parser ---------------------------------------------------------------------

SETTING_CHOICES = [s.value for s in Setting]


def build_parser() -> argparse.ArgumentParser:
    from .classalg import default_jobs

    p = argparse.ArgumentParser(prog="dclab", description="Exact structure coefficients of class and double-class algebras.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default=None,
                        help="default text (json for check)")
    common.add_argument("--jobs", type=int, default=default_jobs(), help="worker processes for brute force")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("coset-type", cmd_coset_type, "coset type of a permutation of 2n (one-line, 1-based)")
    sp.add_argument("perm")
    sp = add("cycle-type", cmd_cycle_type, "cycle type of a permutation (one-line, 1-based)")
    sp.add_argument("perm")
    sp = add("class-size", cmd_class_size, "closed-form class size")
    sp.add_argument("setting", choices=SETTING_CHOICES)
    sp.add_argument("label")
    sp.add_argument("n", type=int)
    sp.add_argument("--enumerate", action="store_true", help="also count by enumeration")

    def triple(sp, with_n=True, n_optional=False):
        sp.add_argument("setting", choices=SETTING_CHOICES)
        sp.add_argument("lam")
        sp.add_argument("dlt")
        sp.add_argument("rho")
        if with_n:
            sp.add_argument("n", type=int, nargs="?" if n_optional else None)

    sp = add("coeff", cmd_coeff, "one structure coefficient")
    triple(sp)
    sp.add_argument("--method", choices=list(METHODS) + ["all"], default="brute")
    sp.add_argument("--quiet", action="store_true", help="print only the value")
    sp = add("product", cmd_product, "full expansion of a product of two class sums")
    sp.add_argument("setting", choices=SETTING_CHOICES)
    sp.add_argument("lam")
    sp.add_argument("dlt")
    sp.add_argument("n", type=int)
    sp.add_argument("--method", choices=METHODS, default="brute")
    sp = add("polyfit", cmd_polyfit, "fit on the minimal window and predict the next n")
    triple(sp, with_n=False)
    sp.add_argument("--no-reconstruct", action="store_true", help="skip the partial-element polynomial")
    sp = add("bounds", cmd_bounds, "degree bounds of the coefficient polynomial")
    triple(sp, with_n=False)
    sp = add("char-table", cmd_char_table, "character table of S_n")
    sp.add_argument("n", type=int)
    sp = add("zonal", cmd_zonal, "zonal spherical functions of (S_2n, B_n)")
    sp.add_argument("n", type=int)
    sp = add("plancherel", cmd_plancherel, "Plancherel moments of normalized characters")
    sp.add_argument("lam")
    sp.add_argument("dlt", nargs="?")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--cube", action="store_true", help="third moment of F_lam")
    sp = add("check", cmd_check, "hypotheses report or the worked-example regression suite")
    sp.add_argument("--tower", choices=["sym", "hyp", "fix1"])
    sp.add_argument("--pair", choices=["hecke", "diag"])
    sp.add_argument("--n", type=int)
    sp.add_argument("--kmax", type=int)
    sp.add_argument("--suite", choices=["examples", "paper-examples"])
    sp.add_argument("--module", choices=["core", "permgroups", "classalg", "characters", "partialperm",
                                         "partialbij", "framework", "cli"])
    sp = add("framework-coeff", cmd_framework_coeff, "coefficient from the tower formulas")
    triple(sp, n_optional=True)
    sp.add_argument("--mini", action="store_true", help="solve for the n-independent a(k) instead")
    return p


def _protect_labels(argv):
    """'-|1' or '-;2' would be read as options; spell the empty part as '()'."""
    return [f"(){a[1:]}" if len(a) > 1 and a[0] == "-" and a[1] in "|;" else a for a in argv]


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_protect_labels(sys.argv[1:] if argv is None else list(argv)))
    if args.format is None:
        args.format = "json" if args.command == "check" else "text"
    try:
        return args.func(args)
    except Refusal as e:
        print(f"refused: {e}", file=sys.stderr)
        return 3
    except (ValueError, NotImplementedError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
