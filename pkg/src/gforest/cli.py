"""Batch command-line front end.

Subcommands: table, coeff, check, euler, relations, perms.  All output is
UTF-8 and deterministic; CSV uses RFC 4180 quoting.  Exit status: 0 all
good, 1 mathematical mismatch, 2 configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from importlib import resources

from . import genfun, oracle, perms
from .genfun import GFKind

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_CONFIG = 2

_KINDS = {k.value: k for k in GFKind}


class ConfigError(Exception):
    pass


def _kind(name: str) -> GFKind:
    try:
        return _KINDS[name]
    except KeyError:
        raise ConfigError(f"unknown kind {name!r}; choose from {sorted(_KINDS)}")


def _table_rows(n_min: int, n_max: int, kind: GFKind, order: int):
    series = genfun.series_for(kind, order)
    for n in range(n_min, n_max + 1):
        genfun.extract_counts(series, n)
        for k in range(2, n // 2 + 1):
            yield n, k, series[n].y_coefficient(k)


def render_table(n_min: int, n_max: int, kind: GFKind, fmt: str, order: int) -> str:
    rows = list(_table_rows(n_min, n_max, kind, order))
    if fmt == "text":
        return "".join(f"({n},{k}) {poly.to_text()}\n" for n, k, poly in rows)
    if fmt == "latex-table":
        lines = [r"\begin{tabular}{ll}", r"$(n,k)$ & coefficient \\ \midrule"]
        lines += [f"$({n},{k})$ & ${poly.to_latex()}$ \\\\" for n, k, poly in rows]
        lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "k", "r", "count"])
        for n, k, poly in rows:
            for (dy, dq), c in poly.terms():
                writer.writerow([n, k, dq, c])
        return buf.getvalue()
    if fmt == "json":
        data = [
            {"n": n, "k": k, "coefficients": poly.to_json_terms()}
            for n, k, poly in rows
        ]
        return json.dumps(data, indent=1) + "\n"
    raise ConfigError(f"unknown format {fmt!r}")


def reference_table_text() -> str:
    """The checked-in reference table (data/forest_table.txt), comments stripped."""
    raw = resources.files("gforest.data").joinpath("forest_table.txt").read_text()
    return "".join(line + "\n" for line in raw.splitlines() if not line.startswith("#"))


def cmd_table(args) -> int:
    order = args.order
    if args.n_max > order:
        raise ConfigError(f"--n-max {args.n_max} exceeds working order {order}")
    if args.n_min < 1 or args.n_min > args.n_max:
        raise ConfigError("need 1 <= --n-min <= --n-max")
    out = render_table(args.n_min, args.n_max, _kind(args.kind), args.format, order)
    _write(args.out, out)
    return EXIT_OK


def cmd_coeff(args) -> int:
    if not 0 <= args.k <= args.n:
        raise ConfigError("need 0 <= k <= n")
    if args.n > args.order:
        raise ConfigError(f"n = {args.n} exceeds working order {args.order}")
    poly = genfun.coefficient_poly(_kind(args.kind), args.n, args.k, args.order)
    _write(args.out, poly.to_text() + "\n")
    return EXIT_OK


def cmd_euler(args) -> int:
    if not 2 <= args.k <= args.n - 2:
        raise ConfigError("need 2 <= k <= n-2")
    value = genfun.euler_characteristic(GFKind.GRASS_FOREST, args.n, args.k)
    _write(args.out, f"{value}\n")
    return EXIT_OK if value == 1 else EXIT_MISMATCH


def cmd_relations(args) -> int:
    if args.relation_order < 6:
        raise ConfigError("--order must be >= 6")
    ok, report = genfun.verify_algebraic_relation(_kind(args.kind), args.relation_order)
    _write(args.out, report + "\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_perms(args) -> int:
    by_descents = args.by == "descents"
    if args.family == "separable":
        hist = perms.enumerate_separable(args.n, by_descents, budget=args.budget_n)
    else:
        enum = (
            perms.enumerate_grass_tree_permutations
            if args.family == "grass-tree"
            else perms.enumerate_grass_forest_permutations
        )
        hist = {}
        for w in enum(args.n):
            key = (
                perms.descents(w.images) if by_descents else perms.antiexcedances(w)
            )
            hist[key] = hist.get(key, 0) + 1
    lines = [f"{key} {hist[key]}" for key in sorted(hist)]
    lines.append(f"total {sum(hist.values())}")
    _write(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def run_checks(oracle_max_n: int, order: int, budget: int):
    """All cross-checks; yields (name, ok, detail) triples."""
    forest = genfun.build_forest_gf(GFKind.GRASS_FOREST, order)

    got = render_table(4, min(12, order), GFKind.GRASS_FOREST, "text", order)
    want = reference_table_text()
    if min(12, order) < 12:
        want = "".join(
            line + "\n"
            for line in want.splitlines()
            if int(line[1 : line.index(",")]) <= order
        )
    detail = "" if got == want else next(
        (
            f"first differing line: got {a!r}, want {b!r}"
            for a, b in zip(got.splitlines(), want.splitlines())
            if a != b
        ),
        "row counts differ",
    )
    yield "reference-table", got == want, detail

    ok, first = True, ""
    for n in range(1, order + 1):
        lag = genfun.forest_gf_via_lagrange(GFKind.GRASS_FOREST, n, order)
        direct = genfun.extract_counts(forest, n)
        if lag != direct:
            ok, first = False, f"mismatch at n={n}"
            break
    yield "lagrange-dual-path", ok, first

    ok, first = True, ""
    for kind in GFKind:
        for n in range(1, oracle_max_n + 1):
            series = genfun.series_for(kind, max(n, 1))
            counts = oracle.count_by_statistics(n, kind, budget=budget)
            expect = genfun.extract_counts(series, n)
            if counts != expect:
                bad = sorted(set(counts.items()) ^ set(expect.items()))[0][0]
                ok, first = False, f"{kind.value} first failing (n,k,r)=({n},{bad[0]},{bad[1]})"
                break
        if not ok:
            break
    yield "oracle-equivalence", ok, first

    ok, first = True, ""
    for n in range(2, min(12, order) + 1):
        for k in range(2, n - 1):
            value = genfun.euler_characteristic(GFKind.GRASS_FOREST, n, k, order)
            if value != 1:
                ok, first = False, f"({n},{k}) -> {value}"
                break
        if not ok:
            break
    yield "euler-characteristic", ok, first

    for kind in GFKind:
        rel_ok, report = genfun.verify_algebraic_relation(kind, min(12, order))
        yield f"relation-{kind.value}", rel_ok, "" if rel_ok else report

    ok, first = True, ""
    limit = min(oracle_max_n, 6)
    for n in range(1, limit + 1):
        for F in oracle.enumerate_forests(n):
            for G in oracle.decorate_grassmannian(F, contracted_only=True):
                w = perms.trip_permutation(G)
                if perms.antiexcedances(w) != oracle.helicity(G):
                    ok, first = False, f"n={n}, forest {oracle.forest_to_json(G)}"
                    break
    yield "antiexcedance-helicity", ok, first

    ok, first = True, ""
    sets = perms.grass_tree_permutation_sets(limit)
    for n in range(1, limit + 1):
        trips = {
            perms.trip_permutation(G)
            for T in oracle.enumerate_trees(n)
            for G in oracle.decorate_grassmannian(T, contracted_only=True)
        }
        if sets[n] != trips:
            ok, first = False, f"n={n}: closure {len(sets[n])} vs trips {len(trips)}"
            break
    yield "tree-permutation-closure", ok, first


def cmd_check(args) -> int:
    status = EXIT_OK
    lines = []
    for name, ok, detail in run_checks(args.oracle_max_n, args.order, args.budget):
        lines.append(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else ""))
        if not ok:
            status = EXIT_MISMATCH
    lines.append("all checks passed" if status == EXIT_OK else "CHECK FAILED")
    _write(args.out, "\n".join(lines) + "\n")
    return status


def _write(path, text: str):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gforest",
        description="Exact counts of contracted plabic and Grassmannian trees/forests.",
    )
    parser.add_argument(
        "--order",
        type=int,
        default=None,
        help="working series order (default 14, or GFOREST_ORDER); "
        "series inversion cost grows quadratically with it",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="coefficient table for 2 <= k <= floor(n/2)")
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--kind", default=GFKind.GRASS_FOREST.value, choices=sorted(_KINDS))
    p.add_argument("--format", default="text", choices=["text", "csv", "json", "latex-table"])
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("coeff", help="single [x^n y^k] coefficient as a q-polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", default=GFKind.GRASS_FOREST.value, choices=sorted(_KINDS))
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("check", help="run every cross-check; exit 1 on mismatch")
    p.add_argument("--oracle-max-n", type=int, default=6)
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("euler", help="[x^n y^k] of the forest series at q = -1")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("relations", help="verify the transcribed algebraic relation")
    p.add_argument("--kind", default=GFKind.GRASS_FOREST.value, choices=sorted(_KINDS))
    p.add_argument("--order", dest="relation_order", type=int, default=12)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("perms", help="permutation family histograms")
    p.add_argument(
        "--family", required=True, choices=["separable", "grass-tree", "grass-forest"]
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--by", default="descents", choices=["descents", "antiexcedances"])
    p.add_argument("--budget-n", type=int, default=10, help="separable brute-force cap")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_perms)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.order is None:
        args.order = genfun.default_order()
    if args.order < 1:
        parser.exit(EXIT_CONFIG, "order must be >= 1\n")
    try:
        return args.func(args)
    except (ConfigError, ValueError, oracle.BudgetExceeded) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CONFIG
    except genfun.IntegralityViolation as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
