"""Command-line entry point.

Examples:
    kmatch count g --n 9 --r 3 --k 2 --a 3
    kmatch construct frankl --n 9 --r 3 --k 2 --a 3 --i 0 --out fam.json
    kmatch nu --in fam.json --k 2
    kmatch shift stabilize --in fam.json
    kmatch coupling verify --n 6 --r 3 --k 2 --sets "1,2;2,3"
    kmatch extremal --n 5 --r 3 --k 2 --a 2
    kmatch sweep counts --r 3 --k 2 --a 3 --n-from 9 --n-to 14 --out sweep.csv --plot sweep.png

Exit codes: 0 success; 1 a verification subcommand found a violation or
mismatch; 2 usage or parameter error; 3 resource budget exhausted.
Vertices are 1-based on this surface and in the JSON file format.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import comb

from . import constructions, counting, coupling, extremal, matching, shifting
from .core import (Params, VertexSet, binomial, hypergraph_from_dict,
                   hypergraph_to_dict, read_hypergraph)
from .errors import (DEFAULT_NODE_BUDGET, DEFAULT_UNIVERSE_CAP, ParameterError,
                     ResourceBudgetError)


def _global_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--seed", type=int, default=0,
                        help="seed for any randomized mode (default 0)")
    parent.add_argument("--threads", type=int, default=0,
                        help="accepted for interface compatibility; all "
                             "computation is sequential and results never "
                             "depend on this value")
    parent.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET,
                        help="search node budget (default 1e8)")
    parent.add_argument("--format", choices=("json", "csv"), default="json",
                        help="report format where both apply (default json)")
    parent.add_argument("--out", default=None,
                        help="write the report to this path instead of stdout")
    return parent


def _write_text(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj) -> None:
    _write_text(args, json.dumps(obj, indent=2) + "\n")


def _load_hypergraph(path: str):
    if path == "-":
        return hypergraph_from_dict(json.load(sys.stdin))
    return read_hypergraph(path)


def _edges_1based(edges) -> list[list[int]]:
    return [[v + 1 for v in e] for e in edges]


def _parse_sets(text: str, n: int) -> constructions.KSetFamily:
    sets = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise ParameterError("empty set in --sets")
        try:
            labels = [int(tok) for tok in chunk.split(",")]
        except ValueError as exc:
            raise ParameterError(f"bad vertex label in --sets: {exc}") from None
        if any(not 1 <= v <= n for v in labels):
            raise ParameterError(f"--sets vertex outside [1, {n}]: {chunk}")
        if len(set(labels)) != len(labels):
            raise ParameterError(f"repeated vertex inside a set: {chunk}")
        sets.append(VertexSet(v - 1 for v in labels))
    return constructions.KSetFamily(n, tuple(sets))


# ---------------------------------------------------------------------- count

def _cmd_count_g(args) -> int:
    _emit_json(args, {"n": args.n, "r": args.r, "k": args.k, "a": args.a,
                      "g": counting.g_count(args.n, args.r, args.k, args.a)})
    return 0


def _cmd_count_binomial(args) -> int:
    _emit_json(args, {"n": args.n, "k": args.k, "binomial": binomial(args.n, args.k)})
    return 0


def _cmd_count_bsize(args) -> int:
    _emit_json(args, {"n": args.n, "r": args.r, "k": args.k, "i": args.i,
                      "b_family_size": counting.b_family_size(args.n, args.r, args.k, args.i)})
    return 0


# ------------------------------------------------------------------ construct

def _cmd_construct(args) -> int:
    which = args.construct_cmd
    if which == "frankl":
        h = constructions.frankl_family(Params(args.n, args.r, args.k, args.a, args.i))
    elif which == "h0":
        h = constructions.h0_family(Params(args.n, args.r, args.k, args.a))
    elif which == "complete":
        h = constructions.complete_hypergraph(args.n, args.r)
    elif which == "b":
        h = constructions.ekr_b_family(args.n, args.r, args.k, args.i)
    else:  # general
        fam = _parse_sets(args.sets, args.n)
        h = constructions.generalized_family(args.n, args.r, args.k, args.i, fam)
    _emit_json(args, hypergraph_to_dict(h))
    return 0


# ------------------------------------------------------------- matching cmds

def _cmd_nu(args) -> int:
    h = _load_hypergraph(args.infile)
    try:
        value, witness = matching.nu_k(h, args.k, budget=args.budget)
    except ResourceBudgetError as exc:
        _emit_json(args, {"k": args.k, "nu": None, "error": "budget-exhausted",
                          "lower_bound": exc.best_size})
        print(f"resource budget exhausted: {exc}", file=sys.stderr)
        return 3
    _emit_json(args, {"k": args.k, "nu": value,
                      "witness": _edges_1based(witness.edges)})
    return 0


def _cmd_decide(args) -> int:
    h = _load_hypergraph(args.infile)
    witness = matching.has_k_matching_of_size(h, args.k, args.size, budget=args.budget)
    _emit_json(args, {"k": args.k, "size": args.size,
                      "found": witness is not None,
                      "witness": None if witness is None else _edges_1based(witness.edges)})
    return 0


def _cmd_greedy(args) -> int:
    h = _load_hypergraph(args.infile)
    witness = matching.greedy_maximal_k_matching(h, args.k)
    _emit_json(args, {"k": args.k, "size": len(witness.edges),
                      "witness": _edges_1based(witness.edges)})
    return 0


# ---------------------------------------------------------------------- shift

def _cmd_shift(args) -> int:
    h = _load_hypergraph(args.infile)
    which = args.shift_cmd
    if which == "apply":
        out = shifting.shift(h, args.i - 1, args.j - 1, direction=args.direction)
        _emit_json(args, hypergraph_to_dict(out))
        return 0
    if which == "stabilize":
        out, steps = shifting.stabilize(h, direction=args.direction)
        _emit_json(args, hypergraph_to_dict(out))
        print(f"stabilize: {steps} effective shifts", file=sys.stderr)
        return 0
    stable = shifting.is_stable(h, direction=args.direction)
    _emit_json(args, {"stable": stable, "direction": args.direction})
    return 0


# ------------------------------------------------------------------- coupling

def _cmd_coupling(args) -> int:
    fam = _parse_sets(args.sets, args.n)
    if args.coupling_cmd == "verify":
        report = coupling.verify_coupling(
            fam, args.n, args.r, args.k, i=args.i,
            seed=args.seed, randomize=args.randomize)
        _emit_json(args, {
            "count_a1": report.count_a1, "count_a2": report.count_a2,
            "count_both": report.count_both, "injective": report.injective,
            "size_t": report.size_t, "size_t_star": report.size_t_star})
        ok = (report.injective and report.count_a1 <= report.count_a2
              and report.size_t <= report.size_t_star)
        return 0 if ok else 1
    final, trace = coupling.disjointify(
        fam, args.n, args.r, args.k, i=args.i,
        seed=args.seed, randomize=args.randomize)
    _emit_json(args, {"family": [sorted(v + 1 for v in s) for s in final.sets],
                      "trace": trace, "steps": len(trace) - 1})
    return 0


# ------------------------------------------------------- extremal/conjecture

def _conjecture_dict(report: extremal.ConjectureReport) -> dict:
    p = report.params
    return {
        "n": p.n, "r": p.r, "k": p.k, "a": p.a,
        "candidates": [{"name": c.name, "size": c.size, "nu": c.nu,
                        "feasible": c.feasible} for c in report.candidates],
        "paper_max": report.paper_max,
        "feasible_max": report.feasible_max,
        "exact_value": report.exact_value,
        "agreement": report.agreement,
        "matches_paper_max": report.matches_paper_max,
        "matches_feasible_max": report.matches_feasible_max,
        "witness": (None if report.witness is None
                    else hypergraph_to_dict(report.witness)),
    }


def _cmd_extremal(args) -> int:
    p = Params(args.n, args.r, args.k, args.a)
    try:
        value, witness = extremal.extremal_number(
            p, budget=args.budget, universe_cap=args.universe_cap,
            stable_only=args.stable_only)
    except ResourceBudgetError as exc:
        _emit_json(args, {"n": args.n, "r": args.r, "k": args.k, "a": args.a,
                          "optimal": False, "best_value": exc.best_size,
                          "best_witness": (None if exc.best_edges is None else
                                           _edges_1based(VertexSet.from_mask(m)
                                                         for m in exc.best_edges))})
        print(f"resource budget exhausted: {exc}", file=sys.stderr)
        return 3
    _emit_json(args, {"n": args.n, "r": args.r, "k": args.k, "a": args.a,
                      "value": value, "optimal": True,
                      "witness": hypergraph_to_dict(witness)})
    return 0


def _cmd_conjecture(args) -> int:
    p = Params(args.n, args.r, args.k, args.a)
    if args.conjecture_cmd == "value":
        report = extremal.conjecture_value(p, solver_budget=args.budget)
        _emit_json(args, _conjecture_dict(report))
        return 0
    report = extremal.check_conjecture(p, budget=args.budget,
                                       universe_cap=args.universe_cap,
                                       solver_budget=args.budget)
    _emit_json(args, _conjecture_dict(report))
    return 1 if report.agreement == "mismatch" else 0


# --------------------------------------------------------------------- bounds

def _large_n_dict(report: extremal.LargeNReport) -> dict:
    return {
        "n": report.n, "r": report.r, "k": report.k, "a": report.a,
        "threshold": report.threshold,
        "at_or_above_threshold": report.at_or_above_threshold,
        "checks": [{"name": c.name, "lhs": c.lhs, "rhs": c.rhs,
                    "holds": c.holds, "margin": c.margin} for c in report.checks],
        "all_hold": report.all_hold,
    }


def _cmd_bounds(args) -> int:
    if args.bounds_cmd == "threshold":
        _emit_json(args, {"r": args.r, "k": args.k, "a": args.a,
                          "threshold": extremal.large_n_threshold(args.r, args.k, args.a)})
        return 0
    report = extremal.verify_large_n_inequalities(args.r, args.k, args.a, args.n)
    _emit_json(args, _large_n_dict(report))
    # The first estimate holds for every valid n; the other two are
    # claimed from the threshold upward.
    c1, c2, c3 = report.checks
    violated = (not c1.holds) or (report.at_or_above_threshold
                                  and not (c2.holds and c3.holds))
    return 1 if violated else 0


# ---------------------------------------------------------------------- sweep

def _rows_to_csv(rows: list[dict], header: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _cmd_sweep_counts(args) -> int:
    rows = []
    for n in range(args.n_from, args.n_to + 1):
        p = Params(n, args.r, args.k, args.a)
        p.require_blocks()
        rows.append({"n": n, "r": args.r, "k": args.k, "a": args.a,
                     "i": "", "family": "h0", "count": comb(p.n0, args.r)})
        i_top = (n // (args.a - 1) - args.k) // 2
        if args.i_max is not None:
            i_top = min(i_top, args.i_max)
        for i in range(i_top + 1):
            rows.append({"n": n, "r": args.r, "k": args.k, "a": args.a,
                         "i": i, "family": "frankl",
                         "count": counting.frankl_size(n, args.r, args.k, args.a, i)})
    header = ["n", "r", "k", "a", "i", "family", "count"]
    if args.format == "csv":
        _write_text(args, _rows_to_csv(rows, header))
    else:
        _emit_json(args, rows)
    if args.plot:
        from . import plots
        plots.render_counts_figure(rows, args.plot)
    return 0


def _cmd_sweep_conjecture(args) -> int:
    rows = []
    for n in range(args.n_from, args.n_to + 1):
        report = extremal.check_conjecture(
            Params(n, args.r, args.k, args.a), budget=args.budget,
            universe_cap=args.universe_cap, solver_budget=args.budget)
        rows.append({"n": n, "r": args.r, "k": args.k, "a": args.a,
                     "exact": "" if report.exact_value is None else report.exact_value,
                     "paper_max": report.paper_max,
                     "feasible_max": ("" if report.feasible_max is None
                                      else report.feasible_max),
                     "agreement": report.agreement})
    header = ["n", "r", "k", "a", "exact", "paper_max", "feasible_max", "agreement"]
    if args.format == "csv":
        _write_text(args, _rows_to_csv(rows, header))
    else:
        _emit_json(args, rows)
    if args.plot:
        from . import plots
        plots.render_conjecture_figure(rows, args.plot)
    return 1 if any(row["agreement"] == "mismatch" for row in rows) else 0


# --------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parent = _global_flags()
    parser = argparse.ArgumentParser(
        prog="kmatch",
        description="Exact k-matching tools for uniform hypergraphs.",
        epilog="Exit codes: 0 ok, 1 verification violation/mismatch, "
               "2 usage/parameter error, 3 resource budget exhausted.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    count = sub.add_parser("count", help="closed-form counts").add_subparsers(
        dest="count_cmd", required=True)
    pg = count.add_parser("g", parents=[parent],
                          help="r-sets covering one of a-1 disjoint k-blocks")
    for flag in ("--n", "--r", "--k", "--a"):
        pg.add_argument(flag, type=int, required=True)
    pg.set_defaults(handler=_cmd_count_g)
    pb = count.add_parser("binomial", parents=[parent], help="C(n, k)")
    pb.add_argument("--n", type=int, required=True)
    pb.add_argument("--k", type=int, required=True)
    pb.set_defaults(handler=_cmd_count_binomial)
    ps = count.add_parser("b-size", parents=[parent],
                          help="single-block family size")
    for flag in ("--n", "--r", "--k", "--i"):
        ps.add_argument(flag, type=int, required=True)
    ps.set_defaults(handler=_cmd_count_bsize)

    construct = sub.add_parser("construct", help="materialize candidate families") \
        .add_subparsers(dest="construct_cmd", required=True)
    for name, flags in (("frankl", ("--n", "--r", "--k", "--a", "--i")),
                        ("h0", ("--n", "--r", "--k", "--a")),
                        ("complete", ("--n", "--r")),
                        ("b", ("--n", "--r", "--k", "--i"))):
        pc = construct.add_parser(name, parents=[parent])
        for flag in flags:
            pc.add_argument(flag, type=int, required=True)
        pc.set_defaults(handler=_cmd_construct)
    pg2 = construct.add_parser("general", parents=[parent])
    for flag in ("--n", "--r", "--k", "--i"):
        pg2.add_argument(flag, type=int, required=True)
    pg2.add_argument("--sets", required=True,
                     help="semicolon-separated 1-based blocks, e.g. '1,2;3,4'")
    pg2.set_defaults(handler=_cmd_construct)

    pnu = sub.add_parser("nu", parents=[parent], help="exact k-matching number")
    pnu.add_argument("--in", dest="infile", required=True,
                     help="hypergraph JSON path, or - for stdin")
    pnu.add_argument("--k", type=int, required=True)
    pnu.set_defaults(handler=_cmd_nu)

    pdec = sub.add_parser("decide", parents=[parent],
                          help="is there a k-matching of a given size")
    pdec.add_argument("--in", dest="infile", required=True)
    pdec.add_argument("--k", type=int, required=True)
    pdec.add_argument("--size", type=int, required=True)
    pdec.set_defaults(handler=_cmd_decide)

    pgr = sub.add_parser("greedy", parents=[parent],
                         help="greedy maximal k-matching in colex order")
    pgr.add_argument("--in", dest="infile", required=True)
    pgr.add_argument("--k", type=int, required=True)
    pgr.set_defaults(handler=_cmd_greedy)

    shift_sub = sub.add_parser("shift", help="index-shift operations") \
        .add_subparsers(dest="shift_cmd", required=True)
    pa = shift_sub.add_parser("apply", parents=[parent])
    pa.add_argument("--in", dest="infile", required=True)
    pa.add_argument("--i", type=int, required=True, help="1-based source label")
    pa.add_argument("--j", type=int, required=True, help="1-based target label")
    pa.add_argument("--direction", choices=shifting.DIRECTIONS, default="up")
    pa.set_defaults(handler=_cmd_shift)
    pst = shift_sub.add_parser("stabilize", parents=[parent])
    pst.add_argument("--in", dest="infile", required=True)
    pst.add_argument("--direction", choices=shifting.DIRECTIONS, default="up")
    pst.set_defaults(handler=_cmd_shift)
    pck = shift_sub.add_parser("check", parents=[parent])
    pck.add_argument("--in", dest="infile", required=True)
    pck.add_argument("--direction", choices=shifting.DIRECTIONS, default="up")
    pck.set_defaults(handler=_cmd_shift)

    coup = sub.add_parser("coupling", help="capture coupling verification") \
        .add_subparsers(dest="coupling_cmd", required=True)
    for name in ("verify", "disjointify"):
        pc = coup.add_parser(name, parents=[parent])
        pc.add_argument("--n", type=int, required=True)
        pc.add_argument("--r", type=int, required=True)
        pc.add_argument("--k", type=int, required=True)
        pc.add_argument("--i", type=int, default=None)
        pc.add_argument("--sets", required=True,
                        help="semicolon-separated 1-based blocks")
        pc.add_argument("--randomize", action="store_true",
                        help="seeded random pair/replacement/bijection choices")
        pc.set_defaults(handler=_cmd_coupling)

    pex = sub.add_parser("extremal", parents=[parent],
                         help="exact max edges with nu_k < a")
    for flag in ("--n", "--r", "--k", "--a"):
        pex.add_argument(flag, type=int, required=True)
    pex.add_argument("--universe-cap", type=int, default=DEFAULT_UNIVERSE_CAP)
    pex.add_argument("--stable-only", action="store_true",
                     help="restrict incumbents to shift-stable families")
    pex.set_defaults(handler=_cmd_extremal)

    conj = sub.add_parser("conjecture", help="candidate table / exact comparison") \
        .add_subparsers(dest="conjecture_cmd", required=True)
    for name in ("value", "check"):
        pc = conj.add_parser(name, parents=[parent])
        for flag in ("--n", "--r", "--k", "--a"):
            pc.add_argument(flag, type=int, required=True)
        pc.add_argument("--universe-cap", type=int, default=DEFAULT_UNIVERSE_CAP)
        pc.set_defaults(handler=_cmd_conjecture)

    bounds = sub.add_parser("bounds", help="large-n threshold and inequalities") \
        .add_subparsers(dest="bounds_cmd", required=True)
    pt = bounds.add_parser("threshold", parents=[parent])
    for flag in ("--r", "--k", "--a"):
        pt.add_argument(flag, type=int, required=True)
    pt.set_defaults(handler=_cmd_bounds)
    pi = bounds.add_parser("inequalities", parents=[parent])
    for flag in ("--r", "--k", "--a", "--n"):
        pi.add_argument(flag, type=int, required=True)
    pi.set_defaults(handler=_cmd_bounds)

    sweep = sub.add_parser("sweep", help="CSV sweeps, optionally with figures") \
        .add_subparsers(dest="sweep_cmd", required=True)
    pswc = sweep.add_parser("counts", parents=[parent])
    for flag in ("--r", "--k", "--a", "--n-from", "--n-to"):
        pswc.add_argument(flag, type=int, required=True)
    pswc.add_argument("--i-max", type=int, default=None)
    pswc.add_argument("--plot", default=None, help="render a PNG to this path")
    pswc.set_defaults(handler=_cmd_sweep_counts, format="csv")
    pswj = sweep.add_parser("conjecture", parents=[parent])
    for flag in ("--r", "--k", "--a", "--n-from", "--n-to"):
        pswj.add_argument(flag, type=int, required=True)
    pswj.add_argument("--universe-cap", type=int, default=DEFAULT_UNIVERSE_CAP)
    pswj.add_argument("--plot", default=None, help="render a PNG to this path")
    pswj.set_defaults(handler=_cmd_sweep_conjecture, format="csv")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse signals usage errors with code 2
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ParameterError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return 2
    except ResourceBudgetError as exc:
        print(f"resource budget exhausted: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
