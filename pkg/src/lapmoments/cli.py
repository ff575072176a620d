"""Command-line surface: construct, compute, bound, scan, verify.

Exit codes: 0 on success (and verification pass), 1 on verification fail,
2 on usage errors including infeasible parameters.  Output ordering is
deterministic so runs can be diffed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds as bounds_mod
from . import oracle
from .chromatic import critical_core, dichromatic_number, find_acyclic_partition
from .digraph import Digraph, from_edge_list, to_dot, to_edge_list
from .families import (
    BIDIRECTED_COMPLETE,
    BIDIRECTED_CYCLE,
    DIRECTED_CYCLE,
    in_tree,
    join_digraph,
    parse_join_spec,
    standard_family,
    theorem210_minimizer,
    transitive_tournament,
)
from .spectral import adjacency_moment, le_via_degrees, lsm_numeric, lsm_trace

_FAMILIES = ("inpath", "instar", "rand", "tt", "cycle", "bicycle", "bicomplete", "thm210min")


def _default_workers() -> int:
    return os.cpu_count() or 1


def _read_digraph(path: str | None) -> Digraph:
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    return from_edge_list(text)


def _emit_digraph(g: Digraph, fmt: str) -> None:
    if fmt == "dot":
        sys.stdout.write(to_dot(g))
    elif fmt == "json":
        print(json.dumps({"n": g.n, "arcs": [list(a) for a in g.arcs()]}))
    else:
        sys.stdout.write(to_edge_list(g))


def _cmd_construct(args) -> int:
    if args.join:
        g = join_digraph(parse_join_spec(args.join))
    elif args.family:
        if args.n is None:
            raise ValueError("--n is required with --family")
        name = args.family
        if name == "inpath":
            g = in_tree(args.n, "inpath")
        elif name == "instar":
            g = in_tree(args.n, "instar")
        elif name == "rand":
            g = in_tree(args.n, f"rand:{args.seed}")
        elif name == "tt":
            g = transitive_tournament(args.n)
        elif name == "cycle":
            g = standard_family(DIRECTED_CYCLE, args.n)
        elif name == "bicycle":
            g = standard_family(BIDIRECTED_CYCLE, args.n)
        elif name == "bicomplete":
            g = standard_family(BIDIRECTED_COMPLETE, args.n)
        elif name == "thm210min":
            if args.r is None:
                raise ValueError("--r is required for thm210min")
            g = theorem210_minimizer(args.n, args.r)
        else:
            raise ValueError(f"unknown family {name!r}; choose from {_FAMILIES}")
    else:
        raise ValueError("construct needs --family or --join")
    _emit_digraph(g, args.format)
    return 0


def _cmd_moments(args) -> int:
    g = _read_digraph(args.input)
    report = lsm_numeric(g, args.k, tolerance=args.tolerance)
    if args.format == "json":
        print(report.to_json())
    else:
        print(f"n {g.n}  e {g.arc_count}")
        print(f"LE (k=2)          {lsm_trace(g, 2)}")
        print(f"LSM_{args.k} exact       {report.lsm_exact}")
        print(f"adjacency moment  {report.adjacency_moment}")
        print(f"numeric estimate  {report.lsm_numeric:.9g}")
        print(f"residual          {report.residual:.3e}")
    return 0


def _cmd_chromatic(args) -> int:
    g = _read_digraph(args.input)
    chi = dichromatic_number(g)
    coloring = find_acyclic_partition(g, chi)
    core, labels = critical_core(g)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "dichromatic_number": chi,
                    "coloring": [list(p) for p in coloring.parts],
                    "critical_core_vertices": list(labels),
                }
            )
        )
    else:
        print(f"dichromatic number  {chi}")
        print(f"coloring            {coloring.to_json()}")
        print(f"critical core       {list(labels)}")
    return 0


def _print_bound(report, fmt: str) -> None:
    if fmt == "json":
        print(report.to_json())
    else:
        comp = f"  composition {report.composition}" if report.composition else ""
        print(
            f"{report.theorem_id}  n={report.n}"
            + (f" r={report.r}" if report.r is not None else "")
            + f"  value {report.value}{comp}  [{report.extremal_description}]"
        )


def _cmd_bounds(args) -> int:
    th = args.theorem.lower()
    if th in ("lem22", "lem23"):
        lower, upper = bounds_mod.global_le_bounds(args.n, acyclic=(th == "lem23"))
        _print_bound(lower, args.format)
        _print_bound(upper, args.format)
    elif th == "cor34":
        lower, upper = bounds_mod.cor34_bounds(args.n)
        _print_bound(lower, args.format)
        _print_bound(upper, args.format)
    elif th in ("thm25", "thm26"):
        if args.r is None:
            raise ValueError(f"--r is required for {th}")
        report = bounds_mod.join_le_extreme(args.n, args.r, "min" if th == "thm25" else "max")
        _print_bound(report, args.format)
    elif th in ("thm210", "thm211"):
        if args.r is None:
            raise ValueError(f"--r is required for {th}")
        report = bounds_mod.all_digraph_le_extreme(
            args.n, args.r, "min" if th == "thm210" else "max"
        )
        _print_bound(report, args.format)
    elif th in ("thm33lower", "thm33upper"):
        if args.join is None:
            raise ValueError("--join composition like '3:tt,2:tt' is required for thm33")
        spec = parse_join_spec(args.join)
        kind = bounds_mod.KIND_IN_TREE if th.endswith("lower") else bounds_mod.KIND_TOURNAMENT
        value = bounds_mod.join_lsm3_closed_form(args.n, spec.composition, kind)
        print(json.dumps({"theorem": th, "n": args.n, "value_num": value.numerator,
                          "value_den": value.denominator}) if args.format == "json"
              else f"{th}  n={args.n}  composition {spec.composition.parts}  value {value}")
    else:
        raise ValueError(
            "unknown theorem; choose from lem22, lem23, thm25, thm26, thm210, "
            "thm211, thm33lower, thm33upper, cor34"
        )
    return 0


def _cmd_scan(args) -> int:
    if args.mode == "extremal":
        report = oracle.extremal_scan(
            args.n,
            args.r,
            moment_k=args.k,
            direction=args.direction,
            workers=args.workers,
            witness_limit=args.witness_limit,
        )
        if args.format == "json":
            print(report.to_json())
        else:
            print(f"{report.theorem_id}  params {report.params}")
            print(f"predicted {report.predicted}  observed {report.observed}")
            print(f"witnesses {report.witness_count}  status {report.status}")
            print(report.description)
        return 0 if report.passed else 1
    scan = oracle.composition_scan(
        args.n, args.r, kind=args.kind, moment_k=args.k, direction=args.direction
    )
    if args.format == "json":
        print(scan.to_json())
    else:
        width = max(len(str(list(c))) for c, _ in scan.entries)
        for comp, value in scan.entries:
            print(f"{str(list(comp)):<{width}}  {value}")
        print(f"best ({args.direction}): {list(scan.best[0])} -> {scan.best[1]}")
    return 0


def _cmd_verify(args) -> int:
    params = {}
    if args.n is not None:
        params["n"] = args.n
    if args.r is not None:
        params["r"] = args.r
    if args.samples is not None:
        params["samples"] = args.samples
    if args.seed is not None:
        params["seed"] = args.seed
    key = args.theorem.lower().replace(".", "").replace("_", "")
    if key in ("thm210", "thm211"):
        params.setdefault("workers", args.workers)
    report = oracle.verify_theorem(args.theorem, params)
    if args.format == "json":
        print(report.to_json())
    else:
        print(f"{report.theorem_id}  params {report.params}  status {report.status}")
        print(f"predicted {report.predicted}  observed {report.observed}")
        if report.description:
            print(report.description)
    return 0 if report.passed else 1


def _cmd_table(args) -> int:
    if args.which == "table2":
        ns = [int(x) for x in args.n.split(",")] if args.n else sorted(oracle._TABLE2)
        rows = []
        all_pass = True
        for n in ns:
            report = oracle.verify_theorem("table2", {"n": n})
            all_pass &= report.passed
            min_scan = oracle.composition_scan(n, 3, bounds_mod.KIND_IN_TREE, 3, "min")
            max_scan = oracle.composition_scan(n, 3, bounds_mod.KIND_TOURNAMENT, 3, "max")
            rows.append((n, min_scan.best, max_scan.best, report.status))
        if args.format == "json":
            print(
                json.dumps(
                    [
                        {
                            "n": n,
                            "min_composition": list(mn[0]),
                            "min_value": mn[1],
                            "max_composition": list(mx[0]),
                            "max_value": mx[1],
                            "status": status,
                        }
                        for n, mn, mx, status in rows
                    ]
                )
            )
        else:
            print(f"{'n':>3}  {'minimal join':<22} {'maximal join':<22} status")
            for n, mn, mx, status in rows:
                print(
                    f"{n:>3}  {str(list(mn[0])) + ' = ' + str(mn[1]):<22} "
                    f"{str(list(mx[0])) + ' = ' + str(mx[1]):<22} {status}"
                )
        return 0 if all_pass else 1
    # figure1: the one-unit-move relation over compositions
    n = int(args.n) if args.n else 10
    r = args.r if args.r is not None else 4
    report = oracle.verify_theorem("figure1", {"n": n, "r": r})
    if args.format == "json":
        scan = oracle.composition_scan(n, r, args.kind, 2, "min")
        print(scan.to_json())
    else:
        scan = oracle.composition_scan(n, r, args.kind, 2, "min")
        for src, sv, dst, dv in sorted(scan.edges):
            print(f"{list(src)} ({sv}) -> {list(dst)} ({dv})")
        print(f"status {report.status}: {report.description}")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lapmoments",
        description="Exact Laplacian spectral moments of digraphs: construct "
        "extremal families, compute moments, evaluate bounds, verify theorems.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, input_arg=False):
        p.add_argument("--format", choices=("text", "json", "dot"), default="text")
        if input_arg:
            p.add_argument("input", nargs="?", default=None,
                           help="edge-list file (default: stdin)")

    p = sub.add_parser("construct", help="emit a family or join digraph")
    p.add_argument("--family", choices=_FAMILIES)
    p.add_argument("--join", help="join spec like '3:tt,2:tt' or '5:inpath,1:instar'")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("moments", help="exact and numeric spectral moments")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--tolerance", type=float, default=1e-6)
    common(p, input_arg=True)
    p.set_defaults(func=_cmd_moments)

    p = sub.add_parser("chromatic", help="dichromatic number, coloring, critical core")
    common(p, input_arg=True)
    p.set_defaults(func=_cmd_chromatic)

    p = sub.add_parser("bounds", help="closed-form bound reports")
    p.add_argument("--theorem", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--join", help="composition for thm33 bounds")
    common(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("scan", help="exhaustive extremal scan or composition scan")
    p.add_argument("--mode", choices=("extremal", "composition"), default="extremal")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, default=2, choices=(2, 3))
    p.add_argument("--direction", choices=("min", "max"), default="min")
    p.add_argument("--kind", choices=("intree", "tt"), default="intree")
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--witness-limit", type=int, default=oracle.WITNESS_CAP)
    common(p)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("verify", help="run a theorem verification report")
    p.add_argument("--theorem", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int, default=_default_workers())
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("table", help="reproduce the summary tables")
    p.add_argument("--which", choices=("table2", "figure1"), default="table2")
    p.add_argument("--n", help="single n or comma list for table2")
    p.add_argument("--r", type=int)
    p.add_argument("--kind", choices=("intree", "tt"), default="intree")
    common(p)
    p.set_defaults(func=_cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
