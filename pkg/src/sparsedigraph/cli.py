"""Command line interface.

Subcommands: gen, wcol, minor, dst, domset, kernel, oracle, selftest.
Results go to stdout as JSON (schema 1) or as flat tab-separated pairs
with --format tsv.  Vertex sets are emitted as sorted index arrays.
Identical invocations with identical seeds produce identical output up
to the timing field.

Exit codes: 0 success, 1 infeasible or negative decision, 2 usage error,
3 size-cap error, 4 internal invariant failure.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from . import acceptance
from .coloring import compute_wcol_order, low_treedepth_coloring, wcol_exact, wreach_all
from .digraph import Digraph, format_digraph, parse_digraph
from .domination import redblue_dominate_approx, scds_approx, vc_dimension_distance_r
from .duality import kernelize
from .errors import InfeasibleError, InternalInvariantError, SizeCapError
from .instances import InstanceRecipe, crown
from .minors import contains_crown, is_depth_r_minor
from .oracles import (
    alpha_r_exact,
    dst_exact_enum,
    gamma_r_exact,
    redblue_exact_enum,
    verify_dominating,
    verify_scattered,
    verify_strongly_connected,
)
from .steiner import dst_fpt, parse_dst_instance, scss_2approx

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_SIZE = 3
EXIT_INTERNAL = 4


def _read_graph(path: str) -> Digraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_digraph(fh.read())


def _read_vertex_list(path: str) -> list[int]:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                out.append(int(line))
    return out


def _flatten(prefix: str, value):
    if isinstance(value, dict):
        for key in sorted(value):
            inner = value[key]
            sep = "." if isinstance(inner, dict) else ""
            yield from _flatten(f"{prefix}{key}{sep}", inner)
    elif isinstance(value, (list, tuple)):
        yield prefix, " ".join(str(x) for x in value)
    else:
        yield prefix, value


def _emit(report: dict, fmt: str):
    if fmt == "tsv":
        for key, val in _flatten("", report):
            print(f"{key}\t{val}")
    else:
        print(json.dumps(report, indent=2, sort_keys=True))


def _vertices(values) -> list[int]:
    return sorted(values)


def _cmd_gen(args) -> tuple[int, dict]:
    if args.family == "random":
        if args.arcs is None or args.seed is None:
            raise ValueError("random generation needs --arcs and --seed")
        recipe = InstanceRecipe("random", args.size, arcs=args.arcs, seed=args.seed)
    else:
        recipe = InstanceRecipe(args.family, args.size)
    g = recipe.build()
    text = format_digraph(g, comments=[recipe.describe()])
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        return EXIT_OK, {"written": args.output, "n": g.n, "m": g.m}
    sys.stdout.write(text)
    return EXIT_OK, {}


def _cmd_wcol(args) -> tuple[int, dict]:
    g = _read_graph(args.graph)
    report: dict = {"n": g.n, "m": g.m, "radius": args.radius}
    if args.exact:
        value, order = wcol_exact(g, args.radius, max_n=args.max_n)
        report["exact"] = value
        report["exact_order"] = list(order.seq)
    if args.tfa or not args.exact:
        res = compute_wcol_order(g, args.radius)
        sizes = [len(s) for s in wreach_all(g, res.order, args.radius)]
        actual = max(sizes, default=0)
        report.update(
            {
                "order": list(res.order.seq),
                "guarantee": res.guarantee,
                "wreach_sizes": sizes,
                "achieved": actual,
                "valid": actual <= res.guarantee,
            }
        )
    if args.coloring is not None:
        colors = low_treedepth_coloring(g, args.coloring)
        report["coloring"] = colors
        report["colors_used"] = len(set(colors))
    return EXIT_OK, report


def _cmd_minor(args) -> tuple[int, dict]:
    g = _read_graph(args.graph)
    pattern = crown(args.crown)
    model = is_depth_r_minor(pattern, g, args.depth, max_n=args.max_n)
    found = model is not None
    report = {"crown": args.crown, "depth": args.depth, "found": found}
    if found:
        report["witness"] = {
            str(v): _vertices(bs) for v, bs in model.branch_sets.items()
        }
    return (EXIT_OK if found else EXIT_NEGATIVE), report


def _cmd_dst(args) -> tuple[int, dict]:
    with open(args.instance, "r", encoding="utf-8") as fh:
        inst = parse_dst_instance(fh.read())
    report: dict = {
        "n": inst.graph.n,
        "root": inst.root,
        "terminals": _vertices(inst.terminals),
        "budget": inst.budget,
    }
    if args.scss:
        terminals = frozenset(inst.terminals) | {inst.root}
        sol = scss_2approx(inst.graph, terminals, inst.budget)
        report["feasible"] = sol is not None
        if sol is not None:
            report["solution"] = _vertices(sol)
        return (EXIT_OK if sol is not None else EXIT_NEGATIVE), report
    if args.exact:
        sol = dst_exact_enum(inst, max_n=args.max_n, max_k=max(4, inst.budget))
        report["feasible"] = sol is not None
        if sol is not None:
            report["solution"] = _vertices(sol)
        return (EXIT_OK if sol is not None else EXIT_NEGATIVE), report
    res = dst_fpt(inst, exact_grad0=args.exact_grad0)
    report.update(
        {
            "feasible": res.solution is not None,
            "d": res.degree_threshold,
            "s": res.scc_diameter,
            "nodes_expanded": list(res.nodes_per_budget),
        }
    )
    if res.solution is not None:
        report["solution"] = _vertices(res.solution)
    return (EXIT_OK if res.solution is not None else EXIT_NEGATIVE), report


def _cmd_domset(args) -> tuple[int, dict]:
    g = _read_graph(args.graph)
    report: dict = {"n": g.n, "radius": args.radius, "seed": args.seed}
    stats: dict = {}
    if args.scds:
        sol = scds_approx(g, args.radius, seed=args.seed, stats_out=stats)
        report.update({"solution": _vertices(sol), "valid": True, **stats})
        return EXIT_OK, report
    red = _read_vertex_list(args.red) if args.red else list(range(g.n))
    blue = _read_vertex_list(args.blue) if args.blue else list(range(g.n))
    sol = redblue_dominate_approx(
        g, red, blue, args.radius, seed=args.seed, stats_out=stats
    )
    report.update({"solution": _vertices(sol), "valid": True, **stats})
    if args.oracle_ratio:
        opt = redblue_exact_enum(g, red, blue, args.radius, max_k=4)
        if opt is not None:
            report["ratio_vs_oracle"] = round(len(sol) / max(1, len(opt)), 3)
    return EXIT_OK, report


def _cmd_kernel(args) -> tuple[int, dict]:
    g = _read_graph(args.graph)
    res = kernelize(g, args.radius, args.budget)
    report = {
        "radius": args.radius,
        "budget": args.budget,
        "kernel_budget": res.budget,
        "infeasible": res.infeasible,
        "core_size": res.core_size,
        "removed": list(res.removed),
        "representatives": list(res.representatives),
        "iterations": res.iterations,
        "threshold": res.threshold,
        "kernel_n": res.graph.n,
        "kernel_m": res.graph.m,
    }
    if args.emit_core:
        report["core"] = _vertices(res.core)
    if args.emit_kernel:
        with open(args.emit_kernel, "w", encoding="utf-8") as fh:
            fh.write(format_digraph(res.graph, comments=["standard-form kernel"]))
        report["written"] = args.emit_kernel
    return (EXIT_NEGATIVE if res.infeasible else EXIT_OK), report


def _cmd_oracle(args) -> tuple[int, dict]:
    g = _read_graph(args.graph)
    report: dict = {"n": g.n, "radius": args.radius}
    if args.kind == "gamma":
        size, witness = gamma_r_exact(g, args.radius, max_n=args.max_n)
        report.update({"gamma": size, "witness": _vertices(witness)})
    elif args.kind == "alpha":
        size, witness = alpha_r_exact(g, args.radius, max_n=args.max_n)
        report.update({"alpha": size, "witness": _vertices(witness)})
    elif args.kind == "vc":
        dim, witness = vc_dimension_distance_r(g, args.radius, max_n=args.max_n)
        report.update({"vc_dimension": dim, "witness": _vertices(witness)})
    elif args.kind == "crown":
        found = contains_crown(g, args.crown, args.radius, max_n=args.max_n)
        report.update({"crown": args.crown, "found": found})
        return (EXIT_OK if found else EXIT_NEGATIVE), report
    else:
        if not args.set:
            raise ValueError(f"oracle {args.kind} needs --set FILE")
        vertices = _read_vertex_list(args.set)
        if args.kind == "verify-dominating":
            ok = verify_dominating(g, vertices, args.radius)
        elif args.kind == "verify-scattered":
            ok = verify_scattered(g, vertices, args.radius)
        else:
            ok = verify_strongly_connected(g, vertices)
        report.update({"set": _vertices(vertices), "valid": ok})
        return (EXIT_OK if ok else EXIT_NEGATIVE), report
    return EXIT_OK, report


def _cmd_selftest(args) -> tuple[int, dict]:
    results = acceptance.run_all(verbose=True)
    ok = all(r.ok for r in results)
    return (EXIT_OK if ok else EXIT_NEGATIVE), {
        "passed": sum(r.ok for r in results),
        "failed": sum(not r.ok for r in results),
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sparsedigraph",
        description="Sparse digraph algorithm toolkit",
    )
    parser.add_argument("--format", choices=("json", "tsv"), default="json")
    parser.add_argument(
        "--jobs", type=int, default=1,
        help="reserved; results are independent of this value",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument(
        "family",
        choices=("path", "crown", "apex-crown", "bidirected-clique", "random"),
    )
    p.add_argument("size", type=int)
    p.add_argument("--arcs", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("wcol", help="weak coloring orders")
    p.add_argument("graph")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--tfa", action="store_true")
    p.add_argument("--coloring", type=int, metavar="P")
    p.add_argument("--max-n", type=int, default=9)
    p.set_defaults(fn=_cmd_wcol)

    p = sub.add_parser("minor", help="crown minor search")
    p.add_argument("graph")
    p.add_argument("--crown", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--max-n", type=int, default=12)
    p.set_defaults(fn=_cmd_minor)

    p = sub.add_parser("dst", help="directed Steiner tree")
    p.add_argument("instance")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--fpt", action="store_true")
    group.add_argument("--exact", action="store_true")
    group.add_argument(
        "--scss", action="store_true",
        help="strongly connected variant; root plus terminals form the terminal set",
    )
    p.add_argument(
        "--exact-grad0", action="store_true",
        help="derive the branching threshold from the exact rank-0 density",
    )
    p.add_argument("--max-n", type=int, default=12)
    p.set_defaults(fn=_cmd_dst)

    p = sub.add_parser("domset", help="distance-r dominating sets")
    p.add_argument("graph")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--red")
    p.add_argument("--blue")
    p.add_argument("--scds", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--oracle-ratio", action="store_true",
        help="also report |D| / optimum when the enumeration oracle finds one",
    )
    p.set_defaults(fn=_cmd_domset)

    p = sub.add_parser("kernel", help="domination kernelization")
    p.add_argument("graph")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--emit-core", action="store_true")
    p.add_argument("--emit-kernel", metavar="FILE")
    p.set_defaults(fn=_cmd_kernel)

    p = sub.add_parser("oracle", help="exact brute-force references")
    p.add_argument("graph")
    p.add_argument(
        "kind",
        choices=(
            "gamma", "alpha", "vc", "crown",
            "verify-dominating", "verify-scattered", "verify-strong",
        ),
    )
    p.add_argument("--radius", type=int, default=1)
    p.add_argument("--crown", type=int, default=3)
    p.add_argument("--set", metavar="FILE", help="vertex list for the verify kinds")
    p.add_argument("--max-n", type=int, default=16)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    started = time.perf_counter()
    try:
        code, report = args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeCapError as exc:
        print(f"size cap: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except InternalInvariantError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if report:
        report = {
            "schema": 1,
            "command": args.command,
            "timing_ms": round(1000 * (time.perf_counter() - started), 3),
            **report,
        }
        _emit(report, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
