"""Command-line interface.

Exit codes: 0 success, 1 infeasible or false verdict, 2 input error,
3 internal inconsistency (a result that contradicts a theorem or fails its
own re-verification).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path
from typing import Any, Optional

from . import __version__
from .corpus import generate_clawfree_corpus
from .exact import DEFAULT_MAX_ORDER, DEFAULT_NODE_LIMIT, min_branch_spanning_tree
from .extremal import SharpFamilyParams, build_sharp_graph, verify_sharpness
from .formats import (
    certificate_from_json,
    certificate_to_json,
    dumps_report,
    parse_edge_list_labeled,
    serialize_edge_list,
    serialize_sharp_graph,
    solve_report_to_json,
    tree_to_json,
    verify_run_report,
)
from .graph import Graph, GraphInputError, is_claw_free, is_connected
from .invariants import THEOREMS, WorkLimitExceeded, check_hypothesis, distance_independence_number, sigma
from .search import CERTIFICATE, DEFAULT_MAX_ITERATIONS, FEASIBLE, solve, verify_certificate

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _load(path: str) -> tuple[Graph, Optional[list[str]]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_edge_list_labeled(text)


def _input_meta(path: str, g: Graph, labels) -> dict[str, Any]:
    return {"path": path, "n": g.n, "m": g.m, "labels": labels}


def _emit(args, report: dict[str, Any]) -> None:
    report["wall_time_s"] = round(time.perf_counter() - args._t0, 4)
    text = dumps_report(report)
    if getattr(args, "report", None):
        Path(args.report).write_text(text)
    sys.stdout.write(text)


def cmd_check(args) -> int:
    g, labels = _load(args.file)
    connected = is_connected(g)
    claw_free, witness = is_claw_free(g)
    _emit(args, {
        "command": "check",
        "parameters": {},
        "input": _input_meta(args.file, g, labels),
        "result": {"connected": connected, "claw_free": claw_free,
                   "claw_witness": None if witness is None else {"center": witness[0], "leaves": list(witness[1:])}},
    })
    return EXIT_OK if connected and claw_free else EXIT_FALSE


def cmd_invariants(args) -> int:
    g, labels = _load(args.file)
    alpha, aw = distance_independence_number(g, args.l, args.work_limit)
    result: dict[str, Any] = {"alpha": alpha, "alpha_witness": list(aw)}
    if args.k is not None:
        s = sigma(g, args.l, args.k, args.work_limit)
        result["sigma"] = s.value
        result["sigma_witness"] = None if s.witness_set is None else list(s.witness_set)
    _emit(args, {
        "command": "invariants",
        "parameters": {"l": args.l, "k": args.k},
        "input": _input_meta(args.file, g, labels),
        "result": result,
    })
    return EXIT_OK


def cmd_hypothesis(args) -> int:
    g, labels = _load(args.file)
    v = check_hypothesis(g, args.theorem, args.k, args.work_limit)
    _emit(args, {
        "command": "hypothesis",
        "parameters": {"theorem": v.theorem_id, "k": v.k},
        "input": _input_meta(args.file, g, labels),
        "result": {
            "theorem_id": v.theorem_id, "k": v.k, "holds": v.holds,
            "lhs": v.lhs, "relation": v.relation, "rhs": v.rhs, "invariant": v.invariant,
            "claw_free": v.claw_free, "requires_claw_free": v.requires_claw_free,
            "conclusion": v.conclusion,
            "witness": None if v.witness is None else list(v.witness),
        },
    })
    return EXIT_OK if v.holds else EXIT_FALSE


def cmd_solve(args) -> int:
    g, labels = _load(args.file)
    k = args.k
    highlight: list[int] = []
    if args.method == "exact":
        res = min_branch_spanning_tree(g, node_limit=args.node_limit, max_order=args.max_order)
        if res.min_stem_branch_vertices <= k:
            outcome = "feasible"
        elif res.exhausted:
            outcome = "infeasible"
        else:
            outcome = "inconclusive"
        result = {
            "method": "exact", "outcome": outcome, "k": k,
            "min_stem_branch_vertices": res.min_stem_branch_vertices,
            "exhausted": res.exhausted, "trees_explored": res.trees_explored,
            "optimal_tree": tree_to_json(res.optimal_tree),
        }
        tree = res.optimal_tree
        code = EXIT_OK if outcome == "feasible" else EXIT_FALSE
    else:
        rep = solve(g, k, max_iterations=args.max_iterations)
        result = solve_report_to_json(rep)
        tree = rep.tree
        if rep.certificate is not None:
            highlight = list(rep.certificate.vertices)
        code = EXIT_OK if rep.outcome == FEASIBLE else EXIT_FALSE
    report = {
        "command": "solve",
        "parameters": {"k": k, "method": args.method, "node_limit": args.node_limit,
                       "max_iterations": args.max_iterations},
        "input": _input_meta(args.file, g, labels),
        "result": result,
    }
    problems = verify_run_report(report, g)
    if args.method == "exact" and result["outcome"] == "feasible" and tree.profile.branch_count > k:
        problems.append("exact optimum does not re-profile within budget")
    if problems:
        report["result"]["internal_problems"] = problems
        code = EXIT_INTERNAL
    if args.figure:
        from .plotting import draw_tree

        draw_tree(g, tree, args.figure, title=f"{args.method}: {result['outcome']} (k={k})",
                  highlight=highlight, labels=labels)
        report["figure"] = args.figure
    _emit(args, report)
    return code


def cmd_verify_cert(args) -> int:
    g, labels = _load(args.graph)
    try:
        data = json.loads(Path(args.cert).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise GraphInputError(f"cannot read certificate {args.cert}: {exc}") from None
    if isinstance(data, dict) and "result" in data:
        data = data["result"].get("certificate")
    if not isinstance(data, dict):
        raise GraphInputError("no certificate object found")
    cert = certificate_from_json(data)
    check = verify_certificate(g, cert, args.k)
    _emit(args, {
        "command": "verify-cert",
        "parameters": {"k": args.k},
        "input": _input_meta(args.graph, g, labels),
        "result": {"certificate": certificate_to_json(cert), "valid": check.ok, "diagnostics": check.diagnostics},
    })
    return EXIT_OK if check.ok else EXIT_FALSE


def cmd_gen_sharp(args) -> int:
    lg = build_sharp_graph(SharpFamilyParams(args.m, args.k))
    text = serialize_sharp_graph(lg)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.verify:
        rep = verify_sharpness(lg.params, max_exact_order=args.max_exact_order)
        payload = {
            "command": "gen sharp",
            "parameters": {"m": args.m, "k": args.k},
            "result": {**{k: v for k, v in rep.__dict__.items()}, "checks": rep.checks, "passed": rep.passed},
        }
        report = dumps_report(payload)
        if args.report:
            Path(args.report).write_text(report)
        else:
            sys.stderr.write(report)
        return EXIT_OK if rep.passed else EXIT_FALSE
    return EXIT_OK


def cmd_corpus(args) -> int:
    graphs = generate_clawfree_corpus(args.seed, args.count, args.order_min, args.order_max, args.family)
    if args.output:
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        width = max(3, len(str(len(graphs))))
        for i, g in enumerate(graphs):
            (out / f"graph_{i:0{width}d}.el").write_text(
                serialize_edge_list(g, [f"corpus seed={args.seed} index={i}"]))
    else:
        for i, g in enumerate(graphs):
            sys.stdout.write(serialize_edge_list(g, [f"corpus seed={args.seed} index={i}"]))
    return EXIT_OK


def cmd_validate(args) -> int:
    from .validation import validate

    summary = validate(args.seed, args.count, args.k, args.order_min, args.order_max,
                       node_limit=args.node_limit, jobs=args.jobs, family=args.family)
    report = {"command": "validate",
              "parameters": {"seed": args.seed, "count": args.count, "k": args.k, "family": args.family},
              "result": summary.to_json()}
    if args.figure:
        from .plotting import draw_validation

        draw_validation(summary, args.figure)
        report["figure"] = args.figure
    _emit(args, report)
    return EXIT_INTERNAL if summary.contradictions else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="clawstem", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def with_report(sp):
        sp.add_argument("--report", help="also write the JSON report to this file")
        return sp

    sp = with_report(sub.add_parser("check", help="connectivity and claw-freeness"))
    sp.add_argument("file")
    sp.set_defaults(func=cmd_check)

    sp = with_report(sub.add_parser("invariants", help="alpha^l and sigma^l_k"))
    sp.add_argument("file")
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--work-limit", type=int, default=5_000_000)
    sp.set_defaults(func=cmd_invariants)

    sp = with_report(sub.add_parser("hypothesis", help="evaluate a theorem's degree-sum hypothesis"))
    sp.add_argument("file")
    sp.add_argument("--theorem", required=True, help=", ".join(THEOREMS))
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--work-limit", type=int, default=5_000_000)
    sp.set_defaults(func=cmd_hypothesis)

    sp = with_report(sub.add_parser("solve", help="find a spanning tree with few stem branch vertices"))
    sp.add_argument("file")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--method", choices=("exact", "proof"), default="proof")
    sp.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    sp.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    sp.add_argument("--max-iterations", type=int, default=DEFAULT_MAX_ITERATIONS)
    sp.add_argument("--figure", help="write a PNG/PDF drawing of the tree")
    sp.set_defaults(func=cmd_solve)

    sp = with_report(sub.add_parser("verify-cert", help="re-check a certificate against a graph"))
    sp.add_argument("graph")
    sp.add_argument("cert", help="JSON certificate, or a solve report containing one")
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=cmd_verify_cert)

    gen = sub.add_parser("gen", help="generate graphs")
    gsub = gen.add_subparsers(dest="family", required=True)
    sp = gsub.add_parser("sharp", help="the degree-sum sharpness family G(m, k)")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("-o", "--output")
    sp.add_argument("--verify", action="store_true", help="run the sharpness checks (report on stderr)")
    sp.add_argument("--max-exact-order", type=int, default=16)
    sp.add_argument("--report")
    sp.set_defaults(func=cmd_gen_sharp)

    sp = sub.add_parser("corpus", help="random connected claw-free graphs")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--count", type=int, required=True)
    sp.add_argument("--order-min", type=int, required=True)
    sp.add_argument("--order-max", type=int, required=True)
    sp.add_argument("--family", choices=("er", "tree"), default="er")
    sp.add_argument("-o", "--output", help="directory for graph_NNN.el files")
    sp.set_defaults(func=cmd_corpus)

    sp = with_report(sub.add_parser("validate", help="corpus -> hypothesis -> both solvers -> cross-check"))
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--count", type=int, required=True)
    sp.add_argument("--k", type=int, nargs="+", required=True)
    sp.add_argument("--order-min", type=int, default=3)
    sp.add_argument("--order-max", type=int, default=12)
    sp.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    sp.add_argument("--family", choices=("er", "tree"), default="er")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--figure", help="write a summary figure")
    sp.set_defaults(func=cmd_validate)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    args._t0 = time.perf_counter()
    try:
        return args.func(args)
    except (GraphInputError, WorkLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
