"""Command-line front end with deterministic JSON output.

Subcommands: ``build`` (face counts), ``verify`` (polytope axioms),
``analyze`` (symmetry and facet census), ``export`` (Cayley graph or
skeleton as DOT/JSON).  Exit codes: 0 ok, 1 parse error, 2 disconnected
graph, 3 capacity exceeded, 4 axiom failure, 5 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import classify, polytope, symmetry
from .cayley import build_cayley, export_dot
from .errors import (
    CapacityError,
    DisconnectedGraphError,
    GraphicahedronError,
    InternalInconsistencyError,
    ParseError,
)
from .graphs import SimpleGraph, parse_graph, preset_graph

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DISCONNECTED = 2
EXIT_CAPACITY = 3
EXIT_AXIOM = 4
EXIT_INCONSISTENT = 5

BUILD_MAX_PERMS = 5040  # p <= 7
VERIFY_MAX_PERMS = 720  # p <= 6


def _parse_preset(text: str) -> SimpleGraph:
    name, _, arg = text.partition(":")
    try:
        n = int(arg) if arg else None
    except ValueError:
        raise ParseError(f"bad preset size in {text!r}") from None
    try:
        return preset_graph(name, n)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _parse_inline_edges(text: str) -> SimpleGraph:
    lines = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError(f"empty edge in {text!r}")
        i, _, j = chunk.partition("-")
        lines.append(f"{i.strip()} {j.strip()}")
    return parse_graph("\n".join(lines))


def _graph_from_args(args: argparse.Namespace) -> SimpleGraph:
    if args.file:
        with open(args.file, encoding="ascii") as handle:
            return parse_graph(handle.read())
    if args.edges:
        return _parse_inline_edges(args.edges)
    return _parse_preset(args.preset)


def _graph_echo(graph: SimpleGraph) -> dict:
    return {
        "p": graph.p,
        "q": graph.q,
        "edges": [[i + 1, j + 1] for i, j in graph.edges],
    }


def _report_head(graph: SimpleGraph, hedron) -> dict:
    # f_vector covers proper ranks 0..q-1 plus the greatest face at rank q;
    # the least face at rank -1 is implicit and never stored
    return {
        "graph": _graph_echo(graph),
        "rank": graph.q,
        "improper_ranks": [-1, graph.q],
        "f_vector": list(hedron.f_vector()),
        "flag_count": polytope.flag_count(hedron),
    }


def _print_report(report: dict, args: argparse.Namespace, timings: dict) -> None:
    if getattr(args, "timings", False):
        report["timings"] = {k: round(v, 6) for k, v in timings.items()}
    sys.stdout.write(json.dumps(report, indent=2) + "\n")


def cmd_build(args: argparse.Namespace) -> int:
    timings: dict[str, float] = {}
    graph = _graph_from_args(args)
    t0 = time.perf_counter()
    hedron = polytope.build(graph, max_perms=args.max_perms)
    timings["build"] = time.perf_counter() - t0
    report = _report_head(graph, hedron)
    _print_report(report, args, timings)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    timings: dict[str, float] = {}
    graph = _graph_from_args(args)
    hedron = polytope.build(graph, max_perms=args.max_perms)

    drop_color = None
    if args.corrupt == "drop-face" and graph.q >= 1:
        hedron = polytope.drop_face(hedron, hedron.faces(graph.q - 1)[0])
    elif args.corrupt == "drop-adjacency" and graph.q >= 2:
        drop_color = 0

    t0 = time.perf_counter()
    diamond = polytope.verify_diamond(hedron)
    timings["diamond"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    connected = polytope.verify_strong_flag_connectedness(hedron, drop_color=drop_color)
    timings["strong_flag_connected"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    simple = all(
        polytope.vertex_figure_is_simplex(hedron, v) for v in hedron.faces(0)
    )
    timings["simple"] = time.perf_counter() - t0

    axioms: dict = {
        "diamond": "pass" if diamond.passed else "fail",
        "strong_flag_connected": "pass" if connected.passed else "fail",
        "simple": "pass" if simple else "fail",
    }
    witnesses = [r.failure for r in (diamond, connected) if r.failure]
    if witnesses:
        axioms["witness"] = witnesses[0]
    report = _report_head(graph, hedron)
    report["axioms"] = axioms
    _print_report(report, args, timings)
    return EXIT_OK if diamond.passed and connected.passed and simple else EXIT_AXIOM


def cmd_analyze(args: argparse.Namespace) -> int:
    timings: dict[str, float] = {}
    graph = _graph_from_args(args)
    hedron = polytope.build(graph, max_perms=args.max_perms)

    t0 = time.perf_counter()
    summary = symmetry.aut_summary(hedron, max_flags=args.max_flags)
    timings["symmetry"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    if graph.q >= 1:
        census = classify.facet_census(hedron, threads=args.threads)
        census_json = [
            {"type": tag.label, "count": count, "sample_facet_id": sample}
            for tag, count, sample in census.entries
        ]
    else:
        census_json = []
    timings["census"] = time.perf_counter() - t0

    report = _report_head(graph, hedron)
    report.update({
        "symmetry": {
            "constructed_order": summary.constructed_order,
            "flag_aut_order": summary.flag_aut_order,
            "sp_order": summary.sp_order,
            "graph_aut_order": summary.graph_aut_order,
            "regular": summary.regular,
            "vertex_transitive": summary.vertex_transitive,
            "semidirect_applies": summary.semidirect_applies,
        },
        "facet_census": census_json,
    })
    _print_report(report, args, timings)
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    graph = _graph_from_args(args)
    what, _, karg = args.what.partition(":")
    if what == "cayley":
        cayley = build_cayley(graph, max_perms=args.max_perms)
        if args.format == "dot":
            sys.stdout.write(export_dot(cayley))
        else:
            payload = {
                "nodes": [",".join(str(v + 1) for v in a) for a in cayley.perms],
                "edges": [[u, v, c + 1] for u, v, c in sorted(cayley.edges())],
            }
            sys.stdout.write(json.dumps(payload, indent=2) + "\n")
        return EXIT_OK
    if what == "skeleton":
        try:
            k = int(karg)
        except ValueError:
            raise ParseError(f"bad skeleton rank in {args.what!r}") from None
        hedron = polytope.build(graph, max_perms=args.max_perms)
        skel = polytope.skeleton(hedron, k)
        if k >= 1:
            edges = skel.vertex_edges()
        else:
            edges = ()
        if args.format == "dot":
            from .cayley import PALETTE
            from .perms import lex_rank

            lines = ["graph skeleton {", "  node [shape=circle];"]
            for f in skel.faces_by_rank[0]:
                label = ",".join(str(v + 1) for v in f.rep)
                lines.append(f'  v{lex_rank(f.rep)} [label="{label}"];')
            for u, v, c in edges:
                lines.append(
                    f'  v{u} -- v{v} [color="{PALETTE[c % len(PALETTE)]}", generator={c + 1}];'
                )
            lines.append("}")
            sys.stdout.write("\n".join(lines) + "\n")
        else:
            payload = {
                "faces_per_rank": [len(level) for level in skel.faces_by_rank],
                "edges": [[u, v, c + 1] for u, v, c in edges],
            }
            sys.stdout.write(json.dumps(payload, indent=2) + "\n")
        return EXIT_OK
    raise ParseError(f"unknown export target {args.what!r}")


def _add_graph_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--file", help="graph file in edge-list format")
    source.add_argument("--edges", help='inline edge list, e.g. "1-2,2-3"')
    source.add_argument("--preset", help="named graph: path:N, cycle:N, star:N, paw, fork")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphicahedron",
        description="Build, verify and analyze the graphicahedron of a connected graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="face counts and flag count")
    _add_graph_source(p_build)
    p_build.add_argument("--max-perms", type=int, default=BUILD_MAX_PERMS)
    p_build.add_argument("--timings", action="store_true")
    p_build.set_defaults(func=cmd_build)

    p_verify = sub.add_parser("verify", help="check the abstract-polytope axioms")
    _add_graph_source(p_verify)
    p_verify.add_argument("--max-perms", type=int, default=VERIFY_MAX_PERMS)
    p_verify.add_argument("--timings", action="store_true")
    p_verify.add_argument(
        "--corrupt",
        choices=["drop-face", "drop-adjacency"],
        help=argparse.SUPPRESS,  # test-only defect injection
    )
    p_verify.set_defaults(func=cmd_verify)

    p_analyze = sub.add_parser("analyze", help="symmetry group and facet census")
    _add_graph_source(p_analyze)
    p_analyze.add_argument("--max-perms", type=int, default=VERIFY_MAX_PERMS)
    p_analyze.add_argument("--max-flags", type=int, default=symmetry.DEFAULT_MAX_FLAGS)
    p_analyze.add_argument("--threads", type=int, default=None)
    p_analyze.add_argument("--timings", action="store_true")
    p_analyze.set_defaults(func=cmd_analyze)

    p_export = sub.add_parser("export", help="Cayley graph or skeleton as DOT/JSON")
    _add_graph_source(p_export)
    p_export.add_argument("--what", required=True, help="cayley or skeleton:K")
    p_export.add_argument("--format", choices=["dot", "json"], default="dot")
    p_export.add_argument("--max-perms", type=int, default=BUILD_MAX_PERMS)
    p_export.set_defaults(func=cmd_export)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_PARSE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except InternalInconsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except GraphicahedronError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
