"""
Command-line front end.

Exit status: 0 when the predicate holds or the command succeeded, 1 when
the predicate is false, 2 on usage or parse errors. With --stdin or --file
every input line gets exactly one output line, in input order.
"""

import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple

from chain_lab import chain_decompose, chain_search, enumerate_splits, free_splits
from connectivity import connectivity_report, is_k_connected, is_planar
from constructors import catalog, construct, named_graph
from cubic_graphs import generate_cyclically_4conn_cubic
from errors import Graph6ParseError, GraphError
from graph_core import Graph
from graph_io import emit_graph6, iter_graph6_lines, parse_graph6, to_dot
from hamiltonicity import find_hamiltonian_cycle
from minor_engine import find_minor_model, has_topological_minor
from models import GraphFamily
from theorem import classify, verify_theorem
from utils.config import load_settings
from utils.helper import save_text_to_file, setup_logging

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2

_PATTERNS = {
    "w6": lambda: construct(GraphFamily.WHEEL, 6),
    "w5": lambda: construct(GraphFamily.WHEEL, 5),
    "k5": lambda: construct(GraphFamily.COMPLETE, 5),
    "k4": lambda: construct(GraphFamily.COMPLETE, 4),
    "k33": lambda: construct(GraphFamily.COMPLETE_BIPARTITE, 3, 3),
}

_TARGETS = {
    "c25": lambda: construct(GraphFamily.SQUARE, 5),
    "c26": lambda: construct(GraphFamily.SQUARE, 6),
}

Outcome = Tuple[int, List[str]]


def _render(g: Graph, fmt: str, name: str = "G") -> str:
    if fmt == "dot":
        return to_dot(g, name)
    if fmt == "text":
        return f"{name}\tn={g.n}\tm={g.m}\t{emit_graph6(g)}"
    return emit_graph6(g)


def _classify(g: Graph, args) -> Outcome:
    result = classify(g, workers=args.workers if not args.batch else 1)
    return (EXIT_FALSE if result.violates_theorem else EXIT_TRUE), [result.describe()]


def _minor(g: Graph, args) -> Outcome:
    h = _PATTERNS[args.pattern]()
    if args.topological:
        found = has_topological_minor(g, h)
        return (EXIT_TRUE if found else EXIT_FALSE), ["yes" if found else "no"]
    model = find_minor_model(g, h, workers=args.workers if not args.batch else 1)
    if model is None:
        return EXIT_FALSE, ["none"]
    return EXIT_TRUE, model.lines()


def _connectivity(g: Graph, args) -> Outcome:
    kappa, certificate = connectivity_report(g)
    lines = [f"connectivity: {kappa}"]
    if certificate is not None:
        lines.append(certificate.describe())
    if args.k is None:
        return EXIT_TRUE, lines
    holds = is_k_connected(g, args.k)
    lines.append(f"{args.k}-connected: {'yes' if holds else 'no'}")
    return (EXIT_TRUE if holds else EXIT_FALSE), lines


def _hamilton(g: Graph, args) -> Outcome:
    cycle = find_hamiltonian_cycle(g)
    if cycle is None:
        return EXIT_FALSE, ["none"]
    return EXIT_TRUE, [" ".join(map(str, cycle.vertices))]


def _splits(g: Graph, args) -> Outcome:
    if args.w6_free:
        found = free_splits(g, planar=args.planar)
    else:
        found = enumerate_splits(g, require_4conn=args.four_conn)
        if args.planar is not None:
            found = [h for h in found if is_planar(h) == args.planar]
    return EXIT_TRUE, [_render(h, args.format, f"split{i}") for i, h in enumerate(found)]


def _chain(g: Graph, args) -> Outcome:
    if args.target is None:
        chain = chain_decompose(g)
    else:
        chain = chain_search(g, _TARGETS[args.target]())
        if chain is None:
            return EXIT_FALSE, ["none"]
    lines = [emit_graph6(chain.graphs[0])]
    lines.extend(f"contract ({u},{v}) -> {emit_graph6(h)}" for (u, v), h in zip(chain.contracted, chain.graphs[1:]))
    return EXIT_TRUE, lines


_GRAPH_COMMANDS = {
    "classify": _classify,
    "minor": _minor,
    "connectivity": _connectivity,
    "hamilton": _hamilton,
    "splits": _splits,
    "chain": _chain,
}


def _run_one(task) -> Outcome:
    command, g, args = task
    try:
        return _GRAPH_COMMANDS[command](g, args)
    except GraphError as e:
        return EXIT_USAGE, [f"error: {e}"]


def _run_batch(args, stream) -> int:
    items = list(iter_graph6_lines(stream))
    tasks = [(args.command, item, args) for _, item in items if isinstance(item, Graph)]
    if args.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            outcomes = iter(list(pool.map(_run_one, tasks)))
    else:
        outcomes = iter([_run_one(task) for task in tasks])

    status = EXIT_TRUE
    for _, item in items:
        if isinstance(item, Graph6ParseError):
            print(str(item))
            status = EXIT_USAGE
            continue
        code, lines = next(outcomes)
        print("; ".join(lines))
        if code == EXIT_USAGE or status == EXIT_USAGE:
            status = EXIT_USAGE
        elif code == EXIT_FALSE:
            status = EXIT_FALSE
    return status


def _read_single(args) -> Graph:
    if args.named is not None:
        return named_graph(args.named)
    return parse_graph6(args.graph6)


def _run_graph_command(args) -> int:
    if args.stdin:
        return _run_batch(args, sys.stdin)
    if args.file is not None:
        try:
            with open(args.file, "r") as f:
                return _run_batch(args, f)
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE
    try:
        g = _read_single(args)
    except GraphError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    code, lines = _run_one((args.command, g, args))
    stream = sys.stderr if code == EXIT_USAGE else sys.stdout
    for line in lines:
        print(line, file=stream)
    return code


def _run_catalog(args) -> int:
    for entry in catalog():
        if args.format == "graph6":
            print(f"{entry.name}\t{emit_graph6(entry.graph)}")
        else:
            print(_render(entry.graph, args.format, entry.name))
    return EXIT_TRUE


def _run_generate_cubic(args) -> int:
    for g in generate_cyclically_4conn_cubic(args.max_n):
        print(_render(g, args.format, f"cubic{g.n}"))
    return EXIT_TRUE


def _run_verify_theorem(args) -> int:
    report = verify_theorem(args.max_n, workers=args.workers, cache_dir=args.cache_dir)
    text = report.to_text()
    print(text)
    if args.report:
        save_text_to_file(text, args.report)
    return EXIT_TRUE if report.ok else EXIT_FALSE


def _add_input_options(parser: argparse.ArgumentParser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("graph6", nargs="?", help="graph in graph6 format")
    source.add_argument("--file", "-f", help="file with one graph6 string per line (batch mode)")
    source.add_argument("--named", "-n", help="constructor expression such as W:6, C2:7, K:3,3 or a catalog name")
    source.add_argument("--stdin", action="store_true", help="read one graph6 string per line from stdin (batch mode)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", "-w", type=int, default=None, help="worker processes (default from W6LAB_WORKERS or 1)")
    common.add_argument("--log-level", default=None, help="logging level (default from W6LAB_LOG_LEVEL or WARNING)")
    common.add_argument("--cache-dir", default=None, help="census cache directory (default from W6LAB_CACHE_DIR)")

    parser = argparse.ArgumentParser(prog="w6lab", description="4-connected W6-minor-free graph laboratory")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="4-connectivity, W6-minor-freeness and catalog name")
    _add_input_options(p)

    p = sub.add_parser("minor", parents=[common], help="minor containment with a branch-set certificate")
    _add_input_options(p)
    p.add_argument("--pattern", choices=sorted(_PATTERNS), default="w6", help="pattern graph (default: w6)")
    p.add_argument("--topological", action="store_true", help="test topological containment instead")

    p = sub.add_parser("connectivity", parents=[common], help="vertex connectivity and a minimum separator")
    _add_input_options(p)
    p.add_argument("--k", type=int, default=None, help="exit 0 only if the graph is k-connected")

    p = sub.add_parser("hamilton", parents=[common], help="find a Hamiltonian cycle")
    _add_input_options(p)

    p = sub.add_parser("splits", parents=[common], help="vertex splits up to isomorphism")
    _add_input_options(p)
    p.add_argument("--4conn", dest="four_conn", action="store_true", help="keep only 4-connected splits")
    p.add_argument("--w6-free", action="store_true", help="keep only 4-connected W6-minor-free splits")
    planarity = p.add_mutually_exclusive_group()
    planarity.add_argument("--planar", dest="planar", action="store_const", const=True, default=None,
                           help="keep planar splits only")
    planarity.add_argument("--nonplanar", dest="planar", action="store_const", const=False,
                           help="keep nonplanar splits only")
    p.add_argument("--format", choices=["graph6", "dot", "text"], default="graph6")

    p = sub.add_parser("chain", parents=[common], help="contraction chain to a square of a cycle or cubic line graph")
    _add_input_options(p)
    p.add_argument("--target", choices=sorted(_TARGETS), default=None, help="search for a chain ending at this graph")

    p = sub.add_parser("catalog", parents=[common], help="print the fourteen catalog graphs")
    p.add_argument("--format", choices=["graph6", "dot", "text"], default="graph6")

    p = sub.add_parser("generate-cubic", parents=[common], help="cyclically 4-connected cubic graphs")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--format", choices=["graph6", "dot", "text"], default="graph6")

    p = sub.add_parser("verify-theorem", parents=[common], help="compare the census with the catalog")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--report", default=None, help="also write the report to this file")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = load_settings(workers=args.workers, log_level=args.log_level, cache_dir=args.cache_dir)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    setup_logging(settings.log_level)
    args.workers = max(settings.workers, 1)
    args.cache_dir = settings.cache_dir
    args.batch = bool(getattr(args, "stdin", False) or getattr(args, "file", None))
    logging.debug(f"command {args.command} with {settings}")

    if args.command in _GRAPH_COMMANDS:
        return _run_graph_command(args)
    if args.command == "catalog":
        return _run_catalog(args)
    if args.command == "generate-cubic":
        return _run_generate_cubic(args)
    return _run_verify_theorem(args)


if __name__ == "__main__":
    sys.exit(main())
