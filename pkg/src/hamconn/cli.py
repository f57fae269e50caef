"""Command-line harness.

Commands:
  verify          filter an enumerated or ingested corpus through a theorem's
                  hypotheses and check the conclusion on the survivors
  props           print the property table of one graph
  pipeline        build a hamiltonian path between two vertices via the
                  core reduction and print the stage artifacts
  counterexample  emit and verify the sharpness family built from the
                  Wagner graph
  corpus          generate seeded random corpora (sparse6, one per line)

Exit codes: 0 success / zero violations, 1 violations found, 2 input error,
3 internal validation failure.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Optional

from .constructions import petersen, wagner
from .corpus import (
    random_3_edge_connected_multigraph,
    random_essentially_3ec_multigraph,
    random_multigraph,
    read_corpus_file,
)
from .encoding import (
    EncodingError,
    encode_edgelist,
    encode_graph6,
    encode_sparse6,
)
from .errors import GraphError, LiftFailedError
from .harness import (
    HYPOTHESES,
    counterexample_report,
    property_table,
    verify_theorem_enumerated,
    verify_theorem_graphs,
    write_witnesses,
)
from .invariants import dominating_set
from .multigraph import Multigraph, SimpleGraph
from .reduction import run_pipeline

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

NAMED = {"petersen": petersen, "wagner": wagner}


def _load_graphs(args) -> list[Multigraph]:
    if getattr(args, "named", None):
        return [NAMED[args.named]()]
    if not args.input:
        raise EncodingError("no input: pass --input FILE or --named NAME")
    return [record.graph for record in read_corpus_file(args.input, args.format)]


def _as_simple(g: Multigraph) -> SimpleGraph:
    if isinstance(g, SimpleGraph):
        return g
    return SimpleGraph(g.n, g.endpoints)


def cmd_verify(args) -> int:
    if args.input:
        graphs = [_as_simple(g) for g in _load_graphs(args)]
        report = verify_theorem_graphs(graphs, args.hypothesis, workers=args.workers)
    else:
        report = verify_theorem_enumerated(args.n, args.hypothesis, workers=args.workers)
    print(report.format())
    if args.emit_witnesses:
        write_witnesses(report, args.emit_witnesses)
    return EXIT_OK if report.passed else EXIT_VIOLATIONS


def cmd_props(args) -> int:
    for g in _load_graphs(args):
        for name, value in property_table(g):
            print(f"{name:28s} {value}")
        print()
    return EXIT_OK


def cmd_pipeline(args) -> int:
    graphs = _load_graphs(args)
    g = _as_simple(graphs[0])
    d = dominating_set(g, 3)
    if d is None:
        print("input graph has domination number above 3", file=sys.stderr)
        return EXIT_INPUT
    run = run_pipeline(g, args.u, args.v, d)
    print(f"dominating set: {sorted(d.vertices)}")
    if run.context is not None:
        ctx = run.context
        print(f"projected terminal edges: e0_1={ctx.e0_1} e0_2={ctx.e0_2}")
        print(f"|z| = {len(ctx.z)}  e_n = {ctx.e_n}")
    else:
        print("degenerate core: direct two-edge trail used")
    print(f"trail length in source: {len(run.idt.trail.edges)}")
    print("hamiltonian path:", " ".join(str(v) for v in run.path.vertices))
    return EXIT_OK


def cmd_counterexample(args) -> int:
    report = counterexample_report(args.pendants)
    print(report.format())
    print()
    print("graph6(g):", encode_graph6(report.graph))
    print("sparse6(h):", encode_sparse6(report.source))
    if args.emit:
        with open(args.emit, "w") as fh:
            fh.write("# sharpness counterexample: line graph g, then source h\n")
            fh.write(encode_edgelist(report.graph))
            fh.write(encode_edgelist(report.source))
    return EXIT_OK if report.demonstrates_sharpness else EXIT_VIOLATIONS


def cmd_corpus(args) -> int:
    rng = random.Random(args.seed)
    make = {
        "multi": lambda: random_multigraph(rng, max_edges=args.max_edges),
        "e3ec": lambda: random_essentially_3ec_multigraph(rng, max_edges=args.max_edges),
        "3ec": lambda: random_3_edge_connected_multigraph(rng, max_edges=args.max_edges),
    }[args.kind]
    for _ in range(args.count):
        print(encode_sparse6(make()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamconn",
        description="hamiltonian connectivity of claw-free graphs: verification harness",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input_options(p, named=True):
        p.add_argument("--input", help="input file")
        p.add_argument("--format", choices=("g6", "s6", "el"), default="g6")
        if named:
            p.add_argument("--named", choices=sorted(NAMED), help="use a built-in graph")

    p = sub.add_parser("verify", help="verify a theorem over a corpus")
    p.add_argument("--hypothesis", choices=HYPOTHESES, default="thm1")
    p.add_argument("--n", type=int, default=6, help="enumerate all labeled graphs up to this order")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--emit-witnesses", help="write violating graphs to this file")
    add_input_options(p, named=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("props", help="print a property table")
    add_input_options(p)
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("pipeline", help="hamiltonian path via the core reduction")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    add_input_options(p)
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("counterexample", help="sharpness family from the Wagner graph")
    p.add_argument("pendants", type=int, nargs="?", default=1)
    p.add_argument("--emit", help="write edge lists to this file")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("corpus", help="generate random corpora")
    p.add_argument("--kind", choices=("multi", "e3ec", "3ec"), default="multi")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-edges", type=int, default=12)
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EncodingError, FileNotFoundError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LiftFailedError as exc:
        print(f"internal validation failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
