"""Command-line surface.

Thin adapters only: every subcommand parses arguments, calls the library,
and prints. Exit codes: 0 success or property holds, 1 a checked property
fails or an asserting command gets a negative answer, 2 usage or input
errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from . import criticality, enumeration, formats
from .digraph import (
    contract,
    degree,
    edge_count,
    in_set,
    is_strongly_connected,
    out_set,
    vertex_mask,
)
from .errors import CritigraphError

JOBS_ENV_VAR = "CRITIGRAPH_JOBS"


def _read_graph(path: str):
    if path == "-":
        return formats.parse_edge_list(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return formats.parse_edge_list(fh.read())


def _default_jobs(value: Optional[int]) -> int:
    if value is not None:
        return value
    env = os.environ.get(JOBS_ENV_VAR, "").strip()
    if not env:
        return 1
    try:
        jobs = int(env)
    except ValueError:
        raise CritigraphError(f"{JOBS_ENV_VAR}={env!r} is not an integer") from None
    if jobs < 1:
        raise CritigraphError(f"{JOBS_ENV_VAR} must be >= 1, got {jobs}")
    return jobs


def _serialize(d, fmt: str) -> str:
    if fmt == "edgelist":
        return formats.serialize_edge_list(d)
    if fmt == "dot":
        return formats.serialize_dot(d)
    return formats.serialize_matrix(d)


def cmd_construct(args) -> int:
    d = criticality.extremal_digraph(args.n)
    sys.stdout.write(_serialize(d, args.format))
    return 0


def cmd_check(args) -> int:
    d = _read_graph(args.graph)
    failed = False
    print(f"order: {d.order}")
    print(f"edges: {edge_count(d)}")
    sc = is_strongly_connected(d)
    print(f"strongly_connected: {str(sc).lower()}")
    if args.critical:
        crit = criticality.is_vertex_critical(d)
        print(f"vertex_critical: {str(crit).lower()}")
        if not crit:
            failed = True
            if sc:
                print(f"non_critical_witness: {criticality.non_critical_witness(d)}")
    if args.sc and not sc:
        failed = True
    if args.degrees:
        print("degrees:")
        for v in range(d.order):
            o = out_set(d, v).bit_count()
            i = in_set(d, v).bit_count()
            print(f"  {v}: out {o} in {i} degree {o + i}")
    return 1 if failed else 0


def cmd_removable(args) -> int:
    d = _read_graph(args.graph)
    z = criticality.find_removable_vertex(d, args.vertex)
    print(z)
    return 0


def cmd_cycle(args) -> int:
    d = _read_graph(args.graph)
    cyc = criticality.find_chordless_cycle(d)
    print(" ".join(str(v) for v in cyc))
    return 0


def cmd_contract(args) -> int:
    d = _read_graph(args.graph)
    try:
        ids = [int(part) for part in args.set.split(",") if part != ""]
    except ValueError:
        raise CritigraphError(f"--set expects comma-separated ids, got {args.set!r}")
    res = contract(d, vertex_mask(ids))
    sys.stdout.write(f"# merged_vertex {res.merged_vertex}\n")
    for old, new in enumerate(res.old_to_new):
        sys.stdout.write(f"# map {old} {new}\n")
    sys.stdout.write(formats.serialize_edge_list(res.graph))
    return 0


def cmd_search(args) -> int:
    report = enumeration.max_critical_edges(
        args.n,
        jobs=_default_jobs(args.jobs),
        chunk_bits=args.chunk_bits,
        checkpoint=args.checkpoint,
        long_run=args.long_run,
    )
    sys.stdout.write(
        formats.render_search_report(report, include_timing=not args.no_timing)
    )
    return 0


def cmd_verify(args) -> int:
    prop = args.property
    jobs = _default_jobs(args.jobs)
    if prop == "theorem":
        report = enumeration.verify_theorem_exhaustive(
            args.n, jobs=jobs, long_run=args.long_run
        )
    elif prop == "lemma1":
        report = enumeration.verify_lemma1_exhaustive(args.n)
    elif prop == "lemma2":
        report = enumeration.verify_lemma2_exhaustive(args.n)
    elif prop == "assertion1":
        report = enumeration.verify_assertions_exhaustive(args.n)[0]
    elif prop == "assertion2":
        report = enumeration.verify_assertions_exhaustive(args.n)[1]
    else:
        report = enumeration.verify_schwarz_exhaustive(args.n)
    sys.stdout.write(
        formats.render_verification_report(
            report, include_timing=not args.no_timing
        )
    )
    return 0 if not report.violations else 1


def cmd_convert(args) -> int:
    d = _read_graph(args.graph)
    sys.stdout.write(_serialize(d, args.to))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critigraph",
        description=(
            "Vertex-critical strongly connected digraphs: construction, "
            "checking, and exhaustive desk-scale searches."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit the extremal digraph for n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--format", choices=("edgelist", "dot", "matrix"), default="edgelist"
    )
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="inspect a graph file")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    p.add_argument("--sc", action="store_true", help="assert strong connectivity")
    p.add_argument(
        "--critical", action="store_true", help="assert vertex-criticality"
    )
    p.add_argument("--degrees", action="store_true", help="print the degree table")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser(
        "removable", help="find z != v whose deletion keeps the graph connected"
    )
    p.add_argument("graph")
    p.add_argument("--vertex", type=int, required=True)
    p.set_defaults(func=cmd_removable)

    p = sub.add_parser("cycle", help="print a shortest (hence chordless) cycle")
    p.add_argument("graph")
    p.set_defaults(func=cmd_cycle)

    p = sub.add_parser("contract", help="contract a vertex set")
    p.add_argument("graph")
    p.add_argument("--set", required=True, help="comma-separated vertex ids")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("search", help="exhaustive maximum-edge-count search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--chunk-bits", type=int, default=None, dest="chunk_bits")
    p.add_argument("--checkpoint", default=None)
    p.add_argument("--long-run", action="store_true", dest="long_run")
    p.add_argument("--no-timing", action="store_true", dest="no_timing")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run an exhaustive verification sweep")
    p.add_argument(
        "--property",
        required=True,
        choices=(
            "theorem", "lemma1", "lemma2", "assertion1", "assertion2", "schwarz"
        ),
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--long-run", action="store_true", dest="long_run")
    p.add_argument("--no-timing", action="store_true", dest="no_timing")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", help="re-serialize a graph file")
    p.add_argument("graph")
    p.add_argument("--to", choices=("edgelist", "dot", "matrix"), required=True)
    p.set_defaults(func=cmd_convert)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; keep its code
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CritigraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
