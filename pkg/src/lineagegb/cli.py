"""Command-line driver: parse an ideal file, run the threaded algorithm,
post-process and print the lineage table."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ParseError
from .formatting import emit_dot, format_lineage_table, render_poly
from .parsing import parse_input
from .threaded import minimalize_table, reduce_table, table_to_matrix, tgb


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gb",
        description="Compute a Groebner basis with lineage tracking.",
    )
    parser.add_argument("--threads", type=int, default=1, metavar="N",
                        help="number of worker threads (default 1)")
    parser.add_argument("--deterministic", action="store_true",
                        help="single worker, reproducible task order")
    parser.add_argument("--verbose", action="store_true",
                        help="trace task scheduling and insertions")
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--reduce", action="store_true",
                       help="post-process to the reduced Groebner basis")
    group.add_argument("--minimalize", action="store_true",
                       help="post-process to a minimal Groebner basis")
    parser.add_argument("--matrix", action="store_true",
                        help="print the basis one polynomial per line instead of the table")
    parser.add_argument("--dot", metavar="FILE",
                        help="write the lineage genealogy as DOT to FILE")
    parser.add_argument("input", nargs="?", metavar="INPUT_FILE",
                        help="ideal description file (default: standard input)")
    return parser


def run_cli(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exit_:  # argparse handles --help and bad flags
        return int(exit_.code or 0)

    if args.threads < 1:
        print("gb: --threads must be a positive integer", file=sys.stderr)
        return 2

    if args.input is None:
        text = sys.stdin.read()
    else:
        path = Path(args.input)
        if not path.is_file():
            print(f"gb: no such input file: {args.input}", file=sys.stderr)
            return 2
        text = path.read_text()

    try:
        spec = parse_input(text)
    except ParseError as err:
        print(f"gb: {err}", file=sys.stderr)
        return 1

    table, _status = tgb(
        list(spec.generators),
        threads=args.threads,
        deterministic=args.deterministic,
        verbose=args.verbose,
    )
    if args.reduce:
        table = reduce_table(table)
    elif args.minimalize:
        table = minimalize_table(table)

    if args.dot:
        Path(args.dot).write_text(emit_dot(table) + "\n")

    if args.matrix:
        for poly in table_to_matrix(table):
            print(render_poly(poly))
    else:
        print(format_lineage_table(table))
    return 0


def main() -> None:
    raise SystemExit(run_cli())
