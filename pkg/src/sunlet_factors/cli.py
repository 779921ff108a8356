"""Command-line surface.

Subcommands:

  build      construct one of the three coverings and emit JSON, DOT, or SVG
  verify     check a covering document and print the report (exit 0 only if
             every applicable flag holds)
  oracle     run the brute-force cross-checks (fsm-count, decompose,
             expand-h, staircases)

Everything is deterministic; there is no randomness and no seed anywhere.
Exit codes: 0 success/verified, 1 usage error, 2 verification failure,
3 parameter out of range.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .constructions import COVERING_BUILDERS
from .graph_core import make_sunlet
from .oracle import (
    check_staircase_tiling,
    enumerate_fsm_orientations,
    hamiltonian_row_walk,
    sunlet_edge_partitions,
    walked_staircase,
)
from .render import to_dot, to_svg
from .serialize import DocumentError, from_json, partition_to_dict, report_json, to_json
from .torus import make_torus
from .verify import full_report

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_RANGE = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad flags; the CLI contract wants 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="sunlet-factors", description="Sunlet factorizations of toroidal grids.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct a covering and emit it")
    p_build.add_argument("--theorem", type=int, choices=(1, 2, 3), required=True, help="which covering to build")
    p_build.add_argument("--n", type=int, required=True, help="construction parameter")
    p_build.add_argument("--format", choices=("json", "dot", "svg"), default="json", help="output format")
    p_build.add_argument("--layout", choices=("flat", "annular"), default="flat", help="SVG layout")
    p_build.add_argument("--report", action="store_true", help="embed the verification report (JSON only)")
    p_build.add_argument("--out", default="-", help="output file, or - for stdout")

    p_verify = sub.add_parser("verify", help="verify a covering document")
    p_verify.add_argument("--in", dest="infile", required=True, help="document file, or - for stdin")
    p_verify.add_argument("--full", action="store_true", help="report every counterexample, not just the first few")

    p_oracle = sub.add_parser("oracle", help="brute-force cross-checks")
    o_sub = p_oracle.add_subparsers(dest="oracle_command", required=True)

    o_fsm = o_sub.add_parser("fsm-count", help="count out-degree-1 orientations of a sunlet")
    o_fsm.add_argument("--p", type=int, required=True, help="sunlet cycle length")

    o_dec = o_sub.add_parser("decompose", help="enumerate sunlet edge partitions of a grid")
    o_dec.add_argument("--p", type=int, required=True, help="grid x-cycle length")
    o_dec.add_argument("--q", type=int, required=True, help="grid y-cycle length")
    o_dec.add_argument("--sunlet", type=int, required=True, help="sunlet cycle length of the classes")
    o_dec.add_argument("--limit", type=int, default=None, help="stop after this many solutions")
    o_dec.add_argument("--json", action="store_true", help="print solutions as JSON")

    o_exp = o_sub.add_parser("expand-h", help="walk the spanning cycle of the n x n grid")
    o_exp.add_argument("--n", type=int, required=True)

    o_st = o_sub.add_parser("staircases", help="walk the staircases of the 2n x 2n grid and check the tiling")
    o_st.add_argument("--n", type=int, required=True)

    return parser


def _write_output(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_build(args: argparse.Namespace) -> int:
    try:
        covering = COVERING_BUILDERS[args.theorem](args.n)
    except ValueError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    if args.format == "json":
        text = to_json(covering, include_report=args.report)
    elif args.format == "dot":
        text = to_dot(covering)
    else:
        text = to_svg(covering, layout=args.layout)
    _write_output(text, args.out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.infile == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.infile, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"cannot read {args.infile}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        covering = from_json(text)
    except DocumentError as exc:
        print(f"invalid document: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = full_report(covering, limit=None if args.full else 10)
    sys.stdout.write(report_json(report))
    return EXIT_OK if report.ok else EXIT_VERIFY


def _cmd_oracle(args: argparse.Namespace) -> int:
    try:
        if args.oracle_command == "fsm-count":
            count, _ = enumerate_fsm_orientations(make_sunlet(args.p).graph)
            print(count)
            return EXIT_OK
        if args.oracle_command == "decompose":
            grid = make_torus(args.p, args.q)
            solutions = sunlet_edge_partitions(grid, args.sunlet, limit=args.limit)
            if args.json:
                import json as _json

                print(_json.dumps([partition_to_dict(s.classes) for s in solutions], sort_keys=True))
            print(f"solutions: {len(solutions)}")
            return EXIT_OK
        if args.oracle_command == "expand-h":
            seq = hamiltonian_row_walk(args.n)
            print(" ".join(f"({x},{y})" for x, y in seq))
            return EXIT_OK
        if args.oracle_command == "staircases":
            if args.n < 2:
                raise ValueError(f"staircases need n >= 2, got {args.n}")
            for i in range(args.n):
                seq = walked_staircase(i, args.n)
                print(f"staircase {i}: " + " ".join(f"({x},{y})" for x, y in seq))
            ok = check_staircase_tiling(args.n)
            print(f"tiling: {'ok' if ok else 'FAIL'}")
            return EXIT_OK if ok else EXIT_VERIFY
    except ValueError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    raise AssertionError(f"unhandled oracle command {args.oracle_command!r}")


def cli_main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help and usage errors
        return int(exc.code or 0)
    if args.command == "build":
        return _cmd_build(args)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "oracle":
        return _cmd_oracle(args)
    raise AssertionError(f"unhandled command {args.command!r}")


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
