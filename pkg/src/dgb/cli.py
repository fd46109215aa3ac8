"""Command-line driver: ``dgb compute --input FILE [...]``."""

from __future__ import annotations

import argparse
import logging
import sys
import warnings

from .division import JANET, JANET_LIKE
from .engine import DEFAULT_MAX_ITER, ResourceCapExceeded, ZeroIdealError, complete
from .io import ParseError, format_system, parse_system
from .tools import extract_reduced_gb, verify

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_CAP = 3

log = logging.getLogger("dgb")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dgb",
        description="Janet-like Groebner bases of linear difference ideals.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="complete a system and print its basis")
    c.add_argument("--input", required=True, help="system file ('-' for stdin)")
    c.add_argument(
        "--basis",
        choices=["jlb", "janet", "gb"],
        default="jlb",
        help="Janet-like basis, Janet basis, or reduced Groebner basis (default: jlb)",
    )
    c.add_argument("--verify", action="store_true", help="append the verification report")
    c.add_argument("--stats", action="store_true", help="append cardinality and counters")
    c.add_argument("--no-tree", action="store_true", help="find reductors by linear scan")
    c.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER, metavar="N")
    c.add_argument("--output", help="write here instead of stdout")
    c.add_argument("--self-test", action="store_true", help=argparse.SUPPRESS)
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def run_compute(args) -> int:
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            system = parse_system(_read(args.input))
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE

    division = JANET if args.basis == "janet" else JANET_LIKE
    try:
        result = complete(
            system.polys,
            system.ranking,
            division,
            use_tree=not args.no_tree,
            max_iter=args.max_iter,
        )
    except ZeroIdealError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceCapExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP

    polys = extract_reduced_gb(result) if args.basis == "gb" else result.basis
    out = format_system(system.ctx, system.ranking, polys)
    code = EXIT_OK
    if args.stats:
        out += f"# Card = {len(polys)}\n"
        for name, value in result.stats.as_dict().items():
            out += f"# {name} = {value}\n"
    if args.verify:
        report = verify(result, system.polys, use_tree=not args.no_tree)
        out += "".join(f"# {line}\n" for line in report.lines())
        if not report.ok:
            code = EXIT_VERIFY
    if args.self_test:
        from . import oracle

        agrees = extract_reduced_gb(result) == oracle.reduced_gb(system.polys, system.ranking)
        out += f"# oracle_agrees = {agrees}\n"
        if not agrees:
            code = EXIT_VERIFY

    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    if args.command == "compute":
        return run_compute(args)
    return EXIT_PARSE  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
