"""``milnor`` command line: compute, higher, verify and catalog subcommands.

Exit codes: 0 success, 1 parse or validation error, 2 unknown catalog name,
3 trivial up to the requested degree, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import report, verify
from .catalog import UnknownLink, catalog_lookup, entries
from .diagram import PDError, build, parse_pd
from .engine import DEFAULT_MAX_DEGREE, first_nonvanishing
from .higher import higher_mu

EXIT_OK, EXIT_INVALID, EXIT_UNKNOWN, EXIT_TRIVIAL, EXIT_FAILED = 0, 1, 2, 3, 4


class _Usage(Exception):
    pass


def _load_link(args) -> tuple[str, object]:
    if args.name is not None:
        return args.name, build(catalog_lookup(args.name))
    path = Path(args.pd)
    try:
        text = path.read_text()
    except OSError as exc:
        raise PDError(f"cannot read {path}: {exc.strerror}") from None
    return path.stem, build(parse_pd(text))


def run_compute(args) -> int:
    link, d = _load_link(args)
    result = first_nonvanishing(d, args.max_degree)
    if args.format == "json":
        print(report.dumps(report.result_to_json(link, result, args.basis, max_degree=args.max_degree)))
    else:
        print(report.result_to_text(link, result, args.basis, max_degree=args.max_degree))
    return EXIT_TRIVIAL if result is None else EXIT_OK


def run_higher(args) -> int:
    link, d = _load_link(args)
    ledger = higher_mu(d, args.max_degree)
    if ledger is None:
        if args.format == "json":
            print(report.dumps({"link": link, "m": None, "trivial_up_to": args.max_degree, "higher": None}))
        else:
            print(f"{link}: all defects vanish up to degree {args.max_degree}; ledger is empty")
        return EXIT_TRIVIAL
    if args.format == "json":
        print(report.dumps({"link": link, "m": ledger.m, "higher": report.ledger_to_json(ledger)}))
    else:
        print(report.ledger_to_text(link, ledger))
    return EXIT_OK


def run_verify(args) -> int:
    checks = verify.run(args.suite)
    for c in checks:
        print(c.line())
    failed = sum(not c.ok for c in checks)
    print(f"{len(checks) - failed} passed, {failed} failed")
    return EXIT_FAILED if failed else EXIT_OK


def run_catalog(args) -> int:
    rows = entries(args.filter or "")
    if args.format == "json":
        print(json.dumps([{"name": e.name, "components": e.components, "crossings": e.crossings,
                           "linking": e.linking} for e in rows], indent=2))
        return EXIT_OK
    for e in rows:
        pairs = [f"lk({i + 1},{j + 1})={e.linking[i][j]}" for i in range(e.components) for j in range(i + 1, e.components)]
        print(f"{e.name:<12} q={e.components}  crossings={e.crossings:<3} {' '.join(pairs)}".rstrip())
    return EXIT_OK


def _positive_degree(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 2:
        raise argparse.ArgumentTypeError("max degree must be at least 2")
    return n


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise _Usage(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="milnor", description="Milnor invariants of links from planar-diagram codes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def link_args(sp, default_degree):
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--name", help="link name from the catalog")
        src.add_argument("--pd", help="file holding a PD code, X(a,b,c,d) tokens or a JSON list")
        sp.add_argument("--max-degree", type=_positive_degree, default=default_degree)
        sp.add_argument("--format", choices=("text", "json"), default="text")

    c = sub.add_parser("compute", help="first non-vanishing invariant")
    link_args(c, DEFAULT_MAX_DEGREE)
    c.add_argument("--basis", choices=("lyndon", "raw"), default="lyndon")
    c.set_defaults(func=run_compute)

    h = sub.add_parser("higher", help="refined invariants modulo the indeterminacy lattices")
    link_args(h, 5)
    h.set_defaults(func=run_higher)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=("all", *verify.SUITES), default="all")
    v.set_defaults(func=run_verify)

    k = sub.add_parser("catalog", help="list bundled links")
    k.add_argument("--filter", default="")
    k.add_argument("--format", choices=("text", "json"), default="text")
    k.set_defaults(func=run_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _Usage as exc:
        print(exc, file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except UnknownLink as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (PDError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
