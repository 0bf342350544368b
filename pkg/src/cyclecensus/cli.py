"""Command-line entry point.

Usage:
    cyclecensus table --a 1 --n-max 10
    cyclecensus eval --a 1 --n 6 --at -1
    cyclecensus roots --a 1 --n 40 --t 2 --epsilon 1/20
    cyclecensus balance --a 1 --q 3 --n-grid 10:100:10
    cyclecensus verify --suite all

Exit status: 0 on success, 1 when a verify property fails, 2 for bad
arguments, 3 when a resource cap is hit.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

from cyclecensus.balance import residue_sums
from cyclecensus.census import Caps, census_table
from cyclecensus.errors import CensusError, ResourceCapError
from cyclecensus.formats import (
    balance_to_csv,
    balance_to_json,
    fraction_str,
    table_to_csv,
    table_to_json,
    to_json,
)
from cyclecensus.genfunc import build_polynomial, eval_exact
from cyclecensus.rootloc import isolate_root_near

EXIT_PROPERTY = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _positive_fraction(text: str) -> Fraction:
    x = _fraction(text)
    if x <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return x


def _grid(text: str) -> range:
    try:
        lo, hi, step = (int(part) for part in text.split(":"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected LO:HI:STEP, got {text!r}") from exc
    if step <= 0 or lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}")
    return range(lo, hi + 1, step)


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text!r}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclecensus",
        description="Exact cycle statistics of permutations, derangements and a-derangements.",
    )
    parser.add_argument("--output", "-o", help="write to this file instead of stdout")
    parser.add_argument("--max-a", type=_positive, default=Caps.max_a, help="cap on a")
    parser.add_argument("--max-n", type=_positive, default=Caps.max_n, help="cap on n")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="census table as n,k,count rows")
    p.add_argument("--a", type=_nonneg, required=True)
    p.add_argument("--n-max", type=_nonneg, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("eval", help="exact value of P_n at a rational point")
    p.add_argument("--a", type=_nonneg, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--at", type=_fraction, required=True)

    p = sub.add_parser("roots", help="certify a root near -t")
    p.add_argument("--a", type=_nonneg, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--t", type=_positive, required=True)
    p.add_argument("--epsilon", type=_positive_fraction, required=True)

    p = sub.add_parser("balance", help="residue-class sums of cycle counts mod q")
    p.add_argument("--a", type=_nonneg, required=True)
    p.add_argument("--q", type=_positive, required=True)
    p.add_argument("--n-grid", type=_grid, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument(
        "--suite", choices=("tables", "lemma", "roots", "balance", "all"), default="all"
    )
    return parser


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run_verify(suite: str) -> tuple[str, int]:
    # imported lazily: the suites pull in every module
    from cyclecensus.verify import run_suite

    lines, failed = [], 0
    for out in run_suite(suite):
        status = "PASS" if out.ok else "FAIL"
        failed += not out.ok
        lines.append(f"{status} {out.suite}/{out.name}: {out.detail}")
    lines.append(f"{len(lines) - failed} passed, {failed} failed")
    return "\n".join(lines) + "\n", EXIT_PROPERTY if failed else 0


def run(args: argparse.Namespace) -> tuple[str, int]:
    caps = Caps(max_a=args.max_a, max_n=args.max_n)
    if args.command == "table":
        table = census_table(args.a, args.n_max, caps)
        text = table_to_csv(table) if args.format == "csv" else table_to_json(table)
        return text, 0
    if args.command == "eval":
        value = eval_exact(build_polynomial(args.a, args.n, caps), args.at)
        doc = {"n": args.n, "a": args.a, "at": fraction_str(args.at), "value": fraction_str(value)}
        return to_json(doc), 0
    if args.command == "roots":
        w = isolate_root_near(build_polynomial(args.a, args.n, caps), args.t, args.epsilon)
        doc = w.as_dict() if w else {"found": False}
        return to_json(doc), 0
    if args.command == "balance":
        reports = [residue_sums(args.a, n, args.q, caps) for n in args.n_grid]
        text = balance_to_csv(reports) if args.format == "csv" else balance_to_json(reports)
        return text, 0
    if args.command == "verify":
        return _run_verify(args.suite)
    raise AssertionError(args.command)


def _glue_negative_rationals(argv: list[str]) -> list[str]:
    # argparse only accepts "-1" style negatives after a flag, not "-3/2"
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok == "--at":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--at={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(_glue_negative_rationals(argv))
    try:
        text, status = run(args)
    except ResourceCapError as exc:
        print(f"cyclecensus: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (CensusError, ValueError) as exc:
        print(f"cyclecensus: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, args.output)
    return status


if __name__ == "__main__":
    sys.exit(main())
