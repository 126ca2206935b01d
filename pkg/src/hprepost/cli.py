"""Command line: ``hprepost {mine,verify,bench,stats,gen}``.

Exit codes: 0 ok, 1 usage, 2 input parse error, 3 algorithms disagree,
4 internal failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from . import bench as benchmod
from .core import MinSup, resolve_threshold, result_equal
from .fimi import FimiParseError, generate, read_fimi, stats, write_fimi, write_result

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_MISMATCH, EXIT_INTERNAL = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _fraction(text: str) -> float:
    v = float(text)
    if not 0 < v <= 1:
        raise argparse.ArgumentTypeError(f"min-sup must be in (0, 1], got {text}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text}")
    return v


def _csv_list(text: str) -> List[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def _check_algos(names):
    for a in names:
        if a not in benchmod.ALGORITHMS:
            raise UsageError(f"unknown algorithm {a!r}; choose from {','.join(benchmod.ALGORITHMS)}")
    return names


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hprepost", description="PPC-tree / N-list frequent itemset mining")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def parallel_flags(sp):
        sp.add_argument("--groups", type=_positive, default=1)
        sp.add_argument("--splits", type=_positive, default=1)
        sp.add_argument("--workers", type=_positive, default=1)

    mine = sub.add_parser("mine", help="mine frequent itemsets")
    mine.add_argument("--input", required=True)
    th = mine.add_mutually_exclusive_group(required=True)
    th.add_argument("--min-sup", type=_fraction)
    th.add_argument("--min-count", type=_positive)
    mine.add_argument("--algo", default="prepost")
    parallel_flags(mine)
    mine.add_argument("--output")

    verify = sub.add_parser("verify", help="check that algorithms agree")
    verify.add_argument("--input", required=True)
    th = verify.add_mutually_exclusive_group(required=True)
    th.add_argument("--min-sup", type=_fraction)
    th.add_argument("--min-count", type=_positive)
    verify.add_argument("--algos", type=_csv_list, required=True)
    parallel_flags(verify)

    b = sub.add_parser("bench", help="time algorithms over min-sup values, emit CSV")
    b.add_argument("--input", required=True)
    b.add_argument("--min-sups", type=lambda s: [_fraction(x) for x in _csv_list(s)], required=True)
    b.add_argument("--algos", type=_csv_list, required=True)
    b.add_argument("--repeat", type=_positive, default=3)
    b.add_argument("--name", help="dataset label (default: input file stem)")
    parallel_flags(b)
    b.add_argument("--csv")

    st = sub.add_parser("stats", help="print 'items transactions avg_length'")
    st.add_argument("--input", required=True)

    g = sub.add_parser("gen", help="write a seeded synthetic FIMI file")
    g.add_argument("--items", type=_positive, required=True)
    g.add_argument("--transactions", type=int, required=True)
    g.add_argument("--avg-len", type=float, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--output", required=True)
    return p


def _threshold(args, n: int) -> int:
    spec = MinSup(count=args.min_count) if args.min_count is not None else MinSup(fraction=args.min_sup)
    return resolve_threshold(spec, n)


def _cmd_mine(args) -> int:
    _check_algos([args.algo])
    db = read_fimi(args.input)
    m = _threshold(args, len(db))
    result = benchmod.run_algorithm(args.algo, db, m, args.groups, args.splits, args.workers)
    if args.output:
        with open(args.output, "w", newline="\n") as fh:
            write_result(result, fh)
    else:
        write_result(result, sys.stdout)
    return EXIT_OK


def _cmd_verify(args) -> int:
    _check_algos(args.algos)
    db = read_fimi(args.input)
    m = _threshold(args, len(db))
    first_name, first = None, None
    for name in args.algos:
        result = benchmod.run_algorithm(name, db, m, args.groups, args.splits, args.workers)
        if first is None:
            first_name, first = name, result
            continue
        same, diff = result_equal(first, result)
        if not same:
            itemset, a, b = diff
            print(f"MISMATCH {first_name} vs {name} at {' '.join(map(str, sorted(itemset)))}: "
                  f"{a} != {b}", file=sys.stderr)
            return EXIT_MISMATCH
    print(f"OK {len(first or {})} itemsets agree across {','.join(args.algos)}")
    return EXIT_OK


def _cmd_bench(args) -> int:
    _check_algos(args.algos)
    db = read_fimi(args.input)
    name = args.name or os.path.splitext(os.path.basename(args.input))[0]
    records = benchmod.bench(db, name, args.min_sups, args.algos, args.repeat,
                             args.groups, args.splits, args.workers)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            benchmod.write_csv(records, fh)
    else:
        benchmod.write_csv(records, sys.stdout)
    return EXIT_OK


def _cmd_stats(args) -> int:
    print(stats(read_fimi(args.input)))
    return EXIT_OK


def _cmd_gen(args) -> int:
    try:
        db = generate(args.items, args.transactions, args.avg_len, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    with open(args.output, "w", newline="\n") as fh:
        write_fimi(db, fh)
    return EXIT_OK


COMMANDS = {
    "mine": _cmd_mine,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
    "stats": _cmd_stats,
    "gen": _cmd_gen,
}


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except FimiParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
