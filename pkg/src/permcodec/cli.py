"""Command-line surface.

Subcommands: encode, decode, count, words, bounds, verify, scan. stdout
carries data only (JSON, CSV, or plain key=value lines); diagnostics go to
stderr. Output bytes depend only on the flags, never on --jobs.

Exit codes:
  0  success
  1  verification found a defect
  2  unreadable input (permutation or word text, bad lengths, bad ranges)
  3  precondition failed: the permutation contains the pattern
  4  the word pair is not the code of any avoider
  5  refused: the requested sweep exceeds the node budget or size limits
  6  cache file could not be read or written
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from permcodec.cache import CacheStore
from permcodec.codec import decode_avoider, encode_avoider
from permcodec.enumeration import (
    DEFAULT_NODE_BUDGET,
    count_avoiders,
    scan_classes,
    verify_injection,
)
from permcodec.errors import (
    CacheIOError,
    DomainError,
    LengthMismatch,
    MalformedInput,
    NotInImage,
    PreconditionViolated,
    ScaleRefused,
)
from permcodec.perms import format_permutation, parse_permutation, staircase_pattern
from permcodec.wordcount import (
    bound_row_dict,
    bound_rows_csv,
    bound_table,
    count_words,
)
from permcodec.words import CodePair, WordFamily, parse_word

DEFAULT_CACHE = "permcodec-cache.jsonl"


def _cache_path(args: argparse.Namespace) -> str:
    if args.cache is not None:
        return args.cache
    return os.environ.get("PERMCODEC_CACHE", DEFAULT_CACHE)


def _emit(line: str) -> None:
    sys.stdout.write(line + "\n")


def cmd_encode(args: argparse.Namespace) -> int:
    pair = encode_avoider(parse_permutation(args.perm), args.k)
    _emit(pair.to_json())
    return 0


def cmd_decode(args: argparse.Namespace) -> int:
    pair = CodePair(parse_word(args.w), parse_word(args.wp))
    try:
        p = decode_avoider(pair, args.k)
    except NotInImage:
        _emit("NOT-IN-IMAGE")
        return 4
    _emit(format_permutation(p))
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    q = parse_permutation(args.pattern)
    store = CacheStore.load(_cache_path(args))
    total = count_avoiders(q, args.n, cache=store, jobs=args.jobs, budget=args.budget)
    _emit(str(total))
    return 0


def cmd_words(args: argparse.Namespace) -> int:
    family = WordFamily(args.m, args.parity)
    if args.n is None:
        _emit(family.describe())
        return 0
    _emit(str(count_words(family, args.n)))
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    q = staircase_pattern(args.k)
    counts = {
        n: count_avoiders(q, n, jobs=args.jobs, budget=args.budget)
        for n in range(args.nmax + 1)
    }
    rows = bound_table(args.k, args.nmax, counts)
    if args.format == "json":
        _emit(json.dumps([bound_row_dict(r) for r in rows]))
    elif args.format == "csv":
        for line in bound_rows_csv(rows):
            _emit(line)
    else:
        for record in map(bound_row_dict, rows):
            _emit(" ".join(f"{key}={_plain(value)}" for key, value in record.items()))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = verify_injection(args.k, args.n, jobs=args.jobs, budget=args.budget)
    if args.format == "json":
        _emit(json.dumps(report.to_dict()))
    else:
        _emit(f"checked {report.total} avoiders for k={report.k} n={report.n}")
        for field in (
            "round_trip_failures",
            "image_violations",
            "first_letter_violations",
            "duplicate_images",
        ):
            _emit(f"{field}={getattr(report, field)}")
        for category, examples in report.examples.items():
            for text in examples:
                _emit(f"example {category}: {text}")
        _emit("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def cmd_scan(args: argparse.Namespace) -> int:
    report = scan_classes(args.k, args.n, jobs=args.jobs, budget=args.budget)
    if args.format == "json":
        _emit(json.dumps(report.to_dict()))
    else:
        for entry in report.classes:
            ratio = "-" if entry.growth_ratio is None else f"{entry.growth_ratio:.6f}"
            _emit(
                f"class {entry.representative} count={entry.count} "
                f"layered={_plain(entry.layered)} ratio={ratio}"
            )
        _emit(f"max_count={report.max_count}")
        _emit("max_classes=" + ",".join(report.max_classes))
        _emit(f"layered_dominates={_plain(report.layered_dominates)}")
        _emit(f"staircase_is_max={_plain(report.staircase_is_max)}")
    return 0


def _plain(value) -> str:
    if value is True:
        return "true"
    if value is False:
        return "false"
    if value is None:
        return "-"
    return str(value)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "csv", "plain"), default="plain",
        help="output format (default: plain)",
    )
    common.add_argument(
        "--cache", metavar="PATH", default=None,
        help=f"count cache file (default: $PERMCODEC_CACHE or ./{DEFAULT_CACHE})",
    )
    common.add_argument(
        "--budget", type=int, default=DEFAULT_NODE_BUDGET, metavar="N",
        help="refuse sweeps estimated over this many search nodes",
    )
    common.add_argument(
        "--jobs", type=int, default=1, metavar="J",
        help="worker processes (output is identical for any J)",
    )

    parser = argparse.ArgumentParser(
        prog="permcodec",
        description="codecs between pattern-avoiding permutations and word pairs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", parents=[common], help="encode an avoider")
    p.add_argument("perm", help="permutation text (digits or comma-separated)")
    p.add_argument("--k", type=int, required=True, help="staircase pattern length")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="decode a word pair")
    p.add_argument("w", help="position word")
    p.add_argument("wp", help="value word")
    p.add_argument("--k", type=int, required=True, help="staircase pattern length")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("count", parents=[common], help="count avoiders of a pattern")
    p.add_argument("-q", "--pattern", required=True, help="pattern text")
    p.add_argument("-n", "--n", type=int, required=True, help="permutation length")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("words", parents=[common], help="count words in a family")
    p.add_argument("--m", type=int, required=True, help="family index (m >= 2)")
    p.add_argument("--parity", choices=("odd", "even"), required=True)
    p.add_argument("-n", "--n", type=int, default=None, help="word length")
    p.set_defaults(func=cmd_words)

    p = sub.add_parser("bounds", parents=[common], help="avoider/word bound table")
    p.add_argument("--k", type=int, required=True, help="staircase pattern length")
    p.add_argument("--nmax", type=int, required=True, help="last row")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", parents=[common], help="exhaustive encoder check")
    p.add_argument("--k", type=int, required=True, help="staircase pattern length")
    p.add_argument("-n", "--n", type=int, required=True, help="permutation length")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", parents=[common], help="count avoiders per class")
    p.add_argument("--k", type=int, required=True, help="pattern length")
    p.add_argument("-n", "--n", type=int, required=True, help="permutation length")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, format="permcodec: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MalformedInput, LengthMismatch, DomainError) as exc:
        print(f"permcodec: {exc}", file=sys.stderr)
        return 2
    except PreconditionViolated as exc:
        print(f"permcodec: {exc}", file=sys.stderr)
        return 3
    except ScaleRefused as exc:
        print(f"permcodec: {exc}", file=sys.stderr)
        return 5
    except CacheIOError as exc:
        print(f"permcodec: {exc}", file=sys.stderr)
        return 6


if __name__ == "__main__":
    sys.exit(main())
