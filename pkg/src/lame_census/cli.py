"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 bad arguments or an
environment problem (unwritable output, enumeration bound exceeded).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import census
from .constellation import (
    DEFAULT_MAX_DEGREE,
    dump_ndjson,
    enumerate_representatives,
    per_case_counts,
)
from .errors import EnumerationBoundError, InvalidProfileError
from .ramification import CASES, build_profile, profiles_for, riemann_hurwitz_check

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

CSV_HEADER = ("n", "N", "dessins", "lame")


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _write(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        return
    try:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out_path}: {exc.strerror}") from None


def format_table(entries: list[census.CensusEntry], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([e.as_dict() for e in entries], indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for e in entries:
        writer.writerow((e.n, e.N, e.dessins, e.lame))
    return buf.getvalue()


def cmd_count(args) -> int:
    d = census.dessin_count(args.n, args.N)
    lame = census.lame_count(args.n, args.N)
    print(f"D={d} L={lame}")
    return EXIT_OK


def cmd_table(args) -> int:
    entries = census.census_table(args.n_min, args.n_max, args.N_min, args.N_max)
    _write(format_table(entries, args.format), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        counts = per_case_counts(
            args.n, args.N, max_degree=args.max_degree, workers=args.workers
        )
    except EnumerationBoundError as exc:
        raise UsageError(f"{exc}; raise --max-degree to enumerate it") from None
    for case, count in counts.items():
        print(f"{case}: {count}")
    total = sum(counts.values())
    expected = census.dessin_count(args.n, args.N)
    verdict = "MATCH" if total == expected else "MISMATCH"
    print(f"{verdict} ({total} = {expected})" if total == expected
          else f"{verdict} (enumerated {total} != formula {expected})")
    return EXIT_OK if total == expected else EXIT_MISMATCH


def cmd_profiles(args) -> int:
    profiles = profiles_for(args.n, args.N)
    if args.format == "json":
        payload = []
        for p in profiles:
            item = p.to_json()
            item["genus"] = riemann_hurwitz_check(p)
            payload.append(item)
        _write(json.dumps(payload, indent=2) + "\n", args.out)
        return EXIT_OK
    lines = []
    for p in profiles:
        lines.append(
            f"{p.case_label}: degree {p.degree}, over0 {p.type_over_0}, "
            f"over1 {p.type_over_1}, overInf {p.type_over_inf}, "
            f"genus {riemann_hurwitz_check(p)}"
        )
        for m in p.marks:
            lines.append(f"  {m.name} -> {m.target} (multiplicity {m.multiplicity})")
    if not profiles:
        lines.append(f"no valid profiles at n={args.n}, N={args.N}")
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        profile = build_profile(args.case, args.n, args.N)
        reps = enumerate_representatives(
            profile, max_degree=args.max_degree, workers=args.workers
        )
    except (InvalidProfileError, EnumerationBoundError) as exc:
        raise UsageError(str(exc)) from None
    _write(dump_ndjson(reps), args.out)
    print(f"count={len(reps)}", file=sys.stderr if args.out is None else sys.stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lame-census",
        description="Count integral Lame equations with dihedral projective monodromy "
        "of order 2N, and check the dessin count by brute-force enumeration.",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_nN(p, positive_n=False):
        p.add_argument("--n", type=_positive if positive_n else int, required=True, metavar="INT",
                       help="index n of the Lame equation")
        p.add_argument("--N", type=_positive, required=True, metavar="INT",
                       help="half the order of the dihedral monodromy group")

    def add_enum(p):
        p.add_argument("--max-degree", type=_positive, default=DEFAULT_MAX_DEGREE,
                       help="refuse to enumerate covers of degree nN above this (default %(default)s)")
        p.add_argument("--workers", type=_positive, default=1,
                       help="worker processes for the enumeration (default %(default)s)")

    p = sub.add_parser("count", help="print D(n,N) and L(n,N)", allow_abbrev=False)
    add_nN(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="emit a census table", allow_abbrev=False)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--N-min", type=_positive, required=True)
    p.add_argument("--N-max", type=_positive, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="compare the dessin formula with enumeration",
                       allow_abbrev=False)
    add_nN(p, positive_n=True)
    add_enum(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("profiles", help="show the valid ramification profiles",
                       allow_abbrev=False)
    add_nN(p, positive_n=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_profiles)

    p = sub.add_parser("enumerate", help="write one constellation per dessin as NDJSON",
                       allow_abbrev=False)
    add_nN(p, positive_n=True)
    p.add_argument("--case", choices=CASES, required=True)
    p.add_argument("--out", metavar="PATH")
    add_enum(p)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"lame-census: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
