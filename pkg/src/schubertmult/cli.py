"""Command-line interface: ``schubertmult {compute,table,verify}``.

Exit status: 0 on success, 1 when ``verify`` finds a mismatch, 2 on usage
errors (bad flags, malformed permutation words, missing reference table).

Records are printed in one of three formats:

* text: ``key: value`` lines for ``compute``; an aligned row per word for
  ``table`` followed by a summary grouped by multiplicity
* json: one record per line, e.g.
  ``{"n":5,"w":"14325","length":3,"dimension":7,"multiplicity":5,"smooth":false}``
* csv: header ``n,w,length,dimension,multiplicity,smooth`` then one row per record

The cache (``--cache PATH`` or ``$SCHUBERTMULT_CACHE``) is an append-only
JSON-lines file; cached words are not recomputed unless ``--no-cache``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Iterable, Sequence, TextIO

from .combinatorics import Permutation
from .pipeline import (
    MultiplicityRecord, RecordCache, Trace, iter_table, multiplicity_with_trace,
    order_from_name, verify,
)

CACHE_ENV = "SCHUBERTMULT_CACHE"
SHOW_STAGES = ("rank-matrix", "generators", "gb", "leadterms", "hilbert")
CSV_HEADER = ["n", "w", "length", "dimension", "multiplicity", "smooth"]


class UsageError(Exception):
    pass


def _csv_row(rec: MultiplicityRecord) -> list:
    d = rec.to_dict()
    return [d[k] if k != "smooth" else str(d[k]).lower() for k in CSV_HEADER]


def format_records(records: Iterable[MultiplicityRecord], fmt: str) -> Iterable[str]:
    if fmt == "json":
        for r in records:
            yield r.to_json()
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="")
        writer.writerow(CSV_HEADER)
        yield buf.getvalue()
        for r in records:
            buf.seek(0)
            buf.truncate()
            writer.writerow(_csv_row(r))
            yield buf.getvalue()
    else:
        for r in records:
            yield (f"{r.w.word}  length={r.length}  dimension={r.dimension}  "
                   f"multiplicity={r.multiplicity}  smooth={str(r.pattern_smooth).lower()}")


def summarize(records: Sequence[MultiplicityRecord]) -> list[str]:
    """Group words by multiplicity, largest first, words in lexicographic order."""
    groups: dict[int, list[str]] = {}
    for r in records:
        groups.setdefault(r.multiplicity, []).append(r.w.word)
    lines = ["Multiplicity | Permutations"]
    for mult in sorted(groups, reverse=True):
        lines.append(f"{mult} | " + ", ".join(sorted(groups[mult])))
    return lines


def _trace_lines(trace: Trace, show: set[str], order) -> list[str]:
    out = []
    if "rank-matrix" in show:
        out.append("# rank matrix")
        out.extend(" ".join(str(x) for x in row) for row in trace.rank_matrix.r)
    if "generators" in show:
        out.extend(trace.generators.lines(order))
    if "gb" in show:
        out.append(f"# groebner basis elements={len(trace.groebner_basis)}")
        out.extend(g.format(order) for g in trace.groebner_basis)
    if "leadterms" in show:
        out.append(f"# initial ideal generators={len(trace.initial_ideal)}")
        out.extend(trace.initial_ideal.strings())
        out.append(f"# initial ideal at t=1 generators={len(trace.eliminated_ideal)}")
        out.extend(trace.eliminated_ideal.strings())
    if "hilbert" in show:
        out.append("# hilbert numerator")
        out.append(str(trace.numerator))
    return out


def _parse_show(values: Sequence[str] | None) -> set[str]:
    show: set[str] = set()
    for v in values or ():
        for part in v.split(","):
            part = part.strip()
            if not part:
                continue
            if part not in SHOW_STAGES:
                raise UsageError(f"unknown --show stage {part!r}; choose from {', '.join(SHOW_STAGES)}")
            show.add(part)
    return show


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubertmult",
        description="Multiplicity of the Schubert variety Y_w at the point X_w0.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__.split("\n", 2)[2],
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--order", choices=("grevlex", "lex"), default="grevlex",
                        help="tie-break after t-degree (default: grevlex)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("compute", parents=[common], help="one permutation")
    p.add_argument("--perm", required=True, help='one-line word, "2143" or "2,1,4,3"')
    p.add_argument("--show", action="append", metavar="STAGE",
                   help=f"trace stages, repeatable or comma-separated: {', '.join(SHOW_STAGES)}")

    for name, text in (("table", "all of S_n"), ("verify", "all of S_n, checked against the reference table")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                       help="worker processes (default: all CPUs)")
        p.add_argument("--cache", metavar="PATH",
                       help=f"JSON-lines record cache (default: ${CACHE_ENV} if set)")
        p.add_argument("--no-cache", action="store_true", help="ignore and do not write the cache")
    return parser


def _open_cache(args) -> RecordCache | None:
    if args.no_cache:
        return None
    path = args.cache or os.environ.get(CACHE_ENV)
    return RecordCache(path) if path else None


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        order = order_from_name(args.order)
        if args.subcommand == "compute":
            show = _parse_show(args.show)
            try:
                w = Permutation.from_word(args.perm)
            except (ValueError, TypeError) as exc:
                raise UsageError(f"bad permutation {args.perm!r}: {exc}") from None
            rec, trace = multiplicity_with_trace(w, order)
            if args.format == "json":
                d = rec.to_dict()
                if show:
                    d["trace"] = _trace_lines(trace, show, order)
                print(json.dumps(d, separators=(",", ":")), file=out)
            elif args.format == "csv":
                for line in format_records([rec], "csv"):
                    print(line, file=out)
                for line in _trace_lines(trace, show, order):
                    print(line, file=out)
            else:
                for k, v in rec.to_dict().items():
                    print(f"{k}: {str(v).lower() if isinstance(v, bool) else v}", file=out)
                for line in _trace_lines(trace, show, order):
                    print(line, file=out)
            return 0

        if args.n < 1:
            raise UsageError("--n must be positive")
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        cache = _open_cache(args)
        if args.subcommand == "verify":
            from .pipeline import expected_table
            try:
                expected_table(args.n)
            except ValueError as exc:
                raise UsageError(str(exc)) from None

        records = []

        def stream():
            for rec in iter_table(args.n, order, args.jobs, cache):
                records.append(rec)
                yield rec

        if args.subcommand == "table":
            for line in format_records(stream(), args.format):
                print(line, file=out, flush=True)
            if args.format == "text":
                print(file=out)
                for line in summarize(records):
                    print(line, file=out)
            return 0

        records = list(iter_table(args.n, order, args.jobs, cache))
        report = verify(args.n, records)
        for line in report.lines():
            print(line, file=out)
        return 0 if report.passed else 1
    except UsageError as exc:
        print(f"schubertmult: error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
