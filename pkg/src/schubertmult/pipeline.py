"""Multiplicity of ``Y_w`` at ``X_{w0}``, one permutation or all of S_n.

The computation is::

    minors of the t-chart  ->  reduced Groebner basis (t-degree first)
        ->  lead-term ideal  ->  t = 1  ->  degree of S / in(J'_w)

Two consistency checks run on every result: the Hilbert dimension must equal
``C(n,2) - l(w)``, and multiplicity 1 must coincide with avoiding the
patterns 1324 and 2143. Either failing raises :class:`ConsistencyError`.
"""

from __future__ import annotations

import json
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .combinatorics import (
    Permutation, RankMatrix, compose, enumerate_perms, inverse, is_pattern_smooth,
    length, longest, rank_matrix,
)
from .groebner import GroebnerBasis, MonomialIdeal, buchberger, eliminate_t, lead_term_ideal
from .hilbert import DimDegree, HilbertNumerator, dim_degree, numerator
from .polyring import GREVLEX, LEX, TermOrder
from .schubert_ideal import GeneratorSet, generate

__all__ = [
    "MultiplicityRecord", "Trace", "ExpectedTable", "VerificationReport",
    "ConsistencyError", "RecordCache", "multiplicity", "multiplicity_with_trace",
    "table", "iter_table", "verify", "expected_table", "order_from_name",
    "symmetry_report",
]

ORDERS = {"grevlex": GREVLEX, "lex": LEX}


def order_from_name(name: str) -> TermOrder:
    try:
        return ORDERS[name]
    except KeyError:
        raise ValueError(f"unknown order {name!r}; choose from {sorted(ORDERS)}") from None


class ConsistencyError(RuntimeError):
    """A result contradicts a theorem the computation must satisfy."""


@dataclass(frozen=True)
class MultiplicityRecord:
    n: int
    w: Permutation
    length: int
    dimension: int
    multiplicity: int
    pattern_smooth: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n, "w": self.w.word, "length": self.length,
            "dimension": self.dimension, "multiplicity": self.multiplicity,
            "smooth": self.pattern_smooth,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "MultiplicityRecord":
        w = Permutation.from_word(str(d["w"]))
        return cls(int(d["n"]), w, int(d["length"]), int(d["dimension"]),
                   int(d["multiplicity"]), bool(d["smooth"]))

    @classmethod
    def from_json(cls, line: str) -> "MultiplicityRecord":
        return cls.from_dict(json.loads(line))


@dataclass(frozen=True)
class Trace:
    """Every intermediate object of one computation."""

    rank_matrix: RankMatrix
    generators: GeneratorSet
    groebner_basis: GroebnerBasis
    initial_ideal: MonomialIdeal
    eliminated_ideal: MonomialIdeal
    numerator: HilbertNumerator
    dim_degree: DimDegree


def multiplicity_with_trace(w: Permutation, order: TermOrder = GREVLEX) -> tuple[MultiplicityRecord, Trace]:
    n = w.n
    R = rank_matrix(w)
    gens = generate(w, order)
    G = buchberger(gens, order)
    initial = lead_term_ideal(G)
    eliminated = eliminate_t(initial)
    if eliminated.is_unit():
        raise ConsistencyError(f"w={w.word}: initial ideal became the unit ideal")
    N = numerator(eliminated)
    dd = dim_degree(eliminated)
    ell = length(w)
    expected_dim = n * (n - 1) // 2 - ell
    if dd.dimension != expected_dim:
        raise ConsistencyError(
            f"w={w.word}: tangent cone has dimension {dd.dimension}, expected {expected_dim}"
        )
    smooth = is_pattern_smooth(w)
    if (dd.degree == 1) != smooth:
        raise ConsistencyError(
            f"w={w.word}: multiplicity {dd.degree} disagrees with pattern smoothness {smooth}"
        )
    record = MultiplicityRecord(n, w, ell, expected_dim, dd.degree, smooth)
    return record, Trace(R, gens, G, initial, eliminated, N, dd)


def multiplicity(w: Permutation, order: TermOrder = GREVLEX) -> MultiplicityRecord:
    return multiplicity_with_trace(w, order)[0]


def _work(args: tuple[Permutation, str]) -> MultiplicityRecord:
    w, order_name = args
    return multiplicity(w, order_from_name(order_name))


def _order_name(order: TermOrder) -> str:
    for name, o in ORDERS.items():
        if o == order:
            return name
    raise ValueError("only the named orders can be used for batch runs")


class RecordCache:
    """Append-only JSON-lines cache keyed by (n, word, order).

    Lines are the record format plus an ``"order"`` field, so the file is
    also a dataset export.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._entries: dict[tuple[int, str, str], MultiplicityRecord] = {}
        if self.path.exists():
            with self.path.open() as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    d = json.loads(line)
                    rec = MultiplicityRecord.from_dict(d)
                    self._entries[(rec.n, rec.w.word, d.get("order", "grevlex"))] = rec

    def get(self, w: Permutation, order_name: str) -> MultiplicityRecord | None:
        return self._entries.get((w.n, w.word, order_name))

    def add(self, rec: MultiplicityRecord, order_name: str) -> None:
        key = (rec.n, rec.w.word, order_name)
        if key in self._entries:
            return
        self._entries[key] = rec
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(json.dumps({**rec.to_dict(), "order": order_name}, separators=(",", ":")) + "\n")

    def __len__(self) -> int:
        return len(self._entries)


def iter_table(n: int, order: TermOrder = GREVLEX, jobs: int = 1,
               cache: RecordCache | None = None) -> Iterator[MultiplicityRecord]:
    """Records for all of S_n in lexicographic order, streamed as they finish in order."""
    name = _order_name(order)
    perms = list(enumerate_perms(n))
    todo = [w for w in perms if cache is None or cache.get(w, name) is None]
    if jobs > 1 and len(todo) > 1:
        pool = ProcessPoolExecutor(max_workers=jobs)
        # expensive words cluster lexicographically; small chunks spread them
        computed = pool.map(_work, [(w, name) for w in todo], chunksize=4)
    else:
        pool = None
        computed = map(_work, [(w, name) for w in todo])
    try:
        fresh = iter(computed)
        for w in perms:
            rec = cache.get(w, name) if cache is not None else None
            if rec is None:
                rec = next(fresh)
                if cache is not None:
                    cache.add(rec, name)
            yield rec
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)


def table(n: int, order: TermOrder = GREVLEX, jobs: int = 1,
          cache: RecordCache | None = None) -> list[MultiplicityRecord]:
    return list(iter_table(n, order, jobs, cache))


# --------------------------------------------------------------------------
# reference tables


@dataclass(frozen=True)
class ExpectedTable:
    n: int
    classes: dict[int, tuple[str, ...]]
    complete: bool
    aggregate_counts: dict[int, int] = field(default_factory=dict)


def _load_tables() -> dict[int, ExpectedTable]:
    text = resources.files("schubertmult").joinpath("data/expected_tables.json").read_text()
    out = {}
    for t in json.loads(text)["tables"]:
        out[t["n"]] = ExpectedTable(
            n=t["n"],
            classes={int(k): tuple(sorted(v)) for k, v in t["classes"].items()},
            complete=t["complete"],
            aggregate_counts={int(k): v for k, v in t["aggregate_counts"].items()},
        )
    return out


_TABLES: dict[int, ExpectedTable] | None = None


def expected_table(n: int) -> ExpectedTable:
    global _TABLES
    if _TABLES is None:
        _TABLES = _load_tables()
    if n not in _TABLES:
        raise ValueError(f"no reference table for n={n}; available: {sorted(_TABLES)}")
    return _TABLES[n]


@dataclass
class VerificationReport:
    n: int
    passed: bool
    checks: list[tuple[str, bool, str]]

    def lines(self) -> list[str]:
        out = []
        for name, ok, detail in self.checks:
            out.append(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else ""))
        out.append(f"{'PASS' if self.passed else 'FAIL'} n={self.n}")
        return out


def _group(records: Iterable[MultiplicityRecord]) -> dict[int, list[str]]:
    groups: dict[int, list[str]] = defaultdict(list)
    for r in records:
        groups[r.multiplicity].append(r.w.word)
    return {k: sorted(v) for k, v in groups.items()}


def verify(n: int, records: Sequence[MultiplicityRecord]) -> VerificationReport:
    """Compare a full S_n run against the reference table."""
    ref = expected_table(n)
    words = sorted(r.w.word for r in records if r.n == n)
    all_words = sorted(w.word for w in enumerate_perms(n))
    if words != all_words:
        missing = sorted(set(all_words) - set(words))
        raise ValueError(f"records do not cover S_{n} exactly once (missing {missing[:5]}...)"
                         if missing else f"records for S_{n} contain duplicates or strays")
    got = _group(records)
    checks = []
    for mult in sorted(ref.classes, reverse=True):
        want = list(ref.classes[mult])
        have = got.get(mult, [])
        ok = want == have
        detail = ""
        if not ok:
            extra = sorted(set(have) - set(want))
            lost = sorted(set(want) - set(have))
            detail = f"unexpected {extra}; missing {lost}"
        checks.append((f"multiplicity {mult} class ({len(want)} words)", ok, detail))
    if ref.complete:
        stray = sorted(k for k in got if k not in ref.classes)
        checks.append(("no multiplicities outside the table", not stray,
                       f"{stray}" if stray else ""))
    else:
        listed = set(ref.classes) | set(ref.aggregate_counts)
        stray = sorted(k for k in got if k not in listed)
        checks.append(("no multiplicities outside the table", not stray,
                       f"{stray}" if stray else ""))
    for mult, count in sorted(ref.aggregate_counts.items()):
        have = len(got.get(mult, []))
        checks.append((f"multiplicity {mult} count", have == count,
                       "" if have == count else f"got {have}, expected {count}"))
    passed = all(ok for _, ok, _ in checks)
    return VerificationReport(n, passed, checks)


def symmetry_report(records: Sequence[MultiplicityRecord]) -> dict[str, int]:
    """Count words whose multiplicity differs from that of their image.

    Exploratory only: the maps are inversion, conjugation by w0 and their
    composite. Nothing here is asserted.
    """
    by_word = {r.w.word: r.multiplicity for r in records}
    if not records:
        return {}
    w0 = longest(records[0].n)
    maps = {
        "inverse": inverse,
        "w0-conjugate": lambda w: compose(compose(w0, w), w0),
        "w0-conjugate-inverse": lambda w: compose(compose(w0, inverse(w)), w0),
    }
    out = {}
    for name, f in maps.items():
        out[name] = sum(1 for r in records if by_word.get(f(r.w).word) != r.multiplicity)
    return out
