import dataclasses
import json

import pytest

from schubertmult import pipeline
from schubertmult.combinatorics import Permutation, enumerate_perms, identity, is_pattern_smooth
from schubertmult.hilbert import DimDegree
from schubertmult.pipeline import (
    ConsistencyError, MultiplicityRecord, RecordCache, expected_table, multiplicity,
    multiplicity_with_trace, symmetry_report, table, verify,
)
from schubertmult.polyring import GREVLEX, LEX


def P(word):
    return Permutation.from_word(word)


@pytest.mark.parametrize("word, mult", [("2143", 2), ("14325", 5), ("154326", 14)])
def test_multiplicity_examples(word, mult):
    assert multiplicity(P(word)).multiplicity == mult


def test_identity_record():
    rec = multiplicity(identity(5))
    assert (rec.multiplicity, rec.dimension, rec.length, rec.pattern_smooth) == (1, 10, 0, True)


def test_trace_2143():
    rec, trace = multiplicity_with_trace(P("2143"))
    assert trace.rank_matrix.tolist() == [[0, 1, 1, 1], [1, 2, 2, 2], [1, 2, 2, 3], [1, 2, 3, 4]]
    assert sorted(trace.eliminated_ideal.strings()) == ["z11", "z21*z13"]
    assert sorted(trace.initial_ideal.strings()) == ["t*z21*z13", "z11"]
    assert trace.dim_degree == DimDegree(4, 2)
    assert rec.to_json() == '{"n":4,"w":"2143","length":2,"dimension":4,"multiplicity":2,"smooth":false}'


def test_identity_trace_is_trivial():
    _, trace = multiplicity_with_trace(identity(4))
    assert len(trace.generators) == len(trace.groebner_basis) == len(trace.initial_ideal) == 0
    assert trace.numerator.coeffs == (1,)


def test_record_json_roundtrip():
    rec = multiplicity(P("14325"))
    assert rec.to_json() == '{"n":5,"w":"14325","length":3,"dimension":7,"multiplicity":5,"smooth":false}'
    assert MultiplicityRecord.from_json(rec.to_json()) == rec


def test_small_tables():
    recs = table(2)
    assert [(r.w.word, r.multiplicity) for r in recs] == [("12", 1), ("21", 1)]
    recs = table(4)
    singular = [r.w.word for r in recs if r.multiplicity > 1]
    assert singular == ["1324", "2143"]
    assert all(r.multiplicity == 2 for r in recs if r.multiplicity > 1)


def test_verify_n5():
    recs = table(5)
    report = verify(5, recs)
    assert report.passed, report.lines()
    # mutate one record
    bad = [dataclasses.replace(r, multiplicity=4) if r.w.word == "13425" else r for r in recs]
    report = verify(5, bad)
    assert not report.passed
    assert any("13425" in line for line in report.lines())
    with pytest.raises(ValueError):
        verify(5, recs[:-1])
    with pytest.raises(ValueError):
        verify(4, table(4))


def test_verify_n6_reference_shape():
    ref = expected_table(6)
    assert not ref.complete
    assert ref.aggregate_counts == {1: 366, 2: 207}
    assert ref.classes[14] == ("154326",)
    assert sum(len(v) for v in ref.classes.values()) + 366 + 207 == 720
    for words in ref.classes.values():
        assert list(words) == sorted(words)


def test_expected_table_n5_complete():
    ref = expected_table(5)
    assert ref.complete
    words = sorted(w for v in ref.classes.values() for w in v)
    assert words == sorted(w.word for w in enumerate_perms(5))
    assert ref.classes[1] == tuple(sorted(w.word for w in enumerate_perms(5) if is_pattern_smooth(w)))


def test_dimension_mismatch_is_hard_error(monkeypatch):
    monkeypatch.setattr(pipeline, "dim_degree", lambda I: DimDegree(99, 2))
    with pytest.raises(ConsistencyError, match="dimension"):
        multiplicity(P("2143"))


def test_pattern_disagreement_is_hard_error(monkeypatch):
    monkeypatch.setattr(pipeline, "is_pattern_smooth", lambda w: True)
    with pytest.raises(ConsistencyError, match="pattern"):
        multiplicity(P("2143"))


def test_order_robustness_spot():
    for word in ("14325", "24153", "31524"):
        assert multiplicity(P(word), GREVLEX) == multiplicity(P(word), LEX)


def test_determinism_and_parallel():
    a = [r.to_json() for r in table(5, jobs=1)]
    b = [r.to_json() for r in table(5, jobs=1)]
    c = [r.to_json() for r in table(5, jobs=3)]
    assert a == b == c


def test_cache(tmp_path):
    path = tmp_path / "cache.jsonl"
    first = table(4, cache=RecordCache(path))
    lines = path.read_text().splitlines()
    assert len(lines) == 24
    assert json.loads(lines[0])["order"] == "grevlex"
    cache = RecordCache(path)
    assert len(cache) == 24
    assert table(4, cache=cache) == first
    assert len(path.read_text().splitlines()) == 24
    # a different order is a different key
    table(4, LEX, cache=cache)
    assert len(path.read_text().splitlines()) == 48


def test_symmetry_report_runs():
    report = symmetry_report(table(5))
    assert set(report) == {"inverse", "w0-conjugate", "w0-conjugate-inverse"}
    assert all(isinstance(v, int) and v >= 0 for v in report.values())
