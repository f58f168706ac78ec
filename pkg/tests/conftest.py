import pytest

from schubertmult import enumerate_perms
from schubertmult.pipeline import multiplicity_with_trace, table
from schubertmult.polyring import GREVLEX, LEX

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def traces45():
    """(record, trace) for every w in S4 and S5 under the default order."""
    return {w.word: multiplicity_with_trace(w, GREVLEX) for n in (4, 5) for w in enumerate_perms(n)}


@pytest.fixture(scope="session")
def lex_traces45():
    return {w.word: multiplicity_with_trace(w, LEX) for n in (4, 5) for w in enumerate_perms(n)}


@pytest.fixture(scope="session")
def records6():
    return table(6, GREVLEX, jobs=1)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
