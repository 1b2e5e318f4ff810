import pytest

from planewalk.enumeration import closed_walks, open_walks
from planewalk.fixtures import theta, triangle, winding, xgraph

# criterion number -> (passed, label, detail); filled by the acceptance tests
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def windings():
    return {(n, d): winding(n, d) for n in (3, 4, 5) for d in (-3, -2, -1, 1, 2, 3)}


@pytest.fixture(scope="session")
def open_corpus():
    return {name: list(open_walks(mk(), 7)) for name, mk in (("XGRAPH", xgraph), ("THETA", theta), ("TRIANGLE", triangle))}


@pytest.fixture(scope="session")
def oracle_corpus():
    out = {}
    for name, mk in (("XGRAPH", xgraph), ("THETA", theta)):
        g = mk()
        out[name] = list(open_walks(g, 6, 4)) + list(closed_walks(g, 6, 4))
    return out


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, label, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n} {'PASS' if ok else 'FAIL'}: {label} ({detail})")
