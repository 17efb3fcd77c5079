import re

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from aperiodic_sync.automaton import Dfa
from aperiodic_sync.corpus import cerny

# brute-force comparisons have heavy-tailed runtimes; wall-clock limits live in the acceptance tests
settings.register_profile("default", deadline=None)
settings.load_profile("default")


@pytest.fixture
def a1():
    return Dfa.from_rows([[0, 0, 1], [1, 2, 2]])


@pytest.fixture
def swap():
    return Dfa.from_rows([[1, 0], [0, 1]])


@pytest.fixture
def identity2():
    return Dfa.from_rows([[0, 1]])


@pytest.fixture
def c4():
    return cerny(4)


@st.composite
def dfas(draw, max_n=5, max_k=3):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_k))
    rows = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
                         min_size=k, max_size=k))
    return Dfa.from_rows(rows)


@st.composite
def dfa_and_word(draw, max_n=5, max_k=3, max_len=8):
    dfa = draw(dfas(max_n, max_k))
    word = tuple(draw(st.lists(st.integers(0, dfa.k - 1), max_size=max_len)))
    return dfa, word


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", nodeid)
            if m and rep.when == "call":
                lines.append((int(m.group(1)), m.group(2), outcome))
    if lines:
        terminalreporter.section("acceptance criteria")
        for num, name, outcome in sorted(lines):
            verdict = "PASS" if outcome == "passed" else "FAIL"
            terminalreporter.write_line(f"criterion {num} [{name}]: {verdict}")
