import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from ivlattice.enumeration import enumerate_catalog  # noqa: E402
from ivlattice.poset import Poset  # noqa: E402


@pytest.fixture(scope="session")
def catalogs():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = enumerate_catalog(n)
        return cache[n]
    return get


@st.composite
def posets(draw, max_n=7):
    """Random poset: random DAG on a hidden linear order, closed, then shuffled."""
    n = draw(st.integers(1, max_n))
    rows = [0] * n
    for i in reversed(range(n)):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                rows[i] |= 1 << j | rows[j]
    perm = draw(st.permutations(range(1, n + 1)))
    return Poset(n, tuple(rows)).relabel(perm)


@st.composite
def interval_families(draw, max_n=7, span=6):
    n = draw(st.integers(1, max_n))
    ivs = []
    for _ in range(n):
        a = draw(st.integers(1, span))
        b = draw(st.integers(a, span))
        ivs.append((a, b))
    return ivs


def shuffled(P, rng: random.Random):
    perm = list(range(1, P.n + 1))
    rng.shuffle(perm)
    return P.relabel(perm)


_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.get_closest_marker("acceptance") and (rep.when == "call" or rep.failed):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        label = item.callspec.id if hasattr(item, "callspec") else ""
        extra = [f"{k}: {v}" for k, v in item.user_properties]
        _acceptance.append((doc + (f" [{label}]" if label else ""), rep.outcome, extra))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for text, outcome, extra in _acceptance:
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {text}")
        for line in extra:
            terminalreporter.write_line(f"      {line}")
