import itertools

import pytest
from hypothesis import settings, strategies as st

from bicatmnd import corpus
from bicatmnd.fincat import FinCat

settings.register_profile("suite", max_examples=40, deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def cats():
    return corpus.categories()


def preorder_category(n, pairs, name=None):
    """The preorder on range(n) generated by ``pairs``, as a FinCat."""
    rel = {(i, i) for i in range(n)} | set(pairs)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(rel), repeat=2):
            if b == c and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    obs = [f"o{i}" for i in range(n)]
    mors = [(f"m{a}_{b}", obs[a], obs[b]) for a, b in sorted(rel)]
    ident = {obs[i]: f"m{i}_{i}" for i in range(n)}
    compose = {(f"m{a}_{b}", f"m{b}_{d}"): f"m{a}_{d}"
               for a, b in rel for c, d in rel if b == c}
    return FinCat(obs, mors, ident, compose, name=name)


@st.composite
def preorders(draw, max_objects=3):
    n = draw(st.integers(min_value=1, max_value=max_objects))
    pairs = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=4))
    return preorder_category(n, pairs)


SUITE_START = None


def pytest_sessionstart(session):
    import time
    global SUITE_START
    SUITE_START = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
