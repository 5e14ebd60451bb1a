import itertools

import pytest
from hypothesis import strategies as st

from fbounded.multigraph import Multigraph


def triangle():
    return Multigraph(3, ((0, 1), (1, 2), (0, 2)))


def k4():
    return Multigraph(4, tuple(itertools.combinations(range(4), 2)))


def star3():
    return Multigraph(4, ((0, 1), (0, 2), (0, 3)))


def parallel3():
    return Multigraph(2, ((0, 1),) * 3)


def path(n):
    return Multigraph(n, tuple((i, i + 1) for i in range(n - 1)))


def petersen_edges():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return outer + spokes + inner


@st.composite
def instances(draw, max_n=6, max_m=10, max_f=3):
    """(G, f) with parallel edges allowed."""
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), max_size=max_m)) if pairs else []
    f = tuple(draw(st.lists(st.integers(0, max_f), min_size=n, max_size=n)))
    return Multigraph(n, tuple(edges)), f


@st.composite
def instance_and_pair(draw, **kw):
    G, f = draw(instances(**kw))
    roles = draw(st.lists(st.integers(0, 2), min_size=G.n, max_size=G.n))
    S = sum(1 << v for v, r in enumerate(roles) if r == 1)
    T = sum(1 << v for v, r in enumerate(roles) if r == 2)
    return G, f, S, T


@pytest.fixture
def tri():
    return triangle()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
