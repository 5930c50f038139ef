import math

import pytest
from hypothesis import strategies as st

from fckit.catalog import W0, catalog
from fckit.coxeter import CoxeterGraph


def inf_rank3():
    """Rank-3 graph with one infinite label."""
    return CoxeterGraph.from_edges(["s", "t", "u"], [("s", "t", math.inf), ("t", "u", 3)])


def delta_graphs():
    """Graphs used by the transition-function and oracle-equivalence suites."""
    return {
        "W0": W0,
        "A3": catalog("A", 3),
        "B3": catalog("B", 3),
        "I2(4)": catalog("I2", 4),
        "I2(5)": catalog("I2", 5),
        "I2(6)": catalog("I2", 6),
        "I2(7)": catalog("I2", 7),
        "affine-A2": catalog("affine-A", 2),
        "inf-rank3": inf_rank3(),
    }


@pytest.fixture
def w0():
    return W0


LABELS = st.sampled_from([2, 2, 3, 3, 4, 5, 6, math.inf])


@st.composite
def coxeter_graphs(draw, min_rank=1, max_rank=4):
    """Random small Coxeter graphs."""
    n = draw(st.integers(min_rank, max_rank))
    names = [f"g{i}" for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            label = draw(LABELS)
            if label != 2:
                edges.append((names[i], names[j], label))
    return CoxeterGraph.from_edges(names, edges)


@st.composite
def graphs_and_words(draw, max_rank=4, max_len=8):
    g = draw(coxeter_graphs(max_rank=max_rank))
    w = draw(st.lists(st.integers(0, g.rank - 1), max_size=max_len))
    return g, tuple(w)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
