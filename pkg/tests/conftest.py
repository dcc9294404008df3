import os
import sys

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from dompoly import from_edge_list  # noqa: E402

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


@pytest.fixture
def named():
    from dompoly import (complete_bipartite_graph, complete_graph, cycle_graph,
                         empty_graph, path_graph)
    return {
        "K1": complete_graph(1),
        "K2": complete_graph(2),
        "K3": complete_graph(3),
        "P3": path_graph(3),
        "P4": path_graph(4),
        "C4": cycle_graph(4),
        "2K2": from_edge_list(4, [(0, 1), (2, 3)]),
        "K13": complete_bipartite_graph(1, 3),
        "E3": empty_graph(3),
        "null": empty_graph(0),
    }


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
