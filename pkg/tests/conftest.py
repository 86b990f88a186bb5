import pytest
from hypothesis import strategies as st

from autsign import Multigraph, parse_graph

GOLDEN_TEXTS = {
    "loop": "v 1\ne 0 0\n",
    "single_edge": "v 2\ne 0 1\n",
    "double_edge": "v 2\ne 0 1\ne 0 1\n",
    "triangle": "v 3\ne 0 1\ne 1 2\ne 2 0\n",
    "path3": "v 3\ne 0 1\ne 1 2\n",
    "path4": "v 4\ne 0 1\ne 1 2\ne 2 3\n",
    "loop_plus_edge": "v 2\ne 0 0\ne 0 1\n",
    "two_edges_disjoint": "v 4\ne 0 1\ne 2 3\n",
}


@pytest.fixture
def golden():
    return {name: parse_graph(text) for name, text in GOLDEN_TEXTS.items()}


@st.composite
def multigraphs(draw, max_vertices=5, max_edges=6):
    n = draw(st.integers(1, max_vertices))
    m = draw(st.integers(0, max_edges))
    edges = [
        (draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1)))
        for _ in range(m)
    ]
    return Multigraph.from_edges(n, edges)
