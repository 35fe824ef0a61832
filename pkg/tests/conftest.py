import networkx as nx
import pytest
from hypothesis import strategies as st

from linewl.graph import Graph, build_graph


@st.composite
def graphs(draw, min_nodes=0, max_nodes=9):
    n = draw(st.integers(min_nodes, max_nodes))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def graph_pairs(draw, min_nodes=0, max_nodes=9):
    """Two graphs on the same number of nodes; the second often has the same
    degree sequence or edge count as the first."""
    n = draw(st.integers(min_nodes, max_nodes))
    g1 = draw(graphs(n, n))
    g2 = draw(graphs(n, n))
    return g1, g2


@st.composite
def graph_and_perm(draw, min_nodes=0, max_nodes=9):
    g = draw(graphs(min_nodes, max_nodes))
    perm = draw(st.permutations(range(g.node_count)))
    return g, list(perm)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.node_count))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes))}
    return build_graph(len(index), [(index[u], index[v]) for u, v in h.edges])


@pytest.fixture
def rng():
    import numpy as np

    return np.random.default_rng(12345)


# acceptance criteria report one line each; collected here and echoed in the
# terminal summary so they show up without -s
ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def criterion():
    def record(number: int, title: str, ok: bool, detail: str = "") -> None:
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES[number] = line
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
