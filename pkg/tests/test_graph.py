import networkx as nx
import numpy as np
import pytest
from hypothesis import given

from conftest import graph_and_perm, graphs, to_nx
from linewl.graph import (
    Graph,
    GraphError,
    build_graph,
    connected_components,
    degree,
    disjoint_union,
    is_connected,
)


def node_sets(comps):
    out = [[] for _ in comps.components]
    for u, (ci, _) in enumerate(comps.membership):
        out[ci].append(u)
    return out


def test_build_collapses_duplicates():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1), (1, 2)])
    assert g.edge_count == 2
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 0)]])
def test_build_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        build_graph(3, edges)


def test_adjacency_must_be_symmetric():
    with pytest.raises(GraphError):
        Graph(2, [[1], []])


def test_negative_node_count():
    with pytest.raises(GraphError):
        Graph(-1, [])


def test_degrees_and_matrix():
    g = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert degree(g, 0) == 3
    assert g.degrees == (3, 1, 1, 1)
    assert g.degree_sequence == (3, 1, 1, 1)
    m = g.adjacency_matrix
    assert m.dtype == bool and (m == m.T).all() and m.sum() == 6
    with pytest.raises(ValueError):
        m[0, 0] = True


def test_equality_ignores_name():
    a = build_graph(3, [(0, 1)], name="a")
    b = build_graph(3, [(1, 0)], name="b")
    assert a == b and hash(a) == hash(b)
    assert a != build_graph(3, [(1, 2)])


def test_components_ordering():
    g = build_graph(6, [(4, 5), (0, 2), (1, 3)])
    comps = connected_components(g)
    assert len(comps) == 3
    assert node_sets(comps) == [[0, 2], [1, 3], [4, 5]]
    assert comps.membership[3] == (1, 1)
    assert all(c == build_graph(2, [(0, 1)]) for c in comps.components)
    assert not is_connected(g)
    assert is_connected(Graph(0, []))
    assert is_connected(Graph(1, [[]]))


@given(graphs())
def test_components_match_networkx(g):
    expected = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
    got = sorted(node_sets(connected_components(g)))
    assert got == expected
    assert is_connected(g) == (g.node_count == 0 or nx.is_connected(to_nx(g)))


@given(graph_and_perm())
def test_relabel_preserves_structure(gp):
    g, perm = gp
    h = g.relabel(perm)
    assert h.edge_count == g.edge_count
    assert h.degree_sequence == g.degree_sequence
    for u, v in g.edges:
        assert h.has_edge(perm[u], perm[v])


@given(graphs())
def test_complement_involution(g):
    c = g.complement()
    n = g.node_count
    assert c.edge_count + g.edge_count == n * (n - 1) // 2
    assert c.complement() == g


def test_induced_subgraph_relabels_in_order():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    h = g.induced_subgraph([4, 2, 3])
    assert h.node_count == 3
    assert h.edges == ((0, 2), (1, 2))


def test_disjoint_union():
    a = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    u = disjoint_union([a, a])
    assert u.node_count == 6 and u.edge_count == 6
    assert u.has_edge(3, 5) and not u.has_edge(2, 3)
    assert len(connected_components(u)) == 2
    assert np.array_equal(u.adjacency_matrix[:3, :3], a.adjacency_matrix)
