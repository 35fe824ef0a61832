"""Line graph transform with an explicit edge -> node correspondence."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb

from .graph import Graph

DEFAULT_NODE_BUDGET = 10**6


class SizeLimitError(RuntimeError):
    """An intermediate graph exceeded the configured node budget."""


@dataclass(frozen=True)
class EdgeNodeMap:
    source: Graph
    result: Graph
    # result node id -> source edge (u, v), u < v
    edge_of: tuple[tuple[int, int], ...]

    def node_of(self, u: int, v: int) -> int:
        """Result node standing for source edge ``{u, v}``."""
        key = (u, v) if u < v else (v, u)
        return self._index[key]

    @cached_property
    def _index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edge_of)}


def line_graph(g: Graph) -> EdgeNodeMap:
    """Compute L(g).

    Result node ``i`` is the ``i``-th edge of ``g`` in lexicographic order;
    two result nodes are adjacent when their edges share an endpoint.
    Works component-wise on disconnected input; no edges gives the 0-node graph.
    """
    edges = g.edges
    index = {e: i for i, e in enumerate(edges)}
    adj: list[list[int]] = [[] for _ in edges]
    # every pair of edges at a common endpoint is a result edge; simple graphs
    # share at most one endpoint, so no pair is produced twice
    for u in range(g.node_count):
        incident = [index[(u, w) if u < w else (w, u)] for w in sorted(g.adjacency[u])]
        for a in range(len(incident)):
            x = incident[a]
            for b in range(a + 1, len(incident)):
                y = incident[b]
                adj[x].append(y)
                adj[y].append(x)
    name = f"L({g.name})" if g.name else None
    return EdgeNodeMap(g, Graph(len(edges), adj, name=name), edges)


def line_graph_size(g: Graph) -> tuple[int, int]:
    """``(|V(L(g))|, |E(L(g))|)`` without building L(g)."""
    return g.edge_count, sum(comb(d, 2) for d in g.degrees)


def iterated_line_graph(g: Graph, n: int, budget: int = DEFAULT_NODE_BUDGET) -> Graph:
    """Apply the line graph transform ``n`` times (``n = 0`` returns ``g``).

    Raises :class:`SizeLimitError` before building any graph with more than
    ``budget`` nodes.
    """
    if n < 0:
        raise ValueError(f"negative transform depth {n}")
    if g.node_count > budget:
        raise SizeLimitError(f"input has {g.node_count} nodes, budget is {budget}")
    for step in range(n):
        if g.edge_count > budget:
            raise SizeLimitError(
                f"L^({step + 1}) would have {g.edge_count} nodes, budget is {budget}"
            )
        g = line_graph(g).result
    return g


def line_degree_check(g: Graph, emap: EdgeNodeMap) -> bool:
    """True iff every result node for edge (u, v) has degree d(u) + d(v) - 2."""
    if emap.source is not g and emap.source != g:
        raise ValueError("edge map was not produced from this graph")
    deg = g.degrees
    res = emap.result
    return all(res.degree(x) == deg[u] + deg[v] - 2 for x, (u, v) in enumerate(emap.edge_of))
