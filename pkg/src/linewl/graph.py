"""Immutable undirected simple graphs on nodes ``0..n-1``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised when a graph cannot be built from the given data."""


class Graph:
    """Undirected simple graph with contiguous integer node ids.

    The adjacency is a tuple of frozensets, one per node. Instances are never
    mutated after construction; every transform returns a new graph.
    """

    def __init__(self, node_count: int, adjacency: Sequence[Iterable[int]], name: str | None = None):
        if node_count < 0:
            raise GraphError(f"negative node count {node_count}")
        if len(adjacency) != node_count:
            raise GraphError(f"adjacency has {len(adjacency)} rows for {node_count} nodes")
        adj = tuple(frozenset(nbrs) for nbrs in adjacency)
        for u, nbrs in enumerate(adj):
            if u in nbrs:
                raise GraphError(f"self-loop at node {u}")
            for v in nbrs:
                if not 0 <= v < node_count:
                    raise GraphError(f"neighbor {v} of node {u} out of range")
                if u not in adj[v]:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        self._n = node_count
        self._adj = adj
        self.name = name

    @property
    def node_count(self) -> int:
        return self._n

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def neighbors(self, u: int) -> list[int]:
        """Sorted neighbor list of ``u``."""
        self._check_node(u)
        return sorted(self._adj[u])

    def degree(self, u: int) -> int:
        self._check_node(u)
        return len(self._adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    @cached_property
    def edge_count(self) -> int:
        total = sum(len(nbrs) for nbrs in self._adj)
        assert total % 2 == 0
        return total // 2

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        return tuple((u, v) for u in range(self._n) for v in sorted(self._adj[u]) if u < v)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self._adj)

    @cached_property
    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted in non-increasing order."""
        return tuple(sorted(self.degrees, reverse=True))

    @cached_property
    def adjacency_matrix(self) -> np.ndarray:
        mat = np.zeros((self._n, self._n), dtype=bool)
        for u, v in self.edges:
            mat[u, v] = mat[v, u] = True
        mat.setflags(write=False)
        return mat

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with node ``u`` renamed to ``perm[u]``."""
        if sorted(perm) != list(range(self._n)):
            raise GraphError("relabeling is not a permutation of the node set")
        return build_graph(self._n, [(perm[u], perm[v]) for u, v in self.edges], name=self.name)

    def induced_subgraph(self, nodes: Sequence[int]) -> Graph:
        """Subgraph induced by ``nodes``; node ``nodes[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(nodes)}
        if len(index) != len(nodes):
            raise GraphError("repeated node in induced subgraph selection")
        adj = [[index[w] for w in self._adj[v] if w in index] for v in nodes]
        return Graph(len(nodes), adj)

    def complement(self) -> Graph:
        full = set(range(self._n))
        return Graph(self._n, [full - nbrs - {u} for u, nbrs in enumerate(self._adj)],
                     name=f"co-{self.name}" if self.name else None)

    def _check_node(self, u: int) -> None:
        if not 0 <= u < self._n:
            raise GraphError(f"node {u} out of range for graph on {self._n} nodes")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self.edges))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self._n} m={self.edge_count}>"


@dataclass(frozen=True)
class ComponentDecomposition:
    components: tuple[Graph, ...]
    # original node -> (component index, local index)
    membership: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.components)


def build_graph(n: int, edges: Iterable[tuple[int, int]], name: str | None = None) -> Graph:
    """Build a graph on ``n`` nodes from an edge list.

    Repeated pairs, in either orientation, collapse to a single edge.
    Self-loops and out-of-range ids raise :class:`GraphError`.
    """
    if n < 0:
        raise GraphError(f"negative node count {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for {n} nodes")
        if u == v:
            raise GraphError(f"self-loop at node {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj, name=name)


def degree(g: Graph, u: int) -> int:
    return g.degree(u)


def connected_components(g: Graph) -> ComponentDecomposition:
    """Split ``g`` into connected components.

    Components are ordered by their smallest original node id, and nodes
    inside a component keep their relative order.
    """
    seen = [-1] * g.node_count
    groups: list[list[int]] = []
    for start in range(g.node_count):
        if seen[start] >= 0:
            continue
        comp = len(groups)
        seen[start] = comp
        stack = [start]
        members = []
        while stack:
            u = stack.pop()
            members.append(u)
            for w in g.adjacency[u]:
                if seen[w] < 0:
                    seen[w] = comp
                    stack.append(w)
        groups.append(sorted(members))
    membership = [(0, 0)] * g.node_count
    for ci, members in enumerate(groups):
        for li, u in enumerate(members):
            membership[u] = (ci, li)
    comps = tuple(g.induced_subgraph(members) for members in groups)
    return ComponentDecomposition(comps, tuple(membership))


def is_connected(g: Graph) -> bool:
    # the 0-node graph counts as connected here
    return len(connected_components(g)) <= 1


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    """Place the graphs side by side, offsetting node ids cumulatively."""
    offset = 0
    adj: list[list[int]] = []
    for g in gs:
        adj.extend([w + offset for w in nbrs] for nbrs in g.adjacency)
        offset += g.node_count
    return Graph(offset, adj)
