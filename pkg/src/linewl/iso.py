"""Exact isomorphism for small graphs and enumeration of isomorphism classes.

:func:`are_isomorphic` is a plain individualization-refinement search: both
graphs are colored jointly by color refinement, one node of the smallest
non-trivial class is pinned in the first graph and tried against every node of
the same color in the second, and the search recurses on the refined
coloring. Any mapping found is re-checked edge by edge before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np
import pynauty

from .graph import Graph, is_connected
from .wl import _compress, _refine_nodes

DEFAULT_MAX_NODES = 64
MAX_ENUMERATION_NODES = 9


class OracleLimitError(RuntimeError):
    """Input too large for exact search; screen with WL refinement instead."""


@dataclass(frozen=True)
class IsoWitness:
    isomorphic: bool
    mapping: tuple[int, ...] | None = None  # node of g1 -> node of g2

    def __bool__(self) -> bool:
        return self.isomorphic


def _stable(colors: list[np.ndarray], graphs: tuple[Graph, Graph]) -> list[np.ndarray]:
    count = len(np.unique(np.concatenate(colors)))
    while True:
        colors = _refine_nodes(colors, graphs)
        new = len(np.unique(np.concatenate(colors)))
        if new == count:
            return colors
        count = new


def _same_histogram(c1: np.ndarray, c2: np.ndarray) -> bool:
    return np.array_equal(np.bincount(c1, minlength=c2.max() + 1 if c2.size else 0),
                          np.bincount(c2, minlength=c1.max() + 1 if c1.size else 0))


def is_isomorphism(g1: Graph, g2: Graph, mapping) -> bool:
    """True iff ``mapping`` is a bijection preserving adjacency and non-adjacency."""
    n = g1.node_count
    if n != g2.node_count or len(mapping) != n or sorted(mapping) != list(range(n)):
        return False
    if g1.edge_count != g2.edge_count:
        return False
    return all(g2.has_edge(mapping[u], mapping[v]) for u, v in g1.edges)


def are_isomorphic(g1: Graph, g2: Graph, max_nodes: int = DEFAULT_MAX_NODES) -> IsoWitness:
    """Decide ``g1 ≅ g2`` exactly; the witness mapping is verified."""
    if max(g1.node_count, g2.node_count) > max_nodes:
        raise OracleLimitError(
            f"exact isomorphism limited to {max_nodes} nodes; use WL screening for larger graphs"
        )
    if (g1.node_count != g2.node_count or g1.edge_count != g2.edge_count
            or g1.degree_sequence != g2.degree_sequence):
        return IsoWitness(False)
    n = g1.node_count
    if n == 0:
        return IsoWitness(True, ())
    graphs = (g1, g2)
    colors = _compress([np.array(g1.degrees), np.array(g2.degrees)])
    colors = _stable(colors, graphs)

    def search(c1: np.ndarray, c2: np.ndarray) -> tuple[int, ...] | None:
        if not _same_histogram(c1, c2):
            return None
        counts = np.bincount(c1)
        if counts.max() == 1:
            inv = np.empty(n, dtype=np.int64)
            inv[c2] = np.arange(n)
            mapping = tuple(int(x) for x in inv[c1])
            return mapping if is_isomorphism(g1, g2, mapping) else None
        target = int(np.flatnonzero(counts == counts[counts > 1].min())[0])
        v = int(np.flatnonzero(c1 == target)[0])
        fresh = int(max(c1.max(), c2.max())) + 1
        for w in np.flatnonzero(c2 == target):
            d1, d2 = c1.copy(), c2.copy()
            d1[v] = fresh
            d2[w] = fresh
            d1, d2 = _stable(_compress([d1, d2]), graphs)
            found = search(d1, d2)
            if found is not None:
                return found
        return None

    mapping = search(*colors)
    if mapping is None:
        return IsoWitness(False)
    if not is_isomorphism(g1, g2, mapping):
        raise AssertionError("isomorphism search returned an invalid mapping")
    return IsoWitness(True, mapping)


# --- enumeration ------------------------------------------------------------


def _certificate(n: int, masks: tuple[int, ...]) -> bytes:
    adj = {u: [w for w in range(n) if masks[u] >> w & 1] for u in range(n)}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def canonical_certificate(g: Graph) -> bytes:
    """nauty certificate: equal for two graphs iff they are isomorphic."""
    adj = {u: sorted(g.adjacency[u]) for u in range(g.node_count)}
    if g.node_count == 0:
        return b""
    return pynauty.certificate(pynauty.Graph(g.node_count, adjacency_dict=adj))


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[tuple[int, ...], ...]:
    """One adjacency-bitmask tuple per isomorphism class on ``n`` nodes."""
    if n == 0:
        return ((),)
    if n == 1:
        return ((0,),)
    seen: dict[bytes, tuple[int, ...]] = {}
    for prev in _level(n - 1):
        for subset in range(1 << (n - 1)):
            masks = tuple(m | ((subset >> u) & 1) << (n - 1) for u, m in enumerate(prev)) + (subset,)
            cert = _certificate(n, masks)
            if cert not in seen:
                seen[cert] = masks
    return tuple(seen.values())


def _from_masks(n: int, masks: tuple[int, ...]) -> Graph:
    return Graph(n, [[w for w in range(n) if m >> w & 1] for m in masks])


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` nodes, in a fixed order.

    Classes on ``n`` nodes are grown from the classes on ``n - 1`` nodes by
    adding a node joined to every possible subset, deduplicated by nauty
    certificate.
    """
    if not 0 <= n <= MAX_ENUMERATION_NODES:
        raise OracleLimitError(f"enumeration supports 0..{MAX_ENUMERATION_NODES} nodes, got {n}")
    if n == MAX_ENUMERATION_NODES:
        level = _level.__wrapped__(n)  # too large to keep cached
    else:
        level = _level(n)
    for masks in level:
        g = _from_masks(n, masks)
        if connected_only and (n == 0 or not is_connected(g)):
            continue
        yield g
