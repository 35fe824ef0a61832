"""k-dimensional Weisfeiler-Leman refinement run jointly on a pair of graphs.

The k >= 2 variant is the oblivious one: a k-tuple ``u`` is recolored by its
old color together with, for every position ``i``, the multiset of colors of
``u[w/i]`` over all nodes ``w``. Keeping the multisets per position is the
same information as one multiset over the pairs ``(color, i)``.

k = 1 is classic color refinement over neighbor-color multisets.

Both graphs share one color dictionary per round. Colors are dense integers
assigned in sorted order of their signatures, so the histograms do not depend
on node labels or on which graph is passed first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .graph import Graph
from .line import DEFAULT_NODE_BUDGET, SizeLimitError, iterated_line_graph

__all__ = [
    "ColorPartition",
    "WlVerdict",
    "DEFAULT_TUPLE_BUDGET",
    "atomic_type",
    "initial_coloring",
    "wl_refine",
    "wl_distinguishes_pair",
    "color_refinement",
]

DEFAULT_TUPLE_BUDGET = 2 * 10**7

# pair states in an atomic type
EQUAL, ADJACENT, NON_ADJACENT = 0, 1, 2


@dataclass
class ColorPartition:
    k: int
    # one (hist_g1, hist_g2) per round, round 0 being the initial coloring
    round_histograms: list[tuple[dict[int, int], dict[int, int]]]
    rounds: int
    stable: bool
    # final color of every k-tuple, tuples enumerated in row-major order
    stable_colors: tuple[np.ndarray, ...] = field(repr=False)

    @property
    def rounds_to_stability(self) -> int | None:
        return self.rounds if self.stable else None

    def class_counts(self) -> list[int]:
        """Number of distinct colors (over both graphs) in each round."""
        return [len(set(h1) | set(h2)) for h1, h2 in self.round_histograms]


@dataclass(frozen=True)
class WlVerdict:
    distinguished: bool
    decided_at_round: int | None
    k: int
    rounds: int = 0


def atomic_type(g: Graph, tup: Sequence[int]) -> tuple[int, ...]:
    """Equality/adjacency pattern of an ordered tuple.

    One entry per position pair ``(i, j)``, ``i < j``, in lexicographic order:
    ``EQUAL``, ``ADJACENT`` or ``NON_ADJACENT``.
    """
    for u in tup:
        if not 0 <= u < g.node_count:
            raise ValueError(f"node {u} out of range")
    out = []
    for i, j in combinations(range(len(tup)), 2):
        a, b = tup[i], tup[j]
        if a == b:
            out.append(EQUAL)
        elif g.has_edge(a, b):
            out.append(ADJACENT)
        else:
            out.append(NON_ADJACENT)
    return tuple(out)


def _atomic_codes(g: Graph, k: int) -> np.ndarray:
    """Base-3 code of :func:`atomic_type` for every k-tuple, shape ``(n,)*k``."""
    n = g.node_count
    pair_state = np.where(g.adjacency_matrix, ADJACENT, NON_ADJACENT).astype(np.int64)
    np.fill_diagonal(pair_state, EQUAL)
    codes = np.zeros((n,) * k, dtype=np.int64)
    pairs = list(combinations(range(k), 2))
    for idx, (i, j) in enumerate(pairs):
        shape = [1] * k
        shape[i] = shape[j] = n
        weight = 3 ** (len(pairs) - 1 - idx)
        codes = codes + weight * pair_state.reshape(shape)
    return codes


def _compress(values: Sequence[np.ndarray]) -> list[np.ndarray]:
    """Replace values by their rank among the distinct values of all arrays."""
    flat = np.concatenate([v.ravel() for v in values])
    _, inv = np.unique(flat, return_inverse=True)
    out, start = [], 0
    for v in values:
        out.append(inv[start:start + v.size].reshape(v.shape).astype(np.int64))
        start += v.size
    return out


def _compress_rows(rows: Sequence[np.ndarray]) -> list[np.ndarray]:
    """Dense ids for the distinct rows of 2-D arrays of equal width."""
    flat = np.concatenate(rows, axis=0)
    if flat.shape[0] == 0:
        return [np.zeros(0, dtype=np.int64) for _ in rows]
    # fold columns left to right; ids stay in lexicographic row order
    inv = np.zeros(flat.shape[0], dtype=np.int64)
    for j in range(flat.shape[1]):
        col = flat[:, j].astype(np.int64)
        width = int(col.max()) + 1
        _, inv = np.unique(inv * width + col, return_inverse=True)
        inv = inv.reshape(-1)
    out, start = [], 0
    for r in rows:
        out.append(inv[start:start + r.shape[0]].astype(np.int64))
        start += r.shape[0]
    return out


def _combine(left: Sequence[np.ndarray], right: Sequence[np.ndarray]) -> list[np.ndarray]:
    """Dense ids of the pairs (left, right), ordered lexicographically."""
    width = 1 + max(int(r.max()) if r.size else 0 for r in right)
    return _compress([a * width + b for a, b in zip(left, right)])


def _histogram(colors: np.ndarray) -> dict[int, int]:
    vals, counts = np.unique(colors, return_counts=True)
    return {int(c): int(m) for c, m in zip(vals, counts)}


def _refine_tuples(colors: list[np.ndarray], k: int) -> list[np.ndarray]:
    n = colors[0].shape[0]
    if n == 0:
        return colors
    new = list(colors)
    for i in range(k):
        rows = []
        for c in colors:
            ordered = np.sort(c, axis=i)
            rows.append(np.moveaxis(ordered, i, -1).reshape(-1, n))
        ids = _compress_rows(rows)
        expanded = []
        for c, m in zip(colors, ids):
            shape = list(c.shape)
            shape[i] = 1
            expanded.append(np.broadcast_to(m.reshape(shape), c.shape))
        new = _combine(new, expanded)
    return new


def _refine_nodes(colors: list[np.ndarray], graphs: Sequence[Graph]) -> list[np.ndarray]:
    ncolors = 1 + max(int(c.max()) if c.size else 0 for c in colors)
    rows = []
    for c, g in zip(colors, graphs):
        onehot = np.zeros((g.node_count, ncolors), dtype=np.int64)
        onehot[np.arange(g.node_count), c] = 1
        counts = g.adjacency_matrix.astype(np.int64) @ onehot
        rows.append(np.column_stack([c, counts]))
    return _compress_rows(rows)


def initial_coloring(graphs: Sequence[Graph], k: int) -> list[np.ndarray]:
    """Shared round-0 colors: atomic types for k >= 2, one color for k = 1."""
    if k == 1:
        return [np.zeros(g.node_count, dtype=np.int64) for g in graphs]
    return _compress([_atomic_codes(g, k) for g in graphs])


def _run(
    graphs: Sequence[Graph],
    k: int,
    max_rounds: int | None,
    budget: int,
    early_exit: bool,
) -> tuple[ColorPartition, WlVerdict]:
    if k < 1:
        raise ValueError(f"WL dimension must be >= 1, got {k}")
    for g in graphs:
        if g.node_count ** k > budget:
            raise SizeLimitError(
                f"{k}-WL on {g.node_count} nodes needs {g.node_count ** k} tuples, budget is {budget}"
            )
    if max_rounds is None:
        max_rounds = max(g.node_count for g in graphs) ** k + 1

    colors = initial_coloring(graphs, k)
    hist = [tuple(_histogram(c) for c in colors)]
    first_diff = None

    def differs(h) -> bool:
        return len(h) == 2 and h[0] != h[1]

    if differs(hist[0]):
        first_diff = 0
    same_size = len({g.node_count for g in graphs}) == 1
    n_classes = len(set().union(*hist[0]))
    rounds = 0
    stable = False
    while rounds < max_rounds and not (early_exit and first_diff is not None):
        if not same_size:
            # tuple spaces of different sizes: the round-0 histograms already differ
            break
        if k == 1:
            colors = _refine_nodes(colors, graphs)
        else:
            colors = _refine_tuples(colors, k)
        rounds += 1
        h = tuple(_histogram(c) for c in colors)
        hist.append(h)
        if first_diff is None and differs(h):
            first_diff = rounds
        count = len(set().union(*h))
        if count == n_classes:
            stable = True
            break
        n_classes = count

    partition = ColorPartition(
        k=k,
        round_histograms=[h if len(h) == 2 else (h[0], {}) for h in hist],
        rounds=rounds,
        stable=stable,
        stable_colors=tuple(c.ravel() for c in colors),
    )
    verdict = WlVerdict(first_diff is not None, first_diff, k, rounds)
    return partition, verdict


def wl_refine(
    g1: Graph,
    g2: Graph,
    k: int,
    max_rounds: int | None = None,
    *,
    budget: int = DEFAULT_TUPLE_BUDGET,
    early_exit: bool = True,
) -> tuple[ColorPartition, WlVerdict]:
    """Run k-WL jointly on ``g1`` and ``g2``.

    Stops at the first round whose color histograms differ (unless
    ``early_exit`` is off), when the joint partition stops splitting, or after
    ``max_rounds`` rounds (default ``n**k + 1``). ``budget`` caps the number of
    k-tuples per graph.
    """
    return _run([g1, g2], k, max_rounds, budget, early_exit)


def color_refinement(g: Graph, k: int = 1, budget: int = DEFAULT_TUPLE_BUDGET) -> np.ndarray:
    """Stable k-WL colors of a single graph (node colors for k = 1)."""
    partition, _ = _run([g], k, None, budget, early_exit=False)
    return partition.stable_colors[0]


def wl_distinguishes_pair(
    g1: Graph,
    g2: Graph,
    k: int,
    depth: int = 0,
    *,
    max_rounds: int | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
    tuple_budget: int = DEFAULT_TUPLE_BUDGET,
) -> WlVerdict:
    """k-WL verdict on ``L^(depth)(g1)`` vs ``L^(depth)(g2)``.

    Pairs whose transformed node or edge counts differ are reported as
    distinguished without running the refinement.
    """
    if k < 1:
        raise ValueError(f"WL dimension must be >= 1, got {k}")
    h1 = iterated_line_graph(g1, depth, node_budget)
    h2 = iterated_line_graph(g2, depth, node_budget)
    if h1.node_count != h2.node_count or h1.edge_count != h2.edge_count:
        return WlVerdict(True, None, k, 0)
    _, verdict = wl_refine(h1, h2, k, max_rounds, budget=tuple_budget)
    return verdict
