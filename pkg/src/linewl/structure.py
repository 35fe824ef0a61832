"""Regularity, strong regularity, induced subgraphs and line-graph recognition."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .graph import Graph
from .io import parse_graph6

MAX_PATTERN_NODES = 10


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if not (0 <= self.k < self.v or (self.v == 0 and self.k == 0)):
            raise ValueError(f"degree {self.k} invalid for {self.v} nodes")
        if self.lam > self.k or self.mu > self.k or self.lam < 0 or self.mu < 0:
            raise ValueError(f"invalid lambda/mu in {self.as_tuple()}")
        if (self.v - self.k - 1) * self.mu != self.k * (self.k - self.lam - 1):
            raise ValueError(f"{self.as_tuple()} violates (v-k-1)mu = k(k-lambda-1)")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)

    def __str__(self) -> str:
        return "srg({}, {}, {}, {})".format(*self.as_tuple())


@dataclass(frozen=True)
class InducedMatch:
    pattern: Graph
    host: Graph
    mapping: tuple[int, ...]  # pattern node i -> host node mapping[i]


def is_regular(g: Graph) -> int | None:
    """Common degree, or None. The 0-node graph counts as 0-regular."""
    degs = set(g.degrees)
    if not degs:
        return 0
    return degs.pop() if len(degs) == 1 else None


def srg_params(g: Graph, permissive: bool = False) -> SrgParams | None:
    """Strong-regularity parameters of ``g``, or None.

    With no adjacent (resp. non-adjacent) pairs, lambda (resp. mu) is taken
    as 0, so complete graphs give ``(v, v-1, v-2, 0)``. Graphs on fewer than
    two nodes give None unless ``permissive`` is set, in which case the
    one-node graph is ``srg(1, 0, 0, 0)``.
    """
    n = g.node_count
    if n < 2 and not (permissive and n == 1):
        return None
    k = is_regular(g)
    if k is None:
        return None
    lam = mu = None
    adj = g.adjacency
    for u in range(n):
        nu = adj[u]
        for w in range(u + 1, n):
            c = len(nu & adj[w])
            if w in nu:
                if lam is None:
                    lam = c
                elif c != lam:
                    return None
            else:
                if mu is None:
                    mu = c
                elif c != mu:
                    return None
    return SrgParams(n, k, lam or 0, mu or 0)


def is_isoregular(g: Graph, t: int) -> bool:
    """1-isoregular means regular, 2-isoregular means strongly regular."""
    if t == 1:
        return is_regular(g) is not None
    if t == 2:
        return srg_params(g) is not None
    raise ValueError(f"isoregularity order must be 1 or 2, got {t}")


def contains_triangle(g: Graph) -> bool:
    adj = g.adjacency
    return any(adj[u] & adj[v] for u, v in g.edges)


def find_induced(host: Graph, pattern: Graph) -> InducedMatch | None:
    """First induced copy of ``pattern`` in ``host`` by backtracking.

    Pattern nodes are placed in an order where each node (after the first of
    its component) touches an already placed one; candidates are tried in
    increasing host id.
    """
    p = pattern.node_count
    if p > MAX_PATTERN_NODES:
        raise ValueError(f"pattern has {p} nodes, limit is {MAX_PATTERN_NODES}")
    if p > host.node_count:
        return None
    if p == 0:
        return InducedMatch(pattern, host, ())

    order: list[int] = []
    placed: set[int] = set()
    # highest degree first, then grow along edges
    remaining = sorted(range(p), key=lambda u: (-pattern.degree(u), u))
    while remaining:
        frontier = [u for u in remaining if pattern.adjacency[u] & placed]
        nxt = frontier[0] if frontier else remaining[0]
        order.append(nxt)
        placed.add(nxt)
        remaining.remove(nxt)

    padj = pattern.adjacency
    hadj = host.adjacency
    hdeg = host.degrees
    # constraints for position t: earlier positions with / without an edge
    links = [[(s, order[s] in padj[u]) for s in range(t)] for t, u in enumerate(order)]
    need = [pattern.degree(u) for u in order]
    image = [-1] * p
    used: set[int] = set()

    def extend(t: int) -> bool:
        if t == p:
            return True
        cons = links[t]
        anchor = next((s for s, e in cons if e), None)
        cands = sorted(hadj[image[anchor]]) if anchor is not None else range(host.node_count)
        for x in cands:
            if x in used or hdeg[x] < need[t]:
                continue
            nx = hadj[x]
            if all((image[s] in nx) == e for s, e in cons):
                image[t] = x
                used.add(x)
                if extend(t + 1):
                    return True
                used.discard(x)
        return False

    if not extend(0):
        return None
    mapping = [0] * p
    for t, u in enumerate(order):
        mapping[u] = image[t]
    return InducedMatch(pattern, host, tuple(mapping))


def find_claw(g: Graph) -> tuple[int, int, int, int] | None:
    """``(center, x, y, z)`` with x, y, z pairwise non-adjacent neighbors of center."""
    adj = g.adjacency
    for c in range(g.node_count):
        nbrs = sorted(adj[c])
        if len(nbrs) < 3:
            continue
        for i, x in enumerate(nbrs):
            ax = adj[x]
            rest = [y for y in nbrs[i + 1:] if y not in ax]
            for j, y in enumerate(rest):
                ay = adj[y]
                for z in rest[j + 1:]:
                    if z not in ay:
                        return (c, x, y, z)
    return None


def contains_claw(g: Graph) -> bool:
    return find_claw(g) is not None


@lru_cache(maxsize=None)
def beineke_graphs() -> tuple[Graph, ...]:
    """The nine minimal non-line graphs (Beineke 1970), claw first."""
    text = resources.files("linewl").joinpath("data/beineke.g6").read_text(encoding="ascii")
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse_graph6(line))
    return tuple(out)


def forbidden_subgraph(g: Graph) -> InducedMatch | None:
    """First Beineke graph found as an induced subgraph of ``g``."""
    for pat in beineke_graphs():
        m = find_induced(g, pat)
        if m is not None:
            return m
    return None


def is_line_graph(g: Graph) -> bool:
    """True iff ``g`` has none of the nine Beineke graphs as an induced subgraph."""
    if contains_claw(g):
        return False
    return all(find_induced(g, pat) is None for pat in beineke_graphs()[1:])
