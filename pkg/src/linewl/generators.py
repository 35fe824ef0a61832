"""Named graph families, CFI gadgets and pairs, and strongly regular instances."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

from .graph import Graph, GraphError, build_graph, is_connected
from .line import line_graph


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least 1 node")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 nodes")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def star(n: int) -> Graph:
    """K_{1,n}: node 0 is the center, nodes 1..n the leaves."""
    if n < 1:
        raise GraphError("star needs at least 1 leaf")
    return build_graph(n + 1, [(0, i) for i in range(1, n + 1)], name=f"K1,{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least 1 node")
    return build_graph(n, combinations(range(n), 2), name=f"K{n}")


def empty(n: int) -> Graph:
    return build_graph(n, [], name=f"E{n}")


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("both sides need at least 1 node")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)], name=f"K{a},{b}")


def prism(n: int = 3) -> Graph:
    """Circular ladder C_n x K_2 (n = 3 is the triangular prism)."""
    if n < 3:
        raise GraphError("prism needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return build_graph(2 * n, edges, name=f"prism{n}")


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner, name="petersen")


def wheel(spokes: int) -> Graph:
    """Hub 0 joined to every node of a cycle on ``spokes`` nodes."""
    rim = cycle(spokes)
    edges = [(u + 1, v + 1) for u, v in rim.edges] + [(0, i) for i in range(1, spokes + 1)]
    return build_graph(spokes + 1, edges, name=f"W{spokes}")


# --- CFI construction -------------------------------------------------------


@dataclass(frozen=True)
class CfiGadget:
    k: int
    graph: Graph
    a_nodes: tuple[int, ...]
    b_nodes: tuple[int, ...]
    m_nodes: tuple[int, ...]
    # m_subsets[j] is the even subset (of port indices 0..k-1) labelling m_nodes[j]
    m_subsets: tuple[frozenset[int], ...]


def _even_subsets(k: int) -> list[frozenset[int]]:
    # binary counting order over bitmasks
    return [frozenset(i for i in range(k) if mask >> i & 1)
            for mask in range(1 << k) if bin(mask).count("1") % 2 == 0]


def cfi_gadget(k: int) -> CfiGadget:
    """The gadget X_k.

    Nodes ``0..k-1`` are a_1..a_k, ``k..2k-1`` are b_1..b_k, and the rest are
    the middle nodes m_S for even S, with m_S joined to a_i for i in S and to
    b_i for i not in S.
    """
    if k < 1:
        raise GraphError("gadget arity must be >= 1")
    subsets = _even_subsets(k)
    edges = []
    for j, s in enumerate(subsets):
        m = 2 * k + j
        for i in range(k):
            edges.append((m, i) if i in s else (m, k + i))
    g = build_graph(2 * k + len(subsets), edges, name=f"X{k}")
    return CfiGadget(
        k=k,
        graph=g,
        a_nodes=tuple(range(k)),
        b_nodes=tuple(range(k, 2 * k)),
        m_nodes=tuple(range(2 * k, 2 * k + len(subsets))),
        m_subsets=tuple(subsets),
    )


@dataclass(frozen=True)
class CfiPair:
    base: Graph
    untwisted: Graph
    twisted: Graph
    twist_edge: int
    # offset of each base node's gadget inside the member graphs
    gadget_offsets: tuple[int, ...]


def _cfi_graph(base: Graph, twist: int | None) -> tuple[Graph, list[int]]:
    offsets = []
    gadgets = {}
    edges: list[tuple[int, int]] = []
    total = 0
    for v in range(base.node_count):
        d = base.degree(v)
        gad = gadgets.setdefault(d, cfi_gadget(d))
        offsets.append(total)
        edges.extend((total + x, total + y) for x, y in gad.graph.edges)
        total += gad.graph.node_count
    # port index of edge {v, w} at v = rank of w among v's sorted neighbors
    port = {}
    for v in range(base.node_count):
        for i, w in enumerate(base.neighbors(v)):
            port[v, w] = i
    for e, (u, v) in enumerate(base.edges):
        i, j = port[u, v], port[v, u]
        du, dv = base.degree(u), base.degree(v)
        au, bu = offsets[u] + i, offsets[u] + du + i
        av, bv = offsets[v] + j, offsets[v] + dv + j
        if e == twist:
            edges += [(au, bv), (bu, av)]
        else:
            edges += [(au, av), (bu, bv)]
    return build_graph(total, edges), offsets


def cfi_pair(base: Graph, twist_edge: int | tuple[int, int] = 0) -> CfiPair:
    """CFI pair over ``base``: an X_d gadget per node of degree d, ports of
    each base edge joined a-a and b-b, except on ``twist_edge`` where they
    cross a-b and b-a in the twisted member.

    ``twist_edge`` is an index into ``base.edges`` or an edge ``(u, v)``.
    """
    if base.node_count == 0 or not is_connected(base):
        raise GraphError("CFI base graph must be connected and non-empty")
    if min(base.degrees) < 2:
        raise GraphError("CFI base graph must have minimum degree >= 2")
    if isinstance(twist_edge, tuple):
        u, v = sorted(twist_edge)
        try:
            twist_edge = base.edges.index((u, v))
        except ValueError:
            raise GraphError(f"{(u, v)} is not an edge of the base graph") from None
    if not 0 <= twist_edge < base.edge_count:
        raise GraphError(f"twist edge index {twist_edge} out of range")
    label = base.name or "base"
    plain, offsets = _cfi_graph(base, None)
    twisted, _ = _cfi_graph(base, twist_edge)
    plain.name = f"CFI({label})"
    twisted.name = f"CFI~({label})"
    return CfiPair(base, plain, twisted, twist_edge, tuple(offsets))


def cfi_bases() -> list[Graph]:
    """The cubic base graphs used by the benchmark."""
    return [complete(4), complete_bipartite(3, 3), prism(3), petersen()]


# --- strongly regular families ---------------------------------------------


def rook(m: int = 4) -> Graph:
    """m x m rook's graph K_m [] K_m: cells adjacent when they share a row or column."""
    cells = list(product(range(m), repeat=2))
    edges = [(a, b) for a, b in combinations(range(len(cells)), 2)
             if cells[a][0] == cells[b][0] or cells[a][1] == cells[b][1]]
    return build_graph(m * m, edges, name=f"rook{m}x{m}")


def shrikhande() -> Graph:
    """Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}."""
    conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    cells = list(product(range(4), repeat=2))
    edges = [(a, b) for a, b in combinations(range(16), 2)
             if ((cells[a][0] - cells[b][0]) % 4, (cells[a][1] - cells[b][1]) % 4) in conn]
    return build_graph(16, edges, name="shrikhande")


def triangular(m: int) -> Graph:
    """T(m) = L(K_m)."""
    g = line_graph(complete(m)).result
    g.name = f"T({m})"
    return g


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, e
    raise ValueError(f"{q} is not a prime power")


def _field_elements(q: int):
    """Elements of GF(q) for q = p or p^2 (p odd) with add/mul closures."""
    p, e = _prime_power(q)
    if e == 1:
        return list(range(p)), (lambda x, y: (x - y) % p), (lambda x: x * x % p)
    if e != 2 or p == 2:
        raise ValueError(f"GF({q}) not supported (only p and p^2 for odd p)")
    nonres = next(c for c in range(2, p) if pow(c, (p - 1) // 2, p) == p - 1)

    # a + b t with t^2 = nonres
    def sub(x, y):
        return ((x[0] - y[0]) % p, (x[1] - y[1]) % p)

    def square(x):
        a, b = x
        return ((a * a + nonres * b * b) % p, (2 * a * b) % p)

    return list(product(range(p), repeat=2)), sub, square


def paley(q: int) -> Graph:
    """Paley graph on GF(q), q a prime power with q = 1 mod 4."""
    if q % 4 != 1:
        raise ValueError("Paley graphs need q = 1 mod 4")
    elems, sub, square = _field_elements(q)
    zero = elems[0]
    squares = {square(x) for x in elems if x != zero}
    edges = [(a, b) for a, b in combinations(range(q), 2) if sub(elems[a], elems[b]) in squares]
    return build_graph(q, edges, name=f"paley{q}")


def seidel_switch(g: Graph, subset: Sequence[int]) -> Graph:
    """Toggle every adjacency between ``subset`` and its complement."""
    s = set(subset)
    adj = []
    for u in range(g.node_count):
        nbrs = set(g.adjacency[u])
        for w in range(g.node_count):
            if w != u and (u in s) != (w in s):
                nbrs ^= {w}
        adj.append(nbrs)
    return Graph(g.node_count, adj)


_CHANG_SWITCH_SETS = {
    "chang1": [(0, 1), (2, 3), (4, 5), (6, 7)],
    "chang2": [(i, (i + 1) % 8) for i in range(8)],
    "chang3": [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 7), (3, 7)],
}


def chang(which: int) -> Graph:
    """One of the three Chang graphs, srg(28, 12, 6, 4), by Seidel switching T(8)
    on the nodes of a perfect matching (1), an 8-cycle (2) or C3 + C5 (3)."""
    name = f"chang{which}"
    if name not in _CHANG_SWITCH_SETS:
        raise ValueError("Chang graph index must be 1, 2 or 3")
    emap = line_graph(complete(8))
    subset = [emap.node_of(u, v) for u, v in _CHANG_SWITCH_SETS[name]]
    g = seidel_switch(emap.result, subset)
    g.name = name
    return g


def srg_instances() -> list[tuple[str, Graph]]:
    """Strongly regular graphs built from first principles."""
    out = [("rook4x4", rook(4)), ("shrikhande", shrikhande()), ("petersen", petersen())]
    out += [(f"paley{q}", paley(q)) for q in (5, 9, 13, 17, 25)]
    out += [(f"T({m})", triangular(m)) for m in (4, 5, 6, 7, 8)]
    out += [(f"chang{i}", chang(i)) for i in (1, 2, 3)]
    out += [("co-rook4x4", rook(4).complement()), ("co-shrikhande", shrikhande().complement())]
    return out


def srg_pairs(extended: bool = False) -> list[tuple[str, Graph, Graph]]:
    """Non-isomorphic strongly regular pairs with equal parameters.

    The default five: rook/Shrikhande (16,6,2,2), their complements
    (16,9,4,6), and T(8) against each Chang graph (28,12,6,4).
    ``extended`` adds the three Chang-vs-Chang pairs.
    """
    t8 = triangular(8)
    changs = [chang(i) for i in (1, 2, 3)]
    pairs = [
        ("rook4x4/shrikhande", rook(4), shrikhande()),
        ("co-rook4x4/co-shrikhande", rook(4).complement(), shrikhande().complement()),
    ]
    pairs += [(f"T(8)/chang{i + 1}", t8, c) for i, c in enumerate(changs)]
    if extended:
        pairs += [(f"chang{i + 1}/chang{j + 1}", changs[i], changs[j])
                  for i, j in combinations(range(3), 2)]
    return pairs


def random_graph(n: int, p: float, rng) -> Graph:
    """G(n, p) sample; ``rng`` is a ``numpy.random.Generator``."""
    if n == 0:
        return empty(0)
    coins = rng.random((n, n)) < p
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if coins[u, v]])


def random_relabel(g: Graph, rng) -> Graph:
    return g.relabel([int(x) for x in rng.permutation(g.node_count)])
