"""Executable checks of the line-graph results over exhaustive small universes.

Every ``check_*`` function returns a :class:`TheoremReport`; a report passes
iff its counterexample list is empty. Counterexamples are graph6 strings
(pairs joined by a space), sorted so reports are reproducible.
"""

from __future__ import annotations

import time
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import generators as gen
from .graph import Graph, connected_components, disjoint_union, is_connected
from .io import emit_graph6
from .iso import are_isomorphic, enumerate_graphs
from .line import DEFAULT_NODE_BUDGET, iterated_line_graph, line_graph, line_degree_check
from .structure import (
    contains_claw,
    contains_triangle,
    is_line_graph,
    is_regular,
    srg_params,
)
from .wl import color_refinement, wl_refine


@dataclass
class TheoremReport:
    theorem: str
    universe: str
    cases: int = 0
    counterexamples: list[str] = field(default_factory=list)
    seconds: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "universe": self.universe,
            "cases": self.cases,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
            "seconds": round(self.seconds, 3),
            "details": self.details,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.counterexamples)} counterexamples)"
        return f"{self.theorem}: {status} - {self.cases} cases over {self.universe} in {self.seconds:.1f}s"


def _g6(g: Graph) -> str:
    return emit_graph6(g).decode()


def _finish(report: TheoremReport, start: float) -> TheoremReport:
    report.counterexamples.sort()
    report.seconds = time.perf_counter() - start
    return report


def connected_universe(n_max: int, n_min: int = 1) -> Iterable[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_graphs(n, connected_only=True)


def _iso_classes(graphs: Sequence[Graph]) -> list[list[int]]:
    """Partition indices of ``graphs`` into isomorphism classes.

    Graphs are bucketed by cheap invariants (sizes, degree sequence, stable
    1-WL color histogram); the exact oracle only runs inside a bucket.
    """
    buckets: dict[tuple, list[int]] = defaultdict(list)
    for i, g in enumerate(graphs):
        hist = tuple(sorted(np.bincount(color_refinement(g)).tolist())) if g.node_count else ()
        buckets[(g.node_count, g.edge_count, g.degree_sequence, hist)].append(i)
    classes: list[list[int]] = []
    for members in buckets.values():
        reps: list[list[int]] = []
        for i in members:
            for cls in reps:
                if are_isomorphic(graphs[cls[0]], graphs[i]):
                    cls.append(i)
                    break
            else:
                reps.append([i])
        classes.extend(reps)
    return classes


def check_whitney(n_max: int = 7) -> TheoremReport:
    """G ≅ H iff L(G) ≅ L(H) over connected graphs on <= n_max nodes, except {C3, K1,3}."""
    if n_max > 8:
        raise ValueError("Whitney check supports n_max <= 8")
    start = time.perf_counter()
    report = TheoremReport("whitney", f"connected graphs, n <= {n_max}")
    roots = list(connected_universe(n_max))
    lines = [line_graph(g).result for g in roots]
    n = len(roots)
    report.cases = n * (n + 1) // 2

    # enumeration yields one graph per class; confirm with the oracle
    root_classes = _iso_classes(roots)
    for cls in root_classes:
        if len(cls) > 1:
            report.counterexamples.append("duplicate roots: " + " ".join(_g6(roots[i]) for i in cls))

    rng = np.random.default_rng(0)
    for g, lg in zip(roots, lines):
        h = gen.random_relabel(g, rng)
        if not are_isomorphic(lg, line_graph(h).result):
            report.counterexamples.append(f"{_g6(g)} {_g6(h)}")

    def is_claw_triangle(cls: list[int]) -> bool:
        if len(cls) != 2:
            return False
        a, b = (roots[i] for i in cls)
        c3, claw = gen.cycle(3), gen.star(3)
        return ((are_isomorphic(a, c3) and are_isomorphic(b, claw))
                or (are_isomorphic(a, claw) and are_isomorphic(b, c3)))

    exceptions = []
    hits = 0
    for cls in _iso_classes(lines):
        if len(cls) > 1:
            exceptions.append(sorted(_g6(roots[i]) for i in cls))
            if is_claw_triangle(cls):
                hits += 1
            else:
                report.counterexamples.append(" ".join(exceptions[-1]))
    if n_max >= 4 and hits != 1:
        report.counterexamples.append(f"exception pair C3/K1,3 seen {hits} times")
    report.details = {"exception_pairs": exceptions, "roots": n}
    return _finish(report, start)


def check_line_degree(n_max: int = 7, random_count: int = 1000, max_random_nodes: int = 50,
                      seed: int = 0) -> TheoremReport:
    """d_L(w_e) = d(u) + d(v) - 2 for every edge e = uv."""
    start = time.perf_counter()
    report = TheoremReport("degree", f"all graphs n <= {n_max} + {random_count} random graphs n <= {max_random_nodes}")
    rng = np.random.default_rng(seed)
    graphs: list[Graph] = []
    for n in range(n_max + 1):
        graphs.extend(enumerate_graphs(n))
    for _ in range(random_count):
        graphs.append(gen.random_graph(int(rng.integers(1, max_random_nodes + 1)), float(rng.uniform(0.05, 0.6)), rng))
    for g in graphs:
        emap = line_graph(g)
        report.cases += g.edge_count
        if not line_degree_check(g, emap):
            report.counterexamples.append(_g6(g))
    return _finish(report, start)


def check_claw_free(n_max: int = 9, random_count: int = 200, max_random_nodes: int = 40,
                    seed: int = 1) -> TheoremReport:
    """L(G) never has an induced K1,3."""
    start = time.perf_counter()
    report = TheoremReport("claw-free", f"all graphs n <= {n_max} + {random_count} random graphs n <= {max_random_nodes}")
    rng = np.random.default_rng(seed)

    def graphs():
        for n in range(n_max + 1):
            yield from enumerate_graphs(n)
        for _ in range(random_count):
            yield gen.random_graph(int(rng.integers(1, max_random_nodes + 1)), float(rng.uniform(0.05, 0.5)), rng)

    for g in graphs():
        report.cases += 1
        if contains_claw(line_graph(g).result):
            report.counterexamples.append(_g6(g))
    return _finish(report, start)


def check_cfi_exclusion(ks: Sequence[int] = (3, 4, 5, 6), bases: Sequence[Graph] | None = None) -> TheoremReport:
    """X_k (k >= 3) and CFI members built from such gadgets are not line graphs."""
    start = time.perf_counter()
    if any(k < 3 or k > 6 for k in ks):
        raise ValueError("gadget arities must lie in 3..6")
    bases = list(bases) if bases is not None else gen.cfi_bases() + [gen.complete(5)]
    report = TheoremReport("cfi", f"X_k for k in {list(ks)} + CFI pairs over {len(bases)} bases")
    for k in ks:
        gad = gen.cfi_gadget(k).graph
        report.cases += 1
        if not contains_claw(gad) or is_line_graph(gad):
            report.counterexamples.append(_g6(gad))
    for base in bases:
        if max(base.degrees) < 3:
            continue
        pair = gen.cfi_pair(base)
        for member in (pair.untwisted, pair.twisted):
            report.cases += 1
            if not contains_claw(member) or is_line_graph(member):
                report.counterexamples.append(_g6(member))
    report.details = {"X2_claw_free": not contains_claw(gen.cfi_gadget(2).graph)}
    return _finish(report, start)


def _cycle_exception(g: Graph) -> bool:
    return 3 <= g.node_count <= 5 and is_connected(g) and set(g.degrees) == {2}


def _is_star(g: Graph) -> bool:
    n = g.node_count
    return n >= 2 and g.edge_count == n - 1 and max(g.degrees) == n - 1


def check_srg_break(n_max: int = 8, budget: int = DEFAULT_NODE_BUDGET) -> TheoremReport:
    """Every connected G other than C3, C4, C5 has some L^j(G), j <= 2, not strongly regular."""
    start = time.perf_counter()
    report = TheoremReport("srg-break", f"connected graphs, n <= {n_max}")
    fixed, both_srg = [], []
    for g in connected_universe(n_max):
        report.cases += 1
        chain = [g]
        if _cycle_exception(g):
            # C3, C4, C5 are their own line graphs and stay strongly regular
            for _ in range(2):
                chain.append(line_graph(chain[-1]).result)
            if not (all(srg_params(h) is not None for h in chain) and are_isomorphic(chain[1], g)):
                report.counterexamples.append(_g6(g))
            fixed.append(_g6(g))
            continue
        s0 = srg_params(g) is not None
        l1 = line_graph(g).result
        s1 = srg_params(l1) is not None
        s2 = s1 and srg_params(iterated_line_graph(l1, 1, budget)) is not None
        if s1 and s2:
            both_srg.append(_g6(g))
        if s0 and s1 and s2:
            report.counterexamples.append(_g6(g))
    report.details = {
        "fixed_exceptions": fixed,
        # L(G) and L^2(G) both srg: expected to be exactly the stars K1,n with n >= 3
        "line_images_srg_twice": both_srg,
    }
    return _finish(report, start)


def check_srg_line_graphs(instances: Sequence[tuple[str, Graph]] | None = None) -> TheoremReport:
    """Connected, triangle-containing, non-complete srg G: L(G) is not strongly regular."""
    start = time.perf_counter()
    instances = list(instances) if instances is not None else gen.srg_instances()
    report = TheoremReport("srg-line", f"{len(instances)} strongly regular instances")
    applied = []
    for name, g in instances:
        p = srg_params(g)
        if p is None:
            report.counterexamples.append(f"{name} is not strongly regular")
            continue
        if not is_connected(g) or not contains_triangle(g) or p.mu == 0:
            continue
        report.cases += 1
        applied.append(name)
        if srg_params(line_graph(g).result) is not None:
            report.counterexamples.append(_g6(g))
    report.details = {"applied_to": applied}
    return _finish(report, start)


def check_small_degree_srg(n_max: int = 6) -> TheoremReport:
    """Connected srg graphs with degree <= 2 are exactly K1, K2, C3, C4, C5."""
    start = time.perf_counter()
    report = TheoremReport("small-srg", f"connected graphs, n <= {n_max}, permissive srg")
    found = []
    for g in connected_universe(n_max):
        report.cases += 1
        p = srg_params(g, permissive=True)
        if p is not None and p.k <= 2:
            found.append(g)
    expected = [gen.complete(1), gen.complete(2)] + [gen.cycle(n) for n in (3, 4, 5) if n <= n_max]
    unmatched = list(expected)
    for g in found:
        hit = next((e for e in unmatched if are_isomorphic(e, g)), None)
        if hit is None:
            report.counterexamples.append(_g6(g))
        else:
            unmatched.remove(hit)
    report.counterexamples += [f"missing {_g6(e)}" for e in unmatched]
    report.details = {"found": [_g6(g) for g in found]}
    return _finish(report, start)


def check_regularity_preserved(samples: Iterable[Graph] | None = None) -> TheoremReport:
    """d-regular G gives a (2d-2)-regular L(G) on d|V|/2 nodes."""
    start = time.perf_counter()
    if samples is None:
        samples = [g for g in connected_universe(8, n_min=2) if is_regular(g) is not None]
        samples += [gen.petersen(), gen.complete(7), gen.cycle(9), gen.prism(5)]
        samples += [g for _, g in gen.srg_instances()]
        samples += [gen.cfi_pair(b).twisted for b in gen.cfi_bases()]
        universe = "regular connected graphs n <= 8 + named regular families"
    else:
        samples = list(samples)
        universe = f"{len(samples)} samples"
    report = TheoremReport("regular", universe)
    for g in samples:
        d = is_regular(g)
        if d is None or g.edge_count == 0:
            continue
        report.cases += 1
        lg = line_graph(g).result
        if is_regular(lg) != 2 * d - 2 or lg.node_count * 2 != d * g.node_count:
            report.counterexamples.append(_g6(g))
    return _finish(report, start)


def growth_sizes(g: Graph, window: int = 4, budget: int = DEFAULT_NODE_BUDGET) -> list[int]:
    """``[|V(L^j(g))| for j in 0..window]``; the last size is read off edge counts."""
    sizes = [g.node_count]
    h = g
    for j in range(window):
        if j == window - 1:
            sizes.append(h.edge_count)
            break
        h = iterated_line_graph(h, 1, budget)
        sizes.append(h.node_count)
    return sizes


def classify_growth(sizes: Sequence[int]) -> str:
    """'shrinking', 'fixed', 'growing' or 'unclear' from a size sequence."""
    if all(a > b or a == b == 0 for a, b in zip(sizes, sizes[1:])):
        return "shrinking"
    if len(set(sizes[1:])) == 1:
        return "fixed"
    if len(sizes) >= 5 and all(a < b for a, b in zip(sizes[2:], sizes[3:])):
        return "growing"
    return "unclear"


def expected_growth(g: Graph) -> str:
    comps = connected_components(g)
    if len(comps) != 1:
        raise ValueError("growth classes are defined for connected graphs")
    if g.node_count == 1 or (max(g.degrees) <= 2 and g.edge_count == g.node_count - 1):
        return "shrinking"
    if set(g.degrees) == {2} or _is_star(g) and g.node_count == 4:
        return "fixed"
    return "growing"


def check_growth(samples: Iterable[Graph] | None = None, window: int = 4,
                 budget: int = DEFAULT_NODE_BUDGET) -> TheoremReport:
    """Paths shrink, cycles and K1,3 settle, other connected graphs keep growing."""
    start = time.perf_counter()
    if not 4 <= window <= 5:
        raise ValueError("window must be 4 or 5")
    if samples is None:
        samples = list(connected_universe(6))
        samples += [gen.path(8), gen.cycle(8), gen.complete(5), gen.petersen()]
        universe = "connected graphs n <= 6 + named families"
    else:
        samples = list(samples)
        universe = f"{len(samples)} samples"
    report = TheoremReport("growth", f"{universe}, window {window}")
    tally: dict[str, int] = defaultdict(int)
    for g in samples:
        report.cases += 1
        got = classify_growth(growth_sizes(g, window, budget))
        tally[got] += 1
        if got != expected_growth(g):
            report.counterexamples.append(_g6(g))
    report.details = dict(tally)
    return _finish(report, start)


def check_disconnected_srg(ns: Sequence[int] = (3, 4, 5, 6), copies: Sequence[int] = (2, 3),
                           depth: int = 4) -> TheoremReport:
    """Unions of equal K_n, n >= 4, lose strong regularity by L^2; unions of C3 are fixed."""
    start = time.perf_counter()
    report = TheoremReport("disconnected-srg", f"unions of {list(copies)} copies of K_n, n in {list(ns)}")
    for n in ns:
        for c in copies:
            g = disjoint_union([gen.complete(n)] * c)
            report.cases += 1
            if n == 3:
                h = g
                for _ in range(depth):
                    h = line_graph(h).result
                    if not are_isomorphic(h, g):
                        report.counterexamples.append(_g6(g))
                        break
            elif srg_params(iterated_line_graph(g, 2)) is not None:
                report.counterexamples.append(_g6(g))
    return _finish(report, start)


def check_wl_soundness(n_max: int = 6, random_pairs: int = 500, ks: Sequence[int] = (1, 2, 3),
                       max_random_nodes: int = 12, seed: int = 2) -> TheoremReport:
    """k-WL never separates graphs the exact oracle calls isomorphic."""
    start = time.perf_counter()
    report = TheoremReport("wl-soundness", f"connected pairs n <= {n_max} + {random_pairs} relabelled pairs, k in {list(ks)}")
    rng = np.random.default_rng(seed)
    by_size: dict[int, list[Graph]] = defaultdict(list)
    for g in connected_universe(n_max):
        by_size[g.node_count].append(g)
    pairs = []
    for graphs in by_size.values():
        for i, g in enumerate(graphs):
            for h in graphs[i:]:
                pairs.append((g, gen.random_relabel(h, rng)))
    for _ in range(random_pairs):
        g = gen.random_graph(int(rng.integers(1, max_random_nodes + 1)), float(rng.uniform(0.1, 0.7)), rng)
        pairs.append((g, gen.random_relabel(g, rng)))
    iso_pairs = 0
    for g, h in pairs:
        iso = are_isomorphic(g, h).isomorphic
        iso_pairs += iso
        if not iso:
            continue
        for k in ks:
            report.cases += 1
            if wl_refine(g, h, k)[1].distinguished:
                report.counterexamples.append(f"k={k} {_g6(g)} {_g6(h)}")
    report.details = {"pairs": len(pairs), "isomorphic_pairs": iso_pairs}
    return _finish(report, start)


CHECKS: dict[str, Callable[..., TheoremReport]] = {
    "whitney": check_whitney,
    "degree": check_line_degree,
    "claw": check_claw_free,
    "cfi": check_cfi_exclusion,
    "srg": check_srg_break,
    "srg-line": check_srg_line_graphs,
    "small-srg": check_small_degree_srg,
    "regular": check_regularity_preserved,
    "growth": check_growth,
    "disconnected": check_disconnected_srg,
    "soundness": check_wl_soundness,
}


def run_checks(names: Sequence[str], n_max: int | None = None) -> list[TheoremReport]:
    """Run the named checks; ``n_max`` overrides the exhaustive bound where one exists."""
    if "all" in names:
        names = list(CHECKS)
    out = []
    for name in names:
        fn = CHECKS[name]
        if n_max is not None and name in ("whitney", "degree", "claw", "srg", "small-srg", "soundness"):
            out.append(fn(n_max=n_max))
        else:
            out.append(fn())
    return out
