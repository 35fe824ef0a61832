"""The eleven acceptance criteria, each at its stated bound and tolerance.

Run alone with ``pytest tests/test_acceptance.py -v``; the terminal summary
lists one PASS/FAIL line per criterion.
"""

import time

import numpy as np
import pytest

from linewl import generators as gen
from linewl.bench import BenchConfig, run_bench
from linewl.io import emit_graph6, parse_graph6
from linewl.iso import are_isomorphic, enumerate_graphs
from linewl.line import line_graph
from linewl.structure import is_regular, srg_params
from linewl.theorems import (
    check_cfi_exclusion,
    check_claw_free,
    check_small_degree_srg,
    check_line_degree,
    check_srg_break,
    check_whitney,
    check_wl_soundness,
    connected_universe,
)
from linewl.wl import wl_distinguishes_pair


def _from_report(criterion, number, title, report, limit):
    ok = report.passed and report.seconds < limit
    detail = f"{report.cases} cases, {len(report.counterexamples)} counterexamples, {report.seconds:.1f}s"
    if report.counterexamples:
        detail += "; first: " + report.counterexamples[0]
    criterion(number, title, ok, detail)


def test_01_whitney(criterion):
    r = check_whitney(7)
    (pair,) = r.details["exception_pairs"]
    a, b = (parse_graph6(x) for x in pair)
    assert {a.node_count, b.node_count} == {3, 4}
    _from_report(criterion, 1, "Whitney exhaustive, connected n <= 7, sole exception {C3, K1,3}", r, 300)


def test_02_line_degree(criterion):
    r = check_line_degree(n_max=7, random_count=1000, max_random_nodes=50)
    _from_report(criterion, 2, "degree identity on all graphs n <= 7 + 1000 random n <= 50", r, 60)


@pytest.mark.slow
def test_03_claw_free(criterion):
    r = check_claw_free(n_max=9, random_count=200, max_random_nodes=40)
    _from_report(criterion, 3, "line graphs are claw-free, n <= 9 exhaustive + 200 random n <= 40", r, 300)


def test_04_cfi_not_line_graphs(criterion):
    r = check_cfi_exclusion()
    _from_report(criterion, 4, "X_k gadgets and CFI members are not line graphs", r, 60)


@pytest.mark.slow
def test_05_strongly_regular_table(criterion):
    start = time.perf_counter()
    pairs = gen.srg_pairs()
    assert any(srg_params(a).as_tuple() == (16, 6, 2, 2) for _, a, _ in pairs)
    for name, a, b in pairs:
        assert srg_params(a) == srg_params(b) and not are_isomorphic(a, b), name
    result = run_bench(BenchConfig(ks=[3, 4], depths=[0, 1], recipe="srg"))
    acc = {s: result.accuracy("strongly-regular", *s) for s in [(3, 0), (3, 1), (4, 0)]}
    ok = len(pairs) >= 5 and acc == {(3, 0): 0.0, (3, 1): 1.0, (4, 0): 1.0}
    seconds = time.perf_counter() - start
    criterion(5, "srg pairs: 3-WL 0% at depth 0, 100% at depth 1; 4-WL 100% at depth 0", ok and seconds < 1800,
              f"{len(pairs)} pairs, accuracies {acc}, {seconds:.1f}s")


@pytest.mark.slow
def test_06_cfi_invariance(criterion):
    start = time.perf_counter()
    rows, ok = [], True
    for base in gen.cfi_bases():
        p = gen.cfi_pair(base)
        d0 = wl_distinguishes_pair(p.untwisted, p.twisted, 3, 0).distinguished
        d1 = wl_distinguishes_pair(p.untwisted, p.twisted, 3, 1).distinguished
        w1 = wl_distinguishes_pair(p.untwisted, p.twisted, 1, 0).distinguished
        ok &= d0 == d1 and not w1
        rows.append(f"{base.name}: 3-WL {d0}/{d1}, 1-WL {w1}")
    seconds = time.perf_counter() - start
    criterion(6, "CFI: 3-WL verdict unchanged by L, 1-WL never distinguishes", ok and seconds < 1800,
              "; ".join(rows) + f"; {seconds:.1f}s")


def test_07_srg_break(criterion):
    r = check_srg_break(8)
    fixed = [parse_graph6(x) for x in r.details["fixed_exceptions"]]
    cycles_fixed = len(fixed) == 3 and all(
        any(are_isomorphic(f, gen.cycle(n)) for f in fixed) for n in (3, 4, 5))
    ok = r.passed and cycles_fixed and r.seconds < 900
    criterion(7, "connected n <= 8 lose strong regularity within two transforms except C3, C4, C5", ok,
              f"{r.cases} cases, {len(r.counterexamples)} counterexamples, {r.seconds:.1f}s")


def test_08_small_degree_srg(criterion):
    r = check_small_degree_srg(6)
    _from_report(criterion, 8, "connected srg with k <= 2, n <= 6: exactly K1, K2, C3, C4, C5", r, 60)


def test_09_wl_soundness(criterion):
    r = check_wl_soundness(n_max=6, random_pairs=500, ks=(1, 2, 3))
    _from_report(criterion, 9, "k-WL (k <= 3) never separates isomorphic pairs", r, 600)


def test_10_graph6_round_trip(criterion):
    start = time.perf_counter()
    rng = np.random.default_rng(10)
    bad = cases = 0
    for n in range(9):
        for g in enumerate_graphs(n):
            cases += 1
            bad += parse_graph6(emit_graph6(g)) != g
    for _ in range(10_000):
        g = gen.random_graph(int(rng.integers(0, 80)), float(rng.uniform(0, 1)), rng)
        cases += 1
        bad += parse_graph6(emit_graph6(g)) != g
    seconds = time.perf_counter() - start
    criterion(10, "graph6 parse(emit(G)) == G, n <= 8 exhaustive + 10,000 random", bad == 0 and seconds < 120,
              f"{cases} graphs, {bad} failures, {seconds:.1f}s")


def test_11_size_laws(criterion):
    rng = np.random.default_rng(11)
    graphs = [g for n in range(8) for g in enumerate_graphs(n)]
    graphs += [gen.random_graph(int(rng.integers(1, 60)), float(rng.uniform(0, 0.5)), rng) for _ in range(500)]
    size_bad = sum(line_graph(g).result.node_count != g.edge_count for g in graphs)
    regular = [g for g in connected_universe(8) if is_regular(g)]
    regular += [gen.petersen(), gen.cycle(11), gen.complete(9), gen.rook(5), gen.shrikhande()]
    regular += [g for _, g in gen.srg_instances()]
    reg_bad = sum(line_graph(g).result.node_count * 2 != is_regular(g) * g.node_count for g in regular)
    criterion(11, "|V(L(G))| = |E(G)|; d-regular G gives dn/2 nodes", size_bad == 0 and reg_bad == 0,
              f"{len(graphs)} graphs, {len(regular)} regular graphs, {size_bad + reg_bad} failures")
