import json

import pytest

from linewl import generators as gen
from linewl.graph import disjoint_union
from linewl.io import parse_graph6
from linewl.iso import are_isomorphic
from linewl.theorems import (
    CHECKS,
    TheoremReport,
    check_cfi_exclusion,
    check_claw_free,
    check_disconnected_srg,
    check_growth,
    check_small_degree_srg,
    check_line_degree,
    check_regularity_preserved,
    check_srg_break,
    check_srg_line_graphs,
    check_whitney,
    check_wl_soundness,
    classify_growth,
    connected_universe,
    expected_growth,
    growth_sizes,
    run_checks,
)


def same_graphs(g6s, expected):
    got = [parse_graph6(x) for x in g6s]
    assert len(got) == len(expected)
    for g, e in zip(sorted(got, key=lambda g: (g.node_count, g.edge_count)), expected):
        assert are_isomorphic(g, e)


def test_report_shape():
    r = TheoremReport("t", "u", cases=3)
    assert r.passed
    r.counterexamples.append("Bw")
    assert not r.passed
    d = r.to_dict()
    assert d["passed"] is False and d["counterexamples"] == ["Bw"]
    json.dumps(d)
    assert "FAIL (1 counterexamples)" in r.summary()


def test_whitney_small():
    r = check_whitney(5)
    assert r.passed, r.counterexamples
    (pair,) = r.details["exception_pairs"]
    same_graphs(pair, [gen.cycle(3), gen.star(3)])
    with pytest.raises(ValueError):
        check_whitney(9)


def test_whitney_below_exception():
    assert check_whitney(3).passed


def test_line_degree_small():
    r = check_line_degree(n_max=5, random_count=50, max_random_nodes=20)
    assert r.passed and r.cases > 0


def test_claw_free_small():
    r = check_claw_free(n_max=6, random_count=20, max_random_nodes=20)
    assert r.passed and r.cases == 1 + 1 + 2 + 4 + 11 + 34 + 156 + 20


def test_cfi_exclusion():
    r = check_cfi_exclusion(ks=(3, 4), bases=[gen.complete(4), gen.cycle(3)])
    assert r.passed
    assert r.cases == 2 + 2  # the triangle base has only degree-2 gadgets
    assert r.details["X2_claw_free"]
    with pytest.raises(ValueError):
        check_cfi_exclusion(ks=(2,))


def test_srg_break_small():
    r = check_srg_break(6)
    assert r.passed
    same_graphs(r.details["fixed_exceptions"], [gen.cycle(n) for n in (3, 4, 5)])
    # stars K1,n (n >= 3) have L = K_n and L^2 = T(n), both strongly regular
    same_graphs(r.details["line_images_srg_twice"], [gen.star(n) for n in (3, 4, 5)])


def test_srg_line_graphs():
    r = check_srg_line_graphs()
    assert r.passed and r.cases > 0
    assert "rook4" in " ".join(r.details["applied_to"]) or r.cases >= 5
    # a bogus instance is reported, not skipped
    bad = check_srg_line_graphs([("path", gen.path(4))])
    assert not bad.passed


def test_small_degree_srg():
    r = check_small_degree_srg(6)
    assert r.passed
    same_graphs(r.details["found"], [gen.complete(1), gen.complete(2)] + [gen.cycle(n) for n in (3, 4, 5)])


def test_regularity_preserved():
    assert check_regularity_preserved().passed
    r = check_regularity_preserved([gen.cycle(5), gen.path(4), gen.empty(3)])
    assert r.passed and r.cases == 1


@pytest.mark.parametrize("g,kind", [
    (gen.path(6), "shrinking"),
    (gen.complete(1), "shrinking"),
    (gen.cycle(7), "fixed"),
    (gen.star(3), "fixed"),
    (gen.complete(4), "growing"),
    (gen.star(4), "growing"),
    (gen.petersen(), "growing"),
])
def test_growth_classes(g, kind):
    assert expected_growth(g) == kind
    assert classify_growth(growth_sizes(g)) == kind


def test_growth_sizes_k4():
    assert growth_sizes(gen.complete(4), 4)[:4] == [4, 6, 12, 36]
    assert growth_sizes(gen.cycle(8)) == [8] * 5


def test_growth_check():
    r = check_growth()
    assert r.passed
    assert r.details["growing"] > 0 and r.details["shrinking"] > 0
    with pytest.raises(ValueError):
        check_growth(window=3)
    with pytest.raises(ValueError):
        expected_growth(disjoint_union([gen.cycle(3), gen.cycle(3)]))


def test_disconnected_srg():
    assert check_disconnected_srg(ns=(3, 4), copies=(2,)).passed


def test_wl_soundness_small():
    r = check_wl_soundness(n_max=5, random_pairs=30, ks=(1, 2))
    assert r.passed
    assert r.details["isomorphic_pairs"] >= 30


def test_connected_universe():
    assert sum(1 for _ in connected_universe(5)) == 1 + 1 + 2 + 6 + 21


def test_run_checks_dispatch():
    reports = run_checks(["small-srg", "whitney"], n_max=4)
    assert [r.theorem for r in reports] == ["small-srg", "whitney"]
    assert all(r.passed for r in reports)
    assert set(CHECKS) >= {"whitney", "cfi", "srg", "regular", "growth"}


def test_reports_are_deterministic():
    a = check_srg_break(5).to_dict()
    b = check_srg_break(5).to_dict()
    a.pop("seconds"), b.pop("seconds")
    assert a == b
