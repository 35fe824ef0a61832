"""Benchmark harness: k-WL verdicts on graph pairs before and after line transforms."""

from __future__ import annotations

import json
import math
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Any, Sequence

import numpy as np

from . import generators as gen
from .graph import Graph, build_graph
from .io import read_pair_file, write_report
from .iso import enumerate_graphs
from .line import DEFAULT_NODE_BUDGET, SizeLimitError, iterated_line_graph
from .structure import is_regular
from .wl import DEFAULT_TUPLE_BUDGET, wl_refine

RECIPES = ("srg", "srg-extended", "cfi", "regular", "scaling", "all")
SKIPPED = "skipped: budget"


@dataclass(frozen=True)
class BenchPair:
    pair_id: str
    category: str
    g1: Graph
    g2: Graph
    control: bool = False


@dataclass
class PairVerdict:
    pair_id: str
    category: str
    k: int
    depth: int
    distinguished: bool | str
    rounds: int
    seconds: float
    nodes_before: tuple[int, int]
    nodes_after: tuple[int, int] | None
    control: bool = False


@dataclass
class BenchConfig:
    ks: list[int] = field(default_factory=lambda: [3])
    depths: list[int] = field(default_factory=lambda: [0, 1])
    node_budget: int = DEFAULT_NODE_BUDGET
    tuple_budget: int = DEFAULT_TUPLE_BUDGET
    max_rounds: int | None = None
    workers: int = 1
    pair_file: str | None = None
    recipe: str | None = "srg"
    controls: bool = False
    allow_high_k_on_line_graphs: bool = False
    seed: int = 0
    csv_path: str | None = None
    json_path: str | None = None

    def validate(self) -> None:
        if not self.ks or any(k < 1 for k in self.ks):
            raise ValueError("k values must be >= 1")
        if not self.depths or any(d < 0 for d in self.depths):
            raise ValueError("depths must be >= 0")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.node_budget < 1 or self.tuple_budget < 1:
            raise ValueError("budgets must be positive")
        if self.max_rounds is not None and self.max_rounds < 0:
            raise ValueError("max_rounds must be >= 0")
        if (self.pair_file is None) == (self.recipe is None):
            raise ValueError("give exactly one of a pair file or a generator recipe")
        if self.recipe is not None and self.recipe not in RECIPES:
            raise ValueError(f"unknown recipe {self.recipe!r}; choose from {RECIPES}")

    def settings(self) -> list[tuple[int, int]]:
        """(k, depth) combinations to run; k >= 4 on line graphs needs opting in."""
        return [(k, d) for k in self.ks for d in self.depths
                if not (k >= 4 and d >= 1 and not self.allow_high_k_on_line_graphs)]

    def as_dict(self) -> dict[str, Any]:
        return asdict(self)


def _moebius_ladder(m: int) -> Graph:
    n = 2 * m
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, i + m) for i in range(m)]
    return build_graph(n, edges, name=f"moebius{m}")


def recipe_pairs(recipe: str) -> list[BenchPair]:
    """Locally constructed benchmark pairs."""
    if recipe == "all":
        return recipe_pairs("regular") + recipe_pairs("srg") + recipe_pairs("cfi")
    if recipe in ("srg", "srg-extended"):
        return [BenchPair(name, "strongly-regular", a, b)
                for name, a, b in gen.srg_pairs(extended=recipe == "srg-extended")]
    if recipe == "cfi":
        out = []
        for base in gen.cfi_bases():
            p = gen.cfi_pair(base)
            out.append(BenchPair(f"cfi-{base.name}", "cfi", p.untwisted, p.twisted))
        return out
    if recipe == "regular":
        cubic = [g for g in enumerate_graphs(8, connected_only=True) if is_regular(g) == 3]
        return [BenchPair(f"cubic8-{i}-{j}", "simple-regular", cubic[i], cubic[j])
                for i, j in combinations(range(len(cubic)), 2)]
    if recipe == "scaling":
        return [BenchPair(f"ladder{m}", "simple-regular", gen.prism(m), _moebius_ladder(m))
                for m in (4, 5, 6, 7, 8)]
    raise ValueError(f"unknown recipe {recipe!r}")


def load_pairs(config: BenchConfig) -> list[BenchPair]:
    if config.pair_file is not None:
        pf = read_pair_file(config.pair_file)
        pairs = [BenchPair(f"pair{i:04d}", tag or "other", g1, g2) for i, (g1, g2, tag) in enumerate(pf)]
    else:
        pairs = recipe_pairs(config.recipe)
    if config.controls:
        rng = np.random.default_rng(config.seed)
        pairs += [BenchPair(f"{p.pair_id}~control", p.category, p.g1, gen.random_relabel(p.g1, rng), control=True)
                  for p in list(pairs)]
    return pairs


def evaluate(pair: BenchPair, k: int, depth: int, node_budget: int = DEFAULT_NODE_BUDGET,
             tuple_budget: int = DEFAULT_TUPLE_BUDGET, max_rounds: int | None = None) -> PairVerdict:
    """One verdict; the transform is recomputed from the root pair every time."""
    before = (pair.g1.node_count, pair.g2.node_count)

    def verdict(distinguished, rounds=0, seconds=0.0, after=None):
        return PairVerdict(pair.pair_id, pair.category, k, depth, distinguished, rounds,
                           seconds, before, after, pair.control)

    try:
        h1 = iterated_line_graph(pair.g1, depth, node_budget)
        h2 = iterated_line_graph(pair.g2, depth, node_budget)
    except SizeLimitError:
        return verdict(SKIPPED)
    after = (h1.node_count, h2.node_count)
    if h1.node_count != h2.node_count or h1.edge_count != h2.edge_count:
        return verdict(True, after=after)
    start = time.perf_counter()
    try:
        _, v = wl_refine(h1, h2, k, max_rounds, budget=tuple_budget)
    except SizeLimitError:
        return verdict(SKIPPED, after=after)
    return verdict(v.distinguished, v.rounds, time.perf_counter() - start, after)


def _evaluate_task(args):
    return evaluate(*args)


def summarize(verdicts: Sequence[PairVerdict]) -> list[dict[str, Any]]:
    """Accuracy per (category, k, depth); control pairs are tallied separately."""
    groups: dict[tuple, list[PairVerdict]] = defaultdict(list)
    for v in verdicts:
        groups[(v.control, v.category, v.k, v.depth)].append(v)
    rows = []
    for (control, category, k, depth), vs in sorted(groups.items()):
        hit = sum(v.distinguished is True for v in vs)
        skipped = sum(v.distinguished == SKIPPED for v in vs)
        rows.append({
            "category": category,
            "control": control,
            "k": k,
            "depth": depth,
            "pairs": len(vs),
            "distinguished": hit,
            "skipped": skipped,
            "accuracy": hit / len(vs),
        })
    return rows


def run_verdicts(config: BenchConfig) -> tuple[list[BenchPair], list[PairVerdict]]:
    config.validate()
    pairs = load_pairs(config)
    tasks = [(p, k, d, config.node_budget, config.tuple_budget, config.max_rounds)
             for p in pairs for k, d in config.settings()]
    if config.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            verdicts = list(pool.map(_evaluate_task, tasks))
    else:
        verdicts = [_evaluate_task(t) for t in tasks]
    verdicts.sort(key=lambda v: (v.pair_id, v.k, v.depth))
    return pairs, verdicts


@dataclass
class BenchResult:
    config: BenchConfig
    verdicts: list[PairVerdict]
    summary: list[dict[str, Any]]

    def accuracy(self, category: str, k: int, depth: int) -> float:
        for row in self.summary:
            if not row["control"] and (row["category"], row["k"], row["depth"]) == (category, k, depth):
                return row["accuracy"]
        raise KeyError((category, k, depth))

    def control_violations(self) -> list[PairVerdict]:
        return [v for v in self.verdicts if v.control and v.distinguished is True]


_EXTRA = ("rounds", "nodes_before", "nodes_after", "control")


def run_bench(config: BenchConfig) -> BenchResult:
    """Run every (pair, k, depth) task and write the CSV/JSON reports configured."""
    _, verdicts = run_verdicts(config)
    result = BenchResult(config, verdicts, summarize(verdicts))
    if config.csv_path:
        write_report(verdicts, "csv", config.csv_path)
    if config.json_path:
        write_report(verdicts, "json", config.json_path, config=config.as_dict(),
                     summary=result.summary, extra_fields=_EXTRA)
    return result


def fit_slope(ns: Sequence[float], seconds: Sequence[float]) -> float | None:
    """Least-squares slope of log(seconds) against log(n)."""
    pts = [(math.log(n), math.log(s)) for n, s in zip(ns, seconds) if n > 0 and s > 0]
    if len({x for x, _ in pts}) < 2:
        return None
    xs, ys = zip(*pts)
    return float(np.polyfit(xs, ys, 1)[0])


def run_timing(config: BenchConfig) -> dict[str, Any]:
    """Wall time of each refinement plus a log-log slope per (category, k, depth)."""
    _, verdicts = run_verdicts(config)
    rows = []
    groups: dict[tuple, list[tuple[int, float]]] = defaultdict(list)
    for v in verdicts:
        if v.nodes_after is None or v.distinguished == SKIPPED:
            continue
        n = v.nodes_after[0]
        rows.append({"pair_id": v.pair_id, "category": v.category, "k": v.k, "depth": v.depth,
                     "nodes_before": v.nodes_before[0], "nodes_after": n,
                     "rounds": v.rounds, "seconds": v.seconds})
        if v.seconds > 0:
            groups[(v.category, v.k, v.depth)].append((n, v.seconds))
    fits = []
    for (category, k, depth), pts in sorted(groups.items()):
        fits.append({"category": category, "k": k, "depth": depth, "points": len(pts),
                     "slope": fit_slope([p[0] for p in pts], [p[1] for p in pts])})
    report = {"config": config.as_dict(), "timings": rows, "fits": fits}
    if config.json_path:
        with open(config.json_path, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    if config.csv_path:
        write_report(verdicts, "csv", config.csv_path)
    return report

