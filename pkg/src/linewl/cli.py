"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 input error, 3 budget exhaustion
(outside ``bench``/``timing``, where budget overruns are recorded per pair).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import generators as gen
from .bench import RECIPES, BenchConfig, run_bench, run_timing
from .graph import GraphError
from .io import Graph6Error, PairFileError, emit_graph6, parse_graph6, write_pair_file
from .iso import OracleLimitError, are_isomorphic
from .line import DEFAULT_NODE_BUDGET, SizeLimitError, iterated_line_graph
from .structure import contains_claw, is_isoregular, is_line_graph, is_regular, srg_params
from .theorems import CHECKS, run_checks
from .wl import DEFAULT_TUPLE_BUDGET, wl_refine

EXIT_USAGE, EXIT_INPUT, EXIT_BUDGET = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# family name -> (constructor, number of integer parameters)
FAMILIES = {
    "path": (gen.path, 1),
    "cycle": (gen.cycle, 1),
    "star": (gen.star, 1),
    "complete": (gen.complete, 1),
    "empty": (gen.empty, 1),
    "bipartite": (gen.complete_bipartite, 2),
    "prism": (gen.prism, 1),
    "petersen": (gen.petersen, 0),
    "wheel": (gen.wheel, 1),
    "rook": (gen.rook, 1),
    "shrikhande": (gen.shrikhande, 0),
    "paley": (gen.paley, 1),
    "triangular": (gen.triangular, 1),
    "chang": (gen.chang, 1),
    "gadget": (lambda k: gen.cfi_gadget(k).graph, 1),
}
PAIR_FAMILIES = ("cfi", "srg-pairs", "cfi-pairs")


def family_graph(text: str):
    """Graph from ``name`` or ``name:p1[,p2]`` (e.g. ``cycle:5``, ``bipartite:3,3``),
    or a literal graph6 string."""
    name, _, params = text.partition(":")
    if name not in FAMILIES:
        try:
            return parse_graph6(text)
        except Graph6Error:
            raise UsageError(f"unknown family {name!r}") from None
    fn, arity = FAMILIES[name]
    args = [int(x) for x in params.split(",")] if params else []
    if len(args) != arity:
        raise UsageError(f"family {name} takes {arity} parameter(s), got {len(args)}")
    return fn(*args)


def _read_graphs(tokens: Sequence[str]) -> list:
    if tokens:
        return [parse_graph6(t) for t in tokens]
    return [parse_graph6(line) for line in sys.stdin if line.strip()]


def _out(text: str) -> None:
    sys.stdout.write(text + "\n")


def cmd_gen(args) -> int:
    if args.family in PAIR_FAMILIES:
        if args.family == "cfi":
            base = family_graph(args.params[0] if args.params else "complete:4")
            p = gen.cfi_pair(base, args.twist)
            pairs = [(p.untwisted, p.twisted, "cfi")]
        elif args.family == "cfi-pairs":
            pairs = [(p.untwisted, p.twisted, "cfi") for p in map(gen.cfi_pair, gen.cfi_bases())]
        else:
            pairs = [(a, b, "strongly-regular") for _, a, b in gen.srg_pairs(extended=args.extended)]
        if args.out:
            write_pair_file(pairs, args.out)
        else:
            for a, b, tag in pairs:
                _out(f"{emit_graph6(a).decode()} {emit_graph6(b).decode()} {tag}")
        return 0
    g = family_graph(args.family + (":" + ",".join(args.params) if args.params else ""))
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(emit_graph6(g).decode() + "\n")
    else:
        _out(emit_graph6(g).decode())
    return 0


def cmd_transform(args) -> int:
    for g in _read_graphs(args.graphs):
        _out(emit_graph6(iterated_line_graph(g, args.depth, args.budget)).decode())
    return 0


def cmd_wl(args) -> int:
    graphs = _read_graphs(args.graphs)
    if len(graphs) != 2:
        raise UsageError("wl needs exactly two graph6 inputs")
    h1, h2 = (iterated_line_graph(g, args.depth, args.budget) for g in graphs)
    if h1.node_count != h2.node_count or h1.edge_count != h2.edge_count:
        result = {"distinguished": True, "decided_at_round": None, "k": args.k, "rounds": 0,
                  "reason": "size mismatch after transform"}
    else:
        _, v = wl_refine(h1, h2, args.k, args.max_rounds, budget=args.tuple_budget)
        result = {"distinguished": v.distinguished, "decided_at_round": v.decided_at_round,
                  "k": v.k, "rounds": v.rounds}
    result["depth"] = args.depth
    result["nodes"] = [h1.node_count, h2.node_count]
    _out(json.dumps(result))
    return 0


def cmd_iso(args) -> int:
    graphs = _read_graphs(args.graphs)
    if len(graphs) != 2:
        raise UsageError("iso needs exactly two graph6 inputs")
    w = are_isomorphic(*graphs, max_nodes=args.max_nodes)
    result = {"isomorphic": w.isomorphic}
    if args.mapping:
        result["mapping"] = list(w.mapping) if w.mapping is not None else None
    _out(json.dumps(result))
    return 0


def analyze(g) -> dict:
    p = srg_params(g)
    return {
        "nodes": g.node_count,
        "edges": g.edge_count,
        "regular": is_regular(g),
        "srg": list(p.as_tuple()) if p else None,
        "claw_free": not contains_claw(g),
        "line_graph": is_line_graph(g),
        "isoregular": {"1": is_isoregular(g, 1), "2": is_isoregular(g, 2)},
    }


def cmd_analyze(args) -> int:
    for g in _read_graphs(args.graphs):
        _out(json.dumps(analyze(g)))
    return 0


def cmd_verify(args) -> int:
    names = args.theorem or ["all"]
    reports = run_checks(names, n_max=args.n_max)
    if args.json:
        _out(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for r in reports:
            _out(r.summary())
            for c in r.counterexamples:
                _out(f"  counterexample: {c}")
    return 0 if all(r.passed for r in reports) else 4


def _bench_config(args) -> BenchConfig:
    cfg = BenchConfig(
        ks=args.k,
        depths=args.depth,
        node_budget=args.budget,
        tuple_budget=args.tuple_budget,
        max_rounds=args.max_rounds,
        workers=args.workers,
        pair_file=args.pairs,
        recipe=None if args.pairs else args.recipe,
        controls=args.controls,
        allow_high_k_on_line_graphs=args.allow_high_k,
        seed=args.seed,
        csv_path=args.csv,
        json_path=args.json,
    )
    try:
        cfg.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return cfg


def cmd_bench(args) -> int:
    cfg = _bench_config(args)
    result = run_bench(cfg)
    if args.format == "json":
        _out(json.dumps(result.summary, indent=2))
    else:
        _out("category,control,k,depth,pairs,distinguished,skipped,accuracy")
        for row in result.summary:
            _out("{category},{control},{k},{depth},{pairs},{distinguished},{skipped},{accuracy:.3f}".format(**row))
    return 0


def cmd_timing(args) -> int:
    cfg = _bench_config(args)
    report = run_timing(cfg)
    if args.format == "json":
        _out(json.dumps(report["fits"], indent=2))
    else:
        _out("category,k,depth,points,slope")
        for f in report["fits"]:
            slope = "" if f["slope"] is None else f"{f['slope']:.3f}"
            _out(f"{f['category']},{f['k']},{f['depth']},{f['points']},{slope}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=1, help="worker processes for bench/timing")
    common.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET,
                        help="node budget for line graph transforms")
    common.add_argument("--tuple-budget", type=int, default=DEFAULT_TUPLE_BUDGET,
                        help="max k-tuples per graph for WL refinement")
    common.add_argument("--seed", type=int, default=0, help="seed for random families and controls")
    common.add_argument("--format", choices=("csv", "json"), default="csv")

    parser = _Parser(prog="linewl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="emit graph6 for a named family")
    p.add_argument("family", help=f"one of {sorted(FAMILIES)} or {list(PAIR_FAMILIES)}")
    p.add_argument("params", nargs="*", help="integer parameters (cfi: base family, e.g. complete:4)")
    p.add_argument("--twist", type=int, default=0, help="twisted base edge index (cfi)")
    p.add_argument("--extended", action="store_true", help="srg-pairs: add Chang-vs-Chang pairs")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("transform", parents=[common], help="apply L^(depth) to graph6 inputs")
    p.add_argument("graphs", nargs="*", help="graph6 records (default: stdin, one per line)")
    p.add_argument("--depth", type=int, default=1)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("wl", parents=[common], help="k-WL verdict on two graph6 inputs")
    p.add_argument("graphs", nargs="*")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--depth", type=int, default=0)
    p.add_argument("--max-rounds", type=int, default=None)
    p.set_defaults(func=cmd_wl)

    p = sub.add_parser("iso", parents=[common], help="exact isomorphism test")
    p.add_argument("graphs", nargs="*")
    p.add_argument("--mapping", action="store_true", help="print the node mapping")
    p.add_argument("--max-nodes", type=int, default=64)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("analyze", parents=[common], help="structural report as JSON lines")
    p.add_argument("graphs", nargs="*")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", parents=[common], help="run theorem checks")
    p.add_argument("--theorem", action="append", choices=sorted(CHECKS) + ["all"])
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    for name, func, helptext in (("bench", cmd_bench, "accuracy table over graph pairs"),
                                 ("timing", cmd_timing, "refinement wall time and log-log slopes")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        src = p.add_mutually_exclusive_group()
        src.add_argument("--pairs", help="pair file: '<g6> <g6> [tag]' per line")
        src.add_argument("--recipe", choices=RECIPES, default="srg" if name == "bench" else "scaling")
        p.add_argument("--k", type=int, nargs="+", default=[3])
        p.add_argument("--depth", type=int, nargs="+", default=[0, 1])
        p.add_argument("--max-rounds", type=int, default=None)
        p.add_argument("--controls", action="store_true", help="add relabelled isomorphic control pairs")
        p.add_argument("--allow-high-k", action="store_true", help="allow k >= 4 on line graphs")
        p.add_argument("--csv", help="per-pair CSV report path")
        p.add_argument("--json", help="JSON report path")
        p.set_defaults(func=func)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"linewl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Graph6Error, PairFileError, GraphError, OSError) as exc:
        print(f"linewl: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SizeLimitError, OracleLimitError) as exc:
        print(f"linewl: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"linewl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
