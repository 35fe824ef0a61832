"""Line graph transforms and the Weisfeiler-Leman hierarchy on hard graph pairs."""

from .graph import Graph, GraphError, build_graph, connected_components, disjoint_union, is_connected
from .io import Graph6Error, PairFileError, emit_graph6, parse_graph6, read_pair_file, write_pair_file
from .iso import OracleLimitError, are_isomorphic, canonical_certificate, enumerate_graphs
from .line import DEFAULT_NODE_BUDGET, SizeLimitError, iterated_line_graph, line_graph
from .structure import (
    SrgParams,
    beineke_graphs,
    contains_claw,
    find_claw,
    find_induced,
    forbidden_subgraph,
    is_isoregular,
    is_line_graph,
    is_regular,
    srg_params,
)
from .wl import ColorPartition, WlVerdict, color_refinement, wl_distinguishes_pair, wl_refine

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "ColorPartition",
    "Graph",
    "Graph6Error",
    "GraphError",
    "OracleLimitError",
    "PairFileError",
    "SizeLimitError",
    "SrgParams",
    "WlVerdict",
    "are_isomorphic",
    "beineke_graphs",
    "build_graph",
    "canonical_certificate",
    "color_refinement",
    "connected_components",
    "contains_claw",
    "disjoint_union",
    "emit_graph6",
    "enumerate_graphs",
    "find_claw",
    "find_induced",
    "forbidden_subgraph",
    "is_connected",
    "is_isoregular",
    "is_line_graph",
    "is_regular",
    "iterated_line_graph",
    "line_graph",
    "parse_graph6",
    "read_pair_file",
    "srg_params",
    "wl_distinguishes_pair",
    "wl_refine",
]
