"""Color fault-tolerant graph spanners: builders, brute-force verifiers and
lower-bound instance generators around the C++ core."""

from ._core import (
    BlockingPair,
    BlockingSet,
    BudgetExceededError,
    BuildReport,
    BuildStats,
    ColoredGraph,
    DensityExhaustedError,
    Edge,
    GirthBase,
    GraphParseError,
    blame_bound_check,
    build_certificate,
    build_greedy,
    build_modified,
    extract_blocking_set,
    gen_ecft_lower,
    gen_list_lower,
    gen_mcft_lower,
    girth_base,
    identical_graphs,
    load_graph,
    parse_graph,
    random_instance,
    sample_blocked_subgraph,
    save_graph,
    serialize_graph,
    verify_blocking_set,
    verify_certificate,
    verify_spanner,
)

__all__ = [
    "BlockingPair",
    "BlockingSet",
    "BudgetExceededError",
    "BuildReport",
    "BuildStats",
    "ColoredGraph",
    "DensityExhaustedError",
    "Edge",
    "GirthBase",
    "GraphParseError",
    "blame_bound_check",
    "build_certificate",
    "build_greedy",
    "build_modified",
    "extract_blocking_set",
    "gen_ecft_lower",
    "gen_list_lower",
    "gen_mcft_lower",
    "girth_base",
    "identical_graphs",
    "load_graph",
    "parse_graph",
    "random_instance",
    "sample_blocked_subgraph",
    "save_graph",
    "serialize_graph",
    "verify_blocking_set",
    "verify_certificate",
    "verify_spanner",
]

__version__ = "0.1.0"
