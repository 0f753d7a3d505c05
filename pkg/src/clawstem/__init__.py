"""Spanning trees with few stem branch vertices in claw-free graphs."""

__version__ = "0.1.0"

from .graph import (  # noqa: F401
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    GraphInputError,
    all_pairs_distances,
    degree,
    induced_subgraph,
    is_claw_free,
    is_connected,
    line_graph,
)
from .tree import StemProfile, TreeSubgraph, count_leaves_by_formula, leaves, stem_profile, tree_metrics  # noqa: F401
from .invariants import INFINITE, check_hypothesis, distance_independence_number, sigma  # noqa: F401
from .exact import has_spanning_tree_with_budget, min_branch_spanning_tree  # noqa: F401
from .search import extract_certificate, find_moves, solve, verify_certificate  # noqa: F401
from .extremal import SharpFamilyParams, build_sharp_graph, verify_sharpness  # noqa: F401
