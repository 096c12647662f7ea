"""Toolkit for the majority coloring number mc(G): the most colors a
surjective coloring can use while every vertex keeps at least half of
its neighbors in its own class."""

from .graph import (
    Graph,
    GraphError,
    emit_graph,
    graph_comments,
    parse_corpus,
    parse_graph,
)
from .coloring import (
    Coloring,
    CutSubgraph,
    Verdict,
    Violation,
    classes_connected,
    coloring_to_cut,
    cut_to_coloring,
    parse_coloring,
    verify_majority,
)
from .generators import FAMILY_PARAMS, FamilySpec, gen_named, parse_family_tag
from .exact import (
    DEFAULT_BUDGET,
    DecideResult,
    SolveResult,
    SolveStats,
    chromatic_number,
    cut_oracle_mc,
    decide_mc_at_least,
    exact_mc,
)
from .tree import TreeResult, compute_fgh, extract_cut, root_value, tree_mc
from .bounds import (
    BoundEntry,
    BoundsReport,
    bound_cubic,
    bound_delta,
    bound_delta_Delta,
    bounds_report,
    exact_family,
    exact_power_cycle,
    exact_power_path,
    has_closed_form,
)
from .solve import is_forest, mc_value, solve_graph
from .bipartition import (
    BipartitionResult,
    BipartitionTrace,
    MoveRecord,
    bipartition_4regular,
    bipartition_clique,
    bipartition_girth,
)
from .extremal import (
    ChiMcCheck,
    ExtremalWitness,
    check_chi_plus_mc,
    chi_mc_pair,
    exhaustive_check,
    max_edges,
    min_edges,
    witness_max,
    witness_min,
)
from .edges import (
    EdgeDelta,
    EdgeReport,
    EdgeStability,
    ScanHit,
    ScanOutcome,
    classify_critical,
    conjecture_scan,
    edge_deltas,
    edge_stability,
)

__version__ = "1.0.0"

__all__ = [
    "Graph", "GraphError", "parse_graph", "emit_graph", "parse_corpus",
    "graph_comments",
    "Coloring", "Verdict", "Violation", "CutSubgraph", "parse_coloring",
    "verify_majority", "classes_connected", "coloring_to_cut",
    "cut_to_coloring",
    "FamilySpec", "FAMILY_PARAMS", "gen_named", "parse_family_tag",
    "SolveResult", "SolveStats", "DecideResult", "DEFAULT_BUDGET",
    "exact_mc", "decide_mc_at_least", "cut_oracle_mc", "chromatic_number",
    "TreeResult", "tree_mc", "compute_fgh", "root_value", "extract_cut",
    "BoundEntry", "BoundsReport", "bounds_report", "bound_delta",
    "bound_delta_Delta", "bound_cubic", "exact_power_path",
    "exact_power_cycle", "exact_family", "has_closed_form",
    "mc_value", "solve_graph", "is_forest",
    "BipartitionResult", "BipartitionTrace", "MoveRecord",
    "bipartition_clique", "bipartition_girth", "bipartition_4regular",
    "ExtremalWitness", "ChiMcCheck", "max_edges", "min_edges",
    "witness_max", "witness_min", "chi_mc_pair", "check_chi_plus_mc",
    "exhaustive_check",
    "EdgeDelta", "EdgeReport", "EdgeStability", "ScanHit", "ScanOutcome",
    "edge_deltas", "edge_stability", "classify_critical", "conjecture_scan",
]
