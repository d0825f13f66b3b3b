"""Uniform hypergraphs under a minimum positive co-degree condition.

Exact solvers, constructive procedures, extremal constructions and a small
threshold laboratory, all on integer-labelled r-graphs.
"""

from .certificates import (
    BergeCycle,
    LooseWalk,
    Matching,
    ValidationReport,
    has_strengthened_property,
    validate_berge_cycle,
    validate_loose_walk,
    validate_matching,
)
from .constructions import ConstructionSheet, complete, loose_cycle_graph, make_huv, sample_with_floor, two_cliques
from .errors import HgParseError, ProcedureFailure, SearchTimeout, SizeLimitError
from .hypergraph import (
    DegreeProfile,
    Hypergraph,
    codegree_neighborhood,
    codegree_prune,
    degree_profile,
    link_graph,
    min_positive_codegree,
    pair_graph,
    shadow_graph,
)
from .io import format_hg, parse_hg, read_hg, write_hg

__version__ = "0.1.0"

__all__ = [
    "BergeCycle", "ConstructionSheet", "DegreeProfile", "HgParseError", "Hypergraph", "LooseWalk",
    "Matching", "ProcedureFailure", "SearchTimeout", "SizeLimitError", "ValidationReport",
    "codegree_neighborhood", "codegree_prune", "complete", "degree_profile", "format_hg",
    "has_strengthened_property", "link_graph", "loose_cycle_graph", "make_huv", "min_positive_codegree",
    "pair_graph", "parse_hg", "read_hg", "sample_with_floor", "shadow_graph", "two_cliques",
    "validate_berge_cycle", "validate_loose_walk", "validate_matching", "write_hg",
]
