"""Threshold experiments over small hypergraphs."""

from .canonical import (
    EXHAUSTIVE_LIMITS,
    EnumerationSummary,
    all_classes,
    canonical_form,
    canonical_hypergraph,
    enumerate_hypergraphs,
    iter_hypergraphs,
)
from .thresholds import (
    THEOREMS,
    ThresholdReport,
    exact_threshold,
    revalidate_witness,
    sample_instances,
    tightness_report,
)

__all__ = [
    "EXHAUSTIVE_LIMITS",
    "EnumerationSummary",
    "THEOREMS",
    "ThresholdReport",
    "all_classes",
    "canonical_form",
    "canonical_hypergraph",
    "enumerate_hypergraphs",
    "exact_threshold",
    "iter_hypergraphs",
    "revalidate_witness",
    "sample_instances",
    "tightness_report",
]
