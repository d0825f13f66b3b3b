"""Constructive procedures: each returns a certificate or reports where it got stuck."""

from .absorbing import (
    Absorber,
    Reservoir,
    absorb,
    absorbs,
    assemble_loose_hc,
    build_absorbing_path,
    build_reservoir,
    connect_hypotheses_met,
    connect_pairs,
    enumerate_absorbers,
    iter_absorbers,
    loose_hypotheses_met,
    reroute,
    reservoir_capacity,
)
from .dirac import berge_hypotheses_met, berge_lift, dirac_cycle
from .extenders import (
    AugmentationState,
    augment_step_3,
    augment_step_r,
    augmentation_state,
    extension_count,
    greedy_matching,
    perfect_matching_via_augmentation,
    perfect_matching_via_extenders,
    pm3_hypotheses_met,
    pmr_hypotheses_met,
)
from .switching import c43_switch_augment, configurations

__all__ = [
    "Absorber",
    "AugmentationState",
    "Reservoir",
    "absorb",
    "absorbs",
    "assemble_loose_hc",
    "augment_step_3",
    "augment_step_r",
    "augmentation_state",
    "berge_hypotheses_met",
    "berge_lift",
    "build_absorbing_path",
    "build_reservoir",
    "c43_switch_augment",
    "configurations",
    "connect_hypotheses_met",
    "connect_pairs",
    "dirac_cycle",
    "enumerate_absorbers",
    "extension_count",
    "greedy_matching",
    "iter_absorbers",
    "loose_hypotheses_met",
    "perfect_matching_via_augmentation",
    "perfect_matching_via_extenders",
    "pm3_hypotheses_met",
    "pmr_hypotheses_met",
    "reroute",
    "reservoir_capacity",
]
