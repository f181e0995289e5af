"""Analytic limits of the double-well interferometer."""

from src.limits.analytic import (
    TiltedFrame,
    eps_scan,
    fisher_eps_zero,
    fisher_limit_no_interaction,
    fisher_limit_strong_interaction,
    global_scaling_scan,
    local_generator_large_scaling,
    noon_ground_state_overlap,
)
from src.limits.comparisons import compare_limits

__all__ = [
    "TiltedFrame",
    "compare_limits",
    "eps_scan",
    "fisher_eps_zero",
    "fisher_limit_no_interaction",
    "fisher_limit_strong_interaction",
    "global_scaling_scan",
    "local_generator_large_scaling",
    "noon_ground_state_overlap",
]
