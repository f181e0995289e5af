"""Brute-force oracles and the validation suites built on them."""

from src.oracles.brute_force import (
    BoundsReport,
    derivative_state_fd,
    quadrature_local_generator,
    random_state_fisher_sample,
    random_states,
    spectrum_respects_generator_bounds,
)
from src.oracles.suites import SuiteFactory, run_validation

__all__ = [
    "BoundsReport",
    "SuiteFactory",
    "derivative_state_fd",
    "quadrature_local_generator",
    "random_state_fisher_sample",
    "random_states",
    "run_validation",
    "spectrum_respects_generator_bounds",
]
