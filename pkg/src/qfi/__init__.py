"""Perturbation-theory Fisher information machinery."""

from src.qfi.derivative import PerturbationData, derivative_state_pt, evolution_derivative, perturbation_data
from src.qfi.fisher import fisher_for_state, local_generator_via_psi
from src.qfi.generator import (
    LocalGenerator,
    OptimalInputState,
    local_generator,
    max_fisher,
    optimal_input_state,
    phase_weight,
    phase_weights,
    simple_model_optimum,
)
from src.qfi.point import QfiPoint

__all__ = [
    "LocalGenerator",
    "OptimalInputState",
    "PerturbationData",
    "QfiPoint",
    "derivative_state_pt",
    "evolution_derivative",
    "fisher_for_state",
    "local_generator",
    "local_generator_via_psi",
    "max_fisher",
    "optimal_input_state",
    "perturbation_data",
    "phase_weight",
    "phase_weights",
    "simple_model_optimum",
]
