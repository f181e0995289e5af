"""Grid sweeps, atom-number series and extrapolation to N -> infinity."""

from src.sweep.extrapolation import (
    ExtrapolatedGrid,
    ExtrapolationResult,
    atom_number_series,
    extrapolate_grid,
    extrapolate_point,
    richardson_extrapolate,
)
from src.sweep.grid import SweepGrid, mirrored_sweep, sweep, u_sign_symmetry_report

__all__ = [
    "ExtrapolatedGrid",
    "ExtrapolationResult",
    "SweepGrid",
    "atom_number_series",
    "extrapolate_grid",
    "extrapolate_point",
    "mirrored_sweep",
    "richardson_extrapolate",
    "sweep",
    "u_sign_symmetry_report",
]
