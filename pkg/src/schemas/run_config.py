"""
Run configuration assembled from CLI flags.
"""

from enum import Enum
from pathlib import Path
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveInt, field_validator

from src.schemas.params import HamiltonianParams


class Subcommand(str, Enum):
    POINT = "point"
    SWEEP = "sweep"
    EXTRAPOLATE = "extrapolate"
    LIMITS = "limits"
    VALIDATE = "validate"
    CONTOUR = "contour"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


def parse_axis(text: str) -> list[float]:
    """
    Parse "MIN:MAX:POINTS" (inclusive linspace) or a comma-separated list "0,0.5,1".

    Raises:
        ValueError: malformed text or fewer than one point
    """
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"expected MIN:MAX:POINTS, got {text!r}")
        low, high, points = float(parts[0]), float(parts[1]), int(parts[2])
        if points < 1:
            raise ValueError("an axis needs at least one point")
        if points == 1:
            return [low]
        return [float(v) for v in np.linspace(low, high, points)]
    return [float(v) for v in text.split(",") if v.strip()]


class GridSpec(BaseModel):
    """(tau, u) axes of a sweep; both strictly increasing and finite."""

    model_config = ConfigDict(frozen=True)

    tau_axis: list[float] = Field(..., min_length=1)
    u_axis: list[float] = Field(..., min_length=1)
    eps: float = Field(..., allow_inf_nan=False)
    n_atoms: PositiveInt

    @field_validator("tau_axis", "u_axis")
    @classmethod
    def strictly_increasing(cls, axis: list[float]) -> list[float]:
        if not all(np.isfinite(axis)):
            raise ValueError("axis values must be finite")
        if any(b <= a for a, b in zip(axis, axis[1:])):
            raise ValueError("axis must be strictly increasing")
        return axis

    @classmethod
    def from_ranges(
        cls,
        tau_range: tuple[float, float, int],
        u_range: tuple[float, float, int],
        eps: float,
        n_atoms: int,
    ) -> "GridSpec":
        return cls(
            tau_axis=parse_axis("{}:{}:{}".format(*tau_range)),
            u_axis=parse_axis("{}:{}:{}".format(*u_range)),
            eps=eps,
            n_atoms=n_atoms,
        )


class RunConfig(BaseModel):
    """One CLI invocation: exactly one subcommand and its inputs."""

    subcommand: Subcommand
    params: Optional[HamiltonianParams] = None
    grid: Optional[GridSpec] = None
    input_path: Optional[Path] = None
    output_path: Optional[Path] = None
    format: OutputFormat = OutputFormat.CSV
    seed: Optional[int] = None
    parallelism: Optional[PositiveInt] = None
    jitter: bool = False
