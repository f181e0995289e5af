"""
QfiPoint: the maximal Fisher information result at one parameter point.
"""

from dataclasses import dataclass

import numpy as np

from src.linalg.matrices import StateVector
from src.schemas.params import HamiltonianParams


@dataclass(frozen=True)
class QfiPoint:
    params: HamiltonianParams
    fisher_max: float
    fisher_scaled: float
    ell_max: float
    ell_min: float
    optimal_state: StateVector
    optimal_state_degenerate: bool = False

    @property
    def sigma(self) -> float:
        """Smallest attainable standard deviation of eps, 1/sqrt(F_M)."""
        return 1.0 / np.sqrt(self.fisher_max) if self.fisher_max > 0 else float("inf")
