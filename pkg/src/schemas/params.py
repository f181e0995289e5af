"""
Validated model inputs: the |J,m> basis and the double-well Hamiltonian parameters.
"""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt


class SpinBasis(BaseModel):
    """
    The (N+1)-dimensional |J,m> basis of N bosons in two modes.

    m runs J, J-1, ..., -J so that index 0 is |N,0> (all atoms left)
    and the last index is |0,N>.
    """

    model_config = ConfigDict(frozen=True)

    n_atoms: NonNegativeInt

    @property
    def j(self) -> float:
        return self.n_atoms / 2

    @property
    def dim(self) -> int:
        return self.n_atoms + 1

    @property
    def m_values(self) -> np.ndarray:
        return self.j - np.arange(self.dim, dtype=float)


class HamiltonianParams(BaseModel):
    """
    Dimensionless parameters of K = -tau J_x + eps J_z + (u/N) J_z^2.

    tau, eps and u already include the factor t/hbar; u = N U is the scaled
    interaction and eps is the measured parameter.
    """

    model_config = ConfigDict(frozen=True)

    tau: float = Field(..., allow_inf_nan=False)
    eps: float = Field(..., allow_inf_nan=False)
    u: float = Field(..., allow_inf_nan=False)
    n_atoms: NonNegativeInt

    @property
    def interaction(self) -> float:
        """Bare interaction U = u/N (zero for an empty system)."""
        return self.u / self.n_atoms if self.n_atoms else 0.0

    @property
    def basis(self) -> SpinBasis:
        return SpinBasis(n_atoms=self.n_atoms)

    def scaled(self, x: float) -> "HamiltonianParams":
        """All three couplings multiplied by a common factor x (global time scaling)."""
        return self.model_copy(update={"tau": x * self.tau, "eps": x * self.eps, "u": x * self.u})
