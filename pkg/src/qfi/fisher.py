"""
Pure-state Fisher information, F = 4 [<psi'|psi'> - |<psi|psi'>|^2].
"""

import numpy as np

from src.config import settings
from src.core.exceptions import DimensionMismatchError, NumericalInconsistencyError
from src.linalg.matrices import StateVector
from src.qfi.generator import LocalGenerator


def _clip(value: float) -> float:
    if value < -settings.FISHER_NEGATIVE_TOL:
        raise NumericalInconsistencyError("Negative Fisher information", details={"fisher": value})
    return max(value, 0.0)


def fisher_for_state(psi: StateVector, psi_prime: np.ndarray) -> float:
    """
    Fisher information of |psi> given its parameter derivative.

    Raises:
        NumericalInconsistencyError: F below -FISHER_NEGATIVE_TOL
    """
    psi_prime = np.asarray(psi_prime, dtype=np.complex128)
    if psi_prime.shape != psi.amplitudes.shape:
        raise DimensionMismatchError("fisher_for_state", psi.dim, int(psi_prime.shape[0]))
    norm_sq = float(np.vdot(psi_prime, psi_prime).real)
    overlap = np.vdot(psi.amplitudes, psi_prime)
    return _clip(4.0 * (norm_sq - abs(overlap) ** 2))


def local_generator_via_psi(psi: StateVector, lg: LocalGenerator) -> float:
    """F = 4 Var_psi(L), the same quantity through |psi'> = -i L |psi>."""
    if psi.dim != lg.matrix.dim:
        raise DimensionMismatchError("local_generator_via_psi", lg.matrix.dim, psi.dim)
    applied = lg.matrix.data @ psi.amplitudes
    second = float(np.vdot(applied, applied).real)
    first = float(np.vdot(psi.amplitudes, applied).real)
    return _clip(4.0 * (second - first**2))
