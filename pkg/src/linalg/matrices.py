"""
Numeric carriers shared by every layer: Hermitian operators and normalized states.

Both wrap a read-only complex128 numpy array and check their invariant on
construction.
"""

from dataclasses import dataclass

import numpy as np

from src.config import settings
from src.core.exceptions import PreconditionError


def hermiticity_defect(array: np.ndarray) -> float:
    """max|A - A^H| relative to max|A| (0 for the zero matrix)."""
    scale = float(np.max(np.abs(array))) if array.size else 0.0
    if scale == 0.0:
        return 0.0
    return float(np.max(np.abs(array - array.conj().T))) / scale


def _frozen(array: np.ndarray) -> np.ndarray:
    out = np.array(array, dtype=np.complex128, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class HermitianMatrix:
    """Dense complex matrix with enforced Hermitian symmetry."""

    data: np.ndarray

    @classmethod
    def from_array(cls, array: np.ndarray, tol_rel: float | None = None) -> "HermitianMatrix":
        """
        Wrap an array after checking it is square and Hermitian.

        Raises:
            PreconditionError: not square, or max|A - A^H| > tol_rel * max|A|
        """
        arr = np.asarray(array)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise PreconditionError("Matrix must be square", details={"shape": list(arr.shape)})
        tol = settings.HERMITIAN_TOL_REL if tol_rel is None else tol_rel
        defect = hermiticity_defect(arr)
        if defect > tol:
            raise PreconditionError(
                "Matrix is not Hermitian",
                details={"defect": defect, "tolerance": tol},
            )
        return cls(_frozen(arr))

    @property
    def dim(self) -> int:
        return int(self.data.shape[0])

    def __matmul__(self, other: "HermitianMatrix | np.ndarray") -> np.ndarray:
        rhs = other.data if isinstance(other, HermitianMatrix) else other
        return self.data @ rhs


@dataclass(frozen=True)
class StateVector:
    """Normalized complex amplitude vector in the |J,m> basis."""

    amplitudes: np.ndarray

    @classmethod
    def from_array(cls, array: np.ndarray, normalize: bool = False, tol: float = 1e-12) -> "StateVector":
        """
        Wrap a 1-D amplitude array.

        Args:
            array: amplitudes
            normalize: rescale to unit norm instead of checking it

        Raises:
            PreconditionError: zero vector, wrong shape, or norm off by more than tol
        """
        arr = np.asarray(array, dtype=np.complex128)
        if arr.ndim != 1:
            raise PreconditionError("State must be a 1-D vector", details={"shape": list(arr.shape)})
        norm = float(np.linalg.norm(arr))
        if normalize:
            if norm == 0.0:
                raise PreconditionError("Cannot normalize the zero vector")
            arr = arr / norm
        elif abs(norm - 1.0) > tol:
            raise PreconditionError("State is not normalized", details={"norm": norm})
        return cls(_frozen(arr))

    @property
    def dim(self) -> int:
        return int(self.amplitudes.shape[0])
