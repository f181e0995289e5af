"""Dense Hermitian linear algebra."""

from src.linalg.eigen import EigenSystem, eigh, matrix_exponential, resolve_degeneracies, spectral_system
from src.linalg.matrices import HermitianMatrix, StateVector

__all__ = [
    "EigenSystem",
    "HermitianMatrix",
    "StateVector",
    "eigh",
    "matrix_exponential",
    "resolve_degeneracies",
    "spectral_system",
]
