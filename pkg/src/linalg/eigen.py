"""
Dense Hermitian eigendecomposition with residual guarantees.

The raw decomposition comes from LAPACK (scipy.linalg.eigh, divide-and-conquer
driver), which is deterministic for identical input. resolve_degeneracies then
rotates each degenerate manifold of K so that K' is diagonal inside it, the basis
choice that makes first-order perturbation theory well defined.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg as la

from src.config import settings
from src.core.exceptions import DimensionMismatchError, EigenConvergenceError, InvalidParamsError
from src.core.logger import get_logger
from src.linalg.matrices import HermitianMatrix

logger = get_logger(__name__)

RawEigen = tuple[np.ndarray, np.ndarray]


@dataclass(frozen=True)
class EigenSystem:
    """
    Eigenvalues (ascending) and eigenvector columns of a Hermitian K,
    degeneracy-resolved against a second operator K'.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    degeneracy_tol: float
    manifolds: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return int(self.eigenvalues.shape[0])

    @property
    def manifold_labels(self) -> np.ndarray:
        """labels[n] is the index of the manifold containing eigenvector n."""
        labels = np.empty(self.dim, dtype=int)
        for label, group in enumerate(self.manifolds):
            labels[list(group)] = label
        return labels

    def same_manifold(self) -> np.ndarray:
        """Boolean dim x dim mask, True where m and n share a manifold."""
        labels = self.manifold_labels
        return labels[:, None] == labels[None, :]


def spectral_scale(eigenvalues: np.ndarray) -> float:
    """max(|lambda_max|, |lambda_min|, 1)."""
    if eigenvalues.size == 0:
        return 1.0
    return max(abs(float(eigenvalues[0])), abs(float(eigenvalues[-1])), 1.0)


def eigh(matrix: HermitianMatrix) -> RawEigen:
    """
    Ascending eigenvalues and orthonormal eigenvectors of a Hermitian matrix.

    Ties are ordered by original column index (stable sort).

    Raises:
        EigenConvergenceError: LAPACK failure or residual above EIGEN_RESIDUAL_TOL * scale
    """
    data = matrix.data
    try:
        values, vectors = la.eigh(data, driver="evd", check_finite=True)
    except (la.LinAlgError, ValueError) as exc:
        logger.error("Eigensolver failed", dim=matrix.dim, error=str(exc))
        raise EigenConvergenceError(float("inf"), settings.EIGEN_RESIDUAL_TOL, {"reason": str(exc)}) from exc

    order = np.argsort(values, kind="stable")
    values = values[order]
    vectors = vectors[:, order]

    scale = spectral_scale(values)
    residual = float(np.max(np.linalg.norm(data @ vectors - vectors * values, axis=0))) if values.size else 0.0
    tolerance = settings.EIGEN_RESIDUAL_TOL * scale
    if residual > tolerance:
        raise EigenConvergenceError(residual, tolerance, {"dim": matrix.dim})

    return values, vectors


def _group_manifolds(values: np.ndarray, tol: float) -> tuple[tuple[int, ...], ...]:
    # sorted input: a gap larger than tol starts a new manifold
    groups: list[list[int]] = []
    for idx, value in enumerate(values):
        if groups and value - values[groups[-1][-1]] <= tol:
            groups[-1].append(idx)
        else:
            groups.append([idx])
    return tuple(tuple(g) for g in groups)


def resolve_degeneracies(
    raw: RawEigen,
    kprime: HermitianMatrix,
    degeneracy_tol: float | None = None,
) -> EigenSystem:
    """
    Rotate eigenvectors inside each degenerate manifold so K' is diagonal there.

    Args:
        raw: (eigenvalues, eigenvectors) from eigh
        kprime: the perturbation K'
        degeneracy_tol: absolute grouping threshold; defaults to
            DEGENERACY_TOL_REL * max(|lambda_max|, |lambda_min|, 1)

    Returns:
        EigenSystem with manifolds recorded; vectors outside manifolds are untouched
    """
    values, vectors = raw
    if kprime.dim != values.shape[0]:
        raise DimensionMismatchError("resolve_degeneracies", values.shape[0], kprime.dim)

    tol = degeneracy_tol if degeneracy_tol is not None else settings.DEGENERACY_TOL_REL * spectral_scale(values)
    if tol <= 0:
        raise InvalidParamsError("degeneracy_tol must be positive", details={"degeneracy_tol": tol})

    manifolds = _group_manifolds(values, tol)
    resolved = np.array(vectors, dtype=np.complex128, copy=True)

    for group in manifolds:
        if len(group) < 2:
            continue
        cols = list(group)
        block_vectors = resolved[:, cols]
        block = block_vectors.conj().T @ kprime.data @ block_vectors
        block = 0.5 * (block + block.conj().T)
        _, rotation = eigh(HermitianMatrix.from_array(block))
        resolved[:, cols] = block_vectors @ rotation
        logger.debug("Resolved degenerate manifold", size=len(cols), eigenvalue=float(values[cols[0]]))

    resolved.setflags(write=False)
    frozen_values = np.array(values, dtype=float, copy=True)
    frozen_values.setflags(write=False)
    return EigenSystem(
        eigenvalues=frozen_values,
        eigenvectors=resolved,
        degeneracy_tol=float(tol),
        manifolds=manifolds,
    )


def spectral_system(matrix: HermitianMatrix, kprime: HermitianMatrix) -> EigenSystem:
    """eigh followed by resolve_degeneracies with the default tolerance."""
    return resolve_degeneracies(eigh(matrix), kprime)


def matrix_exponential(eig: EigenSystem, scale: complex) -> np.ndarray:
    """V diag(exp(scale * lambda)) V^H; unitary for scale = -1j."""
    vectors = eig.eigenvectors
    return np.einsum("ij,j,kj->ik", vectors, np.exp(scale * eig.eigenvalues), vectors.conj())
