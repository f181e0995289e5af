"""
Local generator L of parameter translations and the maximal Fisher information.

With K = sum_n lambda_n |n><n| and K' = dK/dtheta,

    L = sum_{m,n} w(lambda_n - lambda_m) |m><m|K'|n><n|,   w(D) = (1 - e^{iD}) / (-iD),

so that |psi'> = -i L |psi>. The maximal Fisher information over all input
states is (l_max - l_min)^2, reached by (|l_max> + e^{i phi}|l_min>)/sqrt(2)
pulled back through e^{+iK}.
"""

from dataclasses import dataclass

import numpy as np

from src.config import settings
from src.core.exceptions import DimensionMismatchError, InvalidParamsError, NumericalInconsistencyError
from src.core.logger import get_logger
from src.linalg.eigen import EigenSystem, eigh, matrix_exponential
from src.linalg.matrices import HermitianMatrix, StateVector, hermiticity_defect

logger = get_logger(__name__)


@dataclass(frozen=True)
class LocalGenerator:
    """L with its extreme eigenvalues and eigenvectors."""

    matrix: HermitianMatrix
    ell_max: float
    ell_min: float
    eigvec_max: StateVector
    eigvec_min: StateVector


@dataclass(frozen=True)
class OptimalInputState:
    """Optimal probe state; degenerate=True when l_max == l_min and any state is optimal."""

    state: StateVector
    degenerate: bool


def phase_weights(delta: np.ndarray) -> np.ndarray:
    """Vectorized w(D) = e^{iD/2} sin(D/2)/(D/2), with the series 1 + iD/2 - D^2/6 near 0."""
    delta = np.asarray(delta, dtype=float)
    stable = np.exp(0.5j * delta) * np.sinc(delta / (2 * np.pi))
    series = 1.0 + 0.5j * delta - delta**2 / 6.0
    return np.where(np.abs(delta) < settings.PHASE_WEIGHT_SERIES_CUTOFF, series, stable)


def phase_weight(delta: float) -> complex:
    """w(D) = (1 - e^{iD})/(-iD), w(0) = 1."""
    return complex(phase_weights(np.asarray(delta)))


def _extreme_vectors(values: np.ndarray, vectors: np.ndarray, tol: float) -> tuple[np.ndarray, np.ndarray]:
    # first column of each extreme manifold, in solver order
    top = int(np.flatnonzero(values >= values[-1] - tol)[0])
    bottom = int(np.flatnonzero(values <= values[0] + tol)[0])
    return vectors[:, top], vectors[:, bottom]


def local_generator(eig: EigenSystem, kprime: HermitianMatrix) -> LocalGenerator:
    """
    Assemble L in the |J,m> basis and diagonalize it.

    Args:
        eig: eigensystem of K, degeneracy-resolved against kprime
        kprime: dK/dtheta

    Raises:
        DimensionMismatchError: eig and kprime differ in dimension
        NumericalInconsistencyError: the assembled L is not Hermitian to GENERATOR_HERMITIAN_TOL
    """
    if eig.dim != kprime.dim:
        raise DimensionMismatchError("local_generator", eig.dim, kprime.dim)

    vectors = eig.eigenvectors
    lam = eig.eigenvalues
    in_eigenbasis = vectors.conj().T @ kprime.data @ vectors
    weights = phase_weights(lam[None, :] - lam[:, None])
    assembled = vectors @ (in_eigenbasis * weights) @ vectors.conj().T

    defect = hermiticity_defect(assembled)
    if defect > settings.GENERATOR_HERMITIAN_TOL:
        raise NumericalInconsistencyError("Local generator is not Hermitian", details={"defect": defect})
    matrix = HermitianMatrix.from_array(0.5 * (assembled + assembled.conj().T))

    values, eigvecs = eigh(matrix)
    vec_max, vec_min = _extreme_vectors(values, eigvecs, settings.CONTAINMENT_TOL)
    return LocalGenerator(
        matrix=matrix,
        ell_max=float(values[-1]),
        ell_min=float(values[0]),
        eigvec_max=StateVector.from_array(vec_max, normalize=True),
        eigvec_min=StateVector.from_array(vec_min, normalize=True),
    )


def max_fisher(lg: LocalGenerator, n_atoms: int) -> tuple[float, float]:
    """
    F_M = (l_max - l_min)^2 and f_M = F_M / N^2.

    Raises:
        InvalidParamsError: n_atoms < 1
    """
    if n_atoms < 1:
        raise InvalidParamsError("max_fisher needs at least one atom", details={"n_atoms": n_atoms})
    fisher = (lg.ell_max - lg.ell_min) ** 2
    return fisher, fisher / n_atoms**2


def optimal_input_state(eig_k: EigenSystem, lg: LocalGenerator, rel_phase: float = 0.0) -> OptimalInputState:
    """
    (1/sqrt 2) e^{iK} (|l_max> + e^{i rel_phase} |l_min>).

    When l_max and l_min coincide every state is optimal (F_M = 0); the image
    of |l_max> is returned and the result is flagged degenerate.
    """
    if eig_k.dim != lg.matrix.dim:
        raise DimensionMismatchError("optimal_input_state", eig_k.dim, lg.matrix.dim)

    pull_back = matrix_exponential(eig_k, 1j)
    if lg.ell_max - lg.ell_min <= settings.CONTAINMENT_TOL:
        logger.warning("Degenerate local generator spectrum, any state is optimal", ell=lg.ell_max)
        state = StateVector.from_array(pull_back @ lg.eigvec_max.amplitudes, normalize=True)
        return OptimalInputState(state=state, degenerate=True)

    chi = (lg.eigvec_max.amplitudes + np.exp(1j * rel_phase) * lg.eigvec_min.amplitudes) / np.sqrt(2.0)
    state = StateVector.from_array(pull_back @ chi, normalize=True)
    return OptimalInputState(state=state, degenerate=False)


def simple_model_optimum(generator: HermitianMatrix, rel_phase: float = 0.0) -> tuple[float, StateVector]:
    """
    For K = theta G: F_M = (g_max - g_min)^2 and the state (|g_max> + e^{i phi}|g_min>)/sqrt 2.
    """
    values, vectors = eigh(generator)
    vec_max, vec_min = _extreme_vectors(values, vectors, settings.CONTAINMENT_TOL)
    state = StateVector.from_array(vec_max + np.exp(1j * rel_phase) * vec_min, normalize=True)
    return float((values[-1] - values[0]) ** 2), state
