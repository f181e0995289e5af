"""
Closed-form and leading-order reference values for the limiting regimes of the
double-well interferometer, plus the scans used to approach them numerically.
"""

from dataclasses import dataclass

import numpy as np

from src.config import settings
from src.core.exceptions import InvalidParamsError, OutOfRegimeError, UndefinedFrameError
from src.core.logger import get_logger
from src.linalg.eigen import EigenSystem, eigh, spectral_scale
from src.linalg.matrices import HermitianMatrix
from src.model.spin import build_hamiltonian
from src.qfi.point import QfiPoint
from src.schemas.params import HamiltonianParams
from src.services.qfi_service import evaluate_point

logger = get_logger(__name__)

EPS_ZERO_TOL = 1e-10


@dataclass(frozen=True)
class TiltedFrame:
    """
    Without interactions H = T (sin(phi) J_x + cos(phi) J_z), a spin along an
    axis tilted by phi from z.
    """

    big_t: float
    cos_phi: float
    sin_phi: float

    @classmethod
    def from_couplings(cls, tau: float, eps: float) -> "TiltedFrame":
        big_t = float(np.hypot(tau, eps))
        if big_t == 0.0:
            raise UndefinedFrameError()
        return cls(big_t=big_t, cos_phi=eps / big_t, sin_phi=-tau / big_t)


def fisher_limit_no_interaction(params: HamiltonianParams) -> float:
    """
    F_M -> N^2 cos^2(phi) = N^2 eps^2/(tau^2 + eps^2) as T -> infinity with u = 0.

    The tilted generator has projected eigenvalues m cos(phi), m in [-J, J],
    hence the range N |cos(phi)|.
    """
    if params.u != 0.0:
        raise OutOfRegimeError("no-interaction limit", "requires u = 0", {"u": params.u})
    frame = TiltedFrame.from_couplings(params.tau, params.eps)
    return params.n_atoms**2 * frame.cos_phi**2


def fisher_limit_strong_interaction(n_atoms: int) -> float:
    """|u| -> infinity: L -> J_z and F_M -> N^2."""
    if n_atoms < 1:
        raise InvalidParamsError("Strong-interaction limit needs at least one atom", details={"n_atoms": n_atoms})
    return float(n_atoms**2)


def local_generator_large_scaling(eig: EigenSystem, kprime: HermitianMatrix) -> HermitianMatrix:
    """
    Large global scaling: only the part of K' diagonal in the eigenbasis of K survives,
    L ~ sum_n |n><n|K'|n><n|.
    """
    vectors = eig.eigenvectors
    diagonal = np.real(np.einsum("in,ij,jn->n", vectors.conj(), kprime.data, vectors))
    projected = (vectors * diagonal) @ vectors.conj().T
    return HermitianMatrix.from_array(0.5 * (projected + projected.conj().T))


def noon_ground_state_overlap(params: HamiltonianParams) -> float:
    """
    Overlap of the ground state of H with the phase-optimized NOON state.

    For a ground manifold with projector P, max over the relative phase of
    <NOON|P|NOON> is (P_00 + P_dd + 2|P_0d|)/2, d the last index; a
    nondegenerate ground state gives (|a| + |b|)^2 / 2.

    Raises:
        OutOfRegimeError: eps != 0 or u >= 0
    """
    if abs(params.eps) >= EPS_ZERO_TOL:
        raise OutOfRegimeError("NOON ground state", "requires eps = 0", {"eps": params.eps})
    if params.u >= 0.0:
        raise OutOfRegimeError("NOON ground state", "requires attractive interactions u < 0", {"u": params.u})

    values, vectors = eigh(build_hamiltonian(params))
    tol = settings.DEGENERACY_TOL_REL * spectral_scale(values)
    ground = vectors[:, values <= values[0] + tol]
    projector = ground @ ground.conj().T
    last = params.n_atoms
    overlap = 0.5 * (projector[0, 0].real + projector[last, last].real + 2.0 * abs(projector[0, last]))
    logger.debug("NOON overlap", n_atoms=params.n_atoms, u=params.u, ground_multiplicity=ground.shape[1])
    return float(overlap)


def fisher_eps_zero(params: HamiltonianParams) -> QfiPoint:
    """
    Leading-order eps -> 0 precision: eigenvectors and eigenvalues of K taken at eps = 0.
    """
    return evaluate_point(params.model_copy(update={"eps": 0.0}))


def global_scaling_scan(params: HamiltonianParams, xs: list[float]) -> list[tuple[float, float]]:
    """f_M with (tau, eps, u) all multiplied by each x."""
    return [(x, evaluate_point(params.scaled(x)).fisher_scaled) for x in xs]


def eps_scan(params: HamiltonianParams, eps_values: list[float]) -> list[tuple[float, float]]:
    """f_M as a function of eps with tau, u and N held fixed."""
    return [(eps, evaluate_point(params.model_copy(update={"eps": eps})).fisher_scaled) for eps in eps_values]
