"""
Point pipeline: spin-model -> hermitian-eig -> qfi-core.

Every other layer (oracles, limits, sweeps, CLI) evaluates parameter points
through these two functions.
"""

from dataclasses import dataclass

import numpy as np

from src.config import settings
from src.core.exceptions import InvalidParamsError
from src.core.logger import get_logger
from src.linalg.eigen import EigenSystem, eigh, resolve_degeneracies, spectral_scale
from src.linalg.matrices import HermitianMatrix
from src.model.spin import build_hamiltonian, build_kprime
from src.qfi.generator import LocalGenerator, local_generator, max_fisher, optimal_input_state
from src.qfi.point import QfiPoint
from src.schemas.params import HamiltonianParams

logger = get_logger(__name__)


@dataclass(frozen=True)
class PointSolution:
    """Intermediate objects of one pipeline run, kept for oracles and diagnostics."""

    params: HamiltonianParams
    hamiltonian: HermitianMatrix
    kprime: HermitianMatrix
    eig: EigenSystem
    generator: LocalGenerator


def solve_point(params: HamiltonianParams, jitter: bool = False) -> PointSolution:
    """
    Build K and K', diagonalize K and assemble the local generator.

    Args:
        params: model parameters
        jitter: add JITTER_MAGNITUDE * J_z to K and skip degeneracy resolution
            (the symmetry-breaking workaround, kept for cross-checks)
    """
    basis = params.basis
    kprime = build_kprime(basis)
    if jitter:
        hamiltonian = build_hamiltonian(params, jitter=settings.JITTER_MAGNITUDE)
        values, vectors = eigh(hamiltonian)
        # only exact ties are grouped: the jitter is meant to have split everything else
        tol = float(np.finfo(float).eps) * spectral_scale(values)
        eig = resolve_degeneracies((values, vectors), kprime, degeneracy_tol=tol)
        logger.debug("Jitter mode eigensystem", jitter=settings.JITTER_MAGNITUDE)
    else:
        hamiltonian = build_hamiltonian(params)
        eig = resolve_degeneracies(eigh(hamiltonian), kprime)

    generator = local_generator(eig, kprime)
    return PointSolution(params=params, hamiltonian=hamiltonian, kprime=kprime, eig=eig, generator=generator)


def evaluate_point(params: HamiltonianParams, rel_phase: float = 0.0, jitter: bool = False) -> QfiPoint:
    """
    Maximal Fisher information, its scaled value and an optimal input state.

    Raises:
        InvalidParamsError: n_atoms < 1 or u != 0 with no atoms
    """
    if params.n_atoms < 1:
        raise InvalidParamsError("A parameter point needs at least one atom", details={"n_atoms": params.n_atoms})

    solution = solve_point(params, jitter=jitter)
    fisher, scaled = max_fisher(solution.generator, params.n_atoms)
    optimum = optimal_input_state(solution.eig, solution.generator, rel_phase=rel_phase)

    logger.debug(
        "Point evaluated",
        n_atoms=params.n_atoms,
        tau=params.tau,
        eps=params.eps,
        u=params.u,
        fisher_scaled=scaled,
    )
    return QfiPoint(
        params=params,
        fisher_max=fisher,
        fisher_scaled=scaled,
        ell_max=solution.generator.ell_max,
        ell_min=solution.generator.ell_min,
        optimal_state=optimum.state,
        optimal_state_degenerate=optimum.degenerate,
    )
