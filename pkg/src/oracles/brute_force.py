"""
Independent brute-force implementations used only for validation.

None of these share the perturbation-theory code path: derivatives come from
finite differences of freshly built evolution operators, L from quadrature of
U(x) K' U^H(x), and maximality from sampling random states.
"""

from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np
from scipy.integrate import simpson

from src.config import settings
from src.core.exceptions import DimensionMismatchError, InvalidParamsError
from src.linalg.eigen import EigenSystem, matrix_exponential, spectral_system
from src.linalg.matrices import HermitianMatrix, StateVector
from src.model.spin import build_hamiltonian, build_kprime
from src.qfi.fisher import local_generator_via_psi
from src.qfi.generator import LocalGenerator
from src.schemas.params import HamiltonianParams
from src.services.qfi_service import solve_point

FD_STEP_RANGE = (1e-8, 1e-2)


def _evolve(params: HamiltonianParams, eps: float, psi0: StateVector) -> np.ndarray:
    shifted = params.model_copy(update={"eps": eps})
    eig = spectral_system(build_hamiltonian(shifted), build_kprime(shifted.basis))
    return matrix_exponential(eig, -1j) @ psi0.amplitudes


def derivative_state_fd(
    params: HamiltonianParams,
    psi0: StateVector,
    dtheta: float,
    scheme: Literal["central", "forward"] = "central",
) -> np.ndarray:
    """
    d/d(eps) of e^{-iK(eps)} |psi0> by finite differences.

    central: (e^{-iK(eps+d)} - e^{-iK(eps-d)}) psi0 / 2d, error O(d^2)
    forward: (e^{-iK(eps+d)} - e^{-iK(eps)}) psi0 / d, error O(d)

    Raises:
        InvalidParamsError: dtheta outside [1e-8, 1e-2] or unknown scheme
    """
    low, high = FD_STEP_RANGE
    if not low <= dtheta <= high:
        raise InvalidParamsError("dtheta out of range", details={"dtheta": dtheta, "min": low, "max": high})
    if psi0.dim != params.n_atoms + 1:
        raise DimensionMismatchError("derivative_state_fd", params.n_atoms + 1, psi0.dim)

    if scheme == "central":
        ahead = _evolve(params, params.eps + dtheta, psi0)
        behind = _evolve(params, params.eps - dtheta, psi0)
        return (ahead - behind) / (2.0 * dtheta)
    if scheme == "forward":
        ahead = _evolve(params, params.eps + dtheta, psi0)
        here = _evolve(params, params.eps, psi0)
        return (ahead - here) / dtheta
    raise InvalidParamsError("Unknown finite-difference scheme", details={"scheme": scheme})


def quadrature_local_generator(eig: EigenSystem, kprime: HermitianMatrix, nodes: int | None = None) -> HermitianMatrix:
    """
    Composite Simpson quadrature of L = int_0^1 dx U(x) K' U^H(x), U(x) = e^{-ixK}.

    Raises:
        InvalidParamsError: nodes < 3 or even
    """
    count = settings.QUADRATURE_NODES if nodes is None else nodes
    if count < 3 or count % 2 == 0:
        raise InvalidParamsError("Simpson quadrature needs an odd node count >= 3", details={"nodes": count})
    if eig.dim != kprime.dim:
        raise DimensionMismatchError("quadrature_local_generator", eig.dim, kprime.dim)

    vectors = eig.eigenvectors
    in_eigenbasis = vectors.conj().T @ kprime.data @ vectors
    x = np.linspace(0.0, 1.0, count)
    propagator = np.exp(-1j * np.outer(x, eig.eigenvalues))  # [x, m] = e^{-i x lambda_m}
    integrand = propagator[:, :, None] * in_eigenbasis[None, :, :] * propagator.conj()[:, None, :]
    integral = simpson(integrand, x=x, axis=0)
    assembled = vectors @ integral @ vectors.conj().T
    return HermitianMatrix.from_array(0.5 * (assembled + assembled.conj().T))


@dataclass(frozen=True)
class BoundsReport:
    """Containment of spectrum(L) in [-N/2, N/2]; margins are negative on violation."""

    passed: bool
    upper_margin: float
    lower_margin: float


def spectrum_respects_generator_bounds(lg: LocalGenerator, n_atoms: int, tol: float | None = None) -> BoundsReport:
    """Check -N/2 - tol <= l_min and l_max <= N/2 + tol."""
    tolerance = settings.CONTAINMENT_TOL if tol is None else tol
    g_max = n_atoms / 2
    upper = g_max - lg.ell_max
    lower = lg.ell_min + g_max
    return BoundsReport(
        passed=bool(upper >= -tolerance and lower >= -tolerance), upper_margin=float(upper), lower_margin=float(lower)
    )


def random_states(dim: int, n_samples: int, rng: np.random.Generator) -> list[StateVector]:
    """Complex-normal amplitudes, normalized (a unitarily invariant ensemble)."""
    draws = rng.standard_normal((n_samples, dim)) + 1j * rng.standard_normal((n_samples, dim))
    return [StateVector.from_array(row, normalize=True) for row in draws]


def random_state_fisher_sample(
    params: HamiltonianParams,
    n_samples: int,
    seed: int,
    states: Sequence[StateVector] | None = None,
) -> float:
    """
    Largest Fisher information found among n_samples input states.

    The input states are random unless given explicitly; each is evolved with
    e^{-iK} and scored as 4 Var(L) on the evolved state.

    Raises:
        InvalidParamsError: n_samples < 1, or n_samples != len(states)
        DimensionMismatchError: an explicit state of the wrong dimension
    """
    if n_samples < 1:
        raise InvalidParamsError("n_samples must be positive", details={"n_samples": n_samples})
    dim = params.n_atoms + 1
    if states is None:
        inputs = random_states(dim, n_samples, np.random.default_rng(seed))
    else:
        if len(states) != n_samples:
            raise InvalidParamsError(
                "n_samples must match the number of explicit states",
                details={"n_samples": n_samples, "states": len(states)},
            )
        for state in states:
            if state.dim != dim:
                raise DimensionMismatchError("random_state_fisher_sample", dim, state.dim)
        inputs = list(states)

    solution = solve_point(params)
    evolution = matrix_exponential(solution.eig, -1j)
    return max(
        local_generator_via_psi(StateVector.from_array(evolution @ psi.amplitudes, normalize=True), solution.generator)
        for psi in inputs
    )
