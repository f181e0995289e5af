"""
Derivative state |psi'> from first-order perturbation theory.

    d/dtheta e^{-iK} = sum_n e^{-i lambda_n} (|phi_n><n| - i xi_n |n><n| + |n><phi_n|)

with xi_n = <n|K'|n> and |phi_n> = sum_{m not in manifold(n)} |m> <m|K'|n> / (lambda_n - lambda_m).
Same-manifold terms are dropped, which is exact once K' is diagonal inside
every manifold (see resolve_degeneracies).
"""

from dataclasses import dataclass

import numpy as np

from src.core.exceptions import DimensionMismatchError
from src.linalg.eigen import EigenSystem
from src.linalg.matrices import HermitianMatrix, StateVector


@dataclass(frozen=True)
class PerturbationData:
    """xi_n and the correction vectors |phi_n> (columns, in the |J,m> basis)."""

    xi: np.ndarray
    phi: np.ndarray
    # phi expressed in the eigenbasis of K: phi_eig[m, n] = <m|phi_n>
    phi_eig: np.ndarray


def perturbation_data(eig: EigenSystem, kprime: HermitianMatrix) -> PerturbationData:
    """First-order eigenvalue shifts and eigenvector corrections of K + dtheta K'."""
    if eig.dim != kprime.dim:
        raise DimensionMismatchError("perturbation_data", eig.dim, kprime.dim)

    vectors = eig.eigenvectors
    lam = eig.eigenvalues
    in_eigenbasis = vectors.conj().T @ kprime.data @ vectors

    gaps = lam[None, :] - lam[:, None]  # [m, n] = lambda_n - lambda_m
    coupled = ~eig.same_manifold()
    safe_gaps = np.where(coupled, gaps, 1.0)
    phi_eig = np.where(coupled, in_eigenbasis / safe_gaps, 0.0)

    return PerturbationData(
        xi=np.real(np.diag(in_eigenbasis)).copy(),
        phi=vectors @ phi_eig,
        phi_eig=phi_eig,
    )


def evolution_derivative(eig: EigenSystem, kprime: HermitianMatrix) -> np.ndarray:
    """The operator d/dtheta e^{-iK(theta)} in the |J,m> basis."""
    data = perturbation_data(eig, kprime)
    phases = np.exp(-1j * eig.eigenvalues)
    phi = data.phi_eig
    in_eigenbasis = phi * phases[None, :] - 1j * np.diag(data.xi * phases) + phases[:, None] * phi.conj().T
    vectors = eig.eigenvectors
    return vectors @ in_eigenbasis @ vectors.conj().T


def derivative_state_pt(eig: EigenSystem, kprime: HermitianMatrix, psi0: StateVector) -> np.ndarray:
    """
    |psi'> = (d/dtheta e^{-iK}) |psi0>, returned as a raw (unnormalized) vector.

    Raises:
        DimensionMismatchError: psi0 or kprime does not match eig
    """
    if psi0.dim != eig.dim:
        raise DimensionMismatchError("derivative_state_pt", eig.dim, psi0.dim)
    return evolution_derivative(eig, kprime) @ psi0.amplitudes
