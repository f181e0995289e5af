"""
Angular-momentum operators and the two-site Hubbard Hamiltonian in the |J,m> basis.

Entries are constructed directly (never symmetrized), so every builder returns an
exactly Hermitian matrix.
"""

import numpy as np

from src.core.exceptions import InvalidParamsError
from src.linalg.matrices import HermitianMatrix
from src.schemas.params import HamiltonianParams, SpinBasis


def _raising(basis: SpinBasis) -> np.ndarray:
    """J_+ with <J,m+1|J_+|J,m> = sqrt(J(J+1) - m(m+1)) on the superdiagonal."""
    j = basis.j
    m = basis.m_values[1:]
    coeffs = np.sqrt(j * (j + 1) - m * (m + 1))
    return np.diag(coeffs, k=1).astype(np.complex128)


def build_jx(basis: SpinBasis) -> HermitianMatrix:
    """J_x = (J_+ + J_-)/2, real symmetric."""
    jp = _raising(basis)
    return HermitianMatrix.from_array(0.5 * (jp + jp.T))


def build_jy(basis: SpinBasis) -> HermitianMatrix:
    """J_y = (J_+ - J_-)/(2i), purely imaginary."""
    jp = _raising(basis)
    return HermitianMatrix.from_array(-0.5j * (jp - jp.T))


def build_jz(basis: SpinBasis) -> HermitianMatrix:
    """J_z = diag(J, J-1, ..., -J)."""
    return HermitianMatrix.from_array(np.diag(basis.m_values).astype(np.complex128))


def build_kprime(basis: SpinBasis) -> HermitianMatrix:
    """dK/d(eps) = J_z: the generator of the measured parameter."""
    return build_jz(basis)


def build_hamiltonian(params: HamiltonianParams, jitter: float = 0.0) -> HermitianMatrix:
    """
    K = -tau J_x + eps J_z + (u/N) J_z^2.

    H and K are identified (t/hbar absorbed into the parameters).

    Args:
        params: model parameters
        jitter: extra coefficient on J_z used to break exact degeneracies

    Raises:
        InvalidParamsError: u != 0 with N = 0
    """
    if params.n_atoms == 0:
        if params.u != 0.0:
            raise InvalidParamsError(
                "Scaled interaction u requires at least one atom",
                details={"u": params.u, "n_atoms": params.n_atoms},
            )
        return HermitianMatrix.from_array(np.zeros((1, 1), dtype=np.complex128))

    basis = params.basis
    m = basis.m_values
    jx = build_jx(basis).data
    diagonal = (params.eps + jitter) * m + params.interaction * m**2
    return HermitianMatrix.from_array(-params.tau * jx + np.diag(diagonal))
