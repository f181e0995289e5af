"""
Fixtures and configuration for pytest.
"""

import numpy as np
import pytest
from hypothesis import settings as hypothesis_settings

from src.linalg.matrices import StateVector
from src.model.spin import build_jz
from src.schemas.params import HamiltonianParams, SpinBasis
from src.services.qfi_service import PointSolution, solve_point

# eigendecompositions dominate; deadlines only add flakiness
hypothesis_settings.register_profile("qfimeter", max_examples=50, deadline=None)
hypothesis_settings.load_profile("qfimeter")


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for randomized batches."""
    return np.random.default_rng(20240607)


@pytest.fixture
def generic_params() -> HamiltonianParams:
    """A point with tunneling, bias and interaction all switched on."""
    return HamiltonianParams(tau=1.0, eps=1.0, u=1.0, n_atoms=4)


@pytest.fixture
def generic_solution(generic_params: HamiltonianParams) -> PointSolution:
    return solve_point(generic_params)


@pytest.fixture
def noon_state() -> StateVector:
    """(|N,0> + |0,N>)/sqrt 2 for N = 4."""
    amplitudes = np.zeros(5, dtype=complex)
    amplitudes[[0, -1]] = 1.0
    return StateVector.from_array(amplitudes, normalize=True)


@pytest.fixture
def jz4() -> np.ndarray:
    return build_jz(SpinBasis(n_atoms=4)).data
