"""
Tests for the angular-momentum operators and the double-well Hamiltonian.
"""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from src.core.exceptions import InvalidParamsError
from src.model.spin import build_hamiltonian, build_jx, build_jy, build_jz, build_kprime
from src.schemas.params import HamiltonianParams, SpinBasis


class TestSpinBasis:
    def test_dimensions(self):
        basis = SpinBasis(n_atoms=5)
        assert basis.j == 2.5
        assert basis.dim == 6
        np.testing.assert_array_equal(basis.m_values, [2.5, 1.5, 0.5, -0.5, -1.5, -2.5])

    def test_rejects_negative_atom_number(self):
        with pytest.raises(ValidationError):
            SpinBasis(n_atoms=-1)

    @given(st.integers(min_value=0, max_value=40))
    def test_m_values_symmetric_unit_steps(self, n):
        m = SpinBasis(n_atoms=n).m_values
        assert len(m) == n + 1
        np.testing.assert_allclose(m, -m[::-1])
        if n:
            np.testing.assert_allclose(np.diff(m), -1.0)


class TestOperators:
    def test_jx_spin_half(self):
        np.testing.assert_allclose(build_jx(SpinBasis(n_atoms=1)).data, [[0, 0.5], [0.5, 0]])

    def test_jx_spin_one(self):
        expected = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]]) / np.sqrt(2)
        np.testing.assert_allclose(build_jx(SpinBasis(n_atoms=2)).data, expected, atol=1e-15)

    def test_jy_spin_half(self):
        np.testing.assert_allclose(build_jy(SpinBasis(n_atoms=1)).data, [[0, -0.5j], [0.5j, 0]])

    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_jz_diagonal(self, n):
        basis = SpinBasis(n_atoms=n)
        np.testing.assert_array_equal(build_jz(basis).data, np.diag(basis.m_values))

    def test_empty_system(self):
        basis = SpinBasis(n_atoms=0)
        for builder in (build_jx, build_jy, build_jz):
            np.testing.assert_array_equal(builder(basis).data, [[0]])

    @given(st.integers(min_value=1, max_value=64))
    def test_commutation_relations(self, n):
        basis = SpinBasis(n_atoms=n)
        jx, jy, jz = build_jx(basis).data, build_jy(basis).data, build_jz(basis).data
        atol = 1e-12 * (basis.j + 1) ** 2
        for a, b, c in ((jx, jy, jz), (jy, jz, jx), (jz, jx, jy)):
            np.testing.assert_allclose(a @ b - b @ a, 1j * c, atol=atol)

    @given(st.integers(min_value=1, max_value=64))
    def test_casimir(self, n):
        basis = SpinBasis(n_atoms=n)
        jx, jy, jz = build_jx(basis).data, build_jy(basis).data, build_jz(basis).data
        j = basis.j
        np.testing.assert_allclose(
            jx @ jx + jy @ jy + jz @ jz, j * (j + 1) * np.eye(basis.dim), atol=1e-12 * (j + 1) ** 2
        )

    def test_kprime_is_jz(self):
        basis = SpinBasis(n_atoms=7)
        np.testing.assert_array_equal(build_kprime(basis).data, build_jz(basis).data)


class TestHamiltonian:
    def test_bias_only(self):
        h = build_hamiltonian(HamiltonianParams(tau=0, eps=1, u=0, n_atoms=2))
        np.testing.assert_array_equal(h.data, np.diag([1.0, 0.0, -1.0]))

    def test_tunneling_only(self):
        h = build_hamiltonian(HamiltonianParams(tau=1, eps=0, u=0, n_atoms=1))
        np.testing.assert_allclose(h.data, [[0, -0.5], [-0.5, 0]])

    def test_interaction_uses_scaled_u(self):
        params = HamiltonianParams(tau=0, eps=0, u=2, n_atoms=2)
        assert params.interaction == 1.0
        np.testing.assert_array_equal(build_hamiltonian(params).data, np.diag([1.0, 0.0, 1.0]))

    def test_empty_system_without_interaction(self):
        h = build_hamiltonian(HamiltonianParams(tau=1, eps=1, u=0, n_atoms=0))
        np.testing.assert_array_equal(h.data, [[0]])

    def test_empty_system_with_interaction_rejected(self):
        with pytest.raises(InvalidParamsError):
            build_hamiltonian(HamiltonianParams(tau=1, eps=1, u=1, n_atoms=0))

    def test_jitter_shifts_bias(self):
        params = HamiltonianParams(tau=0.5, eps=1.0, u=1.0, n_atoms=3)
        shifted = build_hamiltonian(params, jitter=1e-3).data - build_hamiltonian(params).data
        np.testing.assert_allclose(shifted, 1e-3 * build_jz(params.basis).data, atol=1e-15)

    @pytest.mark.parametrize("field", ["tau", "eps", "u"])
    def test_non_finite_parameters_rejected(self, field):
        values = {"tau": 1.0, "eps": 1.0, "u": 1.0, "n_atoms": 2, field: float("inf")}
        with pytest.raises(ValidationError):
            HamiltonianParams(**values)

    def test_scaled(self):
        params = HamiltonianParams(tau=1, eps=2, u=3, n_atoms=4).scaled(10)
        assert (params.tau, params.eps, params.u, params.n_atoms) == (10, 20, 30, 4)

    @given(
        st.sampled_from(["tau", "eps", "u"]),
        st.floats(min_value=-10.0, max_value=10.0),
        st.floats(min_value=-10.0, max_value=10.0),
        st.floats(min_value=0.0, max_value=1.0),
        st.integers(min_value=1, max_value=64),
    )
    def test_linear_in_each_coupling(self, field, first, second, weight, n):
        base = {"tau": 0.7, "eps": -0.3, "u": 1.9, "n_atoms": n}
        h1 = build_hamiltonian(HamiltonianParams(**{**base, field: first})).data
        h2 = build_hamiltonian(HamiltonianParams(**{**base, field: second})).data
        mixed = build_hamiltonian(HamiltonianParams(**{**base, field: weight * first + (1 - weight) * second})).data
        np.testing.assert_allclose(mixed, weight * h1 + (1 - weight) * h2, atol=1e-12 * (n + 1) ** 2)
