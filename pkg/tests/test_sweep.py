"""
Tests for grid sweeps, the u-sign comparison and Richardson extrapolation.
"""

import numpy as np
import pytest

from src.config import settings
from src.core.exceptions import ExtrapolationError, GridAxisMismatchError, InvalidParamsError, SweepError
from src.schemas.params import HamiltonianParams
from src.services.qfi_service import evaluate_point
from src.sweep import (
    atom_number_series,
    extrapolate_grid,
    extrapolate_point,
    mirrored_sweep,
    richardson_extrapolate,
    sweep,
    u_sign_symmetry_report,
)


def default_axes() -> tuple[np.ndarray, np.ndarray]:
    points = settings.DEFAULT_GRID_POINTS
    return (
        np.linspace(settings.DEFAULT_TAU_MIN, settings.DEFAULT_TAU_MAX, points),
        np.linspace(settings.DEFAULT_U_MIN, settings.DEFAULT_U_MAX, points),
    )


class TestSweep:
    def test_no_tunneling_column_is_heisenberg(self):
        grid = sweep([0.0], [0.0, 1.0, 10.0], eps=1.0, n_atoms=8)
        assert grid.shape == (3, 1)
        np.testing.assert_allclose(grid.values, 1.0, atol=1e-8)

    def test_single_point_matches_direct_evaluation(self):
        grid = sweep([1.0], [0.0], eps=1.0, n_atoms=2)
        point = evaluate_point(HamiltonianParams(tau=1.0, eps=1.0, u=0.0, n_atoms=2))
        assert grid.values[0, 0] == point.fisher_scaled
        assert grid.fisher[0, 0] == point.fisher_max
        assert grid.ell_max[0, 0] == point.ell_max
        assert grid.ell_min[0, 0] == point.ell_min

    def test_tunneling_lowers_precision(self):
        grid = sweep([0.0, 1.0], [0.0], eps=1.0, n_atoms=2)
        assert grid.values[0, 0] == pytest.approx(1.0, abs=1e-10)
        assert grid.values[0, 1] < 1.0

    def test_interaction_counteracts_tunneling(self):
        grid = sweep([4.0], [0.0, 10.0], eps=1.0, n_atoms=8)
        assert grid.values[0, 0] < grid.values[1, 0]

    def test_values_indexed_u_then_tau(self):
        taus, us = [0.0, 0.5, 2.0], [-1.0, 3.0]
        grid = sweep(taus, us, eps=0.7, n_atoms=3)
        for row, u in enumerate(us):
            for col, tau in enumerate(taus):
                expected = evaluate_point(HamiltonianParams(tau=tau, eps=0.7, u=u, n_atoms=3)).fisher_scaled
                assert grid.values[row, col] == expected

    def test_values_contained(self):
        grid = sweep(np.linspace(0, 4, 5), np.linspace(-10, 10, 5), eps=1.0, n_atoms=6)
        assert np.all(grid.values >= 0.0)
        assert np.all(grid.values <= 1.0 + 1e-8)

    def test_parallel_result_identical(self):
        taus, us = np.linspace(0, 3, 4), np.linspace(0, 6, 3)
        serial = sweep(taus, us, eps=1.0, n_atoms=4, parallelism=1)
        pooled = sweep(taus, us, eps=1.0, n_atoms=4, parallelism=2)
        np.testing.assert_array_equal(serial.values, pooled.values)
        np.testing.assert_array_equal(serial.fisher, pooled.fisher)

    @pytest.mark.parametrize(
        "tau_axis,u_axis",
        [([], [0.0]), ([1.0, 0.0], [0.0]), ([0.0], [1.0, 1.0]), ([np.nan], [0.0])],
    )
    def test_bad_axes(self, tau_axis, u_axis):
        with pytest.raises(InvalidParamsError):
            sweep(tau_axis, u_axis, eps=1.0, n_atoms=2)

    def test_needs_atoms(self):
        with pytest.raises(InvalidParamsError):
            sweep([0.0], [0.0], eps=1.0, n_atoms=0)

    def test_bad_parallelism(self):
        with pytest.raises(InvalidParamsError):
            sweep([0.0], [0.0], eps=1.0, n_atoms=2, parallelism=0)

    def test_failures_collected_with_coordinates(self, monkeypatch):
        def failing(params, jitter=False):
            if params.tau > 0.5:
                raise InvalidParamsError("boom")
            return evaluate_point(params)

        monkeypatch.setattr("src.sweep.grid.evaluate_point", failing)
        with pytest.raises(SweepError) as exc_info:
            sweep([0.0, 1.0], [0.0, 2.0], eps=1.0, n_atoms=2, parallelism=1)
        failures = exc_info.value.failures
        assert [(f["tau"], f["u"]) for f in failures] == [(1.0, 0.0), (1.0, 2.0)]
        assert all(f["error_code"] == "INVALID_PARAMS" for f in failures)


class TestUSignSymmetry:
    def test_mirrored_grids_agree(self):
        grid = sweep([0.0, 0.5, 2.0], [0.0, 1.0, 3.0], eps=1.0, n_atoms=3)
        mirror = mirrored_sweep(grid)
        np.testing.assert_array_equal(mirror.u_axis, [-3.0, -1.0, 0.0])
        assert u_sign_symmetry_report(grid, mirror) <= 1e-7

    def test_zero_u_axis(self):
        grid = sweep([0.0, 1.0], [0.0], eps=1.0, n_atoms=2)
        assert u_sign_symmetry_report(grid, mirrored_sweep(grid)) == 0.0

    def test_no_tunneling_axis(self):
        grid = sweep([0.0], [1.0, 4.0], eps=1.0, n_atoms=4)
        assert u_sign_symmetry_report(grid, mirrored_sweep(grid)) <= 1e-10

    def test_default_grid_two_atoms(self):
        taus, us = default_axes()
        grid = sweep(taus, us, eps=1.0, n_atoms=2)
        assert u_sign_symmetry_report(grid, mirrored_sweep(grid)) <= 0.05

    def test_unmirrored_axes_rejected(self):
        grid = sweep([0.0], [0.0, 1.0], eps=1.0, n_atoms=2)
        with pytest.raises(GridAxisMismatchError):
            u_sign_symmetry_report(grid, grid)

    def test_different_atom_number_rejected(self):
        grid = sweep([0.0], [1.0], eps=1.0, n_atoms=2)
        other = sweep([0.0], [-1.0], eps=1.0, n_atoms=3)
        with pytest.raises(GridAxisMismatchError):
            u_sign_symmetry_report(grid, other)

    def test_different_tau_axis_rejected(self):
        grid = sweep([0.0], [1.0], eps=1.0, n_atoms=2)
        other = sweep([0.5], [-1.0], eps=1.0, n_atoms=2)
        with pytest.raises(GridAxisMismatchError):
            u_sign_symmetry_report(grid, other)


class TestRichardson:
    n_series = (8, 16, 32, 64)

    def test_exact_inverse_n_model(self):
        result = richardson_extrapolate([(n, 0.7 + 1 / n) for n in self.n_series])
        assert result.f_infinity == pytest.approx(0.7, abs=1e-10)
        assert result.convergence_ratios == pytest.approx({8: 2.0, 16: 2.0, 32: 2.0})

    def test_quadratic_model(self):
        result = richardson_extrapolate([(n, 0.7 + 1 / n + 1 / n**2) for n in self.n_series])
        assert result.f_infinity == pytest.approx(0.7, abs=1e-3)
        assert abs(result.f_infinity - 0.7) <= result.error_estimate + 1e-12

    def test_first_column_for_doubled_n(self):
        f8, f16, f32 = 0.9, 0.85, 0.83
        result = richardson_extrapolate([(8, f8), (16, f16), (32, f32)])
        assert result.tableau[1][1] == pytest.approx(2 * f16 - f8)
        assert result.tableau[2][1] == pytest.approx(2 * f32 - f16)

    def test_unequal_spacing(self):
        series = [(3, 0.5 + 2 / 3), (5, 0.5 + 2 / 5), (11, 0.5 + 2 / 11)]
        assert richardson_extrapolate(series).f_infinity == pytest.approx(0.5, abs=1e-12)

    def test_error_estimate_is_last_diagonal_step(self):
        result = richardson_extrapolate([(n, 1 / n**3) for n in self.n_series])
        assert result.error_estimate == pytest.approx(abs(result.tableau[3][3] - result.tableau[2][2]))
        assert result.values == tuple(1 / n**3 for n in self.n_series)

    @pytest.mark.parametrize(
        "series",
        [[(8, 0.5), (16, 0.5)], [(8, 0.5), (8, 0.5), (16, 0.5)], [(16, 0.5), (8, 0.5), (32, 0.5)], [(0, 1.0), (1, 1.0), (2, 1.0)]],
    )
    def test_invalid_series(self, series):
        with pytest.raises(ExtrapolationError):
            richardson_extrapolate(series)


class TestAtomNumberExtrapolation:
    def test_series_values(self):
        series = atom_number_series(1.0, 2.0, 1.0, [2, 4])
        assert [n for n, _ in series] == [2, 4]
        assert series[0][1] == evaluate_point(HamiltonianParams(tau=1.0, eps=1.0, u=2.0, n_atoms=2)).fisher_scaled

    def test_series_rejects_non_positive_n(self):
        with pytest.raises(InvalidParamsError):
            atom_number_series(1.0, 2.0, 1.0, [0, 2])

    def test_inverse_n_convergence(self):
        result = extrapolate_point(1.0, 2.0, 1.0, n_series=[8, 16, 32, 64])
        assert result.error_estimate < 1e-3
        assert 0.0 <= result.f_infinity <= 1.0 + 1e-3
        for n in (16, 32):
            assert 1.6 <= result.convergence_ratios[n] <= 2.4

    def test_short_series_rejected(self):
        with pytest.raises(ExtrapolationError):
            extrapolate_point(1.0, 2.0, 1.0, n_series=[8, 16])

    def test_grid_no_tunneling_column(self):
        grid = extrapolate_grid([0.0, 1.0], [0.0, 1.0], eps=1.0, n_series=[2, 4, 8])
        assert grid.f_infinity.shape == (2, 2)
        np.testing.assert_allclose(grid.f_infinity[:, 0], 1.0, atol=1e-8)
        assert np.all(grid.error_estimate >= 0.0)

    def test_grid_matches_point_extrapolation(self):
        grid = extrapolate_grid([1.0], [2.0], eps=1.0, n_series=[4, 8, 16])
        point = extrapolate_point(1.0, 2.0, 1.0, n_series=[4, 8, 16])
        assert grid.f_infinity[0, 0] == point.f_infinity
        assert grid.error_estimate[0, 0] == point.error_estimate
