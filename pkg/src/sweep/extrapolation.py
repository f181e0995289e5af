"""
Atom-number series and Richardson extrapolation of f_M to N -> infinity.

The deviation of f_M from its large-N limit is a series in h = 1/N, so the
limit is the value at h = 0 of the polynomial through (1/N_i, f_i), built
column by column with Neville's scheme. For doubled N the first column is
the familiar 2 f(2N) - f(N).
"""

import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from src.config import settings
from src.core.exceptions import ExtrapolationError, InvalidParamsError
from src.core.logger import get_logger
from src.schemas.params import HamiltonianParams
from src.services.qfi_service import evaluate_point
from src.sweep.grid import map_cells, sweep, validate_axis

logger = get_logger(__name__)


@dataclass(frozen=True)
class ExtrapolationResult:
    """
    f_M along an atom-number series and its extrapolated limit.

    tableau[i][k] is the k-th Richardson column at row i (k <= i); the
    diagonal holds the successive limit estimates. convergence_ratios maps N
    to (f(N) - f_inf)/(f(2N) - f_inf) for every doubled pair in the series.
    """

    n_series: tuple[int, ...]
    values: tuple[float, ...]
    f_infinity: float
    error_estimate: float
    tableau: tuple[tuple[float, ...], ...]
    convergence_ratios: dict[int, float] = field(default_factory=dict)


def _check_series(n_series: Sequence[int]) -> None:
    if len(n_series) < 3:
        raise ExtrapolationError("Richardson extrapolation needs at least 3 atom numbers", {"n_series": list(n_series)})
    if len(set(n_series)) != len(n_series):
        raise ExtrapolationError("Duplicate atom numbers in series", {"n_series": list(n_series)})
    if any(n < 1 for n in n_series) or any(b <= a for a, b in zip(n_series, n_series[1:])):
        raise ExtrapolationError("Atom numbers must be positive and strictly increasing", {"n_series": list(n_series)})


def richardson_extrapolate(values_by_n: Sequence[tuple[int, float]]) -> ExtrapolationResult:
    """
    Extrapolate f(N) to N -> infinity assuming an error series in 1/N.

    Args:
        values_by_n: (N, f_M) pairs, N strictly increasing

    Returns:
        ExtrapolationResult with f_infinity the last diagonal entry and
        error_estimate the absolute difference of the last two diagonal entries

    Raises:
        ExtrapolationError: fewer than 3 points, duplicate or unordered N
    """
    n_series = [int(n) for n, _ in values_by_n]
    _check_series(n_series)
    values = [float(f) for _, f in values_by_n]
    h = [1.0 / n for n in n_series]

    tableau: list[list[float]] = []
    for i, value in enumerate(values):
        row = [value]
        for k in range(1, i + 1):
            # value at h = 0 of the line through (h[i-k], T[i-1][k-1]) and (h[i], T[i][k-1])
            row.append((h[i - k] * row[k - 1] - h[i] * tableau[i - 1][k - 1]) / (h[i - k] - h[i]))
        tableau.append(row)

    last = len(values) - 1
    f_infinity = tableau[last][last]
    error_estimate = abs(tableau[last][last] - tableau[last - 1][last - 1])

    ratios: dict[int, float] = {}
    by_n = dict(zip(n_series, values))
    for n, f in zip(n_series, values):
        doubled = by_n.get(2 * n)
        if doubled is not None and doubled != f_infinity:
            ratios[n] = (f - f_infinity) / (doubled - f_infinity)

    return ExtrapolationResult(
        n_series=tuple(n_series),
        values=tuple(values),
        f_infinity=f_infinity,
        error_estimate=error_estimate,
        tableau=tuple(tuple(row) for row in tableau),
        convergence_ratios=ratios,
    )


def _series_point(task: tuple[float, float, float, int]) -> tuple[int, float]:
    tau, u, eps, n_atoms = task
    return n_atoms, evaluate_point(HamiltonianParams(tau=tau, eps=eps, u=u, n_atoms=n_atoms)).fisher_scaled


def atom_number_series(
    tau: float,
    u: float,
    eps: float,
    n_series: Optional[Sequence[int]] = None,
    parallelism: Optional[int] = None,
) -> list[tuple[int, float]]:
    """f_M at fixed (tau, u, eps) for every N of the series."""
    series = list(settings.DEFAULT_N_SERIES if n_series is None else n_series)
    if any(n < 1 for n in series):
        raise InvalidParamsError("Atom numbers must be positive", details={"n_series": series})
    workers = settings.DEFAULT_PARALLELISM if parallelism is None else parallelism
    return map_cells([(tau, u, eps, n) for n in series], _series_point, workers)


def extrapolate_point(
    tau: float,
    u: float,
    eps: float,
    n_series: Optional[Sequence[int]] = None,
    parallelism: Optional[int] = None,
) -> ExtrapolationResult:
    """f_M(tau, u, eps, N -> infinity) from an atom-number series."""
    series = list(settings.DEFAULT_N_SERIES if n_series is None else n_series)
    _check_series(series)
    result = richardson_extrapolate(atom_number_series(tau, u, eps, series, parallelism))
    logger.info(
        "Extrapolated point",
        tau=tau,
        u=u,
        eps=eps,
        f_infinity=result.f_infinity,
        error_estimate=result.error_estimate,
    )
    return result


@dataclass(frozen=True)
class ExtrapolatedGrid:
    """N -> infinity limit of f_M over the (tau, u) plane, arrays indexed [u, tau]."""

    tau_axis: np.ndarray
    u_axis: np.ndarray
    eps: float
    n_series: tuple[int, ...]
    f_infinity: np.ndarray
    error_estimate: np.ndarray


def extrapolate_grid(
    tau_axis: Sequence[float],
    u_axis: Sequence[float],
    eps: float,
    n_series: Optional[Sequence[int]] = None,
    parallelism: Optional[int] = None,
) -> ExtrapolatedGrid:
    """
    Sweep the grid once per atom number and extrapolate every cell.

    Raises:
        ExtrapolationError: invalid atom-number series
        SweepError: any grid point failed at any N
    """
    series = list(settings.DEFAULT_N_SERIES if n_series is None else n_series)
    _check_series(series)
    taus = validate_axis("tau_axis", tau_axis)
    us = validate_axis("u_axis", u_axis)

    start = time.time()
    grids = [sweep(taus, us, eps, n, parallelism=parallelism) for n in series]
    stacked = np.stack([grid.values for grid in grids])  # [N, u, tau]

    f_infinity = np.empty(stacked.shape[1:])
    error = np.empty(stacked.shape[1:])
    for row in range(len(us)):
        for col in range(len(taus)):
            result = richardson_extrapolate(list(zip(series, stacked[:, row, col])))
            f_infinity[row, col] = result.f_infinity
            error[row, col] = result.error_estimate

    logger.info(
        "Extrapolated grid",
        points=f_infinity.size,
        n_series=series,
        max_error_estimate=float(np.max(error)),
        duration_ms=round((time.time() - start) * 1000, 2),
    )
    return ExtrapolatedGrid(
        tau_axis=taus,
        u_axis=us,
        eps=float(eps),
        n_series=tuple(series),
        f_infinity=f_infinity,
        error_estimate=error,
    )
