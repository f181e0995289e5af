"""
Parameter-grid evaluation of f_M over (tau, u) at fixed eps and N.

Grid points are independent; with parallelism > 1 they are mapped over a
process pool and assembled by index, so the grid is identical for any
worker count.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Optional, Sequence

import numpy as np

from src.config import settings
from src.core.exceptions import GridAxisMismatchError, InvalidParamsError, QfiMeterException, SweepError
from src.core.logger import get_logger
from src.schemas.params import HamiltonianParams
from src.services.qfi_service import evaluate_point

logger = get_logger(__name__)

# (f_M, F_M, ell_max, ell_min) on success, (code, message) on failure
CellResult = tuple[int, Optional[tuple[float, float, float, float]], Optional[tuple[str, str]]]


@dataclass(frozen=True)
class SweepGrid:
    """
    f_M over the (tau, u) plane; every value array is indexed [u, tau].
    """

    tau_axis: np.ndarray
    u_axis: np.ndarray
    eps: float
    n_atoms: int
    values: np.ndarray
    fisher: np.ndarray
    ell_max: np.ndarray
    ell_min: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.u_axis), len(self.tau_axis)


def validate_axis(name: str, axis: Sequence[float]) -> np.ndarray:
    """
    Coerce an axis to a float array.

    Raises:
        InvalidParamsError: empty, non-finite or not strictly increasing
    """
    values = np.asarray(axis, dtype=float)
    if values.ndim != 1 or values.size == 0:
        raise InvalidParamsError(f"{name} must be a nonempty list of numbers", details={"axis": name})
    if not np.all(np.isfinite(values)):
        raise InvalidParamsError(f"{name} must be finite", details={"axis": name})
    if np.any(np.diff(values) <= 0):
        raise InvalidParamsError(f"{name} must be strictly increasing", details={"axis": name})
    return values


def _evaluate_cell(task: tuple[int, float, float, float, int, bool]) -> CellResult:
    # top level so that the process pool can pickle it
    index, tau, u, eps, n_atoms, jitter = task
    try:
        point = evaluate_point(HamiltonianParams(tau=tau, eps=eps, u=u, n_atoms=n_atoms), jitter=jitter)
    except QfiMeterException as e:
        return index, None, (e.error_code, e.message)
    return index, (point.fisher_scaled, point.fisher_max, point.ell_max, point.ell_min), None


def map_cells(tasks: list[Any], worker: Any, parallelism: int) -> list[Any]:
    """Run worker over tasks, in a process pool when parallelism > 1; order follows tasks."""
    if parallelism <= 1 or len(tasks) <= 1:
        return [worker(task) for task in tasks]
    chunksize = max(1, len(tasks) // (4 * parallelism))
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(worker, tasks, chunksize=chunksize))


def sweep(
    tau_axis: Sequence[float],
    u_axis: Sequence[float],
    eps: float,
    n_atoms: int,
    parallelism: Optional[int] = None,
    jitter: bool = False,
) -> SweepGrid:
    """
    Evaluate f_M at every (tau, u) of the grid.

    Args:
        tau_axis: strictly increasing tunneling amplitudes
        u_axis: strictly increasing scaled interactions
        eps: energy difference, fixed over the grid
        n_atoms: atom number, at least 1
        parallelism: worker processes (defaults to DEFAULT_PARALLELISM)
        jitter: evaluate every point in jitter mode

    Raises:
        InvalidParamsError: bad axes or n_atoms < 1
        SweepError: one or more points failed; no partial grid is returned
    """
    taus = validate_axis("tau_axis", tau_axis)
    us = validate_axis("u_axis", u_axis)
    if n_atoms < 1:
        raise InvalidParamsError("A sweep needs at least one atom", details={"n_atoms": n_atoms})
    if not np.isfinite(eps):
        raise InvalidParamsError("eps must be finite", details={"eps": eps})
    workers = settings.DEFAULT_PARALLELISM if parallelism is None else parallelism
    if workers < 1:
        raise InvalidParamsError("parallelism must be positive", details={"parallelism": workers})

    # row-major: u outer, tau inner
    tasks = [
        (row * len(taus) + col, float(tau), float(u), float(eps), n_atoms, jitter)
        for row, u in enumerate(us)
        for col, tau in enumerate(taus)
    ]

    start = time.time()
    results = map_cells(tasks, _evaluate_cell, workers)

    buffer = np.full((4, len(us), len(taus)), np.nan)
    failures: list[dict[str, Any]] = []
    for index, record, failure in results:
        row, col = divmod(index, len(taus))
        if failure is not None:
            code, message = failure
            failures.append({"tau": float(taus[col]), "u": float(us[row]), "error_code": code, "message": message})
            continue
        buffer[:, row, col] = record

    if failures:
        logger.error("Sweep had failing points", failed=len(failures), points=len(tasks))
        raise SweepError(failures)

    logger.info(
        "Sweep finished",
        points=len(tasks),
        n_atoms=n_atoms,
        eps=eps,
        parallelism=workers,
        duration_ms=round((time.time() - start) * 1000, 2),
    )
    return SweepGrid(
        tau_axis=taus,
        u_axis=us,
        eps=float(eps),
        n_atoms=n_atoms,
        values=buffer[0],
        fisher=buffer[1],
        ell_max=buffer[2],
        ell_min=buffer[3],
    )


def mirrored_sweep(grid: SweepGrid, parallelism: Optional[int] = None, jitter: bool = False) -> SweepGrid:
    """Sweep the same tau axis, eps and N over the mirrored u axis -u."""
    return sweep(grid.tau_axis, -grid.u_axis[::-1], grid.eps, grid.n_atoms, parallelism=parallelism, jitter=jitter)


def u_sign_symmetry_report(grid_pos: SweepGrid, grid_neg: SweepGrid) -> float:
    """
    max |f_M(tau, u) - f_M(tau, -u)| over the grid.

    grid_neg must have the u axis of grid_pos mirrored (in increasing order)
    and the same tau axis, eps and N.

    Raises:
        GridAxisMismatchError: axes, eps or N disagree
    """
    if grid_pos.n_atoms != grid_neg.n_atoms or grid_pos.eps != grid_neg.eps:
        raise GridAxisMismatchError(
            "Grids differ in eps or atom number",
            details={
                "n_atoms": [grid_pos.n_atoms, grid_neg.n_atoms],
                "eps": [grid_pos.eps, grid_neg.eps],
            },
        )
    if grid_pos.tau_axis.shape != grid_neg.tau_axis.shape or np.any(grid_pos.tau_axis != grid_neg.tau_axis):
        raise GridAxisMismatchError("Grids have different tau axes")
    if grid_pos.u_axis.shape != grid_neg.u_axis.shape or np.any(grid_pos.u_axis != -grid_neg.u_axis[::-1]):
        raise GridAxisMismatchError("u axes are not mirror images")

    # row i of grid_pos is u_i, row -1-i of grid_neg is -u_i
    return float(np.max(np.abs(grid_pos.values - grid_neg.values[::-1])))
