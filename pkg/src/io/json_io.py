"""
JSON emitters (orjson). Complex amplitudes are written as [re, im] pairs.
"""

from typing import Any

import orjson

from src.schemas.records import LimitComparison, QfiRecord, ValidationReport
from src.sweep.extrapolation import ExtrapolatedGrid, ExtrapolationResult
from src.sweep.grid import SweepGrid

JSON_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SERIALIZE_NUMPY | orjson.OPT_APPEND_NEWLINE


def dumps(payload: Any) -> bytes:
    return orjson.dumps(payload, option=JSON_OPTIONS)


def point_payload(record: QfiRecord) -> dict[str, Any]:
    return record.model_dump()


def sweep_payload(grid: SweepGrid) -> dict[str, Any]:
    """Same fields and row order as the CSV emitter, as a list of row objects."""
    rows = [
        {
            "n_atoms": grid.n_atoms,
            "tau": float(tau),
            "eps": grid.eps,
            "u": float(u),
            "f_M": float(grid.values[row, col]),
            "F_M": float(grid.fisher[row, col]),
            "ell_max": float(grid.ell_max[row, col]),
            "ell_min": float(grid.ell_min[row, col]),
        }
        for row, u in enumerate(grid.u_axis)
        for col, tau in enumerate(grid.tau_axis)
    ]
    return {
        "n_atoms": grid.n_atoms,
        "eps": grid.eps,
        "tau_axis": grid.tau_axis,
        "u_axis": grid.u_axis,
        "rows": rows,
    }


def extrapolation_payload(result: ExtrapolationResult, tau: float, u: float, eps: float) -> dict[str, Any]:
    return {
        "tau": tau,
        "eps": eps,
        "u": u,
        "n_series": list(result.n_series),
        "values": list(result.values),
        "f_infinity": result.f_infinity,
        "error_estimate": result.error_estimate,
        "tableau": [list(row) for row in result.tableau],
        "convergence_ratios": {str(n): ratio for n, ratio in result.convergence_ratios.items()},
    }


def extrapolated_grid_payload(grid: ExtrapolatedGrid) -> dict[str, Any]:
    rows = [
        {
            "tau": float(tau),
            "eps": grid.eps,
            "u": float(u),
            "f_infinity": float(grid.f_infinity[row, col]),
            "error_estimate": float(grid.error_estimate[row, col]),
        }
        for row, u in enumerate(grid.u_axis)
        for col, tau in enumerate(grid.tau_axis)
    ]
    return {"eps": grid.eps, "n_series": list(grid.n_series), "rows": rows}


def limits_payload(rows: list[LimitComparison], n_atoms: int) -> dict[str, Any]:
    return {
        "n_atoms": n_atoms,
        "comparisons": [row.model_dump() for row in rows],
        "passed": all(row.passed for row in rows),
    }


def validation_payload(report: ValidationReport) -> dict[str, Any]:
    return {**report.model_dump(), "passed": report.passed}
