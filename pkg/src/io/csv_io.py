"""
CSV emitters and readers for points, sweep grids and extrapolated grids.

Floats are written with 17 significant digits so that reading a file back
reproduces every value bit for bit. Grid rows run u-outer, tau-inner.
"""

import csv
from dataclasses import dataclass
from io import StringIO
from typing import Iterable, TextIO

import numpy as np

from src.core.exceptions import SchemaError
from src.schemas.records import QfiRecord
from src.sweep.extrapolation import ExtrapolatedGrid
from src.sweep.grid import SweepGrid

SWEEP_HEADER = ["n_atoms", "tau", "eps", "u", "f_M", "F_M", "ell_max", "ell_min"]
EXTRAPOLATED_HEADER = ["tau", "eps", "u", "f_infinity", "error_estimate"]
POINT_HEADER = ["n_atoms", "tau", "eps", "u", "U", "ell_max", "ell_min", "F_M", "f_M", "sigma"]


def format_float(value: float) -> str:
    return format(float(value), ".17g")


def write_point_csv(record: QfiRecord, stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(POINT_HEADER)
    row = record.model_dump(include=set(POINT_HEADER))
    writer.writerow([str(row["n_atoms"])] + [format_float(row[name]) for name in POINT_HEADER[1:]])


def write_sweep_csv(grid: SweepGrid, stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for row, u in enumerate(grid.u_axis):
        for col, tau in enumerate(grid.tau_axis):
            writer.writerow(
                [
                    str(grid.n_atoms),
                    format_float(tau),
                    format_float(grid.eps),
                    format_float(u),
                    format_float(grid.values[row, col]),
                    format_float(grid.fisher[row, col]),
                    format_float(grid.ell_max[row, col]),
                    format_float(grid.ell_min[row, col]),
                ]
            )


def write_extrapolated_csv(grid: ExtrapolatedGrid, stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(EXTRAPOLATED_HEADER)
    for row, u in enumerate(grid.u_axis):
        for col, tau in enumerate(grid.tau_axis):
            writer.writerow(
                [
                    format_float(tau),
                    format_float(grid.eps),
                    format_float(u),
                    format_float(grid.f_infinity[row, col]),
                    format_float(grid.error_estimate[row, col]),
                ]
            )


@dataclass(frozen=True)
class GridTable:
    """A parsed grid file: axes plus one [u, tau] array per column."""

    header: list[str]
    tau_axis: np.ndarray
    u_axis: np.ndarray
    columns: dict[str, np.ndarray]


def _parse_float(text: str, line: int, column: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise SchemaError("Non-numeric value", details={"line": line, "column": column, "value": text}) from None
    if not np.isfinite(value):
        raise SchemaError("Non-finite value", details={"line": line, "column": column, "value": text})
    return value


def _read_table(stream: TextIO, expected: list[str]) -> GridTable:
    reader = csv.reader(stream)
    header = next(reader, None)
    if header != expected:
        raise SchemaError("Unexpected CSV header", details={"expected": expected, "found": header})

    rows: list[dict[str, float]] = []
    for line, raw in enumerate(reader, start=2):
        if not raw:
            continue
        if len(raw) != len(expected):
            raise SchemaError("Wrong number of fields", details={"line": line, "fields": len(raw)})
        rows.append({name: _parse_float(text, line, name) for name, text in zip(expected, raw)})
    if not rows:
        raise SchemaError("Grid file has no rows")

    # the first u block fixes the tau axis
    first_u = rows[0]["u"]
    n_tau = next((i for i, r in enumerate(rows) if r["u"] != first_u), len(rows))
    if len(rows) % n_tau:
        raise SchemaError("Ragged grid", details={"rows": len(rows), "tau_points": n_tau})
    taus = np.array([r["tau"] for r in rows[:n_tau]])
    blocks = [rows[i : i + n_tau] for i in range(0, len(rows), n_tau)]
    us = np.array([block[0]["u"] for block in blocks])

    for block in blocks:
        if any(r["u"] != block[0]["u"] for r in block) or [r["tau"] for r in block] != list(taus):
            raise SchemaError("Ragged grid", details={"u": block[0]["u"]})
    if np.any(np.diff(taus) <= 0) or np.any(np.diff(us) <= 0):
        raise SchemaError("Grid axes must be strictly increasing (u outer, tau inner)")
    if len({r["eps"] for r in rows}) != 1:
        raise SchemaError("eps varies across the grid")

    shape = (len(us), len(taus))
    columns = {name: np.array([r[name] for r in rows]).reshape(shape) for name in expected}
    return GridTable(header=expected, tau_axis=taus, u_axis=us, columns=columns)


def read_sweep_csv(stream: TextIO) -> SweepGrid:
    """
    Parse a file in the sweep schema back into a SweepGrid.

    Raises:
        SchemaError: wrong header, non-numeric field or ragged grid
    """
    table = _read_table(stream, SWEEP_HEADER)
    atoms = np.unique(table.columns["n_atoms"])
    if atoms.size != 1 or atoms[0] != int(atoms[0]):
        raise SchemaError("n_atoms must be one integer across the grid", details={"n_atoms": atoms.tolist()})
    return SweepGrid(
        tau_axis=table.tau_axis,
        u_axis=table.u_axis,
        eps=float(table.columns["eps"][0, 0]),
        n_atoms=int(atoms[0]),
        values=table.columns["f_M"],
        fisher=table.columns["F_M"],
        ell_max=table.columns["ell_max"],
        ell_min=table.columns["ell_min"],
    )


def read_extrapolated_csv(stream: TextIO, n_series: Iterable[int] = ()) -> ExtrapolatedGrid:
    """
    Parse a file in the extrapolated schema.

    Raises:
        SchemaError: wrong header, non-numeric field or ragged grid
    """
    table = _read_table(stream, EXTRAPOLATED_HEADER)
    return ExtrapolatedGrid(
        tau_axis=table.tau_axis,
        u_axis=table.u_axis,
        eps=float(table.columns["eps"][0, 0]),
        n_series=tuple(n_series),
        f_infinity=table.columns["f_infinity"],
        error_estimate=table.columns["error_estimate"],
    )


def read_contour_field(stream: TextIO) -> tuple[np.ndarray, np.ndarray, np.ndarray, str]:
    """
    Read the scalar field of either grid schema.

    Returns:
        (tau_axis, u_axis, values[u, tau], field name) where the field is f_M or f_infinity

    Raises:
        SchemaError: header matches neither schema, or the grid is ragged
    """
    text = stream.read()
    header = next(csv.reader(StringIO(text)), None)
    if header == SWEEP_HEADER:
        grid = read_sweep_csv(StringIO(text))
        return grid.tau_axis, grid.u_axis, grid.values, "f_M"
    if header == EXTRAPOLATED_HEADER:
        extrapolated = read_extrapolated_csv(StringIO(text))
        return extrapolated.tau_axis, extrapolated.u_axis, extrapolated.f_infinity, "f_infinity"
    raise SchemaError(
        "Unrecognized grid header",
        details={"found": header, "expected": [SWEEP_HEADER, EXTRAPOLATED_HEADER]},
    )

