"""Serialization: CSV and JSON records, SVG contour plots."""

from src.io.csv_io import (
    EXTRAPOLATED_HEADER,
    SWEEP_HEADER,
    read_contour_field,
    read_extrapolated_csv,
    read_sweep_csv,
    write_extrapolated_csv,
    write_point_csv,
    write_sweep_csv,
)
from src.io.svg_contour import contour_levels, marching_squares, render_contour_svg

__all__ = [
    "EXTRAPOLATED_HEADER",
    "SWEEP_HEADER",
    "contour_levels",
    "marching_squares",
    "read_contour_field",
    "read_extrapolated_csv",
    "read_sweep_csv",
    "render_contour_svg",
    "write_extrapolated_csv",
    "write_point_csv",
    "write_sweep_csv",
]
