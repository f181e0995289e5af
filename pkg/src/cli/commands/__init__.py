"""CLI subcommands, one module each."""

from . import contour, extrapolate, limits, point, sweep, validate

__all__ = ["contour", "extrapolate", "limits", "point", "sweep", "validate"]
