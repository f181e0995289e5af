"""
Contour plots of a (tau, u) grid as SVG.

Level curves come from marching squares on the grid cells; segments are
stitched into polylines through the cell edges they share, so every level
yields a deterministic list of open or closed polylines.
"""

from collections import defaultdict
from typing import Optional

import numpy as np

from src.config import settings
from src.core.exceptions import InvalidParamsError, SchemaError

Point = tuple[float, float]
# ("h", r, c) joins (r, c)-(r, c+1); ("v", r, c) joins (r, c)-(r+1, c)
Edge = tuple[str, int, int]

PLOT_WIDTH = 480.0
PLOT_HEIGHT = 360.0
MARGIN = 60.0


def contour_levels(values: np.ndarray, spacing: Optional[float] = None) -> list[float]:
    """Multiples of spacing strictly between the grid minimum and maximum."""
    step = settings.CONTOUR_LEVEL_SPACING if spacing is None else spacing
    if step <= 0:
        raise InvalidParamsError("Contour level spacing must be positive", details={"spacing": step})
    if not np.all(np.isfinite(values)):
        raise SchemaError("Contour field has non-finite values", details={"count": int(np.sum(~np.isfinite(values)))})
    low, high = float(np.min(values)), float(np.max(values))
    first, last = int(np.floor(low / step)), int(np.ceil(high / step))
    levels = [round(k * step, 12) for k in range(first, last + 1)]
    return [level for level in levels if low < level < high]


def _cell_segments(values: np.ndarray, level: float) -> list[tuple[Edge, Edge]]:
    above = values >= level
    rows, cols = values.shape
    segments: list[tuple[Edge, Edge]] = []
    for r in range(rows - 1):
        for c in range(cols - 1):
            corners = (above[r, c], above[r, c + 1], above[r + 1, c + 1], above[r + 1, c])
            # edges in order top, right, bottom, left; edge i joins corners i and i+1
            edges: list[Edge] = [("h", r, c), ("v", r, c + 1), ("h", r + 1, c), ("v", r, c)]
            crossed = [i for i in range(4) if corners[i] != corners[(i + 1) % 4]]
            if len(crossed) == 2:
                segments.append((edges[crossed[0]], edges[crossed[1]]))
            elif len(crossed) == 4:
                # saddle: the cell centre decides which diagonal stays connected
                centre = values[r : r + 2, c : c + 2].mean() >= level
                if centre == corners[0]:
                    segments += [(edges[0], edges[1]), (edges[2], edges[3])]
                else:
                    segments += [(edges[3], edges[0]), (edges[1], edges[2])]
    return segments


def _edge_point(edge: Edge, values: np.ndarray, tau: np.ndarray, u: np.ndarray, level: float) -> Point:
    kind, r, c = edge
    r2, c2 = (r, c + 1) if kind == "h" else (r + 1, c)
    t = (level - values[r, c]) / (values[r2, c2] - values[r, c])
    return (
        float(tau[c] + t * (tau[c2] - tau[c])),
        float(u[r] + t * (u[r2] - u[r])),
    )


def _stitch(segments: list[tuple[Edge, Edge]]) -> list[list[Edge]]:
    touching: dict[Edge, list[int]] = defaultdict(list)
    for index, (a, b) in enumerate(segments):
        touching[a].append(index)
        touching[b].append(index)
    used = [False] * len(segments)

    def walk(edge: Edge) -> list[Edge]:
        path = [edge]
        while True:
            index = next((i for i in touching[edge] if not used[i]), None)
            if index is None:
                return path
            used[index] = True
            a, b = segments[index]
            edge = b if a == edge else a
            path.append(edge)

    chains = []
    # open chains start on the grid boundary, the rest are closed loops
    for edge, indices in touching.items():
        if len(indices) == 1 and not used[indices[0]]:
            chains.append(walk(edge))
    for index, (a, _) in enumerate(segments):
        if not used[index]:
            chains.append(walk(a))
    return chains


def marching_squares(
    tau_axis: np.ndarray, u_axis: np.ndarray, values: np.ndarray, level: float
) -> list[list[Point]]:
    """
    Polylines of the level set values == level in (tau, u) coordinates.

    Args:
        values: grid indexed [u, tau]

    Raises:
        SchemaError: values shape disagrees with the axes
    """
    grid = np.asarray(values, dtype=float)
    if grid.shape != (len(u_axis), len(tau_axis)):
        raise SchemaError("Grid shape does not match its axes", details={"shape": list(grid.shape)})
    return [
        [_edge_point(edge, grid, tau_axis, u_axis, level) for edge in chain]
        for chain in _stitch(_cell_segments(grid, level))
    ]


class SVG:
    """Minimal SVG document builder collecting element strings in order."""

    def __init__(self, width: float, height: float) -> None:
        self.width = width
        self.height = height
        self.commands: list[str] = []

    def polyline(self, points: list[Point], stroke: str = "#000000", width: float = 1.0) -> None:
        coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in points)
        self.commands.append(f'<polyline points="{coords}" fill="none" stroke="{stroke}" stroke-width="{width:g}"/>')

    def rect(self, x: float, y: float, width: float, height: float, stroke: str = "#000000") -> None:
        self.commands.append(
            f'<rect x="{x:.3f}" y="{y:.3f}" width="{width:.3f}" height="{height:.3f}" fill="none" stroke="{stroke}"/>'
        )

    def text(self, x: float, y: float, text: str, anchor: str = "middle", size: int = 14) -> None:
        self.commands.append(
            f'<text x="{x:.3f}" y="{y:.3f}" text-anchor="{anchor}" font-family="sans-serif" font-size="{size}">'
            f"{text}</text>"
        )

    def begin_group(self, **attributes: str) -> None:
        attrs = "".join(f' {key.rstrip("_").replace("_", "-")}="{value}"' for key, value in attributes.items())
        self.commands.append(f"<g{attrs}>")

    def end_group(self) -> None:
        self.commands.append("</g>")

    def render(self) -> str:
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{self.width:g}" '
            f'height="{self.height:g}" viewBox="0 0 {self.width:g} {self.height:g}">'
        )
        return "\n".join([head, *self.commands, "</svg>"]) + "\n"


def render_contour_svg(
    tau_axis: np.ndarray,
    u_axis: np.ndarray,
    values: np.ndarray,
    spacing: Optional[float] = None,
    title: str = "f_M",
) -> str:
    """
    Contour plot with linear axes, tau horizontal and u vertical, one <g> per level.

    Raises:
        SchemaError: fewer than 2 points along either axis, or shape mismatch
    """
    taus = np.asarray(tau_axis, dtype=float)
    us = np.asarray(u_axis, dtype=float)
    grid = np.asarray(values, dtype=float)
    if len(taus) < 2 or len(us) < 2:
        raise SchemaError("Contouring needs at least 2 points along each axis")
    if grid.shape != (len(us), len(taus)):
        raise SchemaError("Grid shape does not match its axes", details={"shape": list(grid.shape)})

    def to_canvas(point: Point) -> Point:
        x = MARGIN + (point[0] - taus[0]) / (taus[-1] - taus[0]) * PLOT_WIDTH
        y = MARGIN + PLOT_HEIGHT - (point[1] - us[0]) / (us[-1] - us[0]) * PLOT_HEIGHT
        return x, y

    svg = SVG(PLOT_WIDTH + 2 * MARGIN, PLOT_HEIGHT + 2 * MARGIN)
    svg.rect(MARGIN, MARGIN, PLOT_WIDTH, PLOT_HEIGHT)
    svg.text(MARGIN + PLOT_WIDTH / 2, MARGIN / 2, title)
    svg.text(MARGIN + PLOT_WIDTH / 2, MARGIN + PLOT_HEIGHT + 45, "τ")
    svg.text(MARGIN / 3, MARGIN + PLOT_HEIGHT / 2, "u")
    for value, anchor_x in ((taus[0], MARGIN), (taus[-1], MARGIN + PLOT_WIDTH)):
        svg.text(anchor_x, MARGIN + PLOT_HEIGHT + 20, f"{value:g}", size=11)
    for value, anchor_y in ((us[0], MARGIN + PLOT_HEIGHT), (us[-1], MARGIN)):
        svg.text(MARGIN - 8, anchor_y + 4, f"{value:g}", anchor="end", size=11)

    for level in contour_levels(grid, spacing):
        svg.begin_group(class_="contour", data_level=f"{level:g}")
        for line in marching_squares(taus, us, grid, level):
            svg.polyline([to_canvas(p) for p in line])
        svg.end_group()
    return svg.render()
