"""
`qfimeter contour`: SVG contour plot of a sweep or extrapolated CSV.
"""

import argparse

from src.cli.output import write_text
from src.config import settings
from src.core.exceptions import EXIT_OK, SchemaError
from src.core.logger import get_logger
from src.io.csv_io import read_contour_field
from src.io.svg_contour import contour_levels, render_contour_svg

logger = get_logger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("contour", help="SVG contour plot of a grid CSV")
    parser.add_argument("--in", dest="input", required=True, help="CSV in the sweep or extrapolated schema")
    parser.add_argument("--spacing", type=float, default=settings.CONTOUR_LEVEL_SPACING, help="level spacing")
    parser.add_argument("--out", type=str, default=None, help="SVG file (default stdout)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    try:
        with open(args.input, newline="", encoding="utf-8") as stream:
            tau_axis, u_axis, values, field = read_contour_field(stream)
    except OSError as e:
        raise SchemaError("Cannot read grid file", details={"path": args.input, "reason": str(e)}) from e

    svg = render_contour_svg(tau_axis, u_axis, values, spacing=args.spacing, title=field)
    write_text(svg, args.out)
    logger.info(
        "Contour written",
        field=field,
        levels=len(contour_levels(values, args.spacing)),
        grid=[len(u_axis), len(tau_axis)],
    )
    return EXIT_OK
