"""
`qfimeter extrapolate`: f_M at N -> infinity, at one point or over a grid.
"""

import argparse

from src.cli.commands.sweep import add_grid_arguments, grid_spec
from src.cli.output import open_output
from src.config import settings
from src.core.exceptions import EXIT_OK, ConfigError
from src.io.csv_io import EXTRAPOLATED_HEADER, format_float, write_extrapolated_csv
from src.io.json_io import dumps, extrapolated_grid_payload, extrapolation_payload
from src.schemas.run_config import OutputFormat
from src.sweep.extrapolation import extrapolate_grid, extrapolate_point


def _parse_series(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip()]


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("extrapolate", help="Richardson extrapolation of f_M to N -> infinity")
    parser.add_argument(
        "--n-series",
        type=_parse_series,
        default=list(settings.DEFAULT_N_SERIES),
        help="comma-separated increasing atom numbers",
    )
    parser.add_argument("--grid", action="store_true", help="extrapolate every point of a (tau, u) grid")
    parser.add_argument("--tau", type=float, default=None, help="point mode tunneling amplitude")
    parser.add_argument("--u", type=float, default=None, help="point mode scaled interaction")
    add_grid_arguments(parser)
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value)
    parser.add_argument("--out", type=str, default=None)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    output_format = OutputFormat(args.format)

    if args.grid:
        spec = grid_spec(args, max(1, min(args.n_series, default=1)))
        grid = extrapolate_grid(spec.tau_axis, spec.u_axis, spec.eps, args.n_series, parallelism=args.parallel)
        with open_output(args.out) as stream:
            if output_format == OutputFormat.JSON:
                stream.write(dumps(extrapolated_grid_payload(grid)).decode())
            else:
                write_extrapolated_csv(grid, stream)
        return EXIT_OK

    if args.tau is None or args.u is None:
        raise ConfigError("Point mode needs --tau and --u (or pass --grid)")
    result = extrapolate_point(args.tau, args.u, args.eps, args.n_series, parallelism=args.parallel)
    with open_output(args.out) as stream:
        if output_format == OutputFormat.JSON:
            stream.write(dumps(extrapolation_payload(result, args.tau, args.u, args.eps)).decode())
        else:
            stream.write(",".join(EXTRAPOLATED_HEADER) + "\n")
            stream.write(
                ",".join(format_float(v) for v in (args.tau, args.eps, args.u, result.f_infinity, result.error_estimate))
                + "\n"
            )
    return EXIT_OK
