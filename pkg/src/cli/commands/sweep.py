"""
`qfimeter sweep`: f_M over a (tau, u) grid at fixed eps and N.
"""

import argparse

from pydantic import ValidationError

from src.cli.output import open_output
from src.config import settings
from src.core.exceptions import EXIT_OK, ConfigError
from src.core.logger import get_logger
from src.io.csv_io import write_sweep_csv
from src.io.json_io import dumps, sweep_payload
from src.schemas.run_config import GridSpec, OutputFormat, RunConfig, Subcommand, parse_axis
from src.sweep.grid import mirrored_sweep, sweep, u_sign_symmetry_report

logger = get_logger(__name__)


def default_tau_axis() -> str:
    return f"{settings.DEFAULT_TAU_MIN}:{settings.DEFAULT_TAU_MAX}:{settings.DEFAULT_GRID_POINTS}"


def default_u_axis() -> str:
    return f"{settings.DEFAULT_U_MIN}:{settings.DEFAULT_U_MAX}:{settings.DEFAULT_GRID_POINTS}"


def add_grid_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--tau-axis", type=parse_axis, default=None, help="MIN:MAX:POINTS or comma list")
    parser.add_argument("--u-axis", type=parse_axis, default=None, help="MIN:MAX:POINTS or comma list")
    parser.add_argument("--eps", type=float, default=settings.DEFAULT_EPS)
    parser.add_argument("--parallel", type=int, default=settings.DEFAULT_PARALLELISM, help="worker processes")


def grid_spec(args: argparse.Namespace, n_atoms: int) -> GridSpec:
    """
    Raises:
        ConfigError: axes not strictly increasing or non-finite, bad N or eps
    """
    try:
        return GridSpec(
            tau_axis=args.tau_axis if args.tau_axis is not None else parse_axis(default_tau_axis()),
            u_axis=args.u_axis if args.u_axis is not None else parse_axis(default_u_axis()),
            eps=args.eps,
            n_atoms=n_atoms,
        )
    except ValidationError as e:
        raise ConfigError("Invalid grid specification", details={"errors": e.errors(include_url=False)}) from None


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("sweep", help="f_M over a (tau, u) grid")
    parser.add_argument("--n", type=int, default=8, help="atom number N")
    add_grid_arguments(parser)
    parser.add_argument("--jitter", action="store_true")
    parser.add_argument("--u-symmetry", action="store_true", help="also sweep -u and report max |f_M(u) - f_M(-u)|")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value)
    parser.add_argument("--out", type=str, default=None)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    try:
        config = RunConfig(
            subcommand=Subcommand.SWEEP,
            grid=grid_spec(args, args.n),
            output_path=args.out,
            format=args.format,
            parallelism=args.parallel,
            jitter=args.jitter,
        )
    except ValidationError as e:
        raise ConfigError("Invalid sweep options", details={"errors": e.errors(include_url=False)}) from None
    if config.jitter:
        logger.warning("Jitter mode: K is perturbed by JITTER_MAGNITUDE * J_z")

    spec = config.grid
    grid = sweep(spec.tau_axis, spec.u_axis, spec.eps, spec.n_atoms, parallelism=config.parallelism, jitter=config.jitter)

    payload = sweep_payload(grid)
    if args.u_symmetry:
        difference = u_sign_symmetry_report(grid, mirrored_sweep(grid, parallelism=config.parallelism, jitter=config.jitter))
        logger.info("u sign symmetry", max_abs_difference=difference)
        payload["u_sign_max_abs_difference"] = difference

    with open_output(config.output_path) as stream:
        if config.format == OutputFormat.JSON:
            stream.write(dumps(payload).decode())
        else:
            write_sweep_csv(grid, stream)
    return EXIT_OK
