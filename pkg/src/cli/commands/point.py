"""
`qfimeter point`: maximal Fisher information at one parameter point.
"""

import argparse

from src.cli.output import build_params, open_output
from src.core.exceptions import EXIT_OK
from src.core.logger import get_logger
from src.io.csv_io import write_point_csv
from src.io.json_io import dumps, point_payload
from src.schemas.records import QfiRecord
from src.schemas.run_config import OutputFormat, RunConfig, Subcommand
from src.services.qfi_service import evaluate_point

logger = get_logger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("point", help="F_M, f_M and the optimal state at one point")
    parser.add_argument("--n", type=int, required=True, help="atom number N")
    parser.add_argument("--tau", type=float, required=True, help="tunneling amplitude")
    parser.add_argument("--eps", type=float, required=True, help="energy difference (the measured parameter)")
    parser.add_argument("--u", type=float, required=True, help="scaled interaction u = N U")
    parser.add_argument("--rel-phase", type=float, default=0.0, help="relative phase of the optimal state")
    parser.add_argument("--jitter", action="store_true", help="symmetry-breaking jitter instead of exact degeneracy resolution")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.JSON.value)
    parser.add_argument("--out", type=str, default=None, help="output file (default stdout)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    config = RunConfig(
        subcommand=Subcommand.POINT,
        params=build_params(args.tau, args.eps, args.u, args.n),
        output_path=args.out,
        format=args.format,
        jitter=args.jitter,
    )
    if config.jitter:
        logger.warning("Jitter mode: K is perturbed by JITTER_MAGNITUDE * J_z")

    point = evaluate_point(config.params, rel_phase=args.rel_phase, jitter=config.jitter)
    # amplitudes are only carried by the JSON record
    record = QfiRecord.from_point(point, include_state=config.format == OutputFormat.JSON)

    with open_output(config.output_path) as stream:
        if config.format == OutputFormat.JSON:
            stream.write(dumps(point_payload(record)).decode())
        else:
            write_point_csv(record, stream)
    return EXIT_OK
