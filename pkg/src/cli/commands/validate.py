"""
`qfimeter validate`: run the oracle suites and emit a JSON report.
"""

import argparse

from src.cli.output import write_text
from src.core.exceptions import EXIT_FAILURE, EXIT_OK
from src.core.logger import get_logger
from src.io.json_io import dumps, validation_payload
from src.oracles.suites import SuiteFactory, run_validation
from src.schemas.run_config import RunConfig, Subcommand

logger = get_logger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("validate", help="cross-check against brute-force oracles")
    # not restricted with choices= so that an unknown name reports UNKNOWN_SUITE
    parser.add_argument("--suite", default="all", help=f"one of {', '.join(SuiteFactory.names())}")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--n", type=int, default=8, help="largest atom number drawn (the bounds suite always draws N <= 16)"
    )
    parser.add_argument("--out", type=str, default=None)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    config = RunConfig(subcommand=Subcommand.VALIDATE, seed=args.seed, output_path=args.out, format="json")
    report = run_validation(args.suite, seed=config.seed, n_max=max(1, args.n))
    write_text(dumps(validation_payload(report)).decode(), config.output_path)

    if not report.passed:
        logger.warning("Validation failed", failed=[c.name for c in report.checks if not c.passed])
        return EXIT_FAILURE
    return EXIT_OK
