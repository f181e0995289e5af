"""
qfimeter - Main Entry Point

Builds the argument parser from the subcommand modules, configures logging,
runs one subcommand and maps failures onto the exit-status contract:
0 success, 1 validation or numerical failure, 2 usage or configuration error.

Records go to stdout (or --out); logs and diagnostics go to stderr.
"""

import argparse
import sys
import time
import uuid
from typing import Optional, Sequence

from pydantic import ValidationError

from src.cli import commands
from src.config import settings
from src.core.exceptions import EXIT_FAILURE, EXIT_USAGE, QfiMeterException
from src.core.logger import bind_run, setup_logging


def create_parser() -> argparse.ArgumentParser:
    """
    Parser factory: global flags plus one subparser per command module.
    """
    parser = argparse.ArgumentParser(
        prog="qfimeter",
        description="Maximal quantum Fisher information of a double-well interferometer",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.VERSION}")
    parser.add_argument(
        "--log-level",
        default=settings.LOG_LEVEL,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        type=str.upper,
    )
    parser.add_argument("--log-format", default=settings.LOG_FORMAT, choices=["json", "console"])

    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in (
        commands.point,
        commands.sweep,
        commands.extrapolate,
        commands.limits,
        commands.validate,
        commands.contour,
    ):
        module.register(subparsers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 for --help/--version
        return int(e.code or 0)

    setup_logging(args.log_level, args.log_format)
    log = bind_run(uuid.uuid4().hex, command=args.command)
    start = time.time()

    try:
        status = args.handler(args)
    except QfiMeterException as exc:
        log.error(
            "Command failed",
            error_code=exc.error_code,
            message=exc.message,
            exit_code=exc.exit_code,
            details=exc.details,
        )
        print(f"qfimeter: error: [{exc.error_code}] {exc.message}", file=sys.stderr)
        return exc.exit_code
    except ValidationError as exc:
        log.error("Invalid input", errors=exc.errors(include_url=False))
        print(f"qfimeter: error: [INVALID_INPUT] {exc.error_count()} validation error(s)", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:
        log.error("Unhandled exception", exception_type=type(exc).__name__, error=str(exc))
        print(f"qfimeter: error: [INTERNAL_ERROR] {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILURE

    log.info(
        "Command completed",
        exit_code=status,
        duration_ms=round((time.time() - start) * 1000, 2),
    )
    return status


if __name__ == "__main__":
    sys.exit(main())
