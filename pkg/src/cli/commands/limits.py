"""
`qfimeter limits`: analytic limiting values next to the full computation.
"""

import argparse
import csv

from src.cli.output import open_output
from src.config import settings
from src.core.exceptions import EXIT_FAILURE, EXIT_OK, InvalidParamsError
from src.core.logger import get_logger
from src.io.csv_io import format_float
from src.io.json_io import dumps, limits_payload
from src.limits.comparisons import compare_limits
from src.schemas.run_config import OutputFormat

logger = get_logger(__name__)

LIMITS_HEADER = ["name", "reference", "computed", "difference", "tolerance", "passed"]


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("limits", help="side-by-side table of the limiting regimes")
    parser.add_argument("--n", type=int, default=8, help="atom number N (at least 2)")
    parser.add_argument("--large", type=float, default=settings.LARGE_SURROGATE, help="surrogate for infinity")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value)
    parser.add_argument("--out", type=str, default=None)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    # J_z^2 is proportional to the identity at N = 1, so the interaction limits need N >= 2
    if args.n < 2:
        raise InvalidParamsError("limits needs N >= 2", details={"n_atoms": args.n})
    rows = compare_limits(n_atoms=args.n, large=args.large)

    with open_output(args.out) as stream:
        if args.format == OutputFormat.JSON.value:
            stream.write(dumps(limits_payload(rows, args.n)).decode())
        else:
            writer = csv.writer(stream, lineterminator="\n")
            writer.writerow(LIMITS_HEADER)
            for row in rows:
                writer.writerow(
                    [row.name]
                    + [format_float(v) for v in (row.reference, row.computed, row.difference, row.tolerance)]
                    + [str(row.passed).lower()]
                )

    failed = [row.name for row in rows if not row.passed]
    if failed:
        logger.warning("Limit comparisons outside tolerance", failed=failed)
        return EXIT_FAILURE
    return EXIT_OK
