"""
Structured logging configuration for qfimeter.

Log lines go to stderr; stdout carries only the emitted records.
"""

import logging
import sys

import structlog
from structlog.typing import Processor

# Everything before the renderer; the renderer is picked per run.
SHARED_PROCESSORS: tuple[Processor, ...] = (
    structlog.stdlib.filter_by_level,
    structlog.stdlib.add_logger_name,
    structlog.stdlib.add_log_level,
    structlog.stdlib.PositionalArgumentsFormatter(),
    structlog.processors.TimeStamper(fmt="iso"),
    structlog.processors.StackInfoRenderer(),
    structlog.processors.format_exc_info,
    structlog.processors.UnicodeDecoder(),
)


def _renderer(log_format: str) -> Processor:
    if log_format == "console":
        return structlog.dev.ConsoleRenderer(colors=False)
    return structlog.processors.JSONRenderer()


def _stderr_logger(*args: object) -> structlog.PrintLogger:
    # resolved per call so a swapped sys.stderr is honoured
    return structlog.PrintLogger(sys.stderr)


def install_library_defaults() -> None:
    """
    WARNING and above to stderr until setup_logging() runs.

    Applied on import when nothing has configured structlog yet, so library use
    never writes log lines to stdout. An existing structlog setup is left alone.
    """
    if structlog.is_configured():
        return
    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(logging.WARNING),
        logger_factory=_stderr_logger,
        cache_logger_on_first_use=False,
    )


def setup_logging(log_level: str = "WARNING", log_format: str = "json") -> None:
    """
    Configure structlog on top of the stdlib root logger.

    Args:
        log_level: DEBUG, INFO, WARNING, ERROR or CRITICAL
        log_format: "json" for one object per line, "console" for humans
    """
    structlog.configure(
        processors=[*SHARED_PROCESSORS, _renderer(log_format)],
        context_class=dict,
        wrapper_class=structlog.stdlib.BoundLogger,
        logger_factory=structlog.stdlib.LoggerFactory(),
        # reconfigured per run
        cache_logger_on_first_use=False,
    )

    # force: drop handlers bound to a previous sys.stderr
    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=getattr(logging, log_level.upper(), logging.WARNING),
        force=True,
    )


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    return structlog.get_logger(name)


def bind_run(run_id: str, **context: object) -> structlog.stdlib.BoundLogger:
    """
    Logger carrying the run id of one CLI invocation.

    Args:
        run_id: Unique id of the invocation
        **context: Extra fields bound next to it (command name, ...)

    Returns:
        BoundLogger: Logger bound with run_id and context
    """
    return structlog.get_logger("qfimeter.run").bind(run_id=run_id, **context)


install_library_defaults()
