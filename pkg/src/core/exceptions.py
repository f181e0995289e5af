"""
Custom exceptions for qfimeter.

Provides a consistent exception handling pattern with stable CLI exit codes
and structured error details.
"""

from typing import Any, Optional

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class QfiMeterException(Exception):
    """Base exception for all qfimeter errors."""

    def __init__(
        self,
        message: str,
        error_code: str = "INTERNAL_ERROR",
        exit_code: int = EXIT_FAILURE,
        details: Optional[dict[str, Any]] = None,
    ) -> None:
        self.message = message
        self.error_code = error_code
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(self.message)


class InvalidParamsError(QfiMeterException):
    """Raised when model or operation parameters are invalid."""

    def __init__(self, message: str, details: Optional[dict] = None) -> None:
        super().__init__(
            message=message,
            error_code="INVALID_PARAMS",
            exit_code=EXIT_USAGE,
            details=details,
        )


class ConfigError(QfiMeterException):
    """Raised when a run configuration fails validation."""

    def __init__(self, message: str, details: Optional[dict] = None) -> None:
        super().__init__(
            message=message,
            error_code="CONFIG_ERROR",
            exit_code=EXIT_USAGE,
            details=details,
        )


class UnknownSuiteError(QfiMeterException):
    """Raised when a validation suite name is not registered."""

    def __init__(self, suite: str, available: list[str]) -> None:
        super().__init__(
            message=f"Unknown validation suite: {suite}",
            error_code="UNKNOWN_SUITE",
            exit_code=EXIT_USAGE,
            details={"suite": suite, "available": available},
        )


class SchemaError(QfiMeterException):
    """Raised when an input file does not match the expected schema."""

    def __init__(self, message: str, details: Optional[dict] = None) -> None:
        super().__init__(
            message=message,
            error_code="SCHEMA_ERROR",
            exit_code=EXIT_USAGE,
            details=details,
        )


class OutputPathError(QfiMeterException):
    """Raised when an output path cannot be written."""

    def __init__(self, path: str, reason: str) -> None:
        super().__init__(
            message=f"Cannot write output to {path}: {reason}",
            error_code="OUTPUT_PATH_ERROR",
            exit_code=EXIT_USAGE,
            details={"path": path},
        )


class PreconditionError(QfiMeterException):
    """Raised when a matrix violates an operation precondition (e.g. not Hermitian)."""

    def __init__(self, message: str, details: Optional[dict] = None) -> None:
        super().__init__(
            message=message,
            error_code="PRECONDITION_FAILED",
            exit_code=EXIT_FAILURE,
            details=details,
        )


class EigenConvergenceError(QfiMeterException):
    """Raised when the eigensolver fails or misses its residual guarantee."""

    def __init__(self, residual: float, tolerance: float, details: Optional[dict] = None) -> None:
        self.residual = residual
        super().__init__(
            message=f"Eigendecomposition residual {residual:.3e} exceeds {tolerance:.3e}",
            error_code="EIGEN_NOT_CONVERGED",
            exit_code=EXIT_FAILURE,
            details={"residual": residual, "tolerance": tolerance, **(details or {})},
        )


class DimensionMismatchError(QfiMeterException):
    """Raised when operands have incompatible dimensions."""

    def __init__(self, operation: str, expected: int, actual: int) -> None:
        super().__init__(
            message=f"{operation}: expected dimension {expected}, got {actual}",
            error_code="DIMENSION_MISMATCH",
            exit_code=EXIT_FAILURE,
            details={"operation": operation, "expected": expected, "actual": actual},
        )


class NumericalInconsistencyError(QfiMeterException):
    """Raised when a computed quantity violates a mathematical identity beyond roundoff."""

    def __init__(self, message: str, details: Optional[dict] = None) -> None:
        super().__init__(
            message=message,
            error_code="NUMERICAL_INCONSISTENCY",
            exit_code=EXIT_FAILURE,
            details=details,
        )


class OutOfRegimeError(QfiMeterException):
    """Raised when a limiting formula is asked for outside its regime."""

    def __init__(self, limit: str, message: str, details: Optional[dict] = None) -> None:
        super().__init__(
            message=f"{limit}: {message}",
            error_code="OUT_OF_REGIME",
            exit_code=EXIT_USAGE,
            details={"limit": limit, **(details or {})},
        )


class UndefinedFrameError(QfiMeterException):
    """Raised when the tilted frame is undefined (tau = eps = 0)."""

    def __init__(self) -> None:
        super().__init__(
            message="Tilted frame undefined for tau = eps = 0",
            error_code="UNDEFINED_FRAME",
            exit_code=EXIT_USAGE,
        )


class ExtrapolationError(QfiMeterException):
    """Raised when an atom-number series cannot be extrapolated."""

    def __init__(self, message: str, details: Optional[dict] = None) -> None:
        super().__init__(
            message=message,
            error_code="EXTRAPOLATION_ERROR",
            exit_code=EXIT_USAGE,
            details=details,
        )


class GridAxisMismatchError(QfiMeterException):
    """Raised when two grids cannot be compared point by point."""

    def __init__(self, message: str, details: Optional[dict] = None) -> None:
        super().__init__(
            message=message,
            error_code="GRID_AXIS_MISMATCH",
            exit_code=EXIT_USAGE,
            details=details,
        )


class SweepError(QfiMeterException):
    """Raised when one or more grid points fail; carries every failing coordinate."""

    def __init__(self, failures: list[dict[str, Any]]) -> None:
        self.failures = failures
        super().__init__(
            message=f"{len(failures)} grid point(s) failed",
            error_code="SWEEP_FAILED",
            exit_code=EXIT_FAILURE,
            details={"failures": failures},
        )
