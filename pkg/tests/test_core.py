"""
Tests for exceptions, configuration and logging.
"""

import json

import pytest
import structlog

from src.config import Settings
from src.core.exceptions import (
    EXIT_FAILURE,
    EXIT_USAGE,
    ConfigError,
    DimensionMismatchError,
    EigenConvergenceError,
    InvalidParamsError,
    NumericalInconsistencyError,
    OutOfRegimeError,
    OutputPathError,
    QfiMeterException,
    SchemaError,
    SweepError,
    UndefinedFrameError,
    UnknownSuiteError,
)
from src.core.logger import bind_run, get_logger, install_library_defaults, setup_logging


class TestExceptions:
    @pytest.mark.parametrize(
        "exc,code",
        [
            (InvalidParamsError("bad"), "INVALID_PARAMS"),
            (ConfigError("bad"), "CONFIG_ERROR"),
            (UnknownSuiteError("x", ["fd"]), "UNKNOWN_SUITE"),
            (SchemaError("bad"), "SCHEMA_ERROR"),
            (OutputPathError("/nope", "denied"), "OUTPUT_PATH_ERROR"),
            (OutOfRegimeError("limit", "outside"), "OUT_OF_REGIME"),
            (UndefinedFrameError(), "UNDEFINED_FRAME"),
        ],
    )
    def test_usage_errors_exit_two(self, exc, code):
        assert exc.exit_code == EXIT_USAGE
        assert exc.error_code == code

    @pytest.mark.parametrize(
        "exc",
        [
            EigenConvergenceError(1.0, 1e-10),
            DimensionMismatchError("op", 3, 4),
            NumericalInconsistencyError("bad"),
            SweepError([{"tau": 1.0, "u": 0.0, "error_code": "X", "message": "m"}]),
        ],
    )
    def test_numerical_errors_exit_one(self, exc):
        assert exc.exit_code == EXIT_FAILURE
        assert isinstance(exc, QfiMeterException)

    def test_sweep_error_carries_failures(self):
        failures = [{"tau": 1.0, "u": 0.0, "error_code": "X", "message": "m"}]
        exc = SweepError(failures)
        assert exc.failures == failures
        assert exc.details["failures"] == failures
        assert "1 grid point" in exc.message


class TestSettings:
    def test_defaults(self):
        config = Settings()
        assert config.DEFAULT_N_SERIES == [8, 16, 32, 64]
        assert config.CONTOUR_LEVEL_SPACING == 0.1
        assert config.JITTER_MAGNITUDE == 1e-10

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("QFIMETER_LOG_LEVEL", "DEBUG")
        monkeypatch.setenv("QFIMETER_DEFAULT_N_SERIES", "[4, 8, 16]")
        config = Settings()
        assert config.LOG_LEVEL == "DEBUG"
        assert config.DEFAULT_N_SERIES == [4, 8, 16]


class TestLogging:
    def test_json_lines_on_stderr(self, capsys):
        setup_logging("INFO", "json")
        get_logger("tests.logging").info("Sweep finished", points=4)
        captured = capsys.readouterr()
        assert captured.out == ""
        line = json.loads(captured.err.strip().splitlines()[-1])
        assert line["event"] == "Sweep finished"
        assert line["points"] == 4
        assert line["level"] == "info"

    def test_level_filters(self, capsys):
        setup_logging("WARNING", "json")
        get_logger("tests.logging.filtered").info("hidden")
        assert "hidden" not in capsys.readouterr().err

    def test_run_binding(self, capsys):
        setup_logging("INFO", "json")
        bind_run("abc123", command="sweep").info("Command completed")
        line = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert line["run_id"] == "abc123"
        assert line["command"] == "sweep"

    def test_library_defaults_before_setup(self, capsys):
        structlog.reset_defaults()
        install_library_defaults()
        log = get_logger("tests.logging.library")
        log.debug("hidden debug")
        log.info("hidden info")
        log.warning("visible warning", points=2)
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "hidden" not in captured.err
        assert "visible warning" in captured.err

    def test_existing_configuration_left_alone(self, capsys):
        setup_logging("INFO", "json")
        install_library_defaults()
        get_logger("tests.logging.kept").info("Still json")
        line = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert line["event"] == "Still json"
