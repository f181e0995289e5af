"""
Configuration management for qfimeter.

Uses Pydantic Settings for the ambient defaults (logging, numerical tolerances,
default grids). Physical parameters are never read from the environment; they
come from CLI flags only.
"""

from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application configuration, overridable through QFIMETER_-prefixed variables.
    """

    model_config = SettingsConfigDict(env_prefix="QFIMETER_", case_sensitive=True)

    # Application
    APP_NAME: str = "qfimeter"
    VERSION: str = "1.0.0"

    # Observability - Logging
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "json"  # json or console

    # Linear algebra tolerances
    HERMITIAN_TOL_REL: float = 1e-12
    EIGEN_RESIDUAL_TOL: float = 1e-10
    DEGENERACY_TOL_REL: float = 1e-8
    JITTER_MAGNITUDE: float = 1e-10

    # Fisher information
    GENERATOR_HERMITIAN_TOL: float = 1e-10
    PHASE_WEIGHT_SERIES_CUTOFF: float = 1e-6
    FISHER_NEGATIVE_TOL: float = 1e-12
    CONTAINMENT_TOL: float = 1e-8

    # Oracles
    FD_STEP: float = 1e-5
    QUADRATURE_NODES: int = 10_001
    LARGE_SURROGATE: float = 1e4

    # Sweep defaults
    DEFAULT_TAU_MIN: float = 0.0
    DEFAULT_TAU_MAX: float = 4.0
    DEFAULT_U_MIN: float = 0.0
    DEFAULT_U_MAX: float = 10.0
    DEFAULT_GRID_POINTS: int = 41
    DEFAULT_EPS: float = 1.0
    DEFAULT_N_SERIES: list[int] = [8, 16, 32, 64]
    DEFAULT_PARALLELISM: int = 1

    # Contour plots
    CONTOUR_LEVEL_SPACING: float = 0.1


@lru_cache()
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Returns:
        Settings: Application configuration
    """
    return Settings()


settings = get_settings()
