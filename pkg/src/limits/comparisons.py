"""
Side-by-side table of limiting-regime reference values against the full
computation, backing `qfimeter limits` and the `limits` validation suite.
"""

from src.config import settings
from src.limits.analytic import (
    fisher_eps_zero,
    fisher_limit_no_interaction,
    fisher_limit_strong_interaction,
    noon_ground_state_overlap,
)
from src.schemas.params import HamiltonianParams
from src.schemas.records import LimitComparison
from src.services.qfi_service import evaluate_point


def _row(name: str, reference: float, computed: float, tolerance: float, relative: bool = False) -> LimitComparison:
    diff = abs(computed - reference)
    measured = diff / abs(reference) if relative and reference != 0 else diff
    return LimitComparison(
        name=name,
        reference=reference,
        computed=computed,
        difference=measured,
        tolerance=tolerance,
        passed=measured <= tolerance,
    )


def compare_limits(n_atoms: int = 8, large: float | None = None) -> list[LimitComparison]:
    """
    Evaluate every limiting regime at atom number n_atoms.

    Args:
        n_atoms: N used for the regimes that accept any N
        large: surrogate for infinity (defaults to LARGE_SURROGATE)
    """
    big = settings.LARGE_SURROGATE if large is None else large
    n_sq = float(n_atoms**2)
    rows: list[LimitComparison] = []

    tilted = HamiltonianParams(tau=1.0, eps=1.0, u=0.0, n_atoms=n_atoms).scaled(big)
    rows.append(
        _row(
            "no_interaction_tilt",
            fisher_limit_no_interaction(tilted) / n_sq,
            evaluate_point(tilted).fisher_scaled,
            1e-2,
            relative=True,
        )
    )

    strong = HamiltonianParams(tau=1.0, eps=1.0, u=big, n_atoms=n_atoms)
    rows.append(
        _row(
            "strong_interaction",
            fisher_limit_strong_interaction(n_atoms) / n_sq,
            evaluate_point(strong).fisher_scaled,
            1e-2,
            relative=True,
        )
    )

    small = HamiltonianParams(tau=1.0, eps=1.0, u=1.0, n_atoms=n_atoms).scaled(1.0 / big)
    rows.append(_row("small_scaling", 1.0, evaluate_point(small).fisher_scaled, 1e-6))

    large_eps = HamiltonianParams(tau=1.0, eps=big, u=1.0, n_atoms=n_atoms)
    rows.append(_row("large_eps", 1.0, evaluate_point(large_eps).fisher_scaled, 1e-3))

    near_zero = HamiltonianParams(tau=1.0, eps=1e-6, u=2.0, n_atoms=n_atoms)
    rows.append(
        _row(
            "eps_to_zero",
            fisher_eps_zero(near_zero).fisher_scaled,
            evaluate_point(near_zero).fisher_scaled,
            1e-4,
        )
    )

    cat = HamiltonianParams(tau=1.0, eps=0.0, u=-1e3, n_atoms=n_atoms)
    overlap = noon_ground_state_overlap(cat)
    rows.append(
        LimitComparison(
            name="noon_ground_state",
            reference=1.0,
            computed=overlap,
            difference=1.0 - overlap,
            tolerance=1e-2,
            passed=overlap >= 0.99,
        )
    )
    return rows
