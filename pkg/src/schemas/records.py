"""
Emitted records: point results, validation checks and limit comparisons.
"""

from typing import Optional

from pydantic import BaseModel, Field

from src.qfi.point import QfiPoint


class QfiRecord(BaseModel):
    """One evaluated parameter point as written to CSV/JSON."""

    n_atoms: int
    tau: float
    eps: float
    u: float
    U: float
    ell_max: float
    ell_min: float
    F_M: float
    f_M: float
    sigma: float
    optimal_state_degenerate: bool = False
    optimal_state: Optional[list[tuple[float, float]]] = Field(
        default=None, description="Optimal input amplitudes as (re, im) pairs, |J,m> basis, m descending"
    )

    @classmethod
    def from_point(cls, point: QfiPoint, include_state: bool = True) -> "QfiRecord":
        params = point.params
        state = None
        if include_state:
            state = [(float(a.real), float(a.imag)) for a in point.optimal_state.amplitudes]
        return cls(
            n_atoms=params.n_atoms,
            tau=params.tau,
            eps=params.eps,
            u=params.u,
            U=params.interaction,
            ell_max=point.ell_max,
            ell_min=point.ell_min,
            F_M=point.fisher_max,
            f_M=point.fisher_scaled,
            sigma=point.sigma,
            optimal_state_degenerate=point.optimal_state_degenerate,
            optimal_state=state,
        )


class CheckResult(BaseModel):
    """One validation check: what was measured against which tolerance."""

    name: str
    measured: float
    tolerance: float
    passed: bool
    details: dict[str, float | int | str] = Field(default_factory=dict)


class ValidationReport(BaseModel):
    suite: str
    seed: int
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


class LimitComparison(BaseModel):
    """Reference value of a limiting regime next to the full computation."""

    name: str
    reference: float
    computed: float
    difference: float
    tolerance: float
    passed: bool
