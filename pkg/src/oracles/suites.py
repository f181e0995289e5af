"""
Validation suites driving the brute-force oracles.

Implements a registry/factory so `qfimeter validate --suite NAME` can select
one suite or run them all.
"""

from abc import ABC, abstractmethod

import numpy as np

from src.config import settings
from src.core.exceptions import UnknownSuiteError
from src.core.logger import get_logger
from src.limits.analytic import noon_ground_state_overlap
from src.limits.comparisons import compare_limits
from src.linalg.eigen import matrix_exponential
from src.linalg.matrices import HermitianMatrix, StateVector
from src.model.spin import build_jz
from src.oracles.brute_force import (
    derivative_state_fd,
    quadrature_local_generator,
    random_state_fisher_sample,
    random_states,
    spectrum_respects_generator_bounds,
)
from src.qfi.derivative import derivative_state_pt
from src.qfi.fisher import fisher_for_state
from src.qfi.generator import LocalGenerator, max_fisher, optimal_input_state
from src.schemas.params import HamiltonianParams, SpinBasis
from src.schemas.records import CheckResult, ValidationReport
from src.services.qfi_service import solve_point

logger = get_logger(__name__)


def random_params(rng: np.random.Generator, n_max: int, tau_eps: float, u_max: float) -> HamiltonianParams:
    """Uniform draw with |tau|, |eps| <= tau_eps, |u| <= u_max and 1 <= N <= n_max."""
    return HamiltonianParams(
        tau=float(rng.uniform(-tau_eps, tau_eps)),
        eps=float(rng.uniform(-tau_eps, tau_eps)),
        u=float(rng.uniform(-u_max, u_max)),
        n_atoms=int(rng.integers(1, n_max + 1)),
    )


def _relative_error(reference: np.ndarray, candidate: np.ndarray) -> float:
    return float(np.linalg.norm(candidate - reference) / np.linalg.norm(reference))


def _check(name: str, measured: float, tolerance: float, **details: float | int | str) -> CheckResult:
    value = float(measured)
    return CheckResult(name=name, measured=value, tolerance=tolerance, passed=bool(value <= tolerance), details=details)


class BaseValidationSuite(ABC):
    """Abstract base class for validation suites."""

    name: str = ""

    def __init__(self, seed: int, n_max: int) -> None:
        self.seed = seed
        self.n_max = n_max
        self.rng = np.random.default_rng(seed)

    @abstractmethod
    def run(self) -> list[CheckResult]:
        """Run every check of the suite."""


class FiniteDifferenceSuite(BaseValidationSuite):
    """Perturbation-theory derivative state against finite differences."""

    name = "fd"
    cases = 20

    def run(self) -> list[CheckResult]:
        return [self._pt_vs_fd(), self._convergence_order(), self._end_to_end()]

    def _pt_vs_fd(self) -> CheckResult:
        step = settings.FD_STEP
        worst = 0.0
        for _ in range(self.cases):
            params = random_params(self.rng, self.n_max, 2.0, 5.0)
            solution = solve_point(params)
            psi0 = random_states(params.n_atoms + 1, 1, self.rng)[0]
            exact = derivative_state_pt(solution.eig, solution.kprime, psi0)
            worst = max(worst, _relative_error(exact, derivative_state_fd(params, psi0, step)))
        return _check("pt_vs_central_difference", worst, 1e-6, cases=self.cases, dtheta=step)

    def _convergence_order(self) -> CheckResult:
        params = HamiltonianParams(tau=1.0, eps=1.0, u=1.0, n_atoms=min(4, self.n_max))
        solution = solve_point(params)
        psi0 = random_states(params.n_atoms + 1, 1, self.rng)[0]
        exact = derivative_state_pt(solution.eig, solution.kprime, psi0)
        coarse = _relative_error(exact, derivative_state_fd(params, psi0, 1e-3))
        fine = _relative_error(exact, derivative_state_fd(params, psi0, 5e-4))
        ratio = coarse / fine
        return CheckResult(
            name="central_difference_order",
            measured=ratio,
            tolerance=0.8,
            passed=bool(abs(ratio - 4.0) <= 0.8),
            details={"expected": 4.0},
        )

    def _end_to_end(self) -> CheckResult:
        # F from (optimal state, PT derivative) must reproduce (l_max - l_min)^2
        worst = 0.0
        for n_atoms in (2, 4, 8):
            for tau in (0.5, 1.0, 2.0):
                for u in (0.0, 2.0, 10.0):
                    params = HamiltonianParams(tau=tau, eps=1.0, u=u, n_atoms=n_atoms)
                    solution = solve_point(params)
                    fisher, _ = max_fisher(solution.generator, n_atoms)
                    psi0 = optimal_input_state(solution.eig, solution.generator).state
                    psi = StateVector.from_array(matrix_exponential(solution.eig, -1j) @ psi0.amplitudes, normalize=True)
                    measured = fisher_for_state(psi, derivative_state_pt(solution.eig, solution.kprime, psi0))
                    worst = max(worst, abs(measured - fisher) / fisher)
        return _check("end_to_end_consistency", worst, 1e-8, points=27)


class QuadratureSuite(BaseValidationSuite):
    """Closed-form L against Simpson quadrature of U(x) K' U^H(x)."""

    name = "quadrature"
    cases = 10

    def run(self) -> list[CheckResult]:
        n_max = min(self.n_max, 8)
        worst = 0.0
        for _ in range(self.cases):
            solution = solve_point(random_params(self.rng, n_max, 2.0, 5.0))
            reference = quadrature_local_generator(solution.eig, solution.kprime)
            worst = max(worst, float(np.max(np.abs(solution.generator.matrix.data - reference.data))))

        solution = solve_point(HamiltonianParams(tau=1.0, eps=1.0, u=1.0, n_atoms=2))
        closed = solution.generator.matrix.data
        coarse = np.max(np.abs(quadrature_local_generator(solution.eig, solution.kprime, 101).data - closed))
        fine = np.max(np.abs(quadrature_local_generator(solution.eig, solution.kprime, 201).data - closed))
        order = float(np.log2(coarse / fine))

        return [
            _check("closed_form_vs_simpson", worst, 1e-8, cases=self.cases, nodes=settings.QUADRATURE_NODES),
            CheckResult(
                name="simpson_order",
                measured=order,
                tolerance=0.5,
                passed=bool(abs(order - 4.0) <= 0.5),
                details={"expected": 4.0},
            ),
        ]


class BoundsSuite(BaseValidationSuite):
    """spectrum(L) inside [-N/2, N/2] for random parameters, plus a negative control."""

    name = "bounds"
    cases = 200
    # fixed draw range, independent of --n
    atoms_max = 16

    def run(self) -> list[CheckResult]:
        worst_margin = np.inf
        failures = 0
        largest = 0
        for _ in range(self.cases):
            params = random_params(self.rng, self.atoms_max, 5.0, 20.0)
            report = spectrum_respects_generator_bounds(solve_point(params).generator, params.n_atoms)
            worst_margin = min(worst_margin, report.upper_margin, report.lower_margin)
            failures += not report.passed
            largest = max(largest, params.n_atoms)

        basis = SpinBasis(n_atoms=4)
        inflated = HermitianMatrix.from_array(1.1 * build_jz(basis).data)
        unit = np.eye(basis.dim)
        corrupted = LocalGenerator(
            matrix=inflated,
            ell_max=2.2,
            ell_min=-2.2,
            eigvec_max=StateVector.from_array(unit[0]),
            eigvec_min=StateVector.from_array(unit[-1]),
        )
        control = spectrum_respects_generator_bounds(corrupted, basis.n_atoms)

        return [
            CheckResult(
                name="containment",
                measured=float(-worst_margin),
                tolerance=settings.CONTAINMENT_TOL,
                passed=failures == 0,
                details={"cases": self.cases, "failures": failures, "atoms_max": self.atoms_max, "largest_n": largest},
            ),
            CheckResult(
                name="negative_control_detected",
                measured=float(-min(control.upper_margin, control.lower_margin)),
                tolerance=settings.CONTAINMENT_TOL,
                passed=not control.passed,
            ),
        ]


class SamplingSuite(BaseValidationSuite):
    """No random input state beats F_M."""

    name = "sampling"
    points = 10
    samples = 100

    def run(self) -> list[CheckResult]:
        worst = -np.inf
        for _ in range(self.points):
            params = random_params(self.rng, self.n_max, 2.0, 5.0)
            fisher, _ = max_fisher(solve_point(params).generator, params.n_atoms)
            sampled = random_state_fisher_sample(params, self.samples, int(self.rng.integers(2**31)))
            worst = max(worst, sampled - fisher)
        return [_check("random_states_below_optimum", float(worst), 1e-8, points=self.points, samples=self.samples)]


class LimitsSuite(BaseValidationSuite):
    """Limiting regimes against the full computation."""

    name = "limits"

    def run(self) -> list[CheckResult]:
        n_atoms = max(2, min(self.n_max, 8))
        checks = [
            CheckResult(
                name=row.name,
                measured=row.difference,
                tolerance=row.tolerance,
                passed=row.passed,
                details={"reference": row.reference, "computed": row.computed, "n_atoms": n_atoms},
            )
            for row in compare_limits(n_atoms=n_atoms)
        ]
        overlap = noon_ground_state_overlap(HamiltonianParams(tau=1.0, eps=0.0, u=-1e3, n_atoms=4))
        checks.append(
            CheckResult(
                name="noon_ground_state_n4",
                measured=float(1.0 - overlap),
                tolerance=1e-2,
                passed=bool(overlap >= 0.99),
            )
        )
        return checks


class SuiteFactory:
    """Factory for validation suites."""

    _suites: dict[str, type[BaseValidationSuite]] = {
        "fd": FiniteDifferenceSuite,
        "quadrature": QuadratureSuite,
        "bounds": BoundsSuite,
        "sampling": SamplingSuite,
        "limits": LimitsSuite,
    }

    @classmethod
    def names(cls) -> list[str]:
        return [*cls._suites, "all"]

    @classmethod
    def get_suites(cls, name: str, seed: int, n_max: int) -> list[BaseValidationSuite]:
        """
        Instantiate one suite, or every suite for "all".

        Raises:
            UnknownSuiteError: name not registered
        """
        if name == "all":
            return [suite(seed, n_max) for suite in cls._suites.values()]
        if name not in cls._suites:
            raise UnknownSuiteError(name, cls.names())
        return [cls._suites[name](seed, n_max)]


def run_validation(suite: str, seed: int = 0, n_max: int = 8) -> ValidationReport:
    """Run the named suite(s) and collect a report."""
    checks: list[CheckResult] = []
    for instance in SuiteFactory.get_suites(suite, seed, n_max):
        results = instance.run()
        logger.info(
            "Validation suite finished",
            suite=instance.name,
            checks=len(results),
            failed=sum(not r.passed for r in results),
        )
        checks.extend(results)
    return ValidationReport(suite=suite, seed=seed, checks=checks)
