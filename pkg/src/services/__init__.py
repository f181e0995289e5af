"""Services layer: the point evaluation pipeline."""

from src.services.qfi_service import PointSolution, evaluate_point, solve_point

__all__ = ["PointSolution", "evaluate_point", "solve_point"]
