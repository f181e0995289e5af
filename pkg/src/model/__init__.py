"""Two-mode spin model."""

from src.model.spin import build_hamiltonian, build_jx, build_jy, build_jz, build_kprime

__all__ = ["build_hamiltonian", "build_jx", "build_jy", "build_jz", "build_kprime"]
