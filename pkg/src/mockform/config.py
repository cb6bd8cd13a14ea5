"""Evaluation configuration threaded through every numerical routine."""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class EvalConfig:
    """Truncation bounds, finite-difference steps and tolerances.

    lattice_bound   largest odd modulus m in direct lattice sums
    fourier_bound   largest |h| kept in Fourier expansions
    q_terms         cap on q-series terms (and default class-number table size)
    fd_step         step (relative to v) for first-derivative stencils
    fd_step2        step (relative to v) for second-derivative stencils
    quad_tol        absolute tolerance for quadrature and series tails
    target_tol      acceptance tolerance of the enclosing check
    """

    lattice_bound: int = 301
    fourier_bound: int = 40
    q_terms: int = 4000
    fd_step: float = 1e-5
    fd_step2: float = 2e-3
    quad_tol: float = 1e-10
    target_tol: float = 1e-6

    def __post_init__(self):
        for name in ("lattice_bound", "fourier_bound", "q_terms"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        for name in ("fd_step", "fd_step2", "quad_tol", "target_tol"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    def with_(self, **kwargs) -> "EvalConfig":
        return replace(self, **kwargs)


DEFAULT_CONFIG = EvalConfig()


def require_upper_half(tau: complex) -> complex:
    tau = complex(tau)
    if not tau.imag > 0:
        raise ValueError(f"tau must lie in the upper half plane, got {tau}")
    return tau
