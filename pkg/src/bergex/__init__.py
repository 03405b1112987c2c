"""Extremal problems in Bergman spaces ``A^p`` with polynomial kernels.

Given a polynomial ``k``, the functional ``phi(f) = int_D f conj(k) dsigma`` has a
unique extremal function ``F`` with ``||F||_{A^p} = 1`` and ``Re phi(F) = ||phi||``.
This package computes ``F`` and ``||phi||`` and numerically checks identities and
inequalities that ``F`` satisfies.
"""

__version__ = "0.1.0"

from .analytic import TaylorPolynomial, derivative, evaluate, k_transform, partial_sum, random_polynomial
from .harness import CheckReport, run_checks, seeded_corpus
from .projections import bergman_project, boundary_fourier, boundary_fourier_of_modulus_power, szego_project
from .quadrature import (
    CircleGrid,
    DiscQuadrature,
    FunctionalPhi,
    bergman_norm,
    disc_integral,
    hardy_norm,
    integral_mean,
    phi_apply,
)
from .solver import (
    ExtremalProblem,
    ExtremalSolution,
    NonConvergence,
    SolverOptions,
    ZeroKernelError,
    optimality_residual,
    recover_kernel,
    solve,
)

__all__ = [
    "CheckReport",
    "CircleGrid",
    "DiscQuadrature",
    "ExtremalProblem",
    "ExtremalSolution",
    "FunctionalPhi",
    "NonConvergence",
    "SolverOptions",
    "TaylorPolynomial",
    "ZeroKernelError",
    "bergman_norm",
    "bergman_project",
    "boundary_fourier",
    "boundary_fourier_of_modulus_power",
    "derivative",
    "disc_integral",
    "evaluate",
    "hardy_norm",
    "integral_mean",
    "k_transform",
    "optimality_residual",
    "partial_sum",
    "phi_apply",
    "random_polynomial",
    "recover_kernel",
    "run_checks",
    "seeded_corpus",
    "solve",
    "szego_project",
]
