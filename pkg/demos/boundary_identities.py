"""
Boundary identities and bounds for |F|^p
========================================

On the unit circle, ``|F|^p`` of an extremal function is a trigonometric
polynomial whose degree is at most the degree of the kernel. This script
computes its Fourier coefficients, runs the identity checks, and shows that
the coefficient bound fails for ``p < 2``.
"""

import numpy as np

from bergex import ExtremalProblem, TaylorPolynomial, run_checks, solve
from bergex.projections import boundary_fourier_of_modulus_power
from bergex.quadrature import CircleGrid

k = TaylorPolynomial([1, 0.5, -0.3j])
for p in (1.5, 3.0):
    prob = ExtremalProblem(p, k)
    sol = solve(prob)
    b = boundary_fourier_of_modulus_power(sol.F, p, CircleGrid(4096))
    print(f"p={p}: |b_m| for m = 0..5:", " ".join(f"{abs(b[m]):.2e}" for m in range(6)))

    for r in run_checks(sol, prob, ["norm_equality", "weighted_identity", "fourier_identity"]):
        print("   ", r.line())

###############################################################################
# The coefficient bound below p = 2
# ---------------------------------
# For k = 1 we have F = 1 and ||phi|| = 1, so b_0 = 1. The bound
# p/(2||phi||) * ||F||_{H^2} * (sum |c_n|^2)^(1/2) equals p/2, which is
# smaller than 1 when p < 2.

for p in (1.5, 2.0, 3.0):
    prob = ExtremalProblem(p, TaylorPolynomial([1]))
    (r,) = [r for r in run_checks(solve(prob), prob, ["fourier_bound"]) if r.check_id == "fourier_bound[m=0]"]
    print(f"k=1, p={p}:", r.line())
