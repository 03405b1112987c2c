"""
Extremal functions for polynomial kernels
=========================================

A polynomial ``k`` defines the functional ``phi(f) = int_D f conj(k) dsigma`` on
the Bergman space ``A^p``. Its extremal function ``F`` has unit norm and
satisfies ``Re phi(F) = ||phi||``. This script solves a few small cases and
compares them with closed forms.
"""

import numpy as np

from bergex import ExtremalProblem, TaylorPolynomial, bergman_norm, solve

np.set_printoptions(precision=6, suppress=True)

# For p = 2 the extremal function is the normalized kernel.
k = TaylorPolynomial([1, 1])
sol = solve(ExtremalProblem(2.0, k))
print("p=2, k=1+z:", sol.F.coeffs, "phi_norm", sol.phi_norm)
print("   k/||k||: ", (k / bergman_norm(k, 2)).coeffs)

# For a monomial kernel z^n, rotation symmetry forces F = c z^n with
# c = (np/2 + 1)^(1/p).
for p in (1.5, 3.0, 4.0):
    sol = solve(ExtremalProblem(p, TaylorPolynomial.monomial(2)))
    c = (2 * p / 2 + 1) ** (1 / p)
    print(f"p={p}, k=z^2: F_2 = {sol.F.coefficient(2).real:.10f}  closed form {c:.10f}")

###############################################################################
# A genuinely nonlinear case
# --------------------------
# For p = 3 and k = 1 + z the extremal function is no longer a polynomial.
# Its Taylor coefficients decay geometrically, and the solver doubles its
# working degree until the top quarter of the coefficients is negligible.

sol = solve(ExtremalProblem(3.0, TaylorPolynomial([1, 1])))
print("p=3, k=1+z: phi_norm", sol.phi_norm, "working degree", sol.degree)
print("leading coefficients", sol.F.coeffs[:6].real)
for D, phi, res, tail in sol.history:
    print(f"   D={D:4d} phi_norm={phi:.14f} residual={res:.1e} tail={tail:.1e}")

# The first-order condition says the Bergman projection of |F|^(p-1) sgn F
# recovers the kernel up to the factor 1/||phi||.
from bergex import recover_kernel

print("recovered kernel * phi_norm:", (recover_kernel(sol.F, 3.0, sol.quad, 3) * sol.phi_norm).coeffs)
