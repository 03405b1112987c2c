"""
Families of kernels: continuity and coefficient decay
=====================================================

Two experiments over sequences of kernels. In the first, the extremal
functions for ``k_n = 1 + z + z^2/n`` approach the one for ``1 + z``. In the
second, truncations of ``sum n^(-2) z^n`` have uniformly bounded extremal
functions.
"""

from bergex import TaylorPolynomial
from bergex.harness import continuity_experiment, decay_experiment

ns = [2**i for i in range(7)]
for p in (1.5, 3.0):
    reports = continuity_experiment(p, [TaylorPolynomial([1, 1, 1 / n]) for n in ns], TaylorPolynomial([1, 1]), labels=ns)
    dists = reports[-1].context["distances"]
    # the distance shrinks like 1/n, the size of the perturbation
    print(f"p={p}:", " ".join(f"n={n}:{d:.2e}" for n, d in zip(ns, dists)))
    print("     n * distance:", " ".join(f"{n * d:.3f}" for n, d in zip(ns, dists)))

for r in decay_experiment(3.0, 2.0, [4, 8, 16, 32]):
    print(r.line(), "sup |F| =", r.context.get("sup_norm", "-"))
