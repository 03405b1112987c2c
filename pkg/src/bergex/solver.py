"""Extremal problem in A^p for polynomial kernels.

The constrained problem ``max Re phi(f)`` over the unit sphere of ``A^p`` is
replaced by the unconstrained concave surrogate

    J(g) = Re phi(g) - (1/p) ||g||_{A^p}^p

over polynomials of a working degree ``D``. Its maximizer satisfies
``g = ||phi||^{1/(p-1)} F``, so both the extremal function ``F`` and the
functional norm are read off from ``g``. ``J`` is maximized with a damped
Newton iteration on the real and imaginary parts of the coefficients; for
``p < 2`` the modulus is smoothed as ``|g|^2 + eps`` and ``eps`` is driven to
zero by continuation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from .analytic import TaylorPolynomial
from .projections import bergman_project, extremal_density
from .quadrature import (
    DiscQuadrature,
    FunctionalPhi,
    bergman_norm,
    conjugate_exponent,
    conjugate_moments,
    pairing,
    sample_disc,
)

log = logging.getLogger(__name__)

DEFAULT_EPSILONS = tuple(10.0 ** -e for e in range(2, 15, 2))
ARMIJO = 1e-4
# For p < 2 the integrand |g|^(p-2) g is singular at interior zeros of g and
# the radial rule converges only algebraically; this floor keeps the
# discretization error of the optimality condition near 1e-8.
SINGULAR_RADIAL_FLOOR = 256


def _working_quadrature(p: float, D: int, radial: int | None) -> DiscQuadrature:
    if radial is None and p < 2:
        radial = max(SINGULAR_RADIAL_FLOOR, D // 2 + 8)
    return DiscQuadrature.for_degree(D, radial)


class ZeroKernelError(ValueError):
    """The kernel is identically zero, so the functional vanishes."""

    def __init__(self, msg: str = "kernel is identically zero"):
        super().__init__(msg)


class NonConvergence(RuntimeError):
    """Residual target not met; ``solution`` holds the best iterate with diagnostics."""

    def __init__(self, msg: str, solution: "ExtremalSolution"):
        super().__init__(msg)
        self.solution = solution


@dataclass(frozen=True)
class ExtremalProblem:
    p: float
    kernel: TaylorPolynomial

    def __post_init__(self):
        if not 1.0 < self.p < np.inf:
            raise ValueError(f"p must lie in (1, inf), got {self.p}")
        if not isinstance(self.kernel, TaylorPolynomial):
            object.__setattr__(self, "kernel", TaylorPolynomial(self.kernel))
        if self.kernel.is_zero():
            raise ZeroKernelError()

    @property
    def q(self) -> float:
        return conjugate_exponent(self.p)

    @property
    def phi(self) -> FunctionalPhi:
        return FunctionalPhi(self.kernel, self.p)


@dataclass
class SolverOptions:
    degree: int | str = "auto"
    tol: float = 1e-9
    max_iterations: int = 100
    epsilon_schedule: Sequence[float] = DEFAULT_EPSILONS
    max_degree: int = 2048
    radial: int | None = None

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.degree != "auto" and (not isinstance(self.degree, (int, np.integer)) or self.degree < 0):
            raise ValueError("degree must be a nonnegative integer or 'auto'")


@dataclass(frozen=True)
class ExtremalSolution:
    F: TaylorPolynomial
    phi_norm: float
    residual: float
    degree: int
    iterations: int
    epsilon_final: float
    surrogate_norm: float = float("nan")
    quad: DiscQuadrature | None = None
    history: tuple = field(default=(), repr=False)

    @property
    def coefficients(self) -> np.ndarray:
        return self.F.padded(self.degree + 1)


def optimality_residual(
    F: TaylorPolynomial,
    prob: ExtremalProblem,
    phi_norm: float,
    probe_degree: int,
    quad: DiscQuadrature | None = None,
) -> float:
    """Largest defect of ``integral h |F|^{p-1} conj(sgn F) dsigma = phi(h)/||phi||`` over ``h = z^j``, ``j <= probe_degree``."""
    if quad is None:
        quad = DiscQuadrature.for_degree(max(F.degree, probe_degree))
    mom = conjugate_moments(extremal_density(F, prob.p, quad), quad, probe_degree + 1)
    target = prob.kernel.padded(probe_degree + 1) / np.arange(1, probe_degree + 2) / phi_norm
    return float(np.max(np.abs(mom - target)))


def recover_kernel(F: TaylorPolynomial, p: float, quad: DiscQuadrature | None = None, out_degree: int | None = None) -> TaylorPolynomial:
    """Bergman projection of ``|F|^{p-1} sgn F``; equals ``k / ||phi||`` when ``F`` is extremal for ``k``."""
    if out_degree is None:
        out_degree = F.degree
    if quad is None:
        quad = DiscQuadrature.for_degree(max(F.degree, out_degree))
    return bergman_project(extremal_density(F, p, quad), quad, out_degree)


def p2_closed_form(k: TaylorPolynomial, quad: DiscQuadrature | None = None) -> ExtremalSolution:
    """For ``p = 2`` the extremal function is ``k / ||k||_{A^2}`` and ``||phi|| = ||k||_{A^2}``."""
    prob = ExtremalProblem(2.0, k)
    nk = bergman_norm(k, 2)
    F = k / nk
    D = k.degree
    if quad is None:
        quad = DiscQuadrature.for_degree(2 * D + 1)
    res = optimality_residual(F, prob, nk, 2 * D, quad)
    return ExtremalSolution(F, nk, res, D, 0, 0.0, nk, quad)


class _Surrogate:
    """Objective, gradient and Hessian of ``J`` on a fixed grid for degree ``D``."""

    def __init__(self, k: TaylorPolynomial, p: float, D: int, quad: DiscQuadrature):
        self.p = p
        self.n = n = D + 1
        self.quad = quad
        self.rhs = k.padded(n) / np.arange(1, n + 1)
        r = quad.radial_nodes
        self.w = quad.radial_weights
        idx = np.arange(n)
        self.rpow = r[:, None] ** idx[None, :]
        self.rpow2 = r[:, None] ** (2 * idx)[None, :]
        self.rpow_hankel = r[:, None] ** np.arange(2 * n - 1)[None, :]
        self.J_idx, self.L_idx = np.meshgrid(idx, idx, indexing="ij")

    def samples(self, a: np.ndarray) -> np.ndarray:
        M = self.quad.M
        buf = np.zeros((self.rpow.shape[0], M), dtype=complex)
        buf[:, : self.n] = self.rpow * a[None, :]
        return np.fft.ifft(buf, axis=1) * M

    def value(self, a: np.ndarray, eps: float, g: np.ndarray | None = None) -> float:
        if g is None:
            g = self.samples(a)
        u = np.abs(g) ** 2 + eps
        integral = np.dot(self.w, np.mean(u ** (self.p / 2), axis=1))
        return float(np.real(np.vdot(self.rhs, a)) - integral / self.p)

    def _moments(self, vals: np.ndarray, count: int, pow_table: np.ndarray) -> np.ndarray:
        spec = np.fft.fft(vals, axis=1)[:, :count] / self.quad.M
        return self.w @ (pow_table[:, :count] * spec)

    def gradient(self, a: np.ndarray, eps: float, g: np.ndarray | None = None) -> np.ndarray:
        """Wirtinger derivative ``dPhi/d conj(a) - rhs/2``, the negative ascent direction."""
        if g is None:
            g = self.samples(a)
        if eps == 0.0:
            from .projections import signed_power

            wg = signed_power(g, self.p - 1.0)
        else:
            wg = (np.abs(g) ** 2 + eps) ** (self.p / 2 - 1) * g
        return 0.5 * (self._moments(wg, self.n, self.rpow) - self.rhs)

    def hessian(self, g: np.ndarray, eps: float) -> tuple[np.ndarray, np.ndarray]:
        """Blocks ``A = d2Phi/da dconj(a)`` (Hermitian) and ``B = d2Phi/dconj(a)^2`` (symmetric)."""
        p, n, M = self.p, self.n, self.quad.M
        mod2 = np.abs(g) ** 2
        u = np.maximum(mod2 + eps, 1e-300)
        up = u ** (p / 2 - 2)
        fa = up * (u + (p / 2 - 1) * mod2)
        fb = (p / 2 - 1) * up * g * g
        FA = np.fft.fft(fa, axis=1) / M
        FB = np.fft.fft(fb, axis=1) / M
        C = self.w[:, None] * FA[:, :n] * self.rpow
        E = C.T @ self.rpow2  # E[d, l] = sum_r w_r FA_r[d] r^{d + 2l}
        d = self.J_idx - self.L_idx
        lower = d >= 0
        A = np.zeros((n, n), dtype=complex)
        A[lower] = E[d[lower], self.L_idx[lower]]
        A = np.where(lower, A, np.conj(A.T))
        h = self.w @ (FB[:, : 2 * n - 1] * self.rpow_hankel)
        B = h[self.J_idx + self.L_idx]
        return 0.5 * A, 0.5 * B


def _newton(obj: _Surrogate, a: np.ndarray, eps: float, max_iter: int) -> tuple[np.ndarray, int, float]:
    """Maximize ``J`` at fixed ``eps``; returns coefficients, iterations, final gradient size."""
    n = obj.n
    gscale = max(1.0, float(np.max(np.abs(obj.rhs))))
    gtol = 1e-14 * gscale
    its = 0
    g = obj.samples(a)
    G = obj.gradient(a, eps, g)
    gnorm = float(np.max(np.abs(G)))
    for _ in range(max_iter):
        if gnorm <= gtol:
            break
        A, B = obj.hessian(g, eps)
        H = np.block([[A.real + B.real, -A.imag + B.imag], [A.imag + B.imag, A.real - B.real]])
        rhs = -np.concatenate([G.real, G.imag])
        try:
            step = cho_solve(cho_factor(H), rhs)
        except (LinAlgError, ValueError):
            log.debug("curvature breakdown at eps=%g; gradient step", eps)
            step = rhs / max(1.0, float(np.max(np.abs(np.diag(H)))))
        d = step[:n] + 1j * step[n:]
        # directional derivative of J along d
        slope = -2.0 * float(np.real(np.vdot(G, d)))
        if slope <= 0:
            d = -G
            slope = 2.0 * float(np.real(np.vdot(G, G)))
        J0 = obj.value(a, eps, g)
        # below this predicted gain J cannot resolve ascent in double precision
        flat = slope < 1e-12 * max(1.0, abs(J0))
        t = 1.0
        its += 1
        while True:
            trial = a + t * d
            gt = obj.samples(trial)
            Jt = obj.value(trial, eps, gt)
            if Jt >= J0 + ARMIJO * t * slope:
                Gt = obj.gradient(trial, eps, gt)
                break
            if flat:
                Gt = obj.gradient(trial, eps, gt)
                if np.max(np.abs(Gt)) < gnorm:
                    break
            if t < 1e-10:
                Gt = None
                break
            t *= 0.5
        if Gt is None:
            break
        a, g, G = trial, gt, Gt
        new_norm = float(np.max(np.abs(G)))
        if flat and new_norm >= 0.5 * gnorm:
            gnorm = min(gnorm, new_norm)
            break
        gnorm = new_norm
    return a, its, gnorm


def _ray_start(obj: _Surrogate, k: TaylorPolynomial) -> np.ndarray:
    """Exact maximizer of ``J`` along the ray through ``k``."""
    a = k.padded(obj.n)
    g = obj.samples(a)
    nkp = float(np.dot(obj.w, np.mean(np.abs(g) ** obj.p, axis=1)))
    phik = float(np.real(np.vdot(obj.rhs, a)))
    return (phik / nkp) ** (1.0 / (obj.p - 1.0)) * a


def _solve_fixed(prob: ExtremalProblem, D: int, quad: DiscQuadrature, opts: SolverOptions, start: np.ndarray | None):
    p = prob.p
    obj = _Surrogate(prob.kernel, p, D, quad)
    if start is None:
        a = _ray_start(obj, prob.kernel)
        schedule = list(opts.epsilon_schedule) if p < 2 else []
    else:
        a = np.zeros(obj.n, dtype=complex)
        m = min(obj.n, start.size)
        a[:m] = start[:m]
        schedule = []
    schedule.append(0.0)
    total = 0
    eps_final = schedule[0]
    for eps in schedule:
        a, its, _ = _newton(obj, a, eps, opts.max_iterations)
        total += its
        eps_final = eps
    g = obj.samples(a)
    gnorm = float(np.dot(obj.w, np.mean(np.abs(g) ** p, axis=1))) ** (1.0 / p)
    F = TaylorPolynomial(a / gnorm)
    phi_norm = gnorm ** (p - 1.0)
    res = optimality_residual(F, prob, phi_norm, D + prob.kernel.degree, quad)
    return a, F, phi_norm, gnorm, res, total, eps_final


def solve(prob: ExtremalProblem, opts: SolverOptions | None = None) -> ExtremalSolution:
    """Extremal function and ``||phi||`` for a polynomial kernel.

    Raises ``NonConvergence`` (carrying the best solution) when the
    first-order residual stays above ``opts.tol``.
    """
    if opts is None:
        opts = SolverOptions()
    N = prob.kernel.degree
    auto = opts.degree == "auto"
    D = 4 * N + 8 if auto else int(opts.degree)
    D = max(D, N)
    history = []
    start = None
    prev_phi = None
    total_its = 0
    while True:
        quad = _working_quadrature(prob.p, D, opts.radial)
        a, F, phi_norm, gnorm, res, its, eps_final = _solve_fixed(prob, D, quad, opts, start)
        total_its += its
        tail = float(np.max(np.abs(F.padded(D + 1)[(3 * D) // 4 :])))
        history.append((D, phi_norm, res, tail))
        log.debug("D=%d phi=%.15g residual=%.2e tail=%.2e its=%d", D, phi_norm, res, tail, its)
        if not auto:
            break
        settled = prev_phi is not None and abs(phi_norm - prev_phi) < 1e-10
        if tail < 1e-10 and (settled or res <= opts.tol):
            break
        if 2 * D > opts.max_degree:
            break
        prev_phi = phi_norm
        start = a
        D *= 2
    sol = ExtremalSolution(F, phi_norm, res, D, total_its, eps_final, gnorm, quad, tuple(history))
    if not res <= opts.tol:
        raise NonConvergence(
            f"first-order residual {res:.2e} above tol {opts.tol:.1e} at degree {D}", sol
        )
    return sol


def solve_lenient(prob: ExtremalProblem, opts: SolverOptions | None = None) -> ExtremalSolution:
    """Like ``solve`` but returns the best iterate instead of raising ``NonConvergence``."""
    try:
        return solve(prob, opts)
    except NonConvergence as exc:
        return exc.solution
