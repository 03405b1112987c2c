"""Disc and circle quadrature: Bergman and Hardy norms, integral means, and the pairing phi."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi

from .analytic import TaylorPolynomial

DEFAULT_RADIAL = 64
DEFAULT_ANGULAR = 256
DEFAULT_CIRCLE = 1024


@lru_cache(maxsize=64)
def _radial_rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    # Gauss-Jacobi (alpha=0, beta=1) on [-1, 1] mapped to r in [0, 1]; weight 2r dr
    x, w = roots_jacobi(n, 0.0, 1.0)
    r = (x + 1.0) / 2.0
    w = w / 2.0
    r.setflags(write=False)
    w.setflags(write=False)
    return r, w


@dataclass(frozen=True)
class CircleGrid:
    """Uniform grid ``theta_t = 2 pi t / M`` on the unit circle."""

    M: int

    def __post_init__(self):
        if self.M < 1:
            raise ValueError("angular count must be positive")

    @classmethod
    def for_degree(cls, degree: int, minimum: int = DEFAULT_CIRCLE) -> "CircleGrid":
        return cls(max(minimum, 4 * degree + 1))

    @property
    def theta(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.M) / self.M

    @property
    def points(self) -> np.ndarray:
        return np.exp(1j * self.theta)

    def mean(self, values: np.ndarray):
        """Trapezoid average ``(1/2pi) * integral`` over the last axis."""
        return np.mean(values, axis=-1)

    def sample(self, f: TaylorPolynomial, r: float = 1.0) -> np.ndarray:
        return sample_circle(f, self.M, r)


@dataclass(frozen=True)
class DiscQuadrature:
    """Product rule for normalized area measure: radial Gauss-Jacobi nodes times a uniform angle grid.

    ``integral f dsigma ~= sum_j w_j * mean_t f(r_j e^{i theta_t})``.
    """

    radial_count: int = DEFAULT_RADIAL
    M: int = DEFAULT_ANGULAR

    def __post_init__(self):
        if self.radial_count < 1 or self.M < 1:
            raise ValueError("node counts must be positive")

    @classmethod
    def for_degree(cls, degree: int, radial: int | None = None) -> "DiscQuadrature":
        """Default rule for polynomials of working degree ``degree``.

        Radial nodes grow as ``D/2`` past the default; the angular count
        keeps ``M >= 4 D + 1``.
        """
        if radial is None:
            radial = max(DEFAULT_RADIAL, degree // 2 + 8)
        return cls(radial, max(DEFAULT_ANGULAR, 4 * degree + 1))

    @property
    def radial_nodes(self) -> np.ndarray:
        return _radial_rule(self.radial_count)[0]

    @property
    def radial_weights(self) -> np.ndarray:
        return _radial_rule(self.radial_count)[1]

    @property
    def theta(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.M) / self.M

    @property
    def points(self) -> np.ndarray:
        """Grid points, shape ``(radial_count, M)``."""
        return self.radial_nodes[:, None] * np.exp(1j * self.theta)[None, :]

    @property
    def max_degree(self) -> int:
        """Largest degree whose coefficients the angular grid resolves without aliasing."""
        return (self.M - 1) // 2

    def sample(self, f: TaylorPolynomial) -> np.ndarray:
        return sample_disc(f, self)

    def doubled(self) -> "DiscQuadrature":
        return DiscQuadrature(2 * self.radial_count, 2 * self.M)


def sample_circle(f: TaylorPolynomial, M: int, r: float = 1.0) -> np.ndarray:
    """Values ``f(r e^{2 pi i t / M})`` for ``t = 0..M-1`` via one inverse FFT."""
    c = f.coeffs
    n = np.arange(c.size)
    scaled = c * (r ** n) if r != 1.0 else c
    if c.size <= M:
        buf = np.zeros(M, dtype=complex)
        buf[: c.size] = scaled
    else:
        # fold aliases explicitly; values at the nodes stay exact
        buf = np.zeros(M, dtype=complex)
        np.add.at(buf, n % M, scaled)
    return np.fft.ifft(buf) * M


def sample_disc(f: TaylorPolynomial, quad: DiscQuadrature) -> np.ndarray:
    """Values of ``f`` on the quadrature grid, shape ``(radial_count, M)``."""
    c = f.coeffs
    r = quad.radial_nodes
    n = np.arange(c.size)
    M = quad.M
    buf = np.zeros((r.size, M), dtype=complex)
    scaled = c[None, :] * r[:, None] ** n[None, :]
    if c.size <= M:
        buf[:, : c.size] = scaled
    else:
        for j in range(c.size):
            buf[:, j % M] += scaled[:, j]
    return np.fft.ifft(buf, axis=1) * M


def disc_integral(samples: np.ndarray, quad: DiscQuadrature) -> complex:
    """``sum_j w_j * (1/M) sum_t samples[j, t]``."""
    samples = np.asarray(samples)
    if samples.shape != (quad.radial_count, quad.M):
        raise ValueError(
            f"samples have shape {samples.shape}, grid is {(quad.radial_count, quad.M)}"
        )
    return complex(np.dot(quad.radial_weights, samples.mean(axis=1)))


def conjugate_moments(samples: np.ndarray, quad: DiscQuadrature, count: int) -> np.ndarray:
    """``m_n = integral u(w) conj(w)^n dsigma(w)`` for ``n = 0..count-1``.

    Angular DFT per radius followed by the radial rule.
    """
    if count - 1 > quad.max_degree:
        raise ValueError(f"moment degree {count - 1} exceeds grid limit {quad.max_degree}")
    r = quad.radial_nodes
    spec = np.fft.fft(samples, axis=1)[:, :count] / quad.M
    return (quad.radial_weights[:, None] * r[:, None] ** np.arange(count)[None, :] * spec).sum(axis=0)


def bergman_norm(f: TaylorPolynomial, p: float, quad: DiscQuadrature | None = None) -> float:
    """``||f||_{A^p} = (integral |f|^p dsigma)^{1/p}``.

    ``p = 2`` is computed exactly from coefficients; ``p = inf`` is the
    circle maximum. Other exponents use the product quadrature.
    """
    if p == 2:
        c = f.coeffs
        return float(np.sqrt(np.sum(np.abs(c) ** 2 / np.arange(1, c.size + 1))))
    if np.isinf(p):
        return hardy_norm(f, np.inf)
    if not p > 0:
        raise ValueError("p must be positive")
    if quad is None:
        quad = DiscQuadrature.for_degree(f.degree)
    vals = np.abs(sample_disc(f, quad)) ** p
    total = disc_integral(vals, quad).real
    out = total ** (1.0 / p)
    if not np.isfinite(out):
        raise OverflowError("Bergman norm overflowed; coefficients or degree too large")
    return float(out)


def bergman_norm_quadrature(f: TaylorPolynomial, p: float, quad: DiscQuadrature | None = None) -> float:
    """Quadrature value of ``||f||_{A^p}`` with no coefficient shortcut (used for cross-checks)."""
    if quad is None:
        quad = DiscQuadrature.for_degree(f.degree)
    vals = np.abs(sample_disc(f, quad)) ** p
    return float(disc_integral(vals, quad).real ** (1.0 / p))


def integral_mean(f: TaylorPolynomial, p: float, r: float, grid: CircleGrid | None = None) -> float:
    """``M_p(f, r)``; ``p = inf`` gives the grid maximum of ``|f|`` on the circle of radius ``r``."""
    if not 0.0 <= r <= 1.0:
        raise ValueError("radius must lie in [0, 1]")
    if grid is None:
        grid = CircleGrid.for_degree(f.degree)
    if r == 0.0:
        return float(abs(f.coeffs[0]))
    vals = np.abs(sample_circle(f, grid.M, r))
    if np.isinf(p):
        return float(vals.max())
    return float(np.mean(vals ** p) ** (1.0 / p))


def hardy_norm(f: TaylorPolynomial, p: float, grid: CircleGrid | None = None) -> float:
    """``||f||_{H^p}``, which for a polynomial is the integral mean at ``r = 1``."""
    if not p > 0:
        raise ValueError("p must be positive")
    return integral_mean(f, p, 1.0, grid)


def conjugate_exponent(p: float) -> float:
    if np.isinf(p):
        return 1.0
    if p == 1:
        return np.inf
    return p / (p - 1.0)


@dataclass(frozen=True)
class FunctionalPhi:
    """``phi(f) = integral f conj(k) dsigma`` on ``A^p``."""

    kernel: TaylorPolynomial
    p: float

    def __post_init__(self):
        if not 1.0 < self.p < np.inf:
            raise ValueError("p must lie in (1, inf)")

    @property
    def q(self) -> float:
        return conjugate_exponent(self.p)

    def __call__(self, f: TaylorPolynomial) -> complex:
        return phi_apply(self, f)


def pairing(f: TaylorPolynomial, k: TaylorPolynomial) -> complex:
    """``integral f conj(k) dsigma`` from monomial orthogonality: ``sum c_n conj(k_n) / (n+1)``."""
    m = min(f.coeffs.size, k.coeffs.size)
    n = np.arange(1, m + 1)
    return complex(np.sum(f.coeffs[:m] * np.conj(k.coeffs[:m]) / n))


def phi_apply(phi: FunctionalPhi, f: TaylorPolynomial) -> complex:
    return pairing(f, phi.kernel)
