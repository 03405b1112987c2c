"""Bergman and Szego projections, and boundary Fourier analysis of ``|F|^p``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .analytic import TaylorPolynomial
from .quadrature import CircleGrid, DiscQuadrature, conjugate_moments, sample_circle, sample_disc

# below this modulus sgn F is taken as 0
SGN_FLOOR = 1e-14


@dataclass(frozen=True)
class BoundaryFourier:
    """Fourier coefficients ``b_m = (1/2pi) integral u(e^{i theta}) e^{-i m theta} d theta``.

    Only ``|m| <= (M - 1) // 2`` is kept; higher modes alias.
    """

    coefficients: np.ndarray  # index m + bandwidth
    grid: CircleGrid

    @property
    def bandwidth(self) -> int:
        return (self.coefficients.size - 1) // 2

    def __getitem__(self, m: int) -> complex:
        L = self.bandwidth
        if abs(m) > L:
            raise IndexError(f"mode {m} beyond bandwidth {L}")
        return complex(self.coefficients[m + L])

    @property
    def modes(self) -> np.ndarray:
        L = self.bandwidth
        return np.arange(-L, L + 1)

    @classmethod
    def from_samples(cls, values: np.ndarray, grid: CircleGrid | None = None) -> "BoundaryFourier":
        values = np.asarray(values)
        if grid is None:
            grid = CircleGrid(values.size)
        if values.shape != (grid.M,):
            raise ValueError("sample count does not match grid")
        spec = np.fft.fft(values) / grid.M
        L = (grid.M - 1) // 2
        idx = np.arange(-L, L + 1) % grid.M
        c = spec[idx]
        c.setflags(write=False)
        return cls(c, grid)

    @classmethod
    def from_modes(cls, modes: dict[int, complex], grid: CircleGrid) -> "BoundaryFourier":
        L = (grid.M - 1) // 2
        c = np.zeros(2 * L + 1, dtype=complex)
        for m, v in modes.items():
            if abs(m) > L:
                raise ValueError(f"mode {m} beyond bandwidth {L}")
            c[m + L] = v
        c.setflags(write=False)
        return cls(c, grid)

    def hermitian_defect(self) -> float:
        """``max_m |b_{-m} - conj(b_m)|``; zero for real boundary data."""
        c = self.coefficients
        return float(np.max(np.abs(c[::-1] - np.conj(c))))


def boundary_fourier(f: TaylorPolynomial, grid: CircleGrid) -> BoundaryFourier:
    """Fourier data of the boundary values of an analytic polynomial."""
    return BoundaryFourier.from_samples(sample_circle(f, grid.M), grid)


def szego_project(bf: BoundaryFourier) -> TaylorPolynomial:
    """Keep the nonnegative modes as Taylor coefficients."""
    L = bf.bandwidth
    return TaylorPolynomial(bf.coefficients[L:])


def bergman_project(samples: np.ndarray, quad: DiscQuadrature, out_degree: int) -> TaylorPolynomial:
    """Orthogonal projection onto analytic polynomials of degree ``<= out_degree``.

    Uses the reproducing-kernel moment formula
    ``(P u)_n = (n+1) * integral u(w) conj(w)^n dsigma(w)``.
    """
    samples = np.asarray(samples)
    if samples.shape != (quad.radial_count, quad.M):
        raise ValueError("samples do not match the quadrature grid")
    if out_degree > quad.max_degree:
        raise ValueError(f"out_degree {out_degree} too large for grid (max {quad.max_degree})")
    n = out_degree + 1
    mom = conjugate_moments(samples, quad, n)
    return TaylorPolynomial(mom * np.arange(1, n + 1))


def signed_power(values: np.ndarray, s: float) -> np.ndarray:
    """``|v|^s * sgn(v)`` with ``sgn v = 0`` where ``|v| < SGN_FLOOR``."""
    mod = np.abs(values)
    safe = np.where(mod < SGN_FLOOR, 1.0, mod)
    return np.where(mod < SGN_FLOOR, 0.0, safe ** (s - 1.0) * values)


def extremal_density(F: TaylorPolynomial, p: float, quad: DiscQuadrature) -> np.ndarray:
    """Grid samples of ``|F|^{p-1} sgn F``."""
    return signed_power(sample_disc(F, quad), p - 1.0)


def boundary_fourier_of_modulus_power(F: TaylorPolynomial, p: float, grid: CircleGrid | None = None) -> BoundaryFourier:
    """Fourier coefficients of ``|F(e^{i theta})|^p``."""
    if grid is None:
        grid = CircleGrid.for_degree(F.degree)
    vals = np.abs(sample_circle(F, grid.M)) ** p
    return BoundaryFourier.from_samples(vals.astype(complex), grid)
