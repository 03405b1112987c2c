"""Coefficient-level algebra for analytic polynomials on the unit disc."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np


def _trim(c: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(c != 0)
    if nz.size == 0:
        return np.zeros(1, dtype=complex)
    return c[: nz[-1] + 1]


class TaylorPolynomial:
    """Analytic polynomial ``sum_n c_n z^n`` stored densely from degree 0.

    Instances are immutable; trailing zero coefficients are trimmed exactly
    so that the degree is that of the last nonzero coefficient.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[complex] | np.ndarray):
        c = np.array(coeffs, dtype=complex).ravel()
        if c.size == 0:
            c = np.zeros(1, dtype=complex)
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        c = _trim(c)
        c.setflags(write=False)
        self._c = c

    @classmethod
    def monomial(cls, n: int, scale: complex = 1.0) -> "TaylorPolynomial":
        c = np.zeros(n + 1, dtype=complex)
        c[n] = scale
        return cls(c)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def degree(self) -> int:
        return self._c.size - 1

    def is_zero(self) -> bool:
        return self._c.size == 1 and self._c[0] == 0

    def coefficient(self, n: int) -> complex:
        return complex(self._c[n]) if 0 <= n < self._c.size else 0j

    def padded(self, length: int) -> np.ndarray:
        """Coefficient vector zero-padded (or cut) to ``length`` entries."""
        out = np.zeros(length, dtype=complex)
        m = min(length, self._c.size)
        out[:m] = self._c[:m]
        return out

    def __call__(self, z):
        return evaluate(self, z)

    def derivative(self) -> "TaylorPolynomial":
        return derivative(self)

    def partial_sum(self, n: int) -> "TaylorPolynomial":
        return partial_sum(self, n)

    def shift(self, k: int = 1) -> "TaylorPolynomial":
        """Multiply by ``z**k``."""
        if self.is_zero():
            return self
        return TaylorPolynomial(np.concatenate([np.zeros(k, dtype=complex), self._c]))

    def rotate(self, alpha: float) -> "TaylorPolynomial":
        """Return ``f(e^{i alpha} z)``."""
        n = np.arange(self._c.size)
        return TaylorPolynomial(self._c * np.exp(1j * alpha * n))

    def __add__(self, other):
        if not isinstance(other, TaylorPolynomial):
            other = TaylorPolynomial([other])
        m = max(self._c.size, other._c.size)
        return TaylorPolynomial(self.padded(m) + other.padded(m))

    __radd__ = __add__

    def __neg__(self):
        return TaylorPolynomial(-self._c)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TaylorPolynomial):
            return TaylorPolynomial(np.convolve(self._c, other._c))
        return TaylorPolynomial(self._c * complex(other))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return TaylorPolynomial(self._c / complex(scalar))

    def __eq__(self, other):
        if not isinstance(other, TaylorPolynomial):
            return NotImplemented
        return np.array_equal(self._c, other._c)

    def __hash__(self):
        return hash(self._c.tobytes())

    def allclose(self, other: "TaylorPolynomial", atol: float = 1e-12) -> bool:
        m = max(self._c.size, other._c.size)
        return bool(np.max(np.abs(self.padded(m) - other.padded(m))) <= atol)

    def __repr__(self):
        return f"TaylorPolynomial({np.array2string(self._c, precision=6)})"


def evaluate(f: TaylorPolynomial, z):
    """Horner evaluation of ``f`` at ``z`` (scalar or array)."""
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    for c in f.coeffs[::-1]:
        acc = acc * z + c
    return acc[()] if acc.ndim == 0 else acc


def derivative(f: TaylorPolynomial) -> TaylorPolynomial:
    c = f.coeffs
    if c.size == 1:
        return TaylorPolynomial([0])
    return TaylorPolynomial(c[1:] * np.arange(1, c.size))


def partial_sum(f: TaylorPolynomial, n: int) -> TaylorPolynomial:
    """Taylor polynomial ``S_n f`` keeping coefficients ``0..n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return TaylorPolynomial(f.coeffs[: n + 1])


@dataclass(frozen=True)
class KTransformResult:
    K: TaylorPolynomial


def k_transform(k: TaylorPolynomial) -> KTransformResult:
    """``K(z) = (1/z) * integral_0^z k``, so that ``(zK)' = k``."""
    c = k.coeffs
    return KTransformResult(TaylorPolynomial(c / np.arange(1, c.size + 1)))


def random_polynomial(rng: np.random.Generator, degree: int, box: float = 1.0) -> TaylorPolynomial:
    """Coefficients drawn uniformly from the square ``[-box, box]^2``; top coefficient nonzero."""
    c = rng.uniform(-box, box, degree + 1) + 1j * rng.uniform(-box, box, degree + 1)
    while c[-1] == 0:
        c[-1] = rng.uniform(-box, box) + 1j * rng.uniform(-box, box)
    return TaylorPolynomial(c)
