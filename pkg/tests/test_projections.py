import numpy as np
import pytest

from bergex.analytic import TaylorPolynomial, random_polynomial
from bergex.projections import (
    BoundaryFourier,
    bergman_project,
    boundary_fourier,
    boundary_fourier_of_modulus_power,
    extremal_density,
    szego_project,
)
from bergex.quadrature import CircleGrid, DiscQuadrature, hardy_norm, sample_disc

P = TaylorPolynomial


def test_szego_definition():
    bf = BoundaryFourier.from_modes({-1: 1, 0: 2, 1: 3}, CircleGrid(16))
    assert szego_project(bf) == P([2, 3])


def test_szego_fixes_polynomials(rng):
    grid = CircleGrid(64)
    for deg in (0, 5, 31):
        f = random_polynomial(rng, deg)
        assert szego_project(boundary_fourier(f, grid)).allclose(f, atol=1e-13)


def test_szego_contracts_l2(rng):
    grid = CircleGrid(128)
    th = grid.theta
    for _ in range(10):
        a = rng.normal(size=9) + 1j * rng.normal(size=9)
        # real trigonometric polynomial of degree 8
        h = np.real(sum(a[m] * np.exp(1j * m * th) for m in range(9)))
        Sh = szego_project(BoundaryFourier.from_samples(h.astype(complex), grid))
        assert hardy_norm(Sh, 2, grid) <= np.sqrt(np.mean(h**2)) + 1e-12


def test_bergman_project_examples():
    q = DiscQuadrature(32, 64)
    z = q.points
    assert bergman_project(z**3, q, 10).allclose(P([0, 0, 0, 1]), atol=1e-13)
    assert bergman_project(np.conj(z), q, 10).allclose(P([0]), atol=1e-13)
    F = P([0, np.sqrt(2)])
    got = bergman_project(extremal_density(F, 2.0, q), q, 10)
    assert got.allclose(F, atol=1e-13)


def test_bergman_project_round_trip(rng):
    q = DiscQuadrature.for_degree(12)
    for _ in range(10):
        f = random_polynomial(rng, int(rng.integers(0, 13)))
        got = bergman_project(sample_disc(f, q), q, 12)
        assert np.max(np.abs(got.padded(13) - f.padded(13))) < 1e-11


def test_bergman_project_matches_riemann_sum():
    # independent route: direct moment sums without FFT
    q = DiscQuadrature(20, 41)
    z = q.points
    u = np.abs(z) ** 1.7 * np.exp(1j * np.angle(z + 0.3))
    got = bergman_project(u, q, 5)
    w = q.radial_weights[:, None] / q.M
    for n in range(6):
        direct = (n + 1) * np.sum(w * u * np.conj(z) ** n)
        assert abs(got.coefficient(n) - direct) < 1e-14


def test_bergman_project_degree_limit():
    q = DiscQuadrature(8, 17)
    with pytest.raises(ValueError):
        bergman_project(np.zeros((8, 17)), q, 9)


def test_modulus_power_examples():
    grid = CircleGrid(64)
    b = boundary_fourier_of_modulus_power(P([1]), 3.3, grid)
    assert abs(b[0] - 1) < 1e-14
    assert np.max(np.abs(np.delete(b.coefficients, b.bandwidth))) < 1e-14
    b = boundary_fourier_of_modulus_power(P([0, np.sqrt(2)]), 2, grid)
    assert abs(b[0] - 2) < 1e-14 and abs(b[3]) < 1e-14
    b = boundary_fourier_of_modulus_power(P([1, 1]), 2, grid)
    assert abs(b[0] - 2) < 1e-14 and abs(b[1] - 1) < 1e-14 and abs(b[-1] - 1) < 1e-14
    assert abs(b[2]) < 1e-14


def test_modulus_power_zeroth_mode_is_hardy_norm(rng):
    grid = CircleGrid(1024)
    for p in (1.3, 2.5, 4.0):
        F = random_polynomial(rng, 7)
        b = boundary_fourier_of_modulus_power(F, p, grid)
        assert abs(b[0] - hardy_norm(F, p, grid) ** p) < 1e-10
        assert b.hermitian_defect() < 1e-12


def test_bandwidth_limit():
    b = boundary_fourier(P([1]), CircleGrid(9))
    assert b.bandwidth == 4
    with pytest.raises(IndexError):
        b[5]
