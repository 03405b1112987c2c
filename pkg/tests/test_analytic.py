import numpy as np
import pytest
from hypothesis import given, strategies as st

from bergex.analytic import TaylorPolynomial, derivative, evaluate, k_transform, partial_sum, random_polynomial

from conftest import complex_coeff, polynomials

P = TaylorPolynomial


def test_canonical_trim():
    f = P([1, 2, 0, 0])
    assert f.degree == 1
    assert P([0, 0]).degree == 0 and P([0, 0]).is_zero()
    assert P([]).is_zero()


def test_eval_examples():
    assert evaluate(P([1, 1]), 0) == 1
    assert abs(evaluate(P([0, 0, 1]), 1j) - (-1)) < 1e-15


def test_eval_matches_naive_sum(rng):
    for _ in range(20):
        f = random_polynomial(rng, 8)
        z = np.exp(1j * rng.uniform(0, 2 * np.pi))
        naive = sum(complex(c) * z**n for n, c in enumerate(f.coeffs))
        assert abs(f(z) - naive) < 1e-14


def test_eval_vectorized():
    f = P([1, 2, 3])
    z = np.array([0, 1, -1])
    np.testing.assert_allclose(f(z), [1, 6, 2])


def test_value_at_origin():
    f = P([3 - 1j, 2, 5])
    assert f(0) == 3 - 1j


def test_derivative_examples():
    assert derivative(P([1])) == P([0])
    assert derivative(P([0, 0, 0, 1])) == P([0, 0, 3])
    assert derivative(P([2, 1j, 1])) == P([1j, 2])


def test_partial_sum_examples():
    assert partial_sum(P([1, 1, 1]), 1) == P([1, 1])
    assert partial_sum(P.monomial(5), 3).is_zero()
    f = P([1, 2, 3])
    assert partial_sum(f, 7) == f
    with pytest.raises(ValueError):
        partial_sum(f, -1)


def test_k_transform_examples():
    assert k_transform(P([1])).K == P([1])
    assert k_transform(P([0, 1])).K == P([0, 0.5])


def test_k_transform_inverse_random(rng):
    for _ in range(10):
        k = random_polynomial(rng, 6)
        K = k_transform(k).K
        back = derivative(K.shift(1))
        assert np.max(np.abs(back.padded(7) - k.padded(7))) < 1e-15


@given(polynomials(), st.integers(min_value=1, max_value=10))
def test_derivative_commutes_with_partial_sum(f, n):
    assert derivative(partial_sum(f, n)) == partial_sum(derivative(f), n - 1)


@given(polynomials(), polynomials(), complex_coeff, complex_coeff)
def test_k_transform_linear(k, l, a, b):
    lhs = k_transform(a * k + b * l).K
    rhs = a * k_transform(k).K + b * k_transform(l).K
    assert lhs.allclose(rhs, atol=1e-12)


@given(polynomials())
def test_zK_derivative_is_k(k):
    K = k_transform(k).K
    back = derivative(K.shift(1))
    m = max(back.coeffs.size, k.coeffs.size)
    assert np.allclose(back.padded(m), k.padded(m), rtol=1e-15, atol=0)


def test_arithmetic_and_rotation():
    f = P([1, 1])
    assert f * f == P([1, 2, 1])
    assert (f - f).is_zero()
    g = f.rotate(np.pi / 2)
    assert abs(g(1) - f(1j)) < 1e-15
