import numpy as np
import pytest
from hypothesis import strategies as st

from bergex.analytic import TaylorPolynomial

complex_coeff = st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False)


@st.composite
def polynomials(draw, max_degree=8):
    coeffs = draw(st.lists(complex_coeff, min_size=1, max_size=max_degree + 1))
    return TaylorPolynomial(coeffs)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


# Acceptance criteria register one verdict line each; the summary prints them
# after the run regardless of output capturing.
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
