from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import strategies as st

from asympoly import Polynomial, RationalFunction

F = Fraction

# reference functions, coefficients lowest degree first
CUBIC_LINEAR = ((7, 0, 0, 8), (-4, 1))  # (8x^3+7)/(x-4)
OBLIQUE = ((9, 3, 13, 5), (7, 5, 4))  # (5x^3+13x^2+3x+9)/(4x^2+5x+7)
CURVILINEAR = ((-9, 3, 0, -2, 1), (-5, 0, 2))  # (x^4-2x^3+3x-9)/(2x^2-5)


@pytest.fixture
def cubic_linear():
    return RationalFunction.from_coeffs(*CUBIC_LINEAR)


@pytest.fixture
def oblique():
    return RationalFunction.from_coeffs(*OBLIQUE)


@pytest.fixture
def curvilinear():
    return RationalFunction.from_coeffs(*CURVILINEAR)


def leibniz_det(rows):
    """Brute-force determinant over all permutations."""
    n = len(rows)
    total = F(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = F(1)
        for i, j in enumerate(perm):
            term *= rows[i][j]
            if not term:
                break
        total += -term if inversions % 2 else term
    return total


coeff_ints = st.integers(min_value=-99, max_value=99)
nonzero_ints = coeff_ints.filter(bool)


@st.composite
def polynomials(draw, max_degree=12, rational=False):
    deg = draw(st.integers(min_value=-1, max_value=max_degree))
    if deg < 0:
        return Polynomial.zero()
    if rational:
        coeff = st.fractions(min_value=-99, max_value=99, max_denominator=50)
        lead = coeff.filter(bool)
    else:
        coeff, lead = coeff_ints, nonzero_ints
    body = draw(st.lists(coeff, min_size=deg, max_size=deg))
    return Polynomial(tuple(body) + (draw(lead),))


@st.composite
def rational_functions(draw, max_degree=12, allow_proper=False):
    n = draw(st.integers(min_value=0, max_value=max_degree))
    m = draw(st.integers(min_value=0, max_value=max_degree if allow_proper else n))
    num = draw(st.lists(coeff_ints, min_size=n, max_size=n)) + [draw(nonzero_ints)]
    den = draw(st.lists(coeff_ints, min_size=m, max_size=m)) + [draw(nonzero_ints)]
    return RationalFunction.from_coeffs(num, den)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_criterion():
    def record(name: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
