from fractions import Fraction

import pytest
from hypothesis import strategies as st

from journal_axioms.core import Problem
from journal_axioms.instances import example_3_1, example_4_1, example_4_1_merged


@pytest.fixture
def ex31():
    return example_3_1()


@pytest.fixture
def ex41():
    return example_4_1()


@pytest.fixture
def ex41_merged():
    return example_4_1_merged()


@st.composite
def half_grid_problems(draw, min_n=1, max_n=4, max_units=4, loopless=False):
    """Problems with entries on the half-integer grid."""
    n = draw(st.integers(min_n, max_n))
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j and loopless:
                row.append(Fraction(0))
            else:
                row.append(Fraction(draw(st.integers(0, max_units)), 2))
        rows.append(row)
    return Problem.from_rows(rows)


@st.composite
def decomposable_problems(draw, max_n=4, max_matches=3):
    """Half-grid problems whose off-diagonal match counts are integers."""
    n = draw(st.integers(1, max_n))
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = Fraction(draw(st.integers(0, 2)), 2)
        for j in range(i + 1, n):
            m = draw(st.integers(0, max_matches))
            a = Fraction(draw(st.integers(0, 2 * m)), 2)
            rows[i][j], rows[j][i] = a, m - a
    return Problem.from_rows(rows)


@st.composite
def tournament_problems(draw, min_n=1, max_n=4):
    """Unweighted, loopless, extremal problems: each pair absent, won, lost or tied."""
    n = draw(st.integers(min_n, max_n))
    states = [(0, 0), (1, 0), (0, 1), (Fraction(1, 2), Fraction(1, 2))]
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j], rows[j][i] = draw(st.sampled_from(states))
    return Problem.from_rows(rows)
