from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bruhatcap import ConsistencyError
from bruhatcap import linalg


def test_solve_columns_unique():
    cols = [linalg.vec([1, 0, 1]), linalg.vec([0, 1, 1])]
    sol = linalg.solve_columns(cols, linalg.vec([2, 3, 5]))
    assert sol == (Fraction(2), Fraction(3))


def test_solve_columns_inconsistent():
    cols = [linalg.vec([1, 0, 0])]
    with pytest.raises(ConsistencyError):
        linalg.solve_columns(cols, linalg.vec([1, 1, 0]))


def test_solve_columns_dependent():
    cols = [linalg.vec([1, 1]), linalg.vec([2, 2])]
    with pytest.raises(ConsistencyError):
        linalg.solve_columns(cols, linalg.vec([1, 1]))


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=4),
       st.lists(st.integers(-9, 9), min_size=2, max_size=4))
def test_solve_columns_round_trip(xs, ys):
    # build two independent columns in R^{n}, recombine, solve back
    n = max(len(xs), len(ys), 2)
    a = linalg.vec((xs + [1] + [0] * n)[:n])
    b = linalg.vec((ys + [0, 1] + [0] * n)[:n])
    # force independence: append distinct unit tails
    a = a[:-2] + (Fraction(1), Fraction(0))
    b = b[:-2] + (Fraction(0), Fraction(1))
    target = tuple(3 * x - 2 * y for x, y in zip(a, b))
    sol = linalg.solve_columns([a, b], target)
    assert sol == (Fraction(3), Fraction(-2))


def test_rank():
    assert linalg.rank([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]) == 1
    assert linalg.rank(linalg.identity(3)) == 3
    assert linalg.rank([[Fraction(0)] * 3] * 3) == 0


def test_reflection_matrix_involutive():
    alpha = linalg.vec([1, -2, 1])
    m = linalg.reflection_matrix(alpha)
    assert linalg.matmul(m, m) == linalg.identity(3)
    assert linalg.mat_vec(m, alpha) == linalg.neg(alpha)
    fixed = linalg.vec([1, 1, 1])
    assert linalg.mat_vec(m, fixed) == fixed
