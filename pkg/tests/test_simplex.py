from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bellcond.simplex import find_feasible_point

F = Fraction


def residual_ok(A, b, x):
    return all(v >= 0 for v in x) and all(
        sum((F(a) * v for a, v in zip(row, x)), F(0)) == rhs for row, rhs in zip(A, b)
    )


def test_simple_feasible_system():
    A = [[1, 1, 1], [1, -1, 0]]
    b = [F(1), F(1, 3)]
    x = find_feasible_point(A, b)
    assert x is not None and residual_ok(A, b, x)


def test_infeasible_system():
    # x1 + x2 = 1 and x1 + x2 = 2
    assert find_feasible_point([[1, 1], [1, 1]], [1, 2]) is None
    # x1 - x2 = -1 with x1 + x2 = 0 forces x2 = 1/2, x1 = -1/2
    assert find_feasible_point([[1, -1], [1, 1]], [-1, 0]) is None


def test_negative_rhs_rows_are_flipped():
    A = [[-1, -1]]
    x = find_feasible_point(A, [F(-3, 4)])
    assert residual_ok(A, [F(-3, 4)], x)


def test_redundant_rows():
    A = [[1, 1], [2, 2]]
    x = find_feasible_point(A, [1, 2])
    assert residual_ok(A, [1, 2], x)


def test_degenerate_cycling_prone_instance():
    # Beale-style degenerate system; Bland's rule must terminate
    A = [
        [F(1, 4), -8, -1, 9, 1, 0, 0],
        [F(1, 2), -12, F(-1, 2), 3, 0, 1, 0],
        [0, 0, 1, 0, 0, 0, 1],
    ]
    b = [0, 0, 1]
    x = find_feasible_point(A, b)
    assert residual_ok(A, b, x)


def brute_force_feasible(A, b, bound):
    import itertools

    n = len(A[0])
    for x in itertools.product(range(bound + 1), repeat=n):
        if all(sum(a * v for a, v in zip(row, x)) == rhs for row, rhs in zip(A, b)):
            return True
    return False


@given(
    st.lists(st.lists(st.integers(0, 2), min_size=3, max_size=3), min_size=1, max_size=3),
    st.lists(st.integers(0, 4), min_size=3, max_size=3),
)
def test_integer_witness_implies_feasible(A, x_true):
    # right-hand side built from a known nonnegative point
    b = [sum(a * v for a, v in zip(row, x_true)) for row in A]
    x = find_feasible_point(A, b)
    assert x is not None and residual_ok(A, b, x)


@pytest.mark.parametrize("rhs", [[1, 3], [2, 1], [0, 0], [3, 3]])
def test_agrees_with_enumeration_on_unimodular_system(rhs):
    # totally unimodular matrix: feasible iff an integer point exists
    A = [[1, 1, 0], [0, 1, 1]]
    assert (find_feasible_point(A, rhs) is not None) == brute_force_feasible(A, rhs, 3)
