from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from vfilt.lp import fourier_motzkin_feasible, simplex_feasible


def test_simple_feasible_point():
    x = simplex_feasible(A_eq=[[1, 1]], b_eq=[1], A_ub=[[2, 0], [0, 2]], b_ub=[1, 1])
    assert x == [Fraction(1, 2), Fraction(1, 2)]


def test_infeasible():
    assert simplex_feasible(A_eq=[[1, 1]], b_eq=[1], A_ub=[[2, 0], [0, 2]], b_ub=[0, 1]) is None


def test_negative_rhs_is_handled():
    assert simplex_feasible(A_ub=[[-1]], b_ub=[-2]) is not None
    assert simplex_feasible(A_ub=[[1]], b_ub=[-1]) is None


def test_fourier_motzkin_basic():
    assert fourier_motzkin_feasible([[1, 1], [-1, 0]], [1, 0])
    assert not fourier_motzkin_feasible([[1, 0]], [-1])


systems = st.integers(1, 3).flatmap(
    lambda n: st.tuples(
        st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1, max_size=4),
        st.lists(st.integers(-4, 4), min_size=4, max_size=4),
    )
)


@given(systems)
def test_simplex_agrees_with_fourier_motzkin(system):
    A, b = system
    b = b[: len(A)]
    x = simplex_feasible(A_ub=A, b_ub=b)
    assert (x is not None) == fourier_motzkin_feasible(A, b)
    if x is not None:
        assert all(v >= 0 for v in x)
        assert all(sum(a * v for a, v in zip(row, x)) <= bi for row, bi in zip(A, b))


@given(systems, st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.integers(-3, 3))
def test_equality_rows_agree(system, eq, rhs):
    A, b = system
    b = b[: len(A)]
    eq = eq[: len(A[0])]
    x = simplex_feasible(A_eq=[eq], b_eq=[rhs], A_ub=A, b_ub=b)
    fm = fourier_motzkin_feasible(A + [eq, [-a for a in eq]], b + [rhs, -rhs])
    assert (x is not None) == fm
    if x is not None:
        assert sum(a * v for a, v in zip(eq, x)) == rhs
