import pytest
import sympy
from hypothesis import given, strategies as st

from numsgp import NotInIdeal, semigroup
from numsgp.binomial import Binomial, binomial
from numsgp.linalg import rank

matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                       min_size=1, max_size=7))


@given(matrices)
def test_rank_matches_sympy(rows):
    assert rank(rows) == sympy.Matrix(rows).rank()


def test_rank_of_empty():
    assert rank([]) == 0 and rank([[]]) == 0


def test_binomial_normal_form():
    gens = (5, 6, 8, 9)
    b = binomial(gens, (1, 1, 0, 1), (0, 2, 1, 0))  # shares x2
    assert b.plus == (1, 0, 0, 1) and b.minus == (0, 1, 1, 0)
    assert b.degree == 14 and str(b) == "x1*x4 - x2*x3"
    assert binomial(gens, (0, 1, 1, 0), (1, 0, 0, 1)) == b
    assert Binomial.from_vector((-1, 1, 1, -1), gens) == b


def test_binomial_rejects_unequal_degrees():
    with pytest.raises(NotInIdeal):
        binomial((5, 6, 8, 9), (1, 0, 0, 0), (0, 1, 0, 0))


def test_moves():
    b = binomial((5, 6, 8, 9), (1, 0, 0, 1), (0, 1, 1, 0))
    assert b.moves((2, 0, 0, 1)) == [(1, 1, 1, 0)]
    assert sorted(b.moves((1, 1, 1, 1))) == [(0, 2, 2, 0), (2, 0, 0, 2)]


def test_semigroup_degree():
    assert semigroup(5, 6, 8, 9).degree((1, 0, 0, 1)) == 14
