from fractions import Fraction

import pytest
from facewise.exceptions import InvalidInputError
from facewise.geometry.exact_linalg import (
    independent_rows,
    primitive_integer_vector,
    rational_inverse,
    rational_rank,
)


def test_rank_is_exact():
    assert rational_rank([[1, 2], [2, 4]]) == 1
    assert rational_rank([[Fraction(1, 3), 1], [1, 3]]) == 1
    assert rational_rank([[1, 0, 0], [0, 1, 0]]) == 2
    assert rational_rank([]) == 0


def test_independent_rows_are_chosen_greedily():
    assert independent_rows([[1, 0], [2, 0], [0, 1], [1, 1]]) == [0, 2]
    assert independent_rows([[0, 0], [0, 1]]) == [1]


def test_inverse():
    assert rational_inverse([[2, 0], [0, 4]]) == [[Fraction(1, 2), 0], [0, Fraction(1, 4)]]
    assert rational_inverse([[1, 1], [0, 1]]) == [[1, -1], [0, 1]]


def test_inverse_rejects_singular_and_non_square_input():
    with pytest.raises(InvalidInputError):
        rational_inverse([[1, 2], [2, 4]])
    with pytest.raises(InvalidInputError):
        rational_inverse([[1, 2, 3], [4, 5, 6]])


def test_primitive_integer_vector():
    assert primitive_integer_vector([Fraction(1, 2), Fraction(1, 3), 0]) == (3, 2, 0)
    assert primitive_integer_vector([-2, 4, 6]) == (-1, 2, 3)
    assert primitive_integer_vector([0, 0]) == (0, 0)
