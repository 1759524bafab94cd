import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_smith

from ealakit.exactnum import smith_normal_form, smith_rank


def multiply(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


@pytest.mark.parametrize(
    "matrix",
    [
        [[2, 4, 4], [-6, 6, 12], [10, -4, -16]],
        [[1, 2], [3, 4], [5, 6]],
        [[0, 0], [0, 0]],
        [[4, 6, 0], [0, 10, 15]],
    ],
)
def test_witnesses_reproduce_diagonal(matrix) -> None:
    form = smith_normal_form(matrix)
    product = multiply(multiply(form.left, matrix), form.right)
    for i, row in enumerate(product):
        for j, value in enumerate(row):
            assert value == (form.diagonal[i] if i == j else 0)
    nonzero = [d for d in form.diagonal if d]
    assert all(d > 0 for d in nonzero)
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))


def test_known_diagonal_agrees_with_sympy() -> None:
    matrix = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    assert smith_normal_form(matrix).diagonal == (2, 6, 12)
    reference = sympy_smith(sympy.Matrix(matrix), domain=sympy.ZZ)
    assert sorted(abs(int(reference[i, i])) for i in range(3)) == [2, 6, 12]


def test_smith_rank() -> None:
    assert smith_rank([[2, 0], [0, 3]]) == (2, (1, 6))
    assert smith_rank([[1, 1], [2, 2]]) == (1, (1,))
    assert smith_rank([]) == (0, ())
