import pytest

from ealakit.errors import NonCommuting, WrongOrder
from ealakit.exactnum import (
    ONE,
    Scalar,
    SparseMatrix,
    Subspace,
    commutes,
    image_basis,
    kernel_basis,
    rank,
    simultaneous_projector,
    solve_linear,
)


def matrix(rows):
    return SparseMatrix(
        len(rows), len(rows[0]), {(r, c): v for r, row in enumerate(rows) for c, v in enumerate(row)}
    )


def test_product_and_power() -> None:
    swap = matrix([[0, 1], [1, 0]])
    assert (swap @ swap).is_identity()
    assert swap.power(3) == swap
    assert matrix([[1, 2], [3, 4]]).transpose() == matrix([[1, 3], [2, 4]])
    assert (swap - swap).entries == {}


def test_apply_drops_zero_entries() -> None:
    m = matrix([[1, -1], [0, 0]])
    assert m.apply({0: ONE, 1: ONE}) == {}


def test_subspace_echelon() -> None:
    span = Subspace([{0: ONE, 1: ONE}, {1: ONE, 2: ONE}])
    assert span.rank == 2
    assert span.contains({0: ONE, 2: -ONE})
    assert not span.add({0: 2 * ONE, 1: 3 * ONE, 2: ONE})
    assert span.add({2: ONE})
    assert span.rank == 3
    assert Subspace([{0: ONE}]).issubset(span)
    assert not span.issubset(Subspace([{0: ONE}]))
    assert Subspace([{0: ONE}, {1: ONE}]).equals(Subspace([{0: ONE, 1: ONE}, {0: ONE, 1: -ONE}]))


def test_kernel_basis_one_vector_per_free_column() -> None:
    m = matrix([[1, 1, 0], [0, 0, 1]])
    basis = kernel_basis(m)
    assert basis == [{1: ONE, 0: -ONE}]
    assert rank(m) == 2
    for vector in basis:
        assert m.apply(vector) == {}


def test_solve_linear() -> None:
    solution = solve_linear(matrix([[1, 2], [3, 4]]), {0: Scalar.rational(5), 1: Scalar.rational(6)})
    assert solution == {0: Scalar.rational(-4), 1: Scalar.rational("9/2")}
    assert solve_linear(matrix([[1, 1], [1, 1]]), {0: ONE}) is None


def test_cyclotomic_eigenprojectors() -> None:
    rotation = matrix([[0, -1], [1, 0]])
    assert commutes(rotation, rotation.power(2))
    projector = simultaneous_projector([rotation], [1], [4])
    basis = image_basis(projector)
    assert len(basis) == 1
    z = Scalar.zeta(4)
    image = rotation.apply(basis[0])
    assert image == {k: z * v for k, v in basis[0].items()}
    total = sum(len(image_basis(simultaneous_projector([rotation], [j], [4]))) for j in range(4))
    assert total == 2


def test_projector_rejects_wrong_order_and_noncommuting() -> None:
    rotation = matrix([[0, -1], [1, 0]])
    with pytest.raises(WrongOrder):
        simultaneous_projector([rotation], [0], [2])
    a = matrix([[1, 0], [0, -1]])
    b = matrix([[0, 1], [1, 0]])
    with pytest.raises(NonCommuting) as error:
        simultaneous_projector([a, b], [0, 0], [2, 2])
    assert error.value.witness == [0, 1]
