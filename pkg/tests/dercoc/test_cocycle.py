import pytest

from ealakit.dercoc import AffineCocycle, require_valid, validate_affine_cocycle
from ealakit.errors import InvalidCocycle
from ealakit.exactnum import ONE, Scalar


def test_zero_cocycle_is_valid(toroidal_da) -> None:
    tau = AffineCocycle.zero(toroidal_da.dim)
    assert tau.is_zero()
    assert validate_affine_cocycle(toroidal_da, tau).passed
    assert require_valid(toroidal_da, tau) is tau


def test_table_read_antisymmetrically() -> None:
    tau = AffineCocycle.from_entries(3, [{"d1": 1, "d2": 2, "value": {"0": "1/2"}}])
    assert tau.value(2, 1) == {0: Scalar.rational("-1/2")}
    assert tau({1: ONE}, {2: 2 * ONE}) == {0: ONE}
    assert tau.to_json() == [{"d1": 1, "d2": 2, "value": {"0": "1/2"}}]


def test_out_of_range_entries() -> None:
    with pytest.raises(InvalidCocycle):
        AffineCocycle(3, {(0, 5): {0: 1}})
    with pytest.raises(InvalidCocycle):
        AffineCocycle(3, {(0, 1): {7: 1}})


@pytest.mark.parametrize(
    "table",
    [
        {(2, 2): {0: 1}},
        {(0, 2): {2: 1}},
        {(1, 2): {1: 1}},
    ],
)
def test_invalid_cocycles_rejected(toroidal_da, table) -> None:
    tau = AffineCocycle(toroidal_da.dim, table)
    assert not validate_affine_cocycle(toroidal_da, tau).passed
    with pytest.raises(InvalidCocycle):
        require_valid(toroidal_da, tau)


def test_dimension_mismatch(affine_e) -> None:
    assert not validate_affine_cocycle(affine_e.da, AffineCocycle.zero(2)).passed
