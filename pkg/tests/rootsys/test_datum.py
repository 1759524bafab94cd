from fractions import Fraction

import pytest

from ealakit.errors import InvalidType
from ealakit.rootsys import ROOT_COUNTS, build_root_system, dynkin_to_cartan, symmetrizer, validate_type


@pytest.mark.parametrize(
    "series, rank, count",
    [("A", 1, 2), ("A", 3, 12), ("B", 3, 18), ("C", 3, 18), ("D", 4, 24), ("E", 6, 72), ("F", 4, 48), ("G", 2, 12), ("BC", 1, 4), ("BC", 2, 12)],
)
def test_root_counts(series: str, rank: int, count: int) -> None:
    datum = build_root_system(series, rank)
    assert len(datum.nonzero_roots) == count == ROOT_COUNTS[series](rank)
    assert datum.roots[0] == (0,) * rank


@pytest.mark.parametrize("series, rank", [("D", 3), ("E", 5), ("F", 3), ("G", 3), ("A", 0), ("B", 1), ("X", 2)])
def test_invalid_types(series: str, rank: int) -> None:
    with pytest.raises(InvalidType):
        validate_type(series, rank)


def test_cartan_and_symmetrizer() -> None:
    assert dynkin_to_cartan("A", 2) == [[2, -1], [-1, 2]]
    assert dynkin_to_cartan("B", 2) == [[2, -1], [-2, 2]]
    assert symmetrizer(dynkin_to_cartan("G", 2)) == [Fraction(2, 3), Fraction(2)]
    assert symmetrizer(dynkin_to_cartan("B", 3))[-1] == 1


def test_pairing_and_heights() -> None:
    datum = build_root_system("B", 2)
    long_root, short_root = datum.simple_roots
    assert datum.pairing(short_root, long_root) == -1
    assert datum.pairing(long_root, short_root) == -2
    assert max(datum.height(r) for r in datum.positive_roots) == 3
    assert datum.is_root((1, 2))
    assert not datum.is_root((2, 1))


def test_bc_is_not_reduced() -> None:
    datum = build_root_system("BC", 1)
    assert not datum.is_reduced()
    assert sorted(datum.indivisible_roots()) == [(-1,), (1,)]
    assert datum.is_root((2,))
    assert build_root_system("C", 2).is_reduced()


def test_to_dict() -> None:
    document = build_root_system("A", 2).to_dict()
    assert document["series"] == "A"
    assert document["cartan_matrix"] == [[2, -1], [-1, 2]]
    assert len(document["roots"]) == 7
