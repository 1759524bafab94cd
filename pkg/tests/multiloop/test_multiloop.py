import pytest

from ealakit.errors import NonCommuting
from ealakit.glie import GradedElement
from ealakit.multiloop import build_multiloop, root_grading
from ealakit.rootsys import build_automorphism
from tests.conftest import element


def test_untwisted_loop(affine_ml) -> None:
    assert affine_ml.nullity == 1
    assert affine_ml.orders == (1,)
    assert affine_ml.dimension_table() == {"0": 3}
    assert affine_ml.root_datum.name == "A1"
    assert affine_ml.root_of(element("x[1]", 5)) == (1,)
    assert affine_ml.root_of(element("h[1]", 5)) == (0,)
    assert affine_ml.root_of(element("x[1]", 0) + element("h[1]", 0)) is None


def test_twisted_loop_has_bc1_grading(twisted_ml) -> None:
    assert twisted_ml.dimension_table() == {"0": 3, "1": 5}
    assert twisted_ml.root_datum.name == "BC1"
    assert len(twisted_ml.cartan_fixed) == 1
    assert twisted_ml.xi_lattice == ((2,),)
    assert twisted_ml.in_xi((4,))
    assert not twisted_ml.in_xi((3,))
    assert twisted_ml.root_of(element("x[1,1]", 1)) == (2,)


def test_membership_in_twisted_loop(twisted_ml) -> None:
    symmetric = element("x[1,0]", 0) + element("x[0,1]", 0)
    antisymmetric = element("x[1,0]", 1) - element("x[0,1]", 1)
    assert twisted_ml.contains(symmetric)
    assert twisted_ml.contains(antisymmetric)
    assert twisted_ml.contains(element("x[1,1]", 1))
    assert not twisted_ml.contains(element("x[1,0]", 0))
    assert not twisted_ml.contains(element("x[1,1]", 0))
    assert twisted_ml.contains(GradedElement())


def test_bracket_adds_degrees(affine_ml) -> None:
    assert affine_ml.bracket(element("x[1]", 2), element("x[-1]", -1)) == element("h[1]", 1)
    assert affine_ml.bracket(element("h[1]", 1), element("x[1]", 1)) == element("x[1]", 2, coeff=2)


def test_killing_pairing(affine_ml) -> None:
    assert affine_ml.killing_pairing(element("h[1]", 1), element("h[1]", -1)) == 8
    assert affine_ml.killing_pairing(element("h[1]", 1), element("h[1]", 1)) == 0


def test_untwisted_cover(twisted_ml) -> None:
    cover = twisted_ml.untwisted_cover()
    assert cover.orders == (1,)
    assert cover.dimension((1,)) == 8


def test_noncommuting_automorphisms_rejected(sl3) -> None:
    omega = build_automorphism(sl3, diagram=[1, 0], order=2)
    skewed = build_automorphism(sl3, kac=[1, 0], order=3)
    with pytest.raises(NonCommuting):
        build_multiloop(sl3, [omega, skewed])


def test_root_grading(sl2, sl3, twisted_ml) -> None:
    assert root_grading(twisted_ml).datum.name == "BC1"
    assert root_grading(build_multiloop(sl3, [build_automorphism(sl3)])).datum.name == "A2"
    inner = build_multiloop(sl2, [build_automorphism(sl2, kac=[1], order=2)])
    grading = root_grading(inner)
    assert grading.datum.name == "A1"
    assert sorted(grading.weight_of_root) == [(-1,), (0,), (1,)]
