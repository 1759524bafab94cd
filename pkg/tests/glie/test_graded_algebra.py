import pytest

from ealakit.errors import ForeignElement
from ealakit.glie import GradedElement, Window, centralizer_at_window, classify_ideal, ideal_closure_at_window, jacobi_check
from ealakit.multiloop import build_multiloop
from ealakit.rootsys import build_automorphism
from tests.conftest import element


def test_bracket_rejects_foreign_elements(affine_ml) -> None:
    with pytest.raises(ForeignElement):
        affine_ml.bracket(element("y[7]", 0), element("h[1]", 0))
    with pytest.raises(ForeignElement):
        affine_ml.bracket(element("h[1]", 0, 0), element("h[1]", 0))


def test_window_basis_and_dimension(affine_ml, twisted_ml) -> None:
    assert len(affine_ml.window_basis(Window(2, 1))) == 15
    assert twisted_ml.dimension((0,)) == 3
    assert twisted_ml.dimension((-1,)) == 5
    assert len(twisted_ml.window_basis(Window(1, 1))) == 13


def test_jacobi_on_multiloop(affine_ml, twisted_ml) -> None:
    assert jacobi_check(affine_ml, Window(1, 1), samples=1000).passed
    assert jacobi_check(twisted_ml, Window(1, 1), samples=300, seed=3).passed


def test_jacobi_finds_corrupted_table(sl2) -> None:
    broken = sl2.with_table_entry(1, 2, {0: 2})
    ml = build_multiloop(broken, [build_automorphism(broken)])
    verdict = jacobi_check(ml, Window(1, 1), samples=1000)
    assert not verdict.passed
    assert set(verdict.witness) == {"x", "y", "z", "sum"}


def test_centralizer_of_cartan(affine_e) -> None:
    window = Window(1, 1)
    centre = centralizer_at_window(affine_e, [element("h[1]", 0)], window)
    assert len(centre) == 5


def test_ideal_closure_of_central_element(affine_e) -> None:
    closure = ideal_closure_at_window(affine_e, [element("c[1]", 0)], Window(1, 1))
    assert closure.converged
    assert closure.basis == [element("c[1]", 0)]


def test_ideal_dichotomy(affine_e) -> None:
    window = Window(1, 1)
    central = classify_ideal(affine_e, [element("c[1]", 0, coeff=3)], window)
    assert central.passed and central.detail == "SubsetOfC"
    big = classify_ideal(affine_e, [element("x[1]", 0)], window)
    assert big.passed and big.detail == "ContainsCore"
    assert big.witness["closure_dimension"] >= 10
