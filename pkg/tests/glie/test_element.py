import pytest

from ealakit.exactnum import Scalar
from ealakit.glie import GradedElement, Window


def test_zero_terms_are_dropped() -> None:
    x = GradedElement.monomial("h[1]", (1,), 2)
    assert not (x - x)
    assert (x + GradedElement.monomial("h[1]", (1,), -2)).terms == {}
    assert GradedElement({("h[1]", (0,)): 0}).terms == {}


def test_components_and_truncation() -> None:
    x = GradedElement.monomial("x[1]", (0,)) + GradedElement.monomial("x[-1]", (3,), "1/2")
    assert x.degrees() == [(0,), (3,)]
    assert x.slots() == ["x[-1]", "x[1]"]
    assert not x.is_homogeneous()
    assert x.component((3,)).coefficient("x[-1]", (3,)) == Scalar.rational("1/2")
    assert x.truncate(Window(2, 1)) == GradedElement.monomial("x[1]", (0,))
    assert x.scale(2).coefficient("x[-1]", (3,)) == 1


def test_json_form() -> None:
    x = GradedElement.monomial("x[1]", (1, 0), Scalar.zeta(3)) - GradedElement.monomial("c[1]", (0, 0))
    assert x.to_json() == [
        {"slot": "c[1]", "degree": [0, 0], "coeff": "-1"},
        {"slot": "x[1]", "degree": [1, 0], "coeff": "z(3)^1"},
    ]
    assert GradedElement.from_json(x.to_json()) == x


def test_window() -> None:
    window = Window(2, 1)
    assert window.degrees == ((-2,), (-1,), (0,), (1,), (2,))
    assert len(Window(1, 2).degrees) == 9
    assert window.contains((-2,))
    assert not window.contains((3,))
    assert not window.contains((0, 0))
    assert window.shrink() == Window(1, 1)
    assert Window(1, 1).shrink() == Window(1, 1)
    assert Window(1, 3).zero == (0, 0, 0)
    with pytest.raises(ValueError):
        Window(0, 1)
