import pytest

from ealakit.glie import Window
from ealakit.multiloop import check_lie_torus, check_support, g0_simplicity


@pytest.mark.parametrize("fixture, window, root_system", [("affine_ml", Window(2, 1), "A1"), ("twisted_ml", Window(2, 1), "BC1"), ("toroidal_ml", Window(1, 2), "A1")])
def test_multiloops_are_lie_tori(request, fixture: str, window: Window, root_system: str) -> None:
    ml = request.getfixturevalue(fixture)
    report = check_lie_torus(ml, window)
    assert report.passed, report.failed()
    assert set(report.verdicts) == {"LT1", "LT2", "LT3", "LT4"}
    assert report.facts["root_system"] == root_system
    assert report.facts["support_rank"] == ml.nullity
    assert report.facts["support_index"] == 1
    assert report.facts["dimension_identity"] is True
    assert report.facts["g0_simple"]["passed"]


def test_g0_simplicity(twisted_ml) -> None:
    verdict = g0_simplicity(twisted_ml)
    assert verdict.passed
    assert "dimension 3" in verdict.detail


def test_support_generates_lattice(toroidal_ml) -> None:
    verdict, facts = check_support(toroidal_ml, Window(1, 2))
    assert verdict.passed
    assert facts == {"support_rank": 2, "support_index": 1}
