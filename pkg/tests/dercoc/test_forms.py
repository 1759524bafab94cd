import pytest

from ealakit.dercoc import check_der_jacobi, check_dual_compatibility, check_inner_intersection, dercoc_report, form_L, sigma_D
from ealakit.glie import Window
from tests.conftest import element


def test_form_pairs_opposite_degrees(affine_ml) -> None:
    assert form_L(affine_ml, element("x[1]", 2), element("x[-1]", -2)) == 4
    assert form_L(affine_ml, element("x[1]", 2), element("x[-1]", -1)) == 0


def test_sigma_on_loop_elements(affine_e) -> None:
    da = affine_e.da
    assert sigma_D(da, element("h[1]", 1), element("h[1]", -1)) == {0: 8}
    assert sigma_D(da, element("x[1]", 1), element("x[-1]", -1)) == {0: 4}
    assert sigma_D(da, element("h[1]", 0), element("h[1]", 0)) == {}


def test_sigma_through_extra_generator(toroidal_da) -> None:
    value = sigma_D(toroidal_da, element("h[1]", 0, 1), element("h[1]", -1, -1))
    assert value == {2: 8}


@pytest.mark.parametrize("fixture, window", [("affine_e", Window(2, 1)), ("twisted_e", Window(1, 1)), ("toroidal_e", Window(1, 2))])
def test_dercoc_report_passes(request, fixture: str, window: Window) -> None:
    verdicts = dercoc_report(request.getfixturevalue(fixture).da, window, samples=60, seed=1)
    assert [v.name for v in verdicts] == [
        "form_invariance", "skewness", "sigma_cocycle", "dual_compatibility", "der_jacobi", "inner_intersection"
    ]
    assert all(v.passed for v in verdicts), [v for v in verdicts if not v.passed]


def test_exact_checks_on_toroidal(toroidal_da) -> None:
    assert check_dual_compatibility(toroidal_da).passed
    assert check_der_jacobi(toroidal_da).passed
    assert check_inner_intersection(toroidal_da, Window(1, 2)).passed
