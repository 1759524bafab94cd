from ealakit.glie import Window
from ealakit.multiloop import GammaAction, average, descent_check, fixed_space, gamma_fixed_points, is_gamma_fixed
from tests.conftest import element


def test_descent_recovers_twisted_loop(twisted_ml) -> None:
    verdict = descent_check(twisted_ml, Window(2, 1))
    assert verdict.passed
    assert verdict.witness["dimensions"] == {"-2": 3, "-1": 5, "0": 3, "1": 5, "2": 3}


def test_descent_for_trivial_gamma(affine_ml) -> None:
    assert descent_check(affine_ml, Window(1, 1)).passed
    assert GammaAction(affine_ml).orders == (1,)


def test_gamma_action(twisted_ml) -> None:
    ga = GammaAction(twisted_ml)
    assert ga.generators == 1
    assert len(fixed_space(ga, (1,))) == 5
    inside = element("x[1,0]", 1) - element("x[0,1]", 1)
    assert is_gamma_fixed(ga, inside)
    outside = element("x[1,0]", 1)
    assert not is_gamma_fixed(ga, outside)
    projected = average(ga, outside)
    assert projected == inside.scale("1/2")
    assert twisted_ml.contains(projected)


def test_gamma_fixed_points_by_degree(twisted_ml) -> None:
    fixed = gamma_fixed_points(GammaAction(twisted_ml), Window(1, 1))
    assert {degree: len(basis) for degree, basis in fixed.items()} == {(-1,): 5, (0,): 3, (1,): 5}
    assert all(twisted_ml.contains(x) for basis in fixed.values() for x in basis)
