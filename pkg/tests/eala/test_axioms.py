from collections import Counter

import pytest

from ealakit.eala import (
    centreless_core_rank,
    check_core_radical,
    check_eala_axioms,
    classify_roots,
    core_compute,
    ideal_dichotomy_sweep,
    root_decomposition,
)
from ealakit.glie import Window

EXPECTED = {"EA1", "EA2", "EA3", "EA4", "EA5", "jacobi", "form_invariance", "core_radical", "window_monotonicity"}


def test_affine_sl2_is_an_eala(affine_e) -> None:
    report = check_eala_axioms(affine_e, Window(2, 1), samples=200, seed=0)
    assert set(report.verdicts) == EXPECTED
    assert report.passed, report.failed()
    assert report.facts["nullity"] == 1
    assert "(rank 15)" in report.verdicts["EA4"].detail
    assert report.facts["core"] == {"matches_L_plus_C": True}
    norms = {tuple(r["alpha"] + r["lambda"]): r["norm"] for r in report.facts["roots"]}
    assert norms[(1, 0)] == "1/2"
    assert norms[(0, 1)] == "0"


def test_twisted_a2_is_an_eala(twisted_e) -> None:
    report = check_eala_axioms(twisted_e, Window(1, 1), samples=100, seed=0)
    assert report.passed, report.failed()


@pytest.mark.slow
def test_toroidal_with_extra_derivation_is_an_eala(toroidal_e) -> None:
    report = check_eala_axioms(toroidal_e, Window(1, 2), samples=100, seed=0)
    assert report.passed, report.failed()
    assert report.facts["nullity"] == 2


def test_core_radical(affine_e, toroidal_e) -> None:
    assert check_core_radical(affine_e, Window(1, 1)).passed
    assert check_core_radical(toroidal_e, Window(1, 2)).passed


def test_ideal_dichotomy_sweep(affine_e) -> None:
    verdicts = ideal_dichotomy_sweep(affine_e, Window(2, 1), count=6, seed=4)
    assert len(verdicts) == 6
    assert all(v.passed for v in verdicts)
    assert set(Counter(v.detail for v in verdicts)) <= {"SubsetOfC", "ContainsCore"}


def test_core_is_l_plus_c(affine_e) -> None:
    window = Window(1, 1)
    spaces = root_decomposition(affine_e, window)
    core = core_compute(affine_e, window, spaces, classify_roots(affine_e, spaces))
    assert core.matches_L_plus_C
    assert len(core.basis) == 10
    assert centreless_core_rank(affine_e, core, window) == {"image_rank": 9, "L_dimension": 9}
