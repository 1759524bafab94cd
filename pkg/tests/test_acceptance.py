"""Full-scale runs on the bundled manifests; deselect with -m "not slow"."""
import random
from collections import Counter

import pytest

from ealakit.autmorph import (
    CartanCandidate,
    conjugacy_construct,
    conjugacy_roundtrip,
    elementary_lift_contract,
    exp_ad,
    gamma_equivariance_check,
    is_derivation,
    kernel_group_law,
    random_derivation,
    sample_root_vectors,
)
from ealakit.cli.main import run
from ealakit.config import MANIFESTS
from ealakit.eala import (
    EalaRoot,
    check_core,
    check_core_radical,
    check_isotropic_lattice,
    classify_roots,
    ideal_dichotomy_sweep,
    root_decomposition,
    root_dimensions,
)
from ealakit.errors import CoreCartanMismatch
from ealakit.exactnum import ONE
from ealakit.glie import Window, jacobi_check
from ealakit.multiloop import check_lie_torus, descent_check
from tests.conftest import element

pytestmark = pytest.mark.slow

BUNDLED = ["affine_e", "twisted_e", "toroidal_e"]


@pytest.mark.parametrize("fixture", BUNDLED)
def test_jacobi_at_window_three(request, fixture: str) -> None:
    e = request.getfixturevalue(fixture)
    verdict = jacobi_check(e, Window(3, e.nullity), samples=1000, seed=0)
    assert verdict.passed, verdict.witness
    assert verdict.detail == "1000 sampled triples"


def test_affine_root_system_at_window_four(affine_e) -> None:
    window = Window(4, 1)
    spaces = root_decomposition(affine_e, window)
    expected = {EalaRoot((a,), (m,)) for a in (-1, 0, 1) for m in range(-4, 5)}
    assert set(spaces) == expected
    dimensions = root_dimensions(spaces)
    assert dimensions[EalaRoot((0,), (0,))] == 3
    assert all(n == 1 for root, n in dimensions.items() if root != EalaRoot((0,), (0,)))
    lattice = check_isotropic_lattice(affine_e, classify_roots(affine_e, spaces), window)
    assert lattice.passed
    assert lattice.detail == "rank = 1"


def test_twisted_grading_at_window_four(twisted_ml) -> None:
    window = Window(4, 1)
    report = check_lie_torus(twisted_ml, window)
    assert report.passed, report.failed()
    assert report.facts["root_system"] == "BC1"
    expected = {str(k): 3 if k % 2 == 0 else 5 for k in range(-4, 5)}
    assert {str(k): twisted_ml.dimension((k,)) for k in range(-4, 5)} == expected
    descent = descent_check(twisted_ml, window)
    assert descent.passed
    assert descent.witness["dimensions"] == expected


@pytest.mark.parametrize("fixture, window", [("affine_e", Window(3, 1)), ("twisted_e", Window(2, 1)), ("toroidal_e", Window(1, 2))])
def test_core_is_l_plus_c_on_bundled(request, fixture: str, window: Window) -> None:
    e = request.getfixturevalue(fixture)
    spaces = root_decomposition(e, window)
    assert check_core(e, window, spaces, classify_roots(e, spaces)).passed
    assert check_core_radical(e, window).passed


@pytest.mark.parametrize("fixture", BUNDLED)
def test_ideal_dichotomy_at_window_three(request, fixture: str) -> None:
    e = request.getfixturevalue(fixture)
    verdicts = ideal_dichotomy_sweep(e, Window(3, e.nullity), count=50, seed=0)
    assert len(verdicts) == 50
    assert all(v.passed for v in verdicts)
    assert set(Counter(v.detail for v in verdicts)) <= {"SubsetOfC", "ContainsCore"}


@pytest.mark.parametrize("fixture, window", [("affine_e", Window(5, 1)), ("twisted_e", Window(3, 1))])
def test_elementary_lift_contract_on_sampled_root_vectors(request, fixture: str, window: Window) -> None:
    e = request.getfixturevalue(fixture)
    vectors = sample_root_vectors(e.ml, window, 20, random.Random(0))
    assert len(vectors) == 20
    for x in vectors:
        verdict = elementary_lift_contract(e, x, window)
        assert verdict.passed, (x.to_json(), verdict.detail)


def test_kernel_group_law_on_sampled_derivations(toroidal_e) -> None:
    rng = random.Random(0)
    for _ in range(10):
        psi1, psi2 = random_derivation(toroidal_e.da, rng), random_derivation(toroidal_e.da, rng)
        assert kernel_group_law(toroidal_e, psi1, psi2, Window(1, 2)).passed
    assert is_derivation(toroidal_e.da, {2: {0: ONE}}) == [0, 2]


def test_conjugacy_roundtrip_ten_trials(toroidal_e) -> None:
    verdicts = conjugacy_roundtrip(toroidal_e, Window(2, 2), count=10, seed=0, samples=200)
    assert len(verdicts) == 10
    assert all(v.passed for v in verdicts), [v.detail for v in verdicts if not v.passed]


def test_nullity_one_conjugacy(affine_e) -> None:
    window = Window(3, 1)
    result = conjugacy_construct(affine_e, CartanCandidate(affine_e.cartan_basis), window)
    assert result.verdict.passed
    assert result.psi == {}
    f = exp_ad(affine_e, element("x[-1]", 0))
    with pytest.raises(CoreCartanMismatch):
        conjugacy_construct(affine_e, CartanCandidate(f.apply(h) for h in affine_e.cartan_basis), window)


def test_gamma_equivariance_ten_lifts(twisted_e) -> None:
    verdict = gamma_equivariance_check(twisted_e, Window(2, 1), samples=10, seed=0)
    assert verdict.passed, verdict.witness


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "ideals", "--manifest", str(MANIFESTS / "affine_sl2.json"), "--window", "2"],
        ["lift", "--manifest", str(MANIFESTS / "toroidal_sl2_n2.json"), "--window", "1", "--samples", "100"],
        ["conjugate", "--manifest", str(MANIFESTS / "conjugacy_roundtrip_n2.json"), "--window", "1", "--samples", "100"],
    ],
)
def test_bundled_reports_are_reproducible(tmp_path, argv) -> None:
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    assert run([*argv, "--out", str(first), "--log-level", "WARNING"]) == 0
    assert run([*argv, "--out", str(second), "--log-level", "WARNING"]) == 0
    assert first.read_bytes() == second.read_bytes()
