import pytest
from pydantic import ValidationError

from ealakit.schemas import AxiomReport, ConjugateSpec, DerivationSpec, Manifest, Verdict
from ealakit.utils import validation_pointers

AFFINE = {"base": {"series": "A", "rank": 1}, "automorphisms": [{"order": 1}]}


def _pointers(data) -> list:
    with pytest.raises(ValidationError) as info:
        Manifest.model_validate(data)
    return [p["pointer"] for p in validation_pointers(info.value)]


def test_minimal_manifest_defaults() -> None:
    manifest = Manifest.model_validate(AFFINE)
    assert manifest.nullity == 1
    assert manifest.D_extra == [] and manifest.tau == []
    assert manifest.window is None and manifest.lift is None


def test_schema_errors_carry_pointers() -> None:
    assert _pointers({"base": {"series": "A", "rank": 0}, "automorphisms": [{}]}) == ["/base/rank"]
    assert _pointers({"base": {"series": "Z", "rank": 1}, "automorphisms": [{}]}) == ["/base/series"]
    assert _pointers(dict(AFFINE, automorphisms=[{"order": 0}])) == ["/automorphisms/0/order"]
    assert _pointers(dict(AFFINE, automorphisms=[])) == ["/automorphisms"]
    assert _pointers(dict(AFFINE, extra=1)) == ["/extra"]


def test_degree_lengths_must_match_nullity() -> None:
    with pytest.raises(ValidationError):
        Manifest.model_validate(dict(AFFINE, D_extra=[{"xi": [1, 0], "theta": [0, 1]}]))
    with pytest.raises(ValidationError):
        Manifest.model_validate(dict(AFFINE, lift={"elements": [[{"slot": "x[1]", "degree": [0, 0]}]]}))


def test_derivation_spec() -> None:
    spec = DerivationSpec(xi=[1, 0], theta=["1/2", 1])
    assert spec.theta == ["1/2", 1]
    with pytest.raises(ValidationError):
        DerivationSpec(xi=[1], theta=[0, 1])
    with pytest.raises(ValidationError):
        DerivationSpec(xi=[1], theta=["half"])


def test_conjugate_spec_single_source() -> None:
    assert ConjugateSpec().sweep == 0
    with pytest.raises(ValidationError):
        ConjugateSpec(h_prime=[], psi0={})


def test_verdict_and_report() -> None:
    assert Verdict.ok("a")
    assert not Verdict.fail("b", "broken", witness=[1])
    report = AxiomReport(verdicts={"a": Verdict.ok("a"), "b": Verdict.fail("b", "broken")})
    assert not report.passed
    assert report.failed() == ["b"]
