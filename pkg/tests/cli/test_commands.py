import pytest

from ealakit.cli.commands import Context, build_algebra, build_structure, cmd_check, parse_psi
from ealakit.errors import ManifestError
from ealakit.exactnum import Scalar
from ealakit.schemas import Manifest
from ealakit.variables import settings

AFFINE = {"base": {"series": "A", "rank": 1}, "automorphisms": [{"order": 1}]}


def test_context_precedence() -> None:
    manifest = Manifest.model_validate(dict(AFFINE, window=2, seed=5))
    ctx = Context.resolve(manifest, "digest")
    assert (ctx.window, ctx.seed, ctx.samples) == (2, 5, settings.SAMPLES)
    ctx = Context.resolve(manifest, "digest", window=1, samples=7)
    assert (ctx.window, ctx.seed, ctx.samples) == (1, 5, 7)
    assert ctx.window_for(2).nullity == 2


def test_invalid_base_type() -> None:
    with pytest.raises(ManifestError) as info:
        build_algebra(Manifest.model_validate({"base": {"series": "E", "rank": 4}, "automorphisms": [{}]}))
    assert info.value.witness[0]["pointer"] == "/base"


def test_invalid_automorphism_pointer() -> None:
    manifest = Manifest.model_validate({"base": {"series": "A", "rank": 2}, "automorphisms": [{"diagram": [0, 0], "order": 2}]})
    with pytest.raises(ManifestError) as info:
        build_algebra(manifest)
    assert info.value.witness[0]["pointer"] == "/automorphisms/0"


def test_tau_index_out_of_range() -> None:
    manifest = Manifest.model_validate(dict(AFFINE, tau=[{"d1": 0, "d2": 3, "value": {}}]))
    with pytest.raises(ManifestError) as info:
        build_structure(manifest)
    assert info.value.witness[0]["pointer"] == "/tau/0/d2"


def test_parse_psi() -> None:
    e = build_structure(Manifest.model_validate(AFFINE))
    assert parse_psi(e.da, {"d[1]": {"c[1]": "3/2"}}, "/lift/psi1") == {0: {0: Scalar.rational("3/2")}}
    with pytest.raises(ManifestError) as info:
        parse_psi(e.da, {"d[9]": {}}, "/lift/psi1")
    assert info.value.witness[0]["pointer"] == "/lift/psi1/d[9]"
    with pytest.raises(ManifestError):
        parse_psi(e.da, {"d[1]": {"c[4]": 1}}, "/lift/psi1")


def test_unknown_check() -> None:
    ctx = Context.resolve(Manifest.model_validate(AFFINE), "digest", window=1)
    with pytest.raises(ValueError):
        cmd_check(ctx, "everything")


def test_check_ideals_counts() -> None:
    ctx = Context.resolve(Manifest.model_validate(AFFINE), "digest", window=1, seed=3)
    body, passed = cmd_check(ctx, "ideals")
    assert passed
    assert sum(body.counts.values()) == len(body.ideals) == settings.IDEAL_SAMPLES
