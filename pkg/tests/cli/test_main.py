import json

import pytest

from ealakit.cli.main import run
from ealakit.config import MANIFESTS, ExitCode

AFFINE = MANIFESTS / "affine_sl2.json"
TWISTED = MANIFESTS / "a2_twisted.json"
TOROIDAL = MANIFESTS / "toroidal_sl2_n2.json"


def _run(tmp_path, *argv, name="report.json"):
    out = tmp_path / name
    code = run([*argv, "--out", str(out), "--log-level", "WARNING"])
    return code, json.loads(out.read_text(encoding="utf-8"))


def _manifest(tmp_path, data, name="manifest.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def test_build_affine(tmp_path) -> None:
    code, report = _run(tmp_path, "build", "--manifest", str(AFFINE))
    assert code == ExitCode.PASSED.value
    assert report["passed"] is True
    assert report["command"] == "build"
    assert report["window"] == 3
    assert report["body"]["root_system"] == "A1"
    assert report["body"]["gamma_orders"] == [1]
    assert len(report["manifest_digest"]) == 64


def test_build_twisted(tmp_path) -> None:
    code, report = _run(tmp_path, "build", "--manifest", str(TWISTED))
    assert code == 0
    assert report["body"]["root_system"] == "BC1"
    assert report["body"]["gamma_orders"] == [2]
    assert report["body"]["dimensions"] == {"0": 3, "1": 5}


def test_flags_override_manifest(tmp_path) -> None:
    code, report = _run(tmp_path, "build", "--manifest", str(AFFINE), "--window", "1", "--seed", "9", "--samples", "5")
    assert code == 0
    assert (report["window"], report["seed"], report["samples"]) == (1, 9, 5)


def test_reports_are_deterministic(tmp_path) -> None:
    argv = ["build", "--manifest", str(TWISTED), "--window", "1"]
    run([*argv, "--out", str(tmp_path / "a.json"), "--log-level", "WARNING"])
    run([*argv, "--out", str(tmp_path / "b.json"), "--log-level", "WARNING"])
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_non_commuting_automorphisms_are_invalid_input(tmp_path) -> None:
    manifest = _manifest(
        tmp_path,
        {
            "base": {"series": "A", "rank": 2},
            "automorphisms": [{"diagram": [1, 0], "order": 2}, {"kac": [1, 0], "order": 3}],
        },
    )
    code, report = _run(tmp_path, "build", "--manifest", manifest)
    assert code == ExitCode.INVALID_INPUT.value
    assert report["passed"] is False
    assert report["error"]["error"] == "ManifestError"
    assert report["error"]["witness"][0]["pointer"] == "/automorphisms"


def test_schema_violation_reports_pointer(tmp_path) -> None:
    manifest = _manifest(tmp_path, {"base": {"series": "A", "rank": 0}, "automorphisms": [{"order": 1}]})
    code, report = _run(tmp_path, "build", "--manifest", manifest)
    assert code == 2
    assert [w["pointer"] for w in report["error"]["witness"]] == ["/base/rank"]


def test_missing_manifest(tmp_path) -> None:
    code, report = _run(tmp_path, "build", "--manifest", str(tmp_path / "absent.json"))
    assert code == 2
    assert report["error"]["error"] == "ManifestError"


def test_check_lietorus(tmp_path) -> None:
    code, report = _run(tmp_path, "check", "lietorus", "--manifest", str(AFFINE), "--window", "2")
    assert code == 0
    assert report["command"] == "check lietorus"
    assert all(v["passed"] for v in report["body"]["axioms"].values())


def test_check_descent_on_twisted(tmp_path) -> None:
    code, report = _run(tmp_path, "check", "descent", "--manifest", str(TWISTED), "--window", "1")
    assert code == 0
    assert report["body"]["gamma_orders"] == [2]


def test_roots(tmp_path) -> None:
    code, report = _run(tmp_path, "roots", "--manifest", str(TWISTED))
    assert code == 0
    assert report["body"]["grading"]["name"] == "BC1"


def test_lift(tmp_path) -> None:
    code, report = _run(tmp_path, "lift", "--manifest", str(AFFINE), "--window", "1", "--samples", "50")
    assert code == 0
    assert all(v["passed"] for v in report["body"]["verdicts"])


def test_conjugate_identity(tmp_path) -> None:
    code, report = _run(tmp_path, "conjugate", "--manifest", str(AFFINE), "--window", "1", "--samples", "50")
    assert code == 0
    assert report["body"]["status"] == "conjugated"
    assert report["body"]["psi"] == {}


def test_conjugate_reports_core_mismatch(tmp_path) -> None:
    manifest = _manifest(
        tmp_path,
        {
            "base": {"series": "A", "rank": 1},
            "automorphisms": [{"order": 1}],
            "window": 1,
            "conjugate": {
                "h_prime": [
                    [{"slot": "h[1]", "degree": [0]}, {"slot": "x[1]", "degree": [0], "coeff": "-2"}],
                    [{"slot": "c[1]", "degree": [0]}],
                    [{"slot": "d[1]", "degree": [0]}],
                ]
            },
        },
    )
    code, report = _run(tmp_path, "conjugate", "--manifest", manifest)
    assert code == ExitCode.MATH_FAILURE.value
    assert report["body"]["status"] == "CoreCartanMismatch"
    assert report["body"]["verified"] is False


@pytest.mark.slow
def test_conjugate_toroidal_psi0(tmp_path) -> None:
    manifest = _manifest(
        tmp_path,
        {
            "base": {"series": "A", "rank": 1},
            "automorphisms": [{"order": 1}, {"order": 1}],
            "D_extra": [{"xi": [1, 0], "theta": [0, 1]}],
            "conjugate": {"psi0": {"d[1]": {"c[3]": "1"}, "d[3]": {"c[1]": "-1"}}},
        },
    )
    code, report = _run(tmp_path, "conjugate", "--manifest", manifest, "--window", "1", "--samples", "100")
    assert code == 0
    assert report["body"]["psi"] == {"d[1]": {"c[3]": "1"}, "d[3]": {"c[1]": "-1"}}


@pytest.mark.slow
def test_check_eala_toroidal(tmp_path) -> None:
    code, report = _run(tmp_path, "check", "eala", "--manifest", str(TOROIDAL), "--window", "1", "--samples", "60")
    assert code == 0
    assert report["body"]["nullity"] == 2


def test_error_message_brackets_survive_console(tmp_path, capsys) -> None:
    manifest = _manifest(
        tmp_path,
        {
            "base": {"series": "A", "rank": 1},
            "automorphisms": [{"order": 1}, {"order": 1}],
            "D_extra": [{"xi": [1, 0], "theta": [0, 1]}],
            "window": 1,
            "lift": {"elements": [[{"slot": "x[1]", "degree": [0, 0]}]], "psi1": {"d[3]": {"c[1]": "1"}}},
        },
    )
    code, report = _run(tmp_path, "lift", "--manifest", manifest)
    assert code == ExitCode.MATH_FAILURE.value
    assert report["error"]["error"] == "NotDerivation"
    assert "psi([d1,d2])" in capsys.readouterr().err
