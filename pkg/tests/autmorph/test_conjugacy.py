import pytest

from ealakit.autmorph import CartanCandidate, conjugacy_construct, conjugacy_roundtrip, exp_ad, kernel_automorphism, verify_automorphism
from ealakit.autmorph.conjugacy import is_squarefree
from ealakit.errors import CoreCartanMismatch, NotToral
from ealakit.exactnum import ONE, ZERO, Scalar
from ealakit.glie import Window
from tests.conftest import element

PSI0 = {0: {2: ONE}, 2: {0: -ONE}}


def test_identity_candidate(affine_e) -> None:
    result = conjugacy_construct(affine_e, CartanCandidate(affine_e.cartan_basis), Window(1, 1))
    assert result.verdict.passed
    assert result.psi == {}
    assert result.xi == {0: {}}


def test_toroidal_conjugation_recovers_psi(toroidal_e) -> None:
    window = Window(1, 2)
    f0 = kernel_automorphism(toroidal_e, PSI0)
    h_prime = CartanCandidate(f0.apply(h) for h in toroidal_e.cartan_basis)
    assert h_prime.check(toroidal_e, window).passed
    result = conjugacy_construct(toroidal_e, h_prime, window)
    assert result.verdict.passed
    assert result.xi == {0: {2: ONE}, 1: {}}
    assert result.psi == PSI0
    assert verify_automorphism(result.rep, window, samples=200, seed=1).passed


def test_candidate_json_roundtrip(toroidal_e) -> None:
    f0 = kernel_automorphism(toroidal_e, PSI0)
    h_prime = CartanCandidate(f0.apply(h) for h in toroidal_e.cartan_basis)
    again = CartanCandidate.from_json(h_prime.to_json())
    assert again.span().equals(h_prime.span())


def test_different_core_cartan_is_reported(affine_e) -> None:
    f = exp_ad(affine_e, element("x[1]", 0))
    h_prime = CartanCandidate(f.apply(h) for h in affine_e.cartan_basis)
    assert h_prime.basis[0] == element("h[1]", 0) - element("x[1]", 0, coeff=2)
    with pytest.raises(CoreCartanMismatch):
        conjugacy_construct(affine_e, h_prime, Window(1, 1))


def test_nilpotent_candidate_is_not_toral(affine_e) -> None:
    h_prime = CartanCandidate([element("x[1]", 0), element("c[1]", 0), element("d[1]", 0)])
    assert not h_prime.check(affine_e, Window(1, 1)).passed
    with pytest.raises(NotToral):
        conjugacy_construct(affine_e, h_prime, Window(1, 1))


def test_roundtrip_sweep(toroidal_e) -> None:
    verdicts = conjugacy_roundtrip(toroidal_e, Window(1, 2), count=2, seed=0, samples=100)
    assert len(verdicts) == 2
    assert all(v.passed for v in verdicts), [v.detail for v in verdicts if not v.passed]


@pytest.mark.slow
def test_roundtrip_sweep_at_larger_window(toroidal_e) -> None:
    assert all(v.passed for v in conjugacy_roundtrip(toroidal_e, Window(2, 2), count=3, seed=5, samples=300))


@pytest.mark.parametrize(
    "coefficients, expected",
    [
        ([-ONE, ZERO, ONE], True),
        ([ZERO, ZERO, ONE], False),
        ([ONE, Scalar.rational(2), ONE], False),
        ([-ONE, ZERO, ZERO, ONE], True),
        ([Scalar.zeta(3, 2), Scalar.rational(-2) * Scalar.zeta(3), ONE], False),
        ([Scalar.zeta(3), -(ONE + Scalar.zeta(3)), ONE], True),
        ([ONE, ONE], True),
        ([], True),
    ],
)
def test_is_squarefree(coefficients, expected) -> None:
    assert is_squarefree(coefficients) is expected
