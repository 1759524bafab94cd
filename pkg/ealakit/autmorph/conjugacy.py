"""Conjugating H onto another Cartan subalgebra H' with the same image in the centreless core"""

import random
from math import lcm
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import sympy
from loguru import logger as logging

from ealakit.autmorph.lifts import kernel_automorphism, lift_grading_preserving, random_derivation, verify_automorphism
from ealakit.autmorph.representation import AutomorphismRep, GradingPreserving, PsiTable, compose, image_of_span
from ealakit.dercoc import Coordinates, evaluate
from ealakit.eala import EalaStructure
from ealakit.errors import CoreCartanMismatch, InconsistentWeightEquation, NotAGraph, NotToral
from ealakit.exactnum import ONE, ZERO, Scalar, SparseMatrix, Subspace, kernel_basis, solve_linear
from ealakit.glie import GradedElement, Window, combine
from ealakit.schemas import Verdict
from ealakit.utils import timeit
from ealakit.variables import settings

Polynomial = List[Scalar]

_T = sympy.Symbol("t")
_Z = sympy.Symbol("z")


def _to_sympy(p: Polynomial) -> Tuple[sympy.Poly, int]:
    """p(t) in Q[z][t] with z standing for z_m, m the common conductor of the coefficients"""
    m = lcm(*(c.order for c in p)) if p else 1
    expr = sympy.Integer(0)
    for i, c in enumerate(p):
        for j, v in c.coerce(m).coeffs.items():
            expr += sympy.Rational(v.numerator, v.denominator) * _Z**j * _T**i
    return sympy.Poly(expr, _T, _Z, domain=sympy.QQ), m


def is_squarefree(p: Polynomial) -> bool:
    """gcd(p, p') = 1 over Q(z_m); off Q, the discriminant must survive reduction mod the cyclotomic polynomial"""
    poly, m = _to_sympy(p)
    if poly.degree(_T) < 2:
        return True
    if m == 1:
        return sympy.Poly(poly.as_expr(), _T, domain=sympy.QQ).is_sqf
    disc = sympy.Poly(sympy.discriminant(poly.as_expr(), _T), _Z, domain=sympy.QQ)
    return not disc.rem(sympy.Poly(sympy.cyclotomic_poly(m, _Z), _Z, domain=sympy.QQ)).is_zero


def _minimal_polynomial(operator, v: GradedElement, limit: int) -> Optional[Polynomial]:
    """Monic generator of {p : p(T) v = 0}, or None when the Krylov space exceeds `limit`"""
    keys: Dict = {}
    columns: List[Dict[int, Scalar]] = []

    def coords(x: GradedElement) -> Dict[int, Scalar]:
        return {keys.setdefault(k, len(keys)): c for k, c in x.terms.items()}

    current = v
    for _ in range(limit + 1):
        target = coords(current)
        if columns:
            solution = solve_linear(SparseMatrix.from_columns(len(keys), columns), target)
        else:
            solution = {} if not target else None
        if solution is not None:
            return [-solution.get(j, ZERO) for j in range(len(columns))] + [ONE]
        columns.append(target)
        current = operator(current)
    return None


class CartanCandidate:
    """A finite basis spanning a subspace H' of E"""

    def __init__(self, basis: Iterable[GradedElement]):
        self.basis: List[GradedElement] = list(basis)

    @classmethod
    def from_json(cls, items: Sequence[Sequence[Mapping]]) -> "CartanCandidate":
        return cls(GradedElement.from_json(item) for item in items)

    def span(self) -> Subspace:
        return Subspace(b.terms for b in self.basis)

    def check(self, e: EalaStructure, window: Window) -> Verdict:
        """Abelian, and each ad b has a squarefree minimal polynomial on the window-truncated span of every basis vector"""
        for b in self.basis:
            e.require(b)
        for i, x in enumerate(self.basis):
            for y in self.basis[i + 1:]:
                if e.bracket_unchecked(x, y):
                    return Verdict.fail("cartan_candidate", "H' is not abelian", witness=[x.to_json(), y.to_json()])
        window_basis = e.window_basis(window)
        for b in self.basis:

            def operator(v: GradedElement, b=b) -> GradedElement:
                return e.bracket_unchecked(b, v).truncate(window)

            for v in window_basis:
                p = _minimal_polynomial(operator, v, len(window_basis))
                if p is None or not is_squarefree(p):
                    return Verdict.fail(
                        "cartan_candidate", "ad b is not diagonalizable on the window",
                        witness={"b": b.to_json(), "v": v.to_json()}, window=window.bound,
                    )
        return Verdict.ok("cartan_candidate", "abelian and diagonalizable on the window", window=window.bound)

    def to_json(self) -> List:
        return [b.to_json() for b in self.basis]


class ConjugacyResult(NamedTuple):
    rep: AutomorphismRep
    psi: PsiTable
    xi: Dict[int, Coordinates]
    verdict: Verdict


def _core_cartan(e: EalaStructure) -> Subspace:
    size = len(e.ml.cartan_fixed) + len(e.da.d0_indices)
    return Subspace(h.terms for h in e.cartan_basis[:size])


def _graph_map(e: EalaStructure, basis: Sequence[GradedElement]) -> Dict[int, Coordinates]:
    """xi: D^0 -> C^(!=0) whose graph is D'^0 modulo H_c"""
    da = e.da
    h_c = _core_cartan(e)
    d_columns = [e.split(b)[2] for b in basis]
    d_matrix = SparseMatrix.from_columns(da.dim, d_columns)
    core_part = Subspace(combine(basis, v).terms for v in kernel_basis(d_matrix))
    if not core_part.equals(h_c):
        logging.error("H' and H meet the core in different subspaces")
        raise CoreCartanMismatch(
            "H' intersected with E_c differs from H_c",
            witness={"dim_H_prime_c": core_part.rank, "dim_H_c": h_c.rank},
        )
    xi: Dict[int, Coordinates] = {}
    for k in da.d0_indices:
        solution = solve_linear(d_matrix, {k: ONE})
        if solution is None:
            raise NotAGraph(f"No element of H' has D-component {da.d_slot(k)}", witness={"d": da.d_slot(k)})
        l, c, _ = e.split(combine(basis, solution))
        if not h_c.contains(l.terms):
            raise NotAGraph("The L-component of D'^0 leaves h", witness={"d": da.d_slot(k), "l": l.to_json()})
        xi[k] = {j: v for j, v in c.items() if any(da.c_degree(j))}
    return xi


def _solve_weight_equations(e: EalaStructure, xi: Dict[int, Coordinates]) -> PsiTable:
    """psi(d^mu)^lambda = (d^mu . xi(d0))^lambda / ev_(lambda - mu)(d0), consistent over every d0"""
    da = e.da
    d0 = da.d0_indices
    psi: PsiTable = {k: dict(value) for k, value in xi.items() if value}
    for j, mu in enumerate(da.degrees):
        if not any(mu):
            continue
        actions = {k: da.act_on_c({j: ONE}, xi[k]) for k in d0}
        row: Coordinates = {}
        for l in range(da.dim):
            lam = da.c_degree(l)
            if lam == mu:
                continue
            shift = tuple(a - b for a, b in zip(lam, mu))
            value = None
            for k in d0:
                ev = evaluate(da.basis[k].theta, shift)
                if ev:
                    value = actions[k].get(l, ZERO) / Scalar.rational(ev)
                    break
            value = ZERO if value is None else value
            for k in d0:
                ev = Scalar.rational(evaluate(da.basis[k].theta, shift))
                if actions[k].get(l, ZERO) != ev * value:
                    raise InconsistentWeightEquation(
                        "the weight equation has no common solution across D^0",
                        witness={"d_mu": da.d_slot(j), "c": da.c_slot(l), "d0": da.d_slot(k)},
                    )
            if value:
                row[l] = value
        if row:
            psi[j] = row
    return psi


@timeit
def conjugacy_construct(
    e: EalaStructure,
    h_prime: CartanCandidate,
    window: Window,
    g: Optional[GradingPreserving] = None,
) -> ConjugacyResult:
    """f in the kernel of restriction to the centreless core with f(H) = H'"""
    candidate = h_prime.check(e, window)
    if not candidate.passed:
        raise NotToral(candidate.detail, witness=candidate.witness)
    basis = h_prime.basis
    lift = None
    if g is not None:
        lift = lift_grading_preserving(e, g, window)
        basis = [lift.apply(b) for b in basis]
    if Subspace(b.terms for b in basis).rank != len(e.cartan_basis):
        raise NotAGraph(f"H' has dimension {Subspace(b.terms for b in basis).rank}, H has {len(e.cartan_basis)}")
    xi = _graph_map(e, basis)
    psi = _solve_weight_equations(e, xi)
    rep: AutomorphismRep = kernel_automorphism(e, psi)
    if lift is not None:
        rep = compose(lift.inverse(), rep)
    image = image_of_span(rep, e.cartan_basis)
    if image.equals(h_prime.span()):
        verdict = Verdict.ok("conjugacy", "f(H) = H'", window=window.bound)
        logging.success(f"Conjugated H onto H' in {e.name}")
    else:
        verdict = Verdict.fail("conjugacy", "f(H) != H'", window=window.bound)
    return ConjugacyResult(rep, psi, xi, verdict)


def conjugacy_roundtrip(
    e: EalaStructure, window: Window, count: Optional[int] = None, seed: Optional[int] = None, samples: Optional[int] = None
) -> List[Verdict]:
    """H' = f_psi0(H) for random derivations psi0; the constructed f must satisfy f(H) = H' and be an automorphism"""
    count = settings.CONJUGACY_SAMPLES if count is None else count
    rng = random.Random(settings.SEED if seed is None else seed)
    verdicts = []
    for trial in range(count):
        psi0 = random_derivation(e.da, rng)
        f0 = kernel_automorphism(e, psi0)
        result = conjugacy_construct(e, CartanCandidate(f0.apply(h) for h in e.cartan_basis), window)
        check = verify_automorphism(result.rep, window, samples=samples, seed=rng.randrange(2**31))
        passed = result.verdict.passed and check.passed
        verdicts.append(
            Verdict(
                name="roundtrip",
                passed=passed,
                detail=f"trial {trial}: {result.verdict.detail}; {check.detail}",
                witness=None if passed else {"psi0": {str(k): {str(l): str(v) for l, v in r.items()} for k, r in psi0.items()}},
                window=window.bound,
            )
        )
    return verdicts
