"""Axiom checks for Lie tori built as multiloop algebras"""

from fractions import Fraction
from typing import Dict, Optional, Tuple

from loguru import logger as logging

from ealakit.errors import NotRootSystem
from ealakit.exactnum import Scalar, SparseMatrix, Subspace, kernel_basis, scaled, smith_rank
from ealakit.glie import Degree, Window
from ealakit.multiloop.algebra import BaseVector, MultiloopAlgebra, Residue, Weight
from ealakit.schemas import AxiomReport, Verdict
from ealakit.utils import timeit


def _add_residue(ml: MultiloopAlgebra, a: Residue, b: Residue) -> Residue:
    return tuple((x + y) % m for x, y, m in zip(a, b, ml.orders))


def _neg_residue(ml: MultiloopAlgebra, a: Residue) -> Residue:
    return tuple((-x) % m for x, m in zip(a, ml.orders))


def _add_weight(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def _neg_weight(a: Weight) -> Weight:
    return tuple(-x for x in a)


def _zero_weight(ml: MultiloopAlgebra) -> Weight:
    return (Fraction(0),) * len(ml.cartan_fixed)


def check_grading(ml: MultiloopAlgebra) -> Verdict:
    """(LT1): weights form a root system and [g^a_mu, g^b_nu] lies in g^(a+b)_(mu+nu) for all residues"""
    try:
        datum = ml.root_datum
    except NotRootSystem as error:
        return Verdict.fail("LT1", f"weight support is not a root system: {error.message}", witness=error.witness)
    spans = {
        (residue, weight): Subspace(basis)
        for residue, by_weight in ml.spaces.items()
        for weight, basis in by_weight.items()
    }
    for a, by_weight_a in ml.spaces.items():
        for mu, basis_a in by_weight_a.items():
            for b, by_weight_b in ml.spaces.items():
                for nu, basis_b in by_weight_b.items():
                    target = spans.get((_add_residue(ml, a, b), _add_weight(mu, nu)))
                    for u in basis_a:
                        for v in basis_b:
                            image = ml.base.bracket(u, v)
                            if image and (target is None or not target.contains(image)):
                                return Verdict.fail(
                                    "LT1",
                                    "bracket leaves the expected (root, degree) space",
                                    witness={
                                        "residues": [list(a), list(b)],
                                        "x": ml.base.describe(u),
                                        "y": ml.base.describe(v),
                                    },
                                )
    return Verdict.ok("LT1", f"graded by Q({datum.name}) + Z^{ml.nullity} on every residue pair")


def _sl2_scaling(ml: MultiloopAlgebra, e: BaseVector, f: BaseVector) -> Optional[Tuple[BaseVector, BaseVector]]:
    """Rescales f so that h = [e, f] satisfies [h, e] = 2e; None when [[e, f], e] is not a multiple of e"""
    h = ml.base.bracket(e, f)
    image = ml.base.bracket(h, e)
    pivot = min(e)
    factor = image.get(pivot)
    if not factor or scaled(e, factor) != image:
        return None
    c = Scalar.rational(2) / factor
    return scaled(h, c), scaled(f, c)


def regrading_shift(ml: MultiloopAlgebra, window: Window) -> Optional[Dict[Tuple[int, ...], Degree]]:
    """phi on simple roots: the smallest window degree lambda with L_{alpha_i}^lambda != 0"""
    datum = ml.root_datum
    shift = {}
    for simple in datum.simple_roots:
        candidates = [
            lam for lam in window.degrees if ml.root_space(simple, lam)
        ]
        if not candidates:
            return None
        shift[simple] = min(candidates, key=lambda lam: (sum(abs(c) for c in lam), lam))
    return shift


def check_root_vectors(ml: MultiloopAlgebra, window: Window) -> Tuple[Verdict, Dict]:
    """(LT2): one-dimensional root spaces, sl2-triples acting by the coroot pairing, and L_alpha^0 != 0 after regrading"""
    datum = ml.root_datum
    grading = ml.grading
    zero = _zero_weight(ml)
    for residue, by_weight in ml.spaces.items():
        for weight, basis in by_weight.items():
            if weight != zero and len(basis) > 1:
                return Verdict.fail(
                    "LT2",
                    f"dim L_alpha^lambda = {len(basis)} > 1",
                    witness={"root": list(grading.root_of_weight[weight]), "residue": list(residue)},
                ), {}
    for residue, by_weight in ml.spaces.items():
        for weight, basis in by_weight.items():
            if weight == zero:
                continue
            alpha = grading.root_of_weight[weight]
            opposite = ml.spaces[_neg_residue(ml, residue)].get(_neg_weight(weight))
            if not opposite:
                return Verdict.fail(
                    "LT2",
                    "L_alpha^lambda != 0 but L_-alpha^-lambda = 0",
                    witness={"root": list(alpha), "residue": list(residue)},
                ), {}
            triple = _sl2_scaling(ml, basis[0], opposite[0])
            if triple is None:
                return Verdict.fail(
                    "LT2", "[[e, f], e] is not a nonzero multiple of e",
                    witness={"root": list(alpha), "residue": list(residue)},
                ), {}
            h, _ = triple
            for other in ml.spaces.values():
                for nu, vectors in other.items():
                    pairing = datum.pairing(grading.root_of_weight[nu], alpha)
                    for x in vectors:
                        if ml.base.bracket(h, x) != scaled(x, Scalar.rational(pairing)):
                            return Verdict.fail(
                                "LT2",
                                "[h, x_beta] != <beta, alpha^vee> x_beta",
                                witness={
                                    "root": list(alpha),
                                    "residue": list(residue),
                                    "beta": list(grading.root_of_weight[nu]),
                                },
                            ), {}
    shift = regrading_shift(ml, window)
    if shift is None:
        return Verdict.fail("LT2", "some simple root space is zero in every window degree"), {}
    rank = datum.rank
    for alpha in datum.indivisible_roots():
        degree = tuple(
            sum(alpha[i] * shift[datum.simple_roots[i]][k] for i in range(rank)) for k in range(ml.nullity)
        )
        if not ml.root_space(alpha, degree):
            return Verdict.fail(
                "LT2",
                "L_alpha^0 = 0 for an indivisible root after regrading",
                witness={"root": list(alpha), "shift": {str(list(k)): list(v) for k, v in shift.items()}},
            ), {}
    facts = {"regrading_shift": {",".join(map(str, k)): list(v) for k, v in shift.items()}}
    regraded = any(any(v) for v in shift.values())
    detail = "root spaces one-dimensional with sl2-triples"
    if regraded:
        detail += "; L_alpha^0 != 0 after the reported regrading shift"
    return Verdict.ok("LT2", detail, window=window.bound), facts


def check_generation(ml: MultiloopAlgebra) -> Verdict:
    """(LT3): every L_0^lambda is spanned by brackets [L_alpha^mu, L_-alpha^(lambda - mu)], alpha != 0"""
    zero = _zero_weight(ml)
    for target, by_weight in ml.spaces.items():
        needed = by_weight.get(zero, [])
        if not needed:
            continue
        span = Subspace()
        for a, by_weight_a in ml.spaces.items():
            b = _add_residue(ml, target, _neg_residue(ml, a))
            for mu, basis_a in by_weight_a.items():
                if mu == zero:
                    continue
                for u in basis_a:
                    for v in ml.spaces[b].get(_neg_weight(mu), []):
                        span.add(ml.base.bracket(u, v))
        for vector in needed:
            if not span.contains(vector):
                return Verdict.fail(
                    "LT3",
                    "L_0^lambda not generated by nonzero root spaces",
                    witness={"residue": list(target), "vector": ml.base.describe(vector)},
                )
    return Verdict.ok("LT3", "every L_0^lambda lies in the span of [L_alpha, L_-alpha] brackets")


def check_support(ml: MultiloopAlgebra, window: Window) -> Tuple[Verdict, Dict]:
    """(LT4): the window support of L generates Lambda"""
    support = [lam for lam in window.degrees if ml.eigenbasis[ml.residue(lam)]]
    lattice_rank, factors = smith_rank(support)
    index = 1
    for d in factors:
        index *= d
    facts = {"support_rank": lattice_rank, "support_index": index if lattice_rank == ml.nullity else 0}
    if lattice_rank != ml.nullity:
        return Verdict.fail(
            "LT4", f"support spans a lattice of rank {lattice_rank} < {ml.nullity}", window=window.bound
        ), facts
    if index != 1:
        return Verdict.fail(
            "LT4", f"support generates a sublattice of index {index}", witness=list(factors), window=window.bound
        ), facts
    return Verdict.ok("LT4", f"support generates Z^{ml.nullity}", window=window.bound), facts


def g0_simplicity(ml: MultiloopAlgebra) -> Verdict:
    """Informational: g^0 has zero centre and is generated as an ideal by one root vector"""
    zero_residue = (0,) * ml.nullity
    basis = ml.eigenbasis[zero_residue]
    rows: Dict[Tuple[int, int], Scalar] = {}
    for col, x in enumerate(basis):
        for g_index, g in enumerate(basis):
            for k, value in ml.base.bracket(x, g).items():
                rows[(g_index * ml.base.dim + k, col)] = value
    centre = kernel_basis(SparseMatrix(len(basis) * ml.base.dim, len(basis), rows))
    if centre:
        return Verdict.fail("g0_simple", f"g^0 has a centre of dimension {len(centre)}")
    zero = _zero_weight(ml)
    generators = [v for w, vs in ml.spaces[zero_residue].items() if w != zero for v in vs]
    if not generators:
        return Verdict.fail("g0_simple", "g^0 has no root vectors")
    span = Subspace([generators[0]])
    frontier = [generators[0]]
    while frontier:
        grown = []
        for v in frontier:
            for g in basis:
                image = ml.base.bracket(g, v)
                if image and span.add(image):
                    grown.append(image)
        frontier = grown
    if span.rank != len(basis):
        return Verdict.fail("g0_simple", f"a root vector generates a proper ideal of dimension {span.rank}")
    return Verdict.ok("g0_simple", f"g^0 is simple of dimension {len(basis)}")


@timeit
def check_lie_torus(ml: MultiloopAlgebra, window: Window) -> AxiomReport:
    report = AxiomReport()
    report.verdicts["LT1"] = check_grading(ml)
    if report.verdicts["LT1"].passed:
        report.verdicts["LT2"], facts = check_root_vectors(ml, window)
        report.facts.update(facts)
        report.verdicts["LT3"] = check_generation(ml)
        report.facts["root_system"] = ml.root_datum.name
    else:
        for name in ("LT2", "LT3"):
            report.verdicts[name] = Verdict.fail(name, "not checked: (LT1) failed")
    report.verdicts["LT4"], facts = check_support(ml, window)
    report.facts.update(facts)
    simple = g0_simplicity(ml)
    report.facts["g0_simple"] = simple.model_dump(mode="json")
    report.facts["dimensions"] = ml.dimension_table()
    report.facts["dimension_identity"] = sum(len(b) for b in ml.eigenbasis.values()) == ml.base.dim
    for name, verdict in report.verdicts.items():
        logging.info(f"{name}: {'pass' if verdict.passed else 'FAIL'} ({verdict.detail})")
    if report.passed:
        logging.success(f"{ml.name} is a Lie torus at window {window.bound}")
    return report
