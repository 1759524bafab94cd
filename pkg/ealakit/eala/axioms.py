"""Window verification of the EALA axioms, the core and the ideal dichotomy"""

import random
from typing import Dict, List, NamedTuple, Optional

import networkx as nx
from loguru import logger as logging

from ealakit.errors import FormDegenerateOnH, NotToral
from ealakit.exactnum import Scalar, SparseMatrix, Subspace, kernel_basis, smith_rank
from ealakit.glie import (
    ClosureResult,
    GradedElement,
    Window,
    centralizer_at_window,
    classify_ideal,
    combine,
    ideal_closure_at_window,
    jacobi_check,
)
from ealakit.eala.roots import EalaRoot, RootForm, RootPartition, RootSpaces, classify_roots, root_decomposition
from ealakit.eala.structure import EalaStructure
from ealakit.schemas import AxiomReport, Verdict
from ealakit.utils import timeit
from ealakit.variables import settings


class CoreResult(NamedTuple):
    closure: ClosureResult
    matches_L_plus_C: bool

    @property
    def basis(self) -> List[GradedElement]:
        return self.closure.basis


def anisotropic_vectors(spaces: RootSpaces, partition: RootPartition) -> List[GradedElement]:
    return [v for root in partition.anisotropic for v in spaces[root]]


def core_compute(
    e: EalaStructure, window: Window, spaces: RootSpaces, partition: RootPartition
) -> CoreResult:
    """Ideal generated by the anisotropic root spaces, compared with L + C at the window"""
    closure = ideal_closure_at_window(e, anisotropic_vectors(spaces, partition), window)
    expected = Subspace(x.terms for x in e.core_window_basis(window))
    matches = closure.converged and closure.span().equals(expected)
    if not matches:
        logging.warning(f"Core of {e.name} at window {window.bound} differs from L + C")
    return CoreResult(closure, matches)


def _check_cartan(e: EalaStructure, spaces: RootSpaces) -> Verdict:
    cartan = e.cartan_basis
    for i, x in enumerate(cartan):
        for y in cartan[i + 1:]:
            if e.bracket_unchecked(x, y):
                return Verdict.fail("EA1", "H is not abelian", witness=[x.to_json(), y.to_json()])
    zero = EalaRoot((0,) * e.nullity, (0,) * len(e.ml.root_datum.simple_roots))
    e0 = Subspace(v.terms for v in spaces.get(zero, []))
    if not e0.equals(Subspace(h.terms for h in cartan)):
        return Verdict.fail("EA1", f"E_0 has dimension {e0.rank}, H has dimension {len(cartan)}")
    return Verdict.ok("EA1", f"H of dimension {len(cartan)} is toral and self-centralizing")


def _string_length(e: EalaStructure, alpha, beta) -> int:
    datum = e.ml.root_datum
    k = 0
    while datum.is_root(tuple(b + (k + 1) * a for a, b in zip(alpha, beta))):
        k += 1
    return k


def check_local_nilpotency(
    e: EalaStructure,
    window: Window,
    spaces: RootSpaces,
    partition: RootPartition,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> Verdict:
    """(ad x)^K v = 0 for sampled anisotropic root vectors x and every window basis vector v, K from root strings"""
    samples = settings.NILPOTENCY_SAMPLES if samples is None else samples
    rng = random.Random(settings.SEED if seed is None else seed)
    candidates = [(root, x) for root in partition.anisotropic for x in spaces[root]]
    if not candidates:
        return Verdict.fail("EA2", "no anisotropic root vectors in the window", window=window.bound)
    chosen = candidates if len(candidates) <= samples else rng.sample(candidates, samples)
    for root, x in chosen:
        for beta, vectors in spaces.items():
            steps = _string_length(e, root.finite_part, beta.finite_part) + 1
            for v in vectors:
                image = v
                for _ in range(steps):
                    image = e.bracket_unchecked(x, image)
                if image:
                    return Verdict.fail(
                        "EA2",
                        f"(ad x)^{steps} v != 0",
                        witness={"x": x.to_json(), "v": v.to_json()},
                        window=window.bound,
                    )
    return Verdict.ok("EA2", f"{len(chosen)} anisotropic root vectors; verified to degree {window.bound}", window=window.bound)


def check_connectedness(partition: RootPartition, form: RootForm, window: Window) -> Verdict:
    """(EA3) on the window part of the anisotropic roots: edges join roots with (psi|psi') != 0"""
    graph = nx.Graph()
    roots = partition.anisotropic
    graph.add_nodes_from(range(len(roots)))
    for i, a in enumerate(roots):
        for j in range(i + 1, len(roots)):
            if form.pair(a, roots[j]):
                graph.add_edge(i, j)
    if not roots or not nx.is_connected(graph):
        pieces = [sorted(c) for c in nx.connected_components(graph)]
        return Verdict.fail(
            "EA3",
            f"anisotropic roots split into {len(pieces)} components",
            witness=[[roots[i].to_json() for i in piece[:3]] for piece in pieces],
            window=window.bound,
        )
    return Verdict.ok("EA3", f"{len(roots)} anisotropic window roots are connected", window=window.bound)


def check_core(e: EalaStructure, window: Window, spaces: RootSpaces, partition: RootPartition) -> Verdict:
    """(EA4): the core is L + C at the window and its centralizer lies in it"""
    core = core_compute(e, window, spaces, partition)
    if not core.matches_L_plus_C:
        return Verdict.fail(
            "EA4",
            f"core closure of dimension {len(core.basis)} differs from L + C",
            witness={"rounds": core.closure.rounds, "converged": core.closure.converged},
            window=window.bound,
        )
    ranks = centreless_core_rank(e, core, window)
    if ranks["image_rank"] != ranks["L_dimension"]:
        return Verdict.fail("EA4", "the centreless core is not L", witness=ranks, window=window.bound)
    span = core.closure.span()
    for x in centralizer_at_window(e, anisotropic_vectors(spaces, partition), window):
        if not span.contains(x.terms):
            return Verdict.fail(
                "EA4", "the centralizer of the core leaves the core", witness=x.to_json(), window=window.bound
            )
    return Verdict.ok(
        "EA4", f"core equals L + C, maps onto L (rank {ranks['image_rank']}) and contains its centralizer", window=window.bound
    )


def check_isotropic_lattice(e: EalaStructure, partition: RootPartition, window: Window) -> Verdict:
    """(EA5): the isotropic roots span a free abelian group of rank equal to the nullity"""
    lattice_rank, factors = smith_rank([r.lattice_vector() for r in partition.isotropic if not r.is_zero])
    if lattice_rank != e.nullity:
        return Verdict.fail(
            "EA5", f"isotropic roots span a lattice of rank {lattice_rank}, expected {e.nullity}",
            witness=list(factors), window=window.bound,
        )
    return Verdict.ok("EA5", f"rank = {lattice_rank}", window=window.bound)


def check_core_radical(e: EalaStructure, window: Window) -> Verdict:
    """The radical of the form restricted to L + C is C"""
    basis = e.core_window_basis(window)
    by_degree: Dict = {}
    for i, x in enumerate(basis):
        by_degree.setdefault(x.degrees()[0], []).append(i)
    entries = {}
    for i, x in enumerate(basis):
        opposite = tuple(-c for c in x.degrees()[0])
        for j in by_degree.get(opposite, []):
            value = e.form(x, basis[j])
            if value:
                entries[(j, i)] = value
    radical = Subspace(combine(basis, v).terms for v in kernel_basis(SparseMatrix(len(basis), len(basis), entries)))
    central = Subspace(c.terms for c in e.central_window_basis(window))
    if not radical.equals(central):
        return Verdict.fail(
            "core_radical", f"radical of dimension {radical.rank} != C of dimension {central.rank}", window=window.bound
        )
    return Verdict.ok("core_radical", f"radical is C (dimension {central.rank})", window=window.bound)


def centreless_core_rank(e: EalaStructure, core: CoreResult, window: Window) -> Dict[str, int]:
    """Rank of the image of the core in E_c / C, against dim L at the window"""
    image = Subspace(e.split(x)[0].terms for x in core.basis)
    return {"image_rank": image.rank, "L_dimension": len(e.ml.window_basis(window))}


def check_window_monotonicity(e: EalaStructure, window: Window, spaces: Optional[RootSpaces] = None) -> Verdict:
    """Enlarging the window keeps every root and its dimension"""
    small = root_decomposition(e, window) if spaces is None else spaces
    large = root_decomposition(e, Window(window.bound + 1, window.nullity))
    for root, vectors in small.items():
        if len(large.get(root, [])) < len(vectors):
            return Verdict.fail(
                "window_monotonicity", "a root space shrinks when the window grows", witness=root.to_json(),
                window=window.bound,
            )
    return Verdict.ok("window_monotonicity", f"windows {window.bound} and {window.bound + 1} agree", window=window.bound)


def check_eala_form(e: EalaStructure, window: Window, samples: Optional[int] = None, seed: Optional[int] = None) -> Verdict:
    """Symmetry and invariance of the form on sampled window triples"""
    samples = settings.SAMPLES if samples is None else samples
    rng = random.Random(settings.SEED if seed is None else seed)
    basis = e.window_basis(window)
    for _ in range(samples):
        x, y, z = (basis[rng.randrange(len(basis))] for _ in range(3))
        if e.form(x, y) != e.form(y, x):
            return Verdict.fail("form_invariance", "(x|y) != (y|x)", witness=[x.to_json(), y.to_json()], window=window.bound)
        if e.form(e.bracket_unchecked(x, y), z) != e.form(x, e.bracket_unchecked(y, z)):
            return Verdict.fail(
                "form_invariance", "([x,y]|z) != (x|[y,z])",
                witness=[x.to_json(), y.to_json(), z.to_json()], window=window.bound,
            )
    return Verdict.ok("form_invariance", f"{samples} sampled triples", window=window.bound)


@timeit
def check_eala_axioms(
    e: EalaStructure, window: Window, samples: Optional[int] = None, seed: Optional[int] = None
) -> AxiomReport:
    report = AxiomReport()
    report.facts["nullity"] = e.nullity
    try:
        spaces = root_decomposition(e, window)
        form = RootForm(e)
    except (NotToral, FormDegenerateOnH) as error:
        logging.error(f"{e.name}: {error.message}")
        report.verdicts["EA1"] = Verdict.fail("EA1", error.message, witness=error.witness, window=window.bound)
        for name in ("EA2", "EA3", "EA4", "EA5"):
            report.verdicts[name] = Verdict.fail(name, "not checked: (EA1) failed")
        return report
    partition = classify_roots(e, spaces, form)
    report.verdicts["EA1"] = _check_cartan(e, spaces)
    report.verdicts["EA2"] = check_local_nilpotency(e, window, spaces, partition, seed=seed)
    report.verdicts["EA3"] = check_connectedness(partition, form, window)
    report.verdicts["EA4"] = check_core(e, window, spaces, partition)
    report.verdicts["EA5"] = check_isotropic_lattice(e, partition, window)
    report.verdicts["jacobi"] = jacobi_check(e, window, samples, seed)
    report.verdicts["form_invariance"] = check_eala_form(e, window, samples, seed)
    report.verdicts["core_radical"] = check_core_radical(e, window)
    report.verdicts["window_monotonicity"] = check_window_monotonicity(e, window, spaces)
    report.facts["roots"] = [dict(r.to_json(), dimension=len(spaces[r])) for r in partition.all()]
    report.facts["core"] = {"matches_L_plus_C": report.verdicts["EA4"].passed}
    logging.warning(f"EALA axioms of {e.name} are verified on the window {window.bound} only")
    for name, verdict in report.verdicts.items():
        logging.info(f"{name}: {'pass' if verdict.passed else 'FAIL'} ({verdict.detail})")
    if report.passed:
        logging.success(f"{e.name} passes (EA1)-(EA5) at window {window.bound}")
    return report


def random_ideal_generators(e: EalaStructure, window: Window, rng: random.Random) -> List[GradedElement]:
    """One or two window basis vectors of a common degree with small integer coefficients"""
    graded = e.graded_window_basis(window)
    degree, _ = graded[rng.randrange(len(graded))]
    pool = e.degree_basis(degree)
    picks = rng.sample(pool, min(len(pool), rng.randint(1, 2)))
    element = GradedElement()
    for x in picks:
        element = element + x.scale(Scalar.rational(rng.choice((1, -1, 2, 3))))
    return [element] if element else [pool[0]]


def ideal_dichotomy_sweep(
    e: EalaStructure, window: Window, count: Optional[int] = None, seed: Optional[int] = None
) -> List[Verdict]:
    count = settings.IDEAL_SAMPLES if count is None else count
    rng = random.Random(settings.SEED if seed is None else seed)
    return [classify_ideal(e, random_ideal_generators(e, window, rng), window) for _ in range(count)]
