"""Abstract graded Lie algebras and the window-bounded searches run against them"""

import random
from abc import ABC, abstractmethod
from itertools import product
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from loguru import logger as logging

from ealakit.errors import ForeignElement
from ealakit.exactnum import SparseMatrix, Subspace, kernel_basis
from ealakit.glie.element import Degree, GradedElement, Window, span_sum
from ealakit.schemas import Verdict
from ealakit.variables import settings


class GradedAlgebra(ABC):
    """A Z^nullity-graded Lie algebra with finite-dimensional homogeneous pieces"""

    name: str = "graded algebra"

    def __init__(self, nullity: int):
        self.nullity = nullity
        self._window_cache: Dict[int, List[Tuple[Degree, GradedElement]]] = {}

    @abstractmethod
    def degree_basis(self, degree: Degree) -> List[GradedElement]:
        """Basis of the homogeneous piece of the given degree"""

    @abstractmethod
    def bracket_unchecked(self, x: GradedElement, y: GradedElement) -> GradedElement:
        """Exact bracket of two elements already known to belong to the algebra"""

    @abstractmethod
    def contains(self, x: GradedElement) -> bool:
        """Membership of a finitely supported element"""

    def require(self, x: GradedElement) -> GradedElement:
        if any(len(degree) != self.nullity for degree in x.degrees()) or not self.contains(x):
            raise ForeignElement(f"Element does not belong to {self.name}", witness=x.to_json())
        return x

    def bracket(self, x: GradedElement, y: GradedElement) -> GradedElement:
        return self.bracket_unchecked(self.require(x), self.require(y))

    def graded_window_basis(self, window: Window) -> List[Tuple[Degree, GradedElement]]:
        if window.nullity != self.nullity:
            raise ValueError(f"Window of nullity {window.nullity} used on nullity {self.nullity}")
        if window.bound not in self._window_cache:
            self._window_cache[window.bound] = [
                (degree, element) for degree in window.degrees for element in self.degree_basis(degree)
            ]
        return self._window_cache[window.bound]

    def window_basis(self, window: Window) -> List[GradedElement]:
        return [element for _, element in self.graded_window_basis(window)]

    def dimension(self, degree: Degree) -> int:
        return len(self.degree_basis(degree))


def jacobi_sum(alg: GradedAlgebra, x: GradedElement, y: GradedElement, z: GradedElement) -> GradedElement:
    b = alg.bracket_unchecked
    return b(x, b(y, z)) + b(y, b(z, x)) + b(z, b(x, y))


def jacobi_check(
    alg: GradedAlgebra, window: Window, samples: Optional[int] = None, seed: Optional[int] = None
) -> Verdict:
    """Jacobi sums on window basis triples: every ordered triple when that is at most `samples`, else a seeded sample"""
    samples = settings.SAMPLES if samples is None else samples
    basis = alg.window_basis(window)
    n = len(basis)
    if n == 0:
        return Verdict.ok("jacobi", "empty window", window=window.bound)
    if n**3 <= samples:
        triples = product(range(n), repeat=3)
        mode = f"all {n**3} ordered triples"
    else:
        rng = random.Random(settings.SEED if seed is None else seed)
        triples = [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples)]
        mode = f"{samples} sampled triples"
    for i, j, k in triples:
        total = jacobi_sum(alg, basis[i], basis[j], basis[k])
        if total:
            logging.warning(f"Jacobi identity fails in {alg.name} on basis triple {(i, j, k)}")
            return Verdict.fail(
                "jacobi",
                f"nonzero Jacobi sum on basis triple {(i, j, k)}",
                witness={
                    "x": basis[i].to_json(),
                    "y": basis[j].to_json(),
                    "z": basis[k].to_json(),
                    "sum": total.to_json(),
                },
                window=window.bound,
            )
    return Verdict.ok("jacobi", mode, window=window.bound)


def combine(basis: Sequence[GradedElement], coefficients: Dict[int, object]) -> GradedElement:
    return span_sum(basis[k].scale(c) for k, c in sorted(coefficients.items()))


def centralizer_at_window(
    alg: GradedAlgebra, generators: Sequence[GradedElement], window: Window
) -> List[GradedElement]:
    """Basis of {x supported in the window : [x, s] = 0 for every generator s}"""
    generators = [alg.require(g) for g in generators]
    basis = alg.window_basis(window)
    rows: Dict[Tuple, int] = {}
    columns = []
    for element in basis:
        column = {}
        for g_index, generator in enumerate(generators):
            for key, value in alg.bracket_unchecked(element, generator).terms.items():
                column[rows.setdefault((g_index, key), len(rows))] = value
        columns.append(column)
    matrix = SparseMatrix.from_columns(len(rows), columns)
    kernel = kernel_basis(matrix)
    logging.debug(f"Centralizer in {alg.name} at window {window.bound}: {len(kernel)} of {len(basis)}")
    return [combine(basis, vector) for vector in kernel]


class ClosureResult(NamedTuple):
    basis: List[GradedElement]
    rounds: int
    converged: bool

    def span(self) -> Subspace:
        return Subspace(e.terms for e in self.basis)


def ideal_closure_at_window(
    alg: GradedAlgebra,
    generators: Sequence[GradedElement],
    window: Window,
    max_rounds: Optional[int] = None,
) -> ClosureResult:
    """Smallest window-truncated span containing the generators and stable under ad of window elements"""
    max_rounds = settings.IDEAL_CLOSURE_MAX_ROUNDS if max_rounds is None else max_rounds
    basis = alg.window_basis(window)
    span = Subspace()
    frontier = []
    for generator in generators:
        truncated = alg.require(generator).truncate(window)
        if truncated and span.add(truncated.terms):
            frontier.append(truncated)
    rounds = 0
    while frontier:
        if rounds >= max_rounds:
            logging.warning(f"Ideal closure in {alg.name} stopped after {rounds} rounds")
            return ClosureResult([GradedElement(v) for v in span.basis()], rounds, False)
        rounds += 1
        grown = []
        for vector in frontier:
            for element in basis:
                image = alg.bracket_unchecked(element, vector).truncate(window)
                if image and span.add(image.terms):
                    grown.append(image)
        frontier = grown
    return ClosureResult([GradedElement(v) for v in span.basis()], rounds, True)

def sample_homogeneous(alg: GradedAlgebra, window: Window, rng: random.Random) -> Tuple[Degree, GradedElement]:
    """A uniformly chosen window basis element together with its degree"""
    graded = alg.graded_window_basis(window)
    if not graded:
        raise ValueError(f"{alg.name} has nothing in window {window.bound}")
    return graded[rng.randrange(len(graded))]
