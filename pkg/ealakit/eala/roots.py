"""Root space decomposition of E with respect to H, and the form transferred to H*"""

from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, NamedTuple, Optional

from loguru import logger as logging

from ealakit.errors import FormDegenerateOnH, NotToral
from ealakit.exactnum import ZERO, Scalar, SparseMatrix, rank, solve_linear
from ealakit.glie import Degree, GradedElement, Window
from ealakit.eala.structure import EalaStructure, as_fraction_vector
from ealakit.rootsys import Root


@dataclass(frozen=True, order=True)
class EalaRoot:
    """psi = alpha + lambda delta, stored as the pair (alpha in Q(Delta), lambda in Lambda)"""

    degree_part: Degree
    finite_part: Root
    norm: Optional[Scalar] = field(default=None, compare=False, hash=False)

    @property
    def is_zero(self) -> bool:
        return not any(self.finite_part) and not any(self.degree_part)

    @property
    def is_anisotropic(self) -> bool:
        if self.norm is None:
            raise ValueError("Root norm not computed; run classify_roots first")
        return bool(self.norm)

    def lattice_vector(self) -> List[int]:
        return list(self.finite_part) + list(self.degree_part)

    def to_json(self) -> Dict:
        out = {"alpha": list(self.finite_part), "lambda": list(self.degree_part)}
        if self.norm is not None:
            out["norm"] = str(self.norm)
        return out


RootSpaces = Dict[EalaRoot, List[GradedElement]]


def _eigenvalue(e: EalaStructure, h: GradedElement, b: GradedElement) -> Scalar:
    image = e.bracket_unchecked(h, b)
    pivot = min(b.terms)
    value = image.coefficient(*pivot) / b.terms[pivot]
    if image != b.scale(value):
        raise NotToral(
            f"A window basis vector of {e.name} is not an eigenvector of ad H",
            witness={"vector": b.to_json(), "h": h.to_json()},
        )
    return value


def _root_of(e: EalaStructure, values: List[Scalar], b: GradedElement) -> EalaRoot:
    r = len(e.ml.cartan_fixed)
    d0 = e.da.d0_indices
    weight = as_fraction_vector(values[:r])
    alpha = None if weight is None else e.ml.grading.root_of_weight.get(weight)
    rows = {(i, j): Scalar.rational(t) for i, k in enumerate(d0) for j, t in enumerate(e.da.basis[k].theta) if t}
    target = {i: v for i, v in enumerate(values[r + len(d0):]) if v}
    solution = solve_linear(SparseMatrix(max(1, len(d0)), e.nullity, rows), target)
    degree = None
    if solution is not None:
        lam = as_fraction_vector([solution.get(j, ZERO) for j in range(e.nullity)])
        if lam is not None and all(c.denominator == 1 for c in lam):
            degree = tuple(int(c) for c in lam)
    if alpha is None or degree is None:
        raise NotToral(
            f"Eigenvalues of ad H on a basis vector of {e.name} are not a root", witness={"vector": b.to_json()}
        )
    root = EalaRoot(degree, alpha)
    if e.functional(alpha, degree) != values:
        raise NotToral("ad C^0 does not act by zero", witness={"vector": b.to_json()})
    return root


def root_decomposition(e: EalaStructure, window: Window) -> RootSpaces:
    """Joint eigenspaces of ad H on the window basis; every basis vector must be an eigenvector"""
    cartan = e.cartan_basis
    spaces: RootSpaces = {}
    for _, b in e.graded_window_basis(window):
        values = [_eigenvalue(e, h, b) for h in cartan]
        spaces.setdefault(_root_of(e, values, b), []).append(b)
    logging.debug(f"{e.name} has {len(spaces)} roots at window {window.bound}")
    return dict(sorted(spaces.items()))


class RootForm:
    """(t_psi | h) = psi(h) solved on the H basis; (psi | psi') = psi(t_psi')"""

    def __init__(self, e: EalaStructure):
        self.e = e
        basis = e.cartan_basis
        entries = {}
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                value = e.form(x, y)
                if value:
                    entries[(i, j)] = value
        self.size = len(basis)
        self.gram = SparseMatrix(self.size, self.size, entries)
        if rank(self.gram) != self.size:
            raise FormDegenerateOnH(f"The form on H of {e.name} is degenerate", witness={"dim_H": self.size})
        self._duals: Dict[EalaRoot, Dict[int, Scalar]] = {}

    def dual(self, root: EalaRoot) -> Dict[int, Scalar]:
        """Coordinates of t_psi in the H basis"""
        key = EalaRoot(root.degree_part, root.finite_part)
        if key not in self._duals:
            values = self.e.functional(root.finite_part, root.degree_part)
            self._duals[key] = solve_linear(self.gram, {i: v for i, v in enumerate(values) if v}) or {}
        return self._duals[key]

    def pair(self, a: EalaRoot, b: EalaRoot) -> Scalar:
        values = self.e.functional(a.finite_part, a.degree_part)
        total = ZERO
        for i, t in self.dual(b).items():
            total = total + values[i] * t
        return total

    def norm(self, root: EalaRoot) -> Scalar:
        return self.pair(root, root)


class RootPartition(NamedTuple):
    anisotropic: List[EalaRoot]
    isotropic: List[EalaRoot]

    def all(self) -> List[EalaRoot]:
        return sorted(self.anisotropic + self.isotropic)


def classify_roots(e: EalaStructure, roots: Iterable[EalaRoot], form: Optional[RootForm] = None) -> RootPartition:
    form = RootForm(e) if form is None else form
    anisotropic, isotropic = [], []
    for root in roots:
        root = replace(root, norm=form.norm(root))
        (anisotropic if root.norm else isotropic).append(root)
    logging.info(f"{e.name}: {len(anisotropic)} anisotropic and {len(isotropic)} isotropic roots")
    return RootPartition(sorted(anisotropic), sorted(isotropic))


def root_dimensions(spaces: RootSpaces) -> Dict[EalaRoot, int]:
    return {root: len(vectors) for root, vectors in spaces.items()}
