"""Multiloop algebras L(g, sigma) = sum over lambda of g^(lambda mod m) tensor z^lambda"""

from fractions import Fraction
from itertools import product
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx
import sympy
from loguru import logger as logging

from ealakit.errors import CartanNotPreserved, InvalidType, NonCommuting, NotAutomorphism, NotRootSystem
from ealakit.exactnum import ONE, ZERO, Scalar, SparseMatrix, Subspace, axpy, kernel_basis, simultaneous_projector
from ealakit.glie import Degree, GradedAlgebra, GradedElement, add_degrees
from ealakit.rootsys import ROOT_COUNTS, FiniteOrderAut, Root, RootDatum, SimpleLieAlgebra, build_automorphism
from ealakit.rootsys import build_root_system, check_commuting, validate_type
from ealakit.utils import timeit

Residue = Tuple[int, ...]
Weight = Tuple[Fraction, ...]
BaseVector = Dict[int, Scalar]


def _fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _column(weight: Weight) -> sympy.Matrix:
    return sympy.Matrix([sympy.Rational(c.numerator, c.denominator) for c in weight])


class MultiloopAlgebra(GradedAlgebra):
    """Elements are written in g tensor S coordinates: keys (base label, degree)"""

    def __init__(self, base: SimpleLieAlgebra, auts: Sequence[FiniteOrderAut]):
        super().__init__(len(auts))
        self.base = base
        self.auts = tuple(auts)
        self.orders: Tuple[int, ...] = tuple(a.order for a in self.auts)
        self.name = f"L({base.name}; orders {list(self.orders)})"
        self.cartan_fixed = self._fixed_cartan()
        self.slot_weights: Tuple[Weight, ...] = tuple(self._slot_weight(k) for k in range(base.dim))
        self.spaces: Dict[Residue, Dict[Weight, List[BaseVector]]] = {}
        self.eigenbasis: Dict[Residue, List[BaseVector]] = {}
        self._eigenspans: Dict[Residue, Subspace] = {}
        self._decompose()
        self._grading: Optional["RootGrading"] = None

    @property
    def residues(self) -> List[Residue]:
        return list(product(*(range(m) for m in self.orders)))

    def residue(self, degree: Degree) -> Residue:
        return tuple(c % m for c, m in zip(degree, self.orders))

    @property
    def xi_lattice(self) -> Tuple[Tuple[int, ...], ...]:
        """Generators m_i e_i of the central grading group"""
        n = self.nullity
        return tuple(tuple(self.orders[i] if i == j else 0 for j in range(n)) for i in range(n))

    def in_xi(self, degree: Degree) -> bool:
        return not any(self.residue(degree))

    def _fixed_cartan(self) -> List[BaseVector]:
        rank = self.base.rank
        rows = {}
        for a, aut in enumerate(self.auts):
            for i in range(rank):
                column = aut.matrix.column(i)
                if any(r >= rank for r in column):
                    raise CartanNotPreserved(
                        f"Automorphism {a + 1} moves {self.base.labels[i]} out of the Cartan subalgebra",
                        witness={"automorphism": a, "slot": self.base.labels[i]},
                    )
                column = dict(column)
                axpy(column, -ONE, {i: ONE})
                for r, value in column.items():
                    rows[(a * rank + r, i)] = value
        return kernel_basis(SparseMatrix(max(1, len(self.auts)) * rank, rank, rows))

    def _slot_weight(self, slot: int) -> Weight:
        root = self.base.weights[slot]
        if not any(root):
            return (Fraction(0),) * len(self.cartan_fixed)
        datum = self.base.datum
        return tuple(
            sum(
                (h.get(i, ZERO).to_fraction() * datum.pairing(root, datum.simple_roots[i]) for i in range(self.base.rank)),
                Fraction(0),
            )
            for h in self.cartan_fixed
        )

    def _decompose(self) -> None:
        groups: Dict[Weight, List[int]] = {}
        for slot, weight in enumerate(self.slot_weights):
            groups.setdefault(weight, []).append(slot)
        matrices = [a.matrix for a in self.auts]
        total = 0
        for residue in self.residues:
            if matrices:
                projector = simultaneous_projector(matrices, residue, self.orders)
            else:
                projector = SparseMatrix.identity(self.base.dim)
            self.spaces[residue] = {}
            basis: List[BaseVector] = []
            for weight in sorted(groups):
                span = Subspace(projector.column(s) for s in groups[weight])
                if span.rank:
                    self.spaces[residue][weight] = span.basis()
                    basis.extend(span.basis())
            self.eigenbasis[residue] = basis
            self._eigenspans[residue] = Subspace(basis)
            total += len(basis)
        if total != self.base.dim:
            raise NotAutomorphism(f"Eigenspaces have total dimension {total}, expected {self.base.dim}")

    def to_components(self, x: GradedElement) -> Dict[Degree, BaseVector]:
        out: Dict[Degree, BaseVector] = {}
        for (slot, degree), coeff in x.terms.items():
            out.setdefault(degree, {})[self.base.index[slot]] = coeff
        return out

    def from_components(self, components: Dict[Degree, BaseVector]) -> GradedElement:
        labels = self.base.labels
        return GradedElement(
            {(labels[k], degree): c for degree, vector in components.items() for k, c in vector.items()}
        )

    def element(self, vector: BaseVector, degree: Degree) -> GradedElement:
        return self.from_components({tuple(degree): vector})

    def degree_basis(self, degree: Degree) -> List[GradedElement]:
        degree = tuple(degree)
        return [self.element(v, degree) for v in self.eigenbasis[self.residue(degree)]]

    def contains(self, x: GradedElement) -> bool:
        if any(slot not in self.base.index for slot in x.slots()):
            return False
        return all(
            self._eigenspans[self.residue(degree)].contains(vector)
            for degree, vector in self.to_components(x).items()
        )

    def bracket_unchecked(self, x: GradedElement, y: GradedElement) -> GradedElement:
        out: Dict[Degree, BaseVector] = {}
        for lam, u in self.to_components(x).items():
            for mu, v in self.to_components(y).items():
                image = self.base.bracket(u, v)
                if image:
                    axpy(out.setdefault(add_degrees(lam, mu), {}), ONE, image)
        return self.from_components(out)

    @property
    def grading(self) -> "RootGrading":
        if self._grading is None:
            self._grading = root_grading(self)
        return self._grading

    @property
    def root_datum(self) -> RootDatum:
        return self.grading.datum

    def root_space(self, alpha: Root, degree: Degree) -> List[GradedElement]:
        """Basis of L_alpha^lambda"""
        weight = self.grading.weight_of_root.get(tuple(alpha))
        if weight is None:
            return []
        degree = tuple(degree)
        return [self.element(v, degree) for v in self.spaces[self.residue(degree)].get(weight, [])]

    def root_of(self, x: GradedElement) -> Optional[Root]:
        """Q(Delta)-degree of a root-homogeneous element, None when mixed"""
        weights = {self.slot_weights[self.base.index[slot]] for slot in x.slots()}
        if len(weights) != 1:
            return None
        return self.grading.root_of_weight[weights.pop()]

    def killing_pairing(self, x: GradedElement, y: GradedElement) -> Scalar:
        """kappa tensor epsilon: pairs degree lambda with degree -lambda"""
        xs, ys = self.to_components(x), self.to_components(y)
        total = ZERO
        for lam, u in xs.items():
            v = ys.get(tuple(-c for c in lam))
            if v:
                total = total + self.base.killing(u, v)
        return total

    def untwisted_cover(self) -> "MultiloopAlgebra":
        """g tensor S over the same Lambda"""
        identity = build_automorphism(self.base)
        return MultiloopAlgebra(self.base, [identity] * self.nullity)

    def dimension_table(self) -> Dict[str, int]:
        return {",".join(str(r) for r in residue): len(basis) for residue, basis in self.eigenbasis.items()}

    def __repr__(self) -> str:
        return f"MultiloopAlgebra({self.name})"


@timeit
def build_multiloop(base: SimpleLieAlgebra, auts: Sequence[FiniteOrderAut]) -> MultiloopAlgebra:
    if any(a.algebra is not base for a in auts):
        raise NotAutomorphism("All automorphisms must act on the given base algebra")
    verdict = check_commuting(auts)
    if not verdict.passed:
        raise NonCommuting(verdict.detail, witness=verdict.witness)
    ml = MultiloopAlgebra(base, auts)
    logging.info(f"Built {ml.name}: eigenspace dimensions {ml.dimension_table()}")
    return ml


class RootGrading(NamedTuple):
    datum: RootDatum
    root_of_weight: Dict[Weight, Root]
    weight_of_root: Dict[Root, Weight]

    def spaces(self, ml: MultiloopAlgebra) -> Dict[Tuple[Root, Residue], List[BaseVector]]:
        return {
            (self.root_of_weight[w], residue): basis
            for residue, by_weight in ml.spaces.items()
            for w, basis in by_weight.items()
        }


def _lex_positive(weight: Weight) -> bool:
    for c in weight:
        if c:
            return c > 0
    return False


def _signature(lengths: Dict[Fraction, int], count: int) -> Tuple:
    return count, tuple(lengths[k] for k in sorted(lengths))


def _identify(rank: int, count: int, lengths: Dict[Fraction, int]) -> Optional[str]:
    target = _signature(lengths, count)
    for series in ("A", "B", "C", "D", "E", "F", "G"):
        try:
            validate_type(series, rank)
        except InvalidType:
            continue
        if ROOT_COUNTS[series](rank) != count:
            continue
        datum = build_root_system(series, rank)
        found: Dict[Fraction, int] = {}
        for r in datum.nonzero_roots:
            norm = datum.form(r, r)
            found[norm] = found.get(norm, 0) + 1
        if _signature(found, count) == target:
            return series
    return None


def root_grading(ml: MultiloopAlgebra) -> RootGrading:
    """Delta of the h-weight decomposition, with h the fixed Cartan, as a (possibly non-reduced) root datum"""
    r = len(ml.cartan_fixed)
    weights = sorted({w for w in ml.slot_weights if any(w)})
    if r == 0 or not weights:
        raise NotRootSystem(f"{ml.name} has no nonzero weights for the fixed Cartan subalgebra")
    base = ml.base
    killing = sympy.Matrix(
        r, r, lambda i, j: sympy.Rational(str(base.killing(ml.cartan_fixed[i], ml.cartan_fixed[j])))
    )
    if killing.det() == 0:
        raise NotRootSystem("Killing form is degenerate on the fixed Cartan subalgebra")
    inverse = killing.inv()

    def form(a: Weight, b: Weight) -> Fraction:
        return _fraction((_column(a).T * inverse * _column(b))[0, 0])

    positive = [w for w in weights if _lex_positive(w)]
    positive_set = set(positive)
    decomposable = {
        tuple(x + y for x, y in zip(a, b)) for i, a in enumerate(positive) for b in positive[i:]
    }
    simple = [w for w in positive if w not in decomposable]
    if len(simple) != r:
        raise NotRootSystem(f"Found {len(simple)} simple weights for a rank {r} torus", witness=[list(map(str, s)) for s in simple])
    basis = sympy.Matrix.hstack(*(_column(s) for s in simple))
    basis_inv = basis.inv()
    root_of_weight: Dict[Weight, Root] = {}
    for w in weights:
        coords = basis_inv * _column(w)
        if any(not c.is_integer for c in coords):
            raise NotRootSystem(f"Weight {list(map(str, w))} is not an integral combination of simple weights")
        root = tuple(int(c) for c in coords)
        if not (all(c >= 0 for c in root) or all(c <= 0 for c in root)):
            raise NotRootSystem(f"Weight {list(map(str, w))} mixes signs in the simple basis")
        root_of_weight[w] = root
    zero = (Fraction(0),) * r
    root_of_weight[zero] = (0,) * r
    weight_set = set(weights) | {zero}
    for a in weights:
        norm = form(a, a)
        if norm == 0:
            raise NotRootSystem(f"Isotropic weight {list(map(str, a))}")
        for b in weights:
            pairing = 2 * form(b, a) / norm
            if pairing.denominator != 1:
                raise NotRootSystem(f"Non-integral pairing between weights {list(map(str, b))} and {list(map(str, a))}")
            reflected = tuple(y - pairing * x for x, y in zip(a, b))
            if reflected not in weight_set:
                raise NotRootSystem("Weights not closed under reflection", witness=[list(map(str, a)), list(map(str, b))])
    dynkin = nx.Graph()
    dynkin.add_nodes_from(range(r))
    dynkin.add_edges_from((i, j) for i in range(r) for j in range(i + 1, r) if form(simple[i], simple[j]))
    if not nx.is_connected(dynkin):
        raise NotRootSystem(f"Weight system of {ml.name} is reducible")
    divisible = [w for w in weights if tuple(2 * c for c in w) in weight_set]
    if divisible:
        series = "BC"
    else:
        lengths: Dict[Fraction, int] = {}
        for w in weights:
            lengths[form(w, w)] = lengths.get(form(w, w), 0) + 1
        series = _identify(r, len(weights), lengths)
        if series is None:
            raise NotRootSystem(f"No irreducible reduced root system matches {len(weights)} roots of rank {r}")
    gram = [[form(simple[i], simple[j]) for j in range(r)] for i in range(r)]
    datum = RootDatum.from_simple_roots(series, r, gram, list(root_of_weight.values()))
    logging.debug(f"Root grading of {ml.name}: {datum!r}")
    return RootGrading(datum, root_of_weight, {root: w for w, root in root_of_weight.items()})
