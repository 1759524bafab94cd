"""Finite-order automorphisms of a Chevalley algebra: a diagram part after a torus part"""

from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger as logging

from ealakit.errors import NotAutomorphism, OrderMismatch
from ealakit.exactnum import ONE, Scalar, SparseMatrix, commutes, scaled
from ealakit.rootsys.algebra import SimpleLieAlgebra
from ealakit.schemas import Verdict


def diagram_matrix(algebra: SimpleLieAlgebra, permutation: Sequence[int]) -> SparseMatrix:
    """x_{+-alpha_i} -> x_{+-alpha_pi(i)}, extended through brackets with simple root vectors"""
    rank = algebra.rank
    cartan = algebra.datum.cartan_matrix
    if sorted(permutation) != list(range(rank)):
        raise NotAutomorphism(f"{list(permutation)} is not a permutation of the Dynkin nodes", witness=list(permutation))
    for i in range(rank):
        for j in range(rank):
            if cartan[permutation[i]][permutation[j]] != cartan[i][j]:
                raise NotAutomorphism(
                    f"Permutation {list(permutation)} does not preserve the Cartan matrix at ({i}, {j})",
                    witness={"permutation": list(permutation), "entry": [i, j]},
                )
    simple = algebra.datum.simple_roots
    images: Dict[int, Dict[int, Scalar]] = {}
    for i in range(rank):
        images[i] = {permutation[i]: ONE}
        images[algebra.root_index[simple[i]]] = {algebra.root_index[simple[permutation[i]]]: ONE}
        negative = tuple(-c for c in simple[i])
        images[algebra.root_index[negative]] = {algebra.root_index[tuple(-c for c in simple[permutation[i]])]: ONE}
    for xi in algebra.datum.positive_roots:
        if sum(xi) == 1:
            continue
        i = next(i for i in range(rank) if xi[i] and algebra.datum.is_root(tuple(c - (k == i) for k, c in enumerate(xi))))
        beta = tuple(c - (k == i) for k, c in enumerate(xi))
        for sign in (1, -1):
            a = tuple(sign * c for c in simple[i])
            b = tuple(sign * c for c in beta)
            n = algebra.structure_constant(a, b)
            image = algebra.bracket(images[algebra.root_index[a]], images[algebra.root_index[b]])
            images[algebra.root_index[tuple(sign * c for c in xi)]] = scaled(image, Scalar.rational(1) / n)
    return SparseMatrix.from_columns(algebra.dim, [images[k] for k in range(algebra.dim)])


def torus_matrix(algebra: SimpleLieAlgebra, kac: Sequence[int], order: int) -> SparseMatrix:
    """x_alpha -> z_order^(sum_i s_i c_i) x_alpha where alpha = sum_i c_i alpha_i"""
    if len(kac) != algebra.rank:
        raise NotAutomorphism(f"Expected {algebra.rank} torus exponents, got {len(kac)}", witness=list(kac))
    entries = {(k, k): ONE for k in range(algebra.rank)}
    for root, k in algebra.root_index.items():
        entries[(k, k)] = Scalar.zeta(order, sum(s * c for s, c in zip(kac, root)))
    return SparseMatrix(algebra.dim, algebra.dim, entries)


def homomorphism_witness(algebra: SimpleLieAlgebra, matrix: SparseMatrix) -> Optional[List[str]]:
    """First basis pair with M[e_i, e_j] != [M e_i, M e_j]"""
    columns = [matrix.column(k) for k in range(algebra.dim)]
    for i in range(algebra.dim):
        for j in range(i + 1, algebra.dim):
            lhs = matrix.apply(algebra.table.get((i, j), {}))
            rhs = algebra.bracket(columns[i], columns[j])
            if lhs != rhs:
                return [algebra.labels[i], algebra.labels[j]]
    return None


class FiniteOrderAut:
    """sigma = diagram o torus, with sigma^order = Id checked at construction"""

    def __init__(
        self,
        algebra: SimpleLieAlgebra,
        diagram: Tuple[int, ...],
        kac: Tuple[int, ...],
        order: int,
        matrix: SparseMatrix,
    ):
        self.algebra = algebra
        self.diagram = diagram
        self.kac = kac
        self.order = order
        self.matrix = matrix

    @property
    def is_inner(self) -> bool:
        return self.diagram == tuple(range(self.algebra.rank))

    def apply(self, vector: Dict[int, Scalar]) -> Dict[int, Scalar]:
        return self.matrix.apply(vector)

    def inverse_matrix(self) -> SparseMatrix:
        return self.matrix.power(self.order - 1)

    def to_dict(self) -> Dict:
        return {"diagram": list(self.diagram), "kac": list(self.kac), "order": self.order}

    def __repr__(self) -> str:
        return f"FiniteOrderAut(diagram={self.diagram}, kac={self.kac}, order={self.order})"


def build_automorphism(
    algebra: SimpleLieAlgebra,
    diagram: Optional[Sequence[int]] = None,
    kac: Optional[Sequence[int]] = None,
    order: int = 1,
) -> FiniteOrderAut:
    if order < 1:
        raise OrderMismatch(f"Order must be positive, got {order}", witness=order)
    diagram = tuple(range(algebra.rank)) if diagram is None else tuple(diagram)
    kac = (0,) * algebra.rank if kac is None else tuple(kac)
    matrix = diagram_matrix(algebra, diagram) @ torus_matrix(algebra, kac, order)
    if not matrix.power(order).is_identity():
        raise OrderMismatch(
            f"sigma^{order} != Id for diagram {list(diagram)} and torus exponents {list(kac)}",
            witness={"diagram": list(diagram), "kac": list(kac), "order": order},
        )
    witness = homomorphism_witness(algebra, matrix)
    if witness is not None:
        raise NotAutomorphism(f"Bracket not preserved on {witness}", witness=witness)
    logging.debug(f"Automorphism of {algebra.name}: diagram {diagram}, exponents {kac}, order {order}")
    return FiniteOrderAut(algebra, diagram, kac, order, matrix)


def check_commuting(automorphisms: Sequence[FiniteOrderAut]) -> Verdict:
    for i, a in enumerate(automorphisms):
        for j in range(i + 1, len(automorphisms)):
            if not commutes(a.matrix, automorphisms[j].matrix):
                return Verdict.fail("commuting", f"sigma_{i + 1} and sigma_{j + 1} do not commute", witness=[i, j])
    return Verdict.ok("commuting", f"{len(automorphisms)} automorphisms pairwise commute")
