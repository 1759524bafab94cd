"""The graded algebra D of skew-centroidal derivations and its graded dual C"""

from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger as logging

from ealakit.errors import ClosureUnbounded, EvNotInjective, NotCentroidal, NotSkew
from ealakit.exactnum import ONE, ZERO, Scalar, SparseMatrix, Subspace, axpy, kernel_basis, rank, solve_linear
from ealakit.glie import Degree
from ealakit.dercoc.derivations import CentroidalDerivation, der_bracket, evaluate
from ealakit.multiloop import MultiloopAlgebra
from ealakit.variables import settings

Coordinates = Dict[int, Scalar]


def _theta_vector(d: CentroidalDerivation) -> Dict[int, Scalar]:
    return {j: Scalar.rational(t) for j, t in enumerate(d.theta) if t}


class DAlgebra:
    """Homogeneous basis d_1..d_N of D (degree derivations first) and the dual basis c_k of degree -deg d_k"""

    def __init__(self, ml: MultiloopAlgebra, basis: Sequence[CentroidalDerivation], bound: int):
        self.ml = ml
        self.nullity = ml.nullity
        self.basis: Tuple[CentroidalDerivation, ...] = tuple(basis)
        self.bound = bound
        self.degrees: Tuple[Degree, ...] = tuple(d.degree for d in self.basis)
        self.structure: Dict[Tuple[int, int], Coordinates] = {}
        for i, di in enumerate(self.basis):
            for j, dj in enumerate(self.basis):
                bracket = der_bracket(di, dj)
                if bracket:
                    self.structure[(i, j)] = self.coordinates(bracket)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def d0_indices(self) -> List[int]:
        return [k for k, xi in enumerate(self.degrees) if not any(xi)]

    def d_slot(self, k: int) -> str:
        return f"d[{k + 1}]"

    def c_slot(self, k: int) -> str:
        return f"c[{k + 1}]"

    def c_degree(self, k: int) -> Degree:
        return tuple(-x for x in self.degrees[k])

    def coordinates(self, d: CentroidalDerivation) -> Coordinates:
        """Coordinates of a derivation of D in the homogeneous basis"""
        out: Coordinates = {}
        for xi, theta in d.terms.items():
            indices = [k for k, deg in enumerate(self.degrees) if deg == xi]
            columns = [_theta_vector(self.basis[k]) for k in indices]
            target = {j: Scalar.rational(t) for j, t in enumerate(theta) if t}
            solution = solve_linear(SparseMatrix.from_columns(self.nullity, columns), target) if indices else None
            if solution is None:
                raise ValueError(f"{d!r} does not lie in D")
            for local, value in solution.items():
                out[indices[local]] = value
        return out

    def derivation(self, coords: Coordinates) -> CentroidalDerivation:
        out = CentroidalDerivation(self.nullity)
        for k, value in coords.items():
            out = out + self.basis[k].scale(value.to_fraction())
        return out

    def bracket(self, u: Coordinates, v: Coordinates) -> Coordinates:
        out: Coordinates = {}
        for i, a in u.items():
            for j, b in v.items():
                entry = self.structure.get((i, j))
                if entry:
                    axpy(out, a * b, entry)
        return out

    def act_on_c(self, u: Coordinates, c: Coordinates) -> Coordinates:
        """(d . c)(d') = -c([d, d'])"""
        out: Coordinates = {}
        for i, a in u.items():
            for l in range(self.dim):
                entry = self.structure.get((i, l))
                if not entry:
                    continue
                value = ZERO
                for k, ck in c.items():
                    value = value + ck * entry.get(k, ZERO)
                if value:
                    axpy(out, -a, {l: value})
        return out

    def pair(self, c: Coordinates, d: Coordinates) -> Scalar:
        """c(d) in the dual bases"""
        total = ZERO
        for k, value in c.items():
            if k in d:
                total = total + value * d[k]
        return total

    def ev(self, degree: Degree, d0: Coordinates) -> Scalar:
        """ev_lambda of an element of D^0"""
        total = ZERO
        for k, value in d0.items():
            total = total + value * evaluate(self.basis[k].theta, degree)
        return total

    def to_json(self) -> List[Dict]:
        return [{"slot": self.d_slot(k), "xi": list(d.degree), "theta": [str(t) for t in d.theta]} for k, d in enumerate(self.basis)]

    def __repr__(self) -> str:
        return f"DAlgebra(dim={self.dim}, degrees={list(self.degrees)})"


def _validate_generator(ml: MultiloopAlgebra, d: CentroidalDerivation) -> None:
    if not d.is_homogeneous() or not d:
        raise NotCentroidal(f"Extra generator {d!r} must be a nonzero homogeneous derivation", witness=d.to_json())
    if not d.is_skew():
        raise NotSkew(f"theta(xi) != 0 for {d!r}", witness=d.to_json())
    if not ml.in_xi(d.degree):
        raise NotCentroidal(
            f"Degree {list(d.degree)} is outside the central grading group generated by {list(ml.orders)}",
            witness=d.to_json(),
        )


def build_D(
    ml: MultiloopAlgebra,
    extra_generators: Sequence[CentroidalDerivation] = (),
    bound: Optional[int] = None,
) -> DAlgebra:
    """D = degree derivations plus the bracket closure of the extra generators"""
    bound = settings.CLOSURE_DEGREE_BOUND if bound is None else bound
    n = ml.nullity
    for d in extra_generators:
        _validate_generator(ml, d)
    basis: List[CentroidalDerivation] = CentroidalDerivation.standard_basis(n)
    spans: Dict[Degree, Subspace] = {(0,) * n: Subspace(_theta_vector(d) for d in basis)}

    def admit(d: CentroidalDerivation) -> bool:
        xi = d.degree
        if max((abs(c) for c in xi), default=0) > bound:
            raise ClosureUnbounded(
                f"Closure of D reaches degree {list(xi)} beyond the bound {bound}", witness=d.to_json()
            )
        if spans.setdefault(xi, Subspace()).add(_theta_vector(d)):
            basis.append(d)
            return True
        return False

    for d in extra_generators:
        admit(d)
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                bracket = der_bracket(basis[i], basis[j])
                if bracket and admit(bracket):
                    changed = True
    d0 = [_theta_vector(d) for d in basis if not any(d.degree)]
    if rank(SparseMatrix.from_columns(n, d0)) != n:
        raise EvNotInjective("ev restricted to D^0 is not injective on Lambda")
    da = DAlgebra(ml, basis, bound)
    logging.info(f"Built D of dimension {da.dim} with degrees {[list(x) for x in da.degrees]}")
    return da


def derivation_space(da: DAlgebra) -> List[Dict[int, Coordinates]]:
    """Basis of Der(D, C): psi with psi([d1, d2]) = d1 . psi(d2) - d2 . psi(d1), as tables k -> psi(d_k)"""
    dim = da.dim
    rows: Dict[Tuple[int, int], Scalar] = {}
    row_index: Dict[Tuple[int, int, int], int] = {}

    def put(i: int, j: int, l: int, column: int, value: Scalar) -> None:
        if not value:
            return
        r = row_index.setdefault((i, j, l), len(row_index))
        rows[(r, column)] = rows.get((r, column), ZERO) + value

    for i in range(dim):
        for j in range(i + 1, dim):
            # psi([d_i, d_j])
            for k, a in da.structure.get((i, j), {}).items():
                for l in range(dim):
                    put(i, j, l, k * dim + l, a)
            # - d_i . psi(d_j) + d_j . psi(d_i)
            for l in range(dim):
                for image, sign, source in ((da.act_on_c({i: ONE}, {l: ONE}), -ONE, j), (da.act_on_c({j: ONE}, {l: ONE}), ONE, i)):
                    for target, value in image.items():
                        put(i, j, target, source * dim + l, sign * value)
    matrix = SparseMatrix(max(1, len(row_index)), dim * dim, {k: v for k, v in rows.items() if v})
    solutions = []
    for vector in kernel_basis(matrix):
        table: Dict[int, Coordinates] = {}
        for index, value in vector.items():
            k, l = divmod(index, dim)
            table.setdefault(k, {})[l] = value
        solutions.append(table)
    logging.debug(f"Der(D, C) has dimension {len(solutions)}")
    return solutions
