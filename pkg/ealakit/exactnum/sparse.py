"""Sparse exact linear algebra over Q(z_m): matrices, echelon spans, kernels and joint eigenprojectors"""

from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from loguru import logger as logging

from ealakit.errors import NonCommuting, WrongOrder
from ealakit.exactnum.scalar import ONE, ZERO, Scalar, as_scalar

SparseVector = Dict[Hashable, Scalar]


def axpy(target: SparseVector, coeff: Scalar, source: SparseVector) -> None:
    """target += coeff * source, in place, dropping cancelled entries"""
    for key, value in source.items():
        updated = target.get(key, ZERO) + coeff * value
        if updated:
            target[key] = updated
        else:
            target.pop(key, None)


def scaled(vector: SparseVector, coeff: Scalar) -> SparseVector:
    if not coeff:
        return {}
    return {key: coeff * value for key, value in vector.items()}


class SparseMatrix:
    """rows x cols matrix stored column-major; no explicit zeros"""

    __slots__ = ("rows", "cols", "_columns")

    def __init__(self, rows: int, cols: int, entries: Optional[Dict[Tuple[int, int], Scalar]] = None):
        self.rows = rows
        self.cols = cols
        self._columns: Dict[int, Dict[int, Scalar]] = {}
        for (r, c), value in (entries or {}).items():
            value = as_scalar(value)
            if not value:
                continue
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"Entry {(r, c)} outside a {rows}x{cols} matrix")
            self._columns.setdefault(c, {})[r] = value

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): ONE for i in range(n)})

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Dict[int, Scalar]]) -> "SparseMatrix":
        entries = {}
        for c, column in enumerate(columns):
            for r, value in column.items():
                entries[(r, c)] = value
        return cls(rows, len(columns), entries)

    @property
    def entries(self) -> Dict[Tuple[int, int], Scalar]:
        return {(r, c): v for c, col in self._columns.items() for r, v in col.items()}

    def column(self, c: int) -> Dict[int, Scalar]:
        return dict(self._columns.get(c, {}))

    def row_dicts(self) -> List[Dict[int, Scalar]]:
        rows: List[Dict[int, Scalar]] = [{} for _ in range(self.rows)]
        for c, col in self._columns.items():
            for r, v in col.items():
                rows[r][c] = v
        return rows

    def apply(self, vector: Dict[int, Scalar]) -> Dict[int, Scalar]:
        out: Dict[int, Scalar] = {}
        for c, coeff in vector.items():
            if coeff and c in self._columns:
                axpy(out, coeff, self._columns[c])
        return out

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"Shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        product = SparseMatrix(self.rows, other.cols)
        for c, col in other._columns.items():
            image = self.apply(col)
            if image:
                product._columns[c] = image
        return product

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self._combine(other, ONE)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self._combine(other, -ONE)

    def _combine(self, other: "SparseMatrix", sign: Scalar) -> "SparseMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("Shape mismatch")
        result = SparseMatrix(self.rows, self.cols)
        for c in set(self._columns) | set(other._columns):
            col = dict(self._columns.get(c, {}))
            axpy(col, sign, other._columns.get(c, {}))
            if col:
                result._columns[c] = col
        return result

    def scale(self, coeff: Scalar) -> "SparseMatrix":
        result = SparseMatrix(self.rows, self.cols)
        for c, col in self._columns.items():
            image = scaled(col, coeff)
            if image:
                result._columns[c] = image
        return result

    def power(self, exponent: int) -> "SparseMatrix":
        result = SparseMatrix.identity(self.rows)
        for _ in range(exponent):
            result = self @ result
        return result

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    __hash__ = None

    def is_identity(self) -> bool:
        return self == SparseMatrix.identity(self.rows)

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={sum(len(c) for c in self._columns.values())})"


class Subspace:
    """Exact span kept in reduced echelon form; each pivot is the smallest key of its row"""

    def __init__(self, vectors: Iterable[SparseVector] = ()):
        self._rows: Dict[Hashable, SparseVector] = {}
        for vector in vectors:
            self.add(vector)

    def reduce(self, vector: SparseVector) -> SparseVector:
        residue = dict(vector)
        # pivot rows are fully reduced, so one pass over the pivots present suffices
        for pivot in [k for k in residue if k in self._rows]:
            coeff = residue.get(pivot)
            if coeff:
                axpy(residue, -coeff, self._rows[pivot])
        return residue

    def add(self, vector: SparseVector) -> bool:
        """Adds the vector; returns False if it already lay in the span"""
        residue = self.reduce(vector)
        if not residue:
            return False
        pivot = min(residue)
        row = scaled(residue, residue[pivot].inv())
        for other in self._rows.values():
            coeff = other.get(pivot)
            if coeff:
                axpy(other, -coeff, row)
        self._rows[pivot] = row
        return True

    def contains(self, vector: SparseVector) -> bool:
        return not self.reduce(vector)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[Hashable]:
        return sorted(self._rows)

    def basis(self) -> List[SparseVector]:
        return [dict(self._rows[p]) for p in self.pivots]

    def row(self, pivot: Hashable) -> SparseVector:
        return dict(self._rows[pivot])

    def equals(self, other: "Subspace") -> bool:
        return self.rank == other.rank and all(other.contains(v) for v in self._rows.values())

    def issubset(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self._rows.values())


def kernel_basis(matrix: SparseMatrix) -> List[Dict[int, Scalar]]:
    """Exact basis of the right null space, one vector per free column in increasing order"""
    echelon = Subspace(row for row in matrix.row_dicts() if row)
    pivots = set(echelon.pivots)
    basis = []
    for free in range(matrix.cols):
        if free in pivots:
            continue
        vector = {free: ONE}
        for p in echelon.pivots:
            coeff = echelon.row(p).get(free)
            if coeff:
                vector[p] = -coeff
        basis.append(vector)
    return basis


def rank(matrix: SparseMatrix) -> int:
    return Subspace(row for row in matrix.row_dicts() if row).rank


def solve_linear(matrix: SparseMatrix, rhs: Dict[int, Scalar]) -> Optional[Dict[int, Scalar]]:
    """One exact solution x of matrix x = rhs (free variables set to zero), or None"""
    marker = matrix.cols
    rows = matrix.row_dicts()
    for r, value in rhs.items():
        if value:
            rows[r][marker] = as_scalar(value)
    echelon = Subspace(row for row in rows if row)
    if marker in echelon.pivots:
        return None
    solution = {}
    for p in echelon.pivots:
        value = echelon.row(p).get(marker)
        if value:
            solution[p] = value
    return solution


def commutes(a: SparseMatrix, b: SparseMatrix) -> bool:
    return a @ b == b @ a


def simultaneous_projector(
    ops: Sequence[SparseMatrix], eigenchar: Sequence[int], orders: Sequence[int]
) -> SparseMatrix:
    """Projector onto {x : ops[i] x = z_{orders[i]}^{eigenchar[i]} x for all i}"""
    if not (len(ops) == len(eigenchar) == len(orders)):
        raise ValueError("ops, eigenchar and orders must have the same length")
    for i, (op, order) in enumerate(zip(ops, orders)):
        if not op.power(order).is_identity():
            raise WrongOrder(f"Operator {i} does not have order dividing {order}", witness=i)
        for j in range(i + 1, len(ops)):
            if not commutes(op, ops[j]):
                raise NonCommuting(f"Operators {i} and {j} do not commute", witness=[i, j])
    size = ops[0].rows if ops else 0
    projector = SparseMatrix.identity(size)
    for op, residue, order in zip(ops, eigenchar, orders):
        factor = SparseMatrix(size, size)
        step = SparseMatrix.identity(size)
        for j in range(order):
            factor = factor + step.scale(Scalar.zeta(order, -residue * j))
            step = op @ step
        projector = factor.scale(Scalar.rational(1) / order) @ projector
    logging.debug(f"Projector for eigencharacter {tuple(eigenchar)} has {len(projector.entries)} entries")
    return projector


def image_basis(projector: SparseMatrix) -> List[Dict[int, Scalar]]:
    """Basis of the image of an idempotent, read off as kernel of (P - Id)"""
    return kernel_basis(projector - SparseMatrix.identity(projector.rows))
