"""Split simple Lie algebras in a Chevalley basis, with integral structure constants"""

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from loguru import logger as logging

from ealakit.errors import InvalidType
from ealakit.exactnum import ONE, ZERO, Scalar, SparseMatrix, SparseVector, as_scalar, axpy
from ealakit.rootsys.datum import Root, RootDatum, build_root_system

Table = Dict[Tuple[int, int], Dict[int, Scalar]]


def _add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _neg(a: Root) -> Root:
    return tuple(-x for x in a)


def _is_positive(a: Root) -> bool:
    return any(a) and all(c >= 0 for c in a)


class ChevalleyConstants:
    """Signs N_{a,b} fixed by taking N = +(p + 1) on every extraspecial pair"""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self._order = {r: k for k, r in enumerate(datum.positive_roots)}
        self._positive: Dict[Tuple[Root, Root], Fraction] = {}
        self.extraspecial: Dict[Root, Tuple[Root, Root]] = {}
        for xi in datum.positive_roots:
            alpha = next(
                (a for a in datum.positive_roots if datum.is_root(_add(xi, _neg(a))) and _is_positive(_add(xi, _neg(a)))),
                None,
            )
            if alpha is not None:
                self.extraspecial[xi] = (alpha, _add(xi, _neg(alpha)))

    def norm(self, a: Root) -> Fraction:
        return self.datum.form(a, a)

    def string_below(self, a: Root, b: Root) -> int:
        """Largest p with b - p a a root"""
        p = 0
        while self.datum.is_root(_add(b, tuple(-(p + 1) * c for c in a))):
            p += 1
        return p

    def __call__(self, a: Root, b: Root) -> int:
        value = self._value(a, b)
        if value.denominator != 1:
            raise InvalidType(f"Non-integral structure constant N({a}, {b}) = {value}")
        return int(value)

    def _value(self, a: Root, b: Root) -> Fraction:
        s = _add(a, b)
        if not any(s) or not self.datum.is_root(s):
            return Fraction(0)
        if _is_positive(a) and _is_positive(b):
            return self._positive_pair(a, b)
        if not _is_positive(a) and not _is_positive(b):
            return -self._positive_pair(_neg(a), _neg(b))
        # a + b + c = 0 with c sharing a sign with exactly one of a, b
        c = _neg(s)
        if _is_positive(b) == _is_positive(c):
            return self.norm(c) / self.norm(a) * self._value(b, c)
        return self.norm(c) / self.norm(b) * self._value(c, a)

    def _positive_pair(self, a: Root, b: Root) -> Fraction:
        key = (a, b)
        if key in self._positive:
            return self._positive[key]
        xi = _add(a, b)
        gamma, delta = self.extraspecial[xi]
        p = self.string_below(gamma, delta)
        if a == gamma:
            value = Fraction(p + 1)
        elif a == delta:
            value = Fraction(-(p + 1))
        elif self._order[a] > self._order[b]:
            value = -self._positive_pair(b, a)
        else:
            term = Fraction(0)
            b_gamma = _add(b, _neg(gamma))
            if self.datum.is_root(b_gamma):
                term += self._value(b, _neg(gamma)) * self._value(a, _neg(delta)) / self.norm(b_gamma)
            a_gamma = _add(a, _neg(gamma))
            if self.datum.is_root(a_gamma):
                term += self._value(_neg(gamma), a) * self._value(b, _neg(delta)) / self.norm(a_gamma)
            value = self.norm(xi) / (p + 1) * term
        self._positive[key] = value
        return value


class SimpleLieAlgebra:
    """Basis h[1..rank], then x[alpha] for positive roots, then x[-alpha]; `table` holds nonzero brackets"""

    def __init__(self, datum: RootDatum, table: Optional[Table] = None):
        self.datum = datum
        self.rank = datum.rank
        zero = (0,) * self.rank
        self.weights: Tuple[Root, ...] = (zero,) * self.rank + datum.positive_roots + tuple(
            _neg(r) for r in datum.positive_roots
        )
        self.dim = len(self.weights)
        self.labels: Tuple[str, ...] = tuple(
            f"h[{i + 1}]" for i in range(self.rank)
        ) + tuple("x[" + ",".join(str(c) for c in r) + "]" for r in self.weights[self.rank:])
        self.index = {label: i for i, label in enumerate(self.labels)}
        self.root_index = {r: i for i, r in enumerate(self.weights) if i >= self.rank}
        self.constants = ChevalleyConstants(datum)
        self.table: Table = table if table is not None else self._chevalley_table()
        self._killing: Optional[Dict[Tuple[int, int], Scalar]] = None

    @property
    def name(self) -> str:
        return self.datum.name

    def coroot(self, alpha: Root) -> Dict[int, Scalar]:
        """h_alpha in the h[i] basis"""
        norm = self.datum.form(alpha, alpha)
        out = {}
        for i in range(self.rank):
            if alpha[i]:
                simple = self.datum.simple_roots[i]
                out[i] = Scalar.rational(alpha[i] * self.datum.form(simple, simple) / norm)
        return out

    def _chevalley_table(self) -> Table:
        table: Table = {}

        def put(i: int, j: int, vector: Dict[int, Scalar]) -> None:
            if vector:
                table[(i, j)] = vector
                table[(j, i)] = {k: -v for k, v in vector.items()}

        for i in range(self.rank):
            simple = self.datum.simple_roots[i]
            for alpha, k in self.root_index.items():
                put(i, k, {k: Scalar.rational(self.datum.pairing(alpha, simple))})
        for alpha, k in self.root_index.items():
            for beta, l in self.root_index.items():
                if k >= l:
                    continue
                total = _add(alpha, beta)
                if not any(total):
                    put(k, l, self.coroot(alpha))
                elif total in self.root_index:
                    put(k, l, {self.root_index[total]: Scalar.rational(self.constants(alpha, beta))})
        logging.debug(f"Chevalley table for {self.name}: {len(table)} nonzero brackets")
        return table

    def with_table_entry(self, i: int, j: int, vector: Dict[int, Scalar]) -> "SimpleLieAlgebra":
        """Copy whose single entry [e_i, e_j] is replaced; [e_j, e_i] is left alone"""
        table = {key: dict(value) for key, value in self.table.items()}
        vector = {k: as_scalar(v) for k, v in vector.items() if as_scalar(v)}
        if vector:
            table[(i, j)] = vector
        else:
            table.pop((i, j), None)
        return SimpleLieAlgebra(self.datum, table)

    def basis_vector(self, i: int) -> Dict[int, Scalar]:
        return {i: ONE}

    def bracket(self, u: SparseVector, v: SparseVector) -> Dict[int, Scalar]:
        out: Dict[int, Scalar] = {}
        for i, a in u.items():
            for j, b in v.items():
                entry = self.table.get((i, j))
                if entry:
                    axpy(out, a * b, entry)
        return out

    def ad_matrix(self, u: SparseVector) -> SparseMatrix:
        return SparseMatrix.from_columns(
            self.dim, [self.bracket(u, {j: ONE}) for j in range(self.dim)]
        )

    def structure_constant(self, alpha: Root, beta: Root) -> int:
        return self.constants(tuple(alpha), tuple(beta))

    @property
    def killing_matrix(self) -> Dict[Tuple[int, int], Scalar]:
        """Nonzero entries tr(ad e_i ad e_j); only weight-opposite pairs can contribute"""
        if self._killing is None:
            entries = {}
            for i in range(self.dim):
                for j in range(i, self.dim):
                    if any(_add(self.weights[i], self.weights[j])):
                        continue
                    trace = ZERO
                    for k in range(self.dim):
                        inner = self.table.get((j, k))
                        if not inner:
                            continue
                        trace = trace + self.bracket({i: ONE}, inner).get(k, ZERO)
                    if trace:
                        entries[(i, j)] = entries[(j, i)] = trace
            self._killing = entries
        return self._killing

    def killing(self, u: SparseVector, v: SparseVector) -> Scalar:
        total = ZERO
        matrix = self.killing_matrix
        for i, a in u.items():
            for j, b in v.items():
                value = matrix.get((i, j))
                if value:
                    total = total + a * b * value
        return total

    def jacobi_witness(self) -> Optional[List[int]]:
        """First basis triple violating the Jacobi identity, or None"""
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(j + 1, self.dim):
                    ei, ej, ek = {i: ONE}, {j: ONE}, {k: ONE}
                    total: Dict[int, Scalar] = {}
                    axpy(total, ONE, self.bracket(ei, self.bracket(ej, ek)))
                    axpy(total, ONE, self.bracket(ej, self.bracket(ek, ei)))
                    axpy(total, ONE, self.bracket(ek, self.bracket(ei, ej)))
                    if total:
                        return [i, j, k]
        return None

    def describe(self, vector: SparseVector) -> Dict[str, str]:
        return {self.labels[k]: str(v) for k, v in sorted(vector.items())}

    def __repr__(self) -> str:
        return f"SimpleLieAlgebra({self.name}, dim={self.dim})"


def build_simple_algebra(series: str, rank: int) -> SimpleLieAlgebra:
    datum = build_root_system(series, rank)
    if not datum.is_reduced():
        raise InvalidType(f"{datum.name} is not reduced; no simple algebra has it as root system")
    algebra = SimpleLieAlgebra(datum)
    logging.info(f"Built {algebra.name} of dimension {algebra.dim}")
    return algebra


def roots_document(algebra: SimpleLieAlgebra) -> Dict:
    """Roots and the nonzero constants N_{alpha, beta}, in basis order"""
    datum = algebra.datum
    constants = []
    for alpha in datum.nonzero_roots:
        for beta in datum.nonzero_roots:
            value = algebra.structure_constant(alpha, beta)
            if value:
                constants.append({"alpha": list(alpha), "beta": list(beta), "N": value})
    return {
        "series": datum.series,
        "rank": datum.rank,
        "dimension": algebra.dim,
        "cartan_matrix": [list(r) for r in datum.cartan_matrix],
        "basis": list(algebra.labels),
        "roots": [list(r) for r in datum.roots],
        "constants": constants,
    }
