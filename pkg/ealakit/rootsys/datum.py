"""Finite root systems (0 included) built from Cartan matrices"""

from collections import deque
from fractions import Fraction
from typing import Dict, FrozenSet, List, Sequence, Tuple

from loguru import logger as logging

from ealakit.errors import InvalidType

Root = Tuple[int, ...]

ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
    "BC": lambda n: 2 * n * n + 2 * n,
}


def validate_type(series: str, rank: int) -> None:
    minimum = {"A": 1, "B": 2, "C": 2, "D": 4, "BC": 1}
    match series:
        case "A" | "B" | "C" | "D" | "BC" if rank >= minimum[series]:
            return
        case "E" if rank in (6, 7, 8):
            return
        case "F" if rank == 4:
            return
        case "G" if rank == 2:
            return
    raise InvalidType(f"No root system of type {series}{rank}", witness=[series, rank])


def dynkin_to_cartan(series: str, rank: int) -> List[List[int]]:
    """Cartan matrix with a[i][j] = <alpha_j, alpha_i^vee>"""
    validate_type(series, rank)
    if series == "BC":
        return dynkin_to_cartan("B", rank) if rank > 1 else [[2]]
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j], a[j][i] = aij, aji

    match series:
        case "A":
            for i in range(rank - 1):
                link(i, i + 1)
        case "B":
            for i in range(rank - 2):
                link(i, i + 1)
            # final root is shorter
            link(rank - 2, rank - 1, -1, -2)
        case "C":
            for i in range(rank - 2):
                link(i, i + 1)
            # final root is longer
            link(rank - 2, rank - 1, -2, -1)
        case "D":
            for i in range(rank - 2):
                link(i, i + 1)
            link(rank - 3, rank - 1)
        case "E":
            for i in range(rank - 2):
                link(i, i + 1)
            link(rank - 4, rank - 1)
        case "F":
            link(0, 1)
            link(1, 2, -2, -1)
            link(2, 3)
        case "G":
            link(0, 1, -3, -1)
    return a


def symmetrizer(cartan: Sequence[Sequence[int]]) -> List[Fraction]:
    """Squared lengths (alpha_i, alpha_i), longest roots normalised to 2"""
    rank = len(cartan)
    norms: List[Fraction] = [Fraction(0)] * rank
    for start in range(rank):
        if norms[start]:
            continue
        norms[start] = Fraction(2)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(rank):
                if i != j and cartan[i][j] and not norms[j]:
                    norms[j] = norms[i] * cartan[i][j] / cartan[j][i]
                    queue.append(j)
    longest = max(norms)
    return [n * 2 / longest for n in norms]


class RootDatum:
    """Root system given by a Gram matrix on simple roots; roots are integer coordinate vectors"""

    def __init__(
        self,
        series: str,
        rank: int,
        cartan_matrix: Sequence[Sequence[int]],
        gram: Sequence[Sequence[Fraction]],
        roots: Sequence[Root],
    ):
        self.series = series
        self.rank = rank
        self.cartan_matrix = tuple(tuple(int(v) for v in row) for row in cartan_matrix)
        self.gram = tuple(tuple(Fraction(v) for v in row) for row in gram)
        zero = (0,) * rank
        nonzero = {tuple(r) for r in roots if any(r)}
        positive = sorted(
            (r for r in nonzero if self._is_positive(r)),
            key=lambda r: (sum(r), tuple(-c for c in r)),
        )
        self.positive_roots: Tuple[Root, ...] = tuple(positive)
        self.roots: Tuple[Root, ...] = (zero,) + self.positive_roots + tuple(
            tuple(-c for c in r) for r in self.positive_roots
        )
        self._root_set: FrozenSet[Root] = frozenset(self.roots)

    @staticmethod
    def _is_positive(root: Root) -> bool:
        return all(c >= 0 for c in root)

    @classmethod
    def from_simple_roots(
        cls, series: str, rank: int, gram: Sequence[Sequence[Fraction]], roots: Sequence[Root]
    ) -> "RootDatum":
        cartan = [
            [int(2 * gram[i][j] / gram[i][i]) for j in range(rank)] for i in range(rank)
        ]
        return cls(series, rank, cartan, gram, roots)

    @property
    def simple_roots(self) -> Tuple[Root, ...]:
        return tuple(tuple(1 if i == j else 0 for j in range(self.rank)) for i in range(self.rank))

    @property
    def nonzero_roots(self) -> Tuple[Root, ...]:
        return self.roots[1:]

    def is_root(self, vector: Root) -> bool:
        return tuple(vector) in self._root_set

    def form(self, beta: Root, alpha: Root) -> Fraction:
        return sum(
            (beta[i] * self.gram[i][j] * alpha[j] for i in range(self.rank) for j in range(self.rank)),
            Fraction(0),
        )

    def pairing(self, beta: Root, alpha: Root) -> int:
        """<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)"""
        value = 2 * self.form(beta, alpha) / self.form(alpha, alpha)
        if value.denominator != 1:
            raise InvalidType(f"Non-integral pairing <{beta}, {alpha}^vee> = {value}")
        return int(value)

    def height(self, root: Root) -> int:
        return sum(root)

    def indivisible_roots(self) -> Tuple[Root, ...]:
        return tuple(
            r
            for r in self.nonzero_roots
            if not (all(c % 2 == 0 for c in r) and self.is_root(tuple(c // 2 for c in r)))
        )

    def is_reduced(self) -> bool:
        return len(self.indivisible_roots()) == len(self.nonzero_roots)

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    def to_dict(self) -> Dict:
        return {
            "series": self.series,
            "rank": self.rank,
            "cartan_matrix": [list(r) for r in self.cartan_matrix],
            "roots": [list(r) for r in self.roots],
        }

    def __repr__(self) -> str:
        return f"RootDatum({self.name}, {len(self.roots) - 1} nonzero roots)"


def _reflection_closure(cartan: Sequence[Sequence[int]]) -> List[Root]:
    rank = len(cartan)
    simple = [tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(rank):
            # s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
            coeff = sum(beta[j] * cartan[i][j] for j in range(rank))
            image = tuple(b - coeff * (1 if k == i else 0) for k, b in enumerate(beta))
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return sorted(seen)


def build_root_system(series: str, rank: int) -> RootDatum:
    validate_type(series, rank)
    cartan = dynkin_to_cartan(series, rank)
    norms = symmetrizer(cartan)
    gram = [[cartan[i][j] * norms[i] / 2 for j in range(rank)] for i in range(rank)]
    roots = _reflection_closure(cartan)
    if series == "BC":
        shortest = min(
            sum(r[i] * gram[i][j] * r[j] for i in range(rank) for j in range(rank)) for r in roots
        )
        short = [
            r
            for r in roots
            if sum(r[i] * gram[i][j] * r[j] for i in range(rank) for j in range(rank)) == shortest
        ]
        roots = roots + [tuple(2 * c for c in r) for r in short]
    datum = RootDatum(series, rank, cartan, gram, roots)
    expected = ROOT_COUNTS[series](rank)
    if len(datum.nonzero_roots) != expected:
        raise InvalidType(
            f"Root closure of {series}{rank} gave {len(datum.nonzero_roots)} roots, expected {expected}"
        )
    logging.debug(f"Built root system {datum.name} with {expected} nonzero roots")
    return datum
