"""Affine cocycles tau: D x D -> C"""

from itertools import product
from typing import Dict, Iterable, Mapping, Tuple

from loguru import logger as logging

from ealakit.errors import InvalidCocycle
from ealakit.exactnum import ONE, ZERO, as_scalar, axpy
from ealakit.dercoc.dalgebra import Coordinates, DAlgebra
from ealakit.schemas import Verdict


class AffineCocycle:
    """Table on ordered basis pairs; a pair listed one way only is read antisymmetrically"""

    def __init__(self, dim: int, table: Mapping[Tuple[int, int], Mapping[int, object]] = None):
        self.dim = dim
        self.table: Dict[Tuple[int, int], Coordinates] = {}
        for (i, j), value in (table or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise InvalidCocycle(f"tau entry ({i}, {j}) refers to a missing basis element of D", witness=[i, j])
            coords = {}
            for k, c in value.items():
                k = int(k)
                if not 0 <= k < dim:
                    raise InvalidCocycle(f"tau({i}, {j}) has a component on missing c[{k + 1}]", witness=[i, j, k])
                c = as_scalar(c)
                if c:
                    coords[k] = c
            if coords:
                self.table[(i, j)] = coords

    @classmethod
    def zero(cls, dim: int) -> "AffineCocycle":
        return cls(dim)

    @classmethod
    def from_entries(cls, dim: int, entries: Iterable[Mapping]) -> "AffineCocycle":
        """Manifest form: [{"d1": i, "d2": j, "value": {k: coeff}}]"""
        return cls(dim, {(int(e["d1"]), int(e["d2"])): e["value"] for e in entries})

    def value(self, i: int, j: int) -> Coordinates:
        if (i, j) in self.table:
            return dict(self.table[(i, j)])
        if (j, i) in self.table:
            return {k: -v for k, v in self.table[(j, i)].items()}
        return {}

    def __call__(self, u: Coordinates, v: Coordinates) -> Coordinates:
        out: Coordinates = {}
        for i, a in u.items():
            for j, b in v.items():
                entry = self.value(i, j)
                if entry:
                    axpy(out, a * b, entry)
        return out

    def is_zero(self) -> bool:
        return not self.table

    def to_json(self):
        return [
            {"d1": i, "d2": j, "value": {str(k): str(v) for k, v in sorted(value.items())}}
            for (i, j), value in sorted(self.table.items())
        ]


def _basis(k: int) -> Coordinates:
    return {k: ONE}


def validate_affine_cocycle(da: DAlgebra, tau: AffineCocycle) -> Verdict:
    """Alternation, grading, tau(D^0, D) = 0, cyclic symmetry and the cocycle identity on all basis triples"""
    if tau.dim != da.dim:
        return Verdict.fail("tau", f"tau is defined on {tau.dim} basis elements, D has {da.dim}")
    for (i, j), value in tau.table.items():
        if i == j:
            return Verdict.fail("tau", "tau(d, d) != 0", witness=[i, j])
        if (j, i) in tau.table:
            total = dict(value)
            axpy(total, ONE, tau.table[(j, i)])
            if total:
                return Verdict.fail("tau", "tau is not alternating", witness=[i, j])
        expected = tuple(a + b for a, b in zip(da.degrees[i], da.degrees[j]))
        for k in value:
            if da.c_degree(k) != expected:
                return Verdict.fail("tau", "tau(d_i, d_j) leaves C^(xi_i + xi_j)", witness=[i, j, k])
    for i in da.d0_indices:
        for j in range(da.dim):
            if tau.value(i, j):
                return Verdict.fail("tau", "tau(d^0, d) != 0 for a degree derivation", witness=[i, j])
    for i, j, k in product(range(da.dim), repeat=3):
        if tau.value(i, j).get(k, ZERO) != tau.value(j, k).get(i, ZERO):
            return Verdict.fail("tau", "tau(d1,d2)(d3) != tau(d2,d3)(d1)", witness=[i, j, k])
    for i in range(da.dim):
        for j in range(i + 1, da.dim):
            for k in range(j + 1, da.dim):
                di, dj, dk = _basis(i), _basis(j), _basis(k)
                lhs: Coordinates = {}
                for a, b, c in ((di, dj, dk), (dj, dk, di), (dk, di, dj)):
                    axpy(lhs, ONE, da.act_on_c(a, tau(b, c)))
                    axpy(lhs, -ONE, tau(da.bracket(a, b), c))
                if lhs:
                    return Verdict.fail("tau", "cocycle identity fails", witness=[i, j, k])
    logging.debug(f"Affine cocycle with {len(tau.table)} entries is valid")
    return Verdict.ok("tau", "zero cocycle" if tau.is_zero() else f"{len(tau.table)} entries satisfy every identity")


def require_valid(da: DAlgebra, tau: AffineCocycle) -> AffineCocycle:
    verdict = validate_affine_cocycle(da, tau)
    if not verdict.passed:
        logging.error(f"Rejected affine cocycle: {verdict.detail}")
        raise InvalidCocycle(verdict.detail, witness=verdict.witness)
    return tau

