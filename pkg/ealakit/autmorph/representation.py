"""Lazily applied automorphisms of L or E: elementary words, kernel maps, grading-preserving maps and composites"""

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Callable, Dict, Optional, Sequence

from ealakit.dercoc import Coordinates
from ealakit.eala import EalaStructure
from ealakit.errors import NotNilpotent
from ealakit.exactnum import ZERO, Scalar, SparseMatrix, Subspace
from ealakit.glie import Degree, GradedAlgebra, GradedElement
from ealakit.multiloop import GammaAction, MultiloopAlgebra
from ealakit.rootsys import FiniteOrderAut

Operator = Callable[[Degree], SparseMatrix]
PsiTable = Dict[int, Coordinates]


def _loop_part(target: GradedAlgebra) -> MultiloopAlgebra:
    return target.ml if isinstance(target, EalaStructure) else target


class AutomorphismRep(ABC):
    kind: str = "automorphism"

    def __init__(self, target: GradedAlgebra):
        self.target = target

    @abstractmethod
    def apply(self, x: GradedElement) -> GradedElement:
        """Exact image of a finitely supported element"""

    @abstractmethod
    def inverse(self) -> "AutomorphismRep":
        """The inverse automorphism"""

    def __call__(self, x: GradedElement) -> GradedElement:
        return self.apply(x)

    def to_json(self) -> Dict:
        return {"kind": self.kind}


class ElementaryWord(AutomorphismRep):
    """exp(ad x_1) o ... o exp(ad x_k), each x_i ad-nilpotent"""

    kind = "elementary"

    def __init__(self, target: GradedAlgebra, entries: Sequence[GradedElement], max_steps: Optional[int] = None):
        super().__init__(target)
        self.entries = tuple(entries)
        self.max_steps = _loop_part(target).base.dim + 2 if max_steps is None else max_steps

    def exp_ad(self, x: GradedElement, v: GradedElement) -> GradedElement:
        total, term = v, v
        for k in range(1, self.max_steps + 1):
            term = self.target.bracket_unchecked(x, term).scale(Scalar.rational(Fraction(1, k)))
            if not term:
                return total
            total = total + term
        raise NotNilpotent(
            f"(ad x)^{self.max_steps} does not kill the argument", witness={"x": x.to_json(), "v": v.to_json()}
        )

    def apply(self, x: GradedElement) -> GradedElement:
        for entry in reversed(self.entries):
            x = self.exp_ad(entry, x)
        return x

    def inverse(self) -> "ElementaryWord":
        return ElementaryWord(self.target, [-x for x in reversed(self.entries)], self.max_steps)

    def to_json(self) -> Dict:
        return {"kind": self.kind, "entries": [x.to_json() for x in self.entries]}


class KernelMap(AutomorphismRep):
    """l + c + d -> l + (c + psi(d)) + d"""

    kind = "kernel"

    def __init__(self, target: EalaStructure, psi: PsiTable):
        super().__init__(target)
        self.psi: PsiTable = {int(k): {int(l): v for l, v in value.items() if v} for k, value in psi.items()}

    def image_of_d(self, d: Coordinates) -> Coordinates:
        out: Coordinates = {}
        for k, a in d.items():
            for l, value in self.psi.get(k, {}).items():
                out[l] = out.get(l, ZERO) + a * value
        return {l: v for l, v in out.items() if v}

    def apply(self, x: GradedElement) -> GradedElement:
        _, _, d = self.target.split(x)
        return x + self.target.c_element(self.image_of_d(d))

    def inverse(self) -> "KernelMap":
        return KernelMap(self.target, {k: {l: -v for l, v in value.items()} for k, value in self.psi.items()})

    def to_json(self) -> Dict:
        return {"kind": self.kind, "psi": psi_table_json(self.target.da, self.psi)}


class GradingPreserving(AutomorphismRep):
    """x tensor z^lambda -> g_lambda(x) tensor z^lambda on L, identity on C and D"""

    kind = "grading_preserving"

    def __init__(self, target: GradedAlgebra, operator: Operator, inverse_operator: Operator, label: str = "g"):
        super().__init__(target)
        self.operator = operator
        self.inverse_operator = inverse_operator
        self.label = label

    @classmethod
    def constant(cls, target: GradedAlgebra, matrix: SparseMatrix, inverse: SparseMatrix, label: str = "g"):
        return cls(target, lambda degree: matrix, lambda degree: inverse, label)

    @classmethod
    def from_automorphism(cls, target: GradedAlgebra, aut: FiniteOrderAut) -> "GradingPreserving":
        """aut tensor Id on g tensor S"""
        return cls.constant(target, aut.matrix, aut.inverse_matrix(), label=f"{aut!r} tensor Id")

    def apply_to_loop(self, l: GradedElement) -> GradedElement:
        ml = _loop_part(self.target)
        return ml.from_components(
            {degree: self.operator(degree).apply(vector) for degree, vector in ml.to_components(l).items()}
        )

    def apply(self, x: GradedElement) -> GradedElement:
        if isinstance(self.target, EalaStructure):
            l = self.target.split(x)[0]
            return self.apply_to_loop(l) + (x - l)
        return self.apply_to_loop(x)

    def inverse(self) -> "GradingPreserving":
        return GradingPreserving(self.target, self.inverse_operator, self.operator, f"{self.label}^-1")

    def lifted(self, target: GradedAlgebra) -> "GradingPreserving":
        return GradingPreserving(target, self.operator, self.inverse_operator, self.label)

    def to_json(self) -> Dict:
        return {"kind": self.kind, "label": self.label}


class GammaElement(GradingPreserving):
    """gamma_1^k_1 ... gamma_n^k_n acting on g tensor S"""

    kind = "gamma"

    def __init__(self, target: GradedAlgebra, ga: GammaAction, exponents: Sequence[int]):
        self.ga = ga
        self.exponents = tuple(k % m for k, m in zip(exponents, ga.orders))
        inverse = tuple((-k) % m for k, m in zip(self.exponents, ga.orders))
        super().__init__(target, self._word(self.exponents), self._word(inverse), f"gamma^{list(self.exponents)}")

    def _word(self, exponents: Sequence[int]) -> Operator:
        def operator(degree: Degree) -> SparseMatrix:
            matrix = SparseMatrix.identity(self.ga.ml.base.dim)
            for i, k in enumerate(exponents):
                for _ in range(k):
                    matrix = self.ga.operator(i, degree) @ matrix
            return matrix

        return operator

    def inverse(self) -> "GammaElement":
        return GammaElement(self.target, self.ga, [-k for k in self.exponents])

    def to_json(self) -> Dict:
        return {"kind": self.kind, "exponents": list(self.exponents)}


class Composite(AutomorphismRep):
    """f_1 o f_2 o ... o f_k"""

    kind = "composite"

    def __init__(self, parts: Sequence[AutomorphismRep]):
        if not parts:
            raise ValueError("A composite needs at least one automorphism")
        super().__init__(parts[0].target)
        self.parts = tuple(parts)

    def apply(self, x: GradedElement) -> GradedElement:
        for part in reversed(self.parts):
            x = part.apply(x)
        return x

    def inverse(self) -> "Composite":
        return Composite([p.inverse() for p in reversed(self.parts)])

    def to_json(self) -> Dict:
        return {"kind": self.kind, "parts": [p.to_json() for p in self.parts]}


class Identity(AutomorphismRep):
    kind = "identity"

    def apply(self, x: GradedElement) -> GradedElement:
        return x

    def inverse(self) -> "Identity":
        return self


def compose(*reps: AutomorphismRep) -> AutomorphismRep:
    return reps[0] if len(reps) == 1 else Composite(reps)


def inverse(rep: AutomorphismRep) -> AutomorphismRep:
    return rep.inverse()


def image_of_span(rep: AutomorphismRep, basis: Sequence[GradedElement]) -> Subspace:
    return Subspace(rep.apply(x).terms for x in basis)


def psi_sum(a: PsiTable, b: PsiTable) -> PsiTable:
    out: PsiTable = {}
    for table in (a, b):
        for k, value in table.items():
            row = out.setdefault(k, {})
            for l, v in value.items():
                row[l] = row.get(l, ZERO) + v
    return {k: {l: v for l, v in row.items() if v} for k, row in out.items()}


def psi_table_json(da, psi: PsiTable) -> Dict[str, Dict[str, str]]:
    return {
        da.d_slot(k): {da.c_slot(l): str(v) for l, v in sorted(value.items())}
        for k, value in sorted(psi.items())
        if value
    }
