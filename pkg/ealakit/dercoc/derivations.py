"""Centroidal derivations sum chi^xi d_theta of a Lambda-graded algebra"""

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from ealakit.glie import Degree, GradedElement, add_degrees

HomWeight = Tuple[Fraction, ...]


def as_hom_weight(values: Iterable[Union[int, str, Fraction]]) -> HomWeight:
    return tuple(Fraction(v) for v in values)


def evaluate(theta: HomWeight, degree: Degree) -> Fraction:
    """ev_lambda(d_theta) = theta . lambda"""
    return sum((t * c for t, c in zip(theta, degree)), Fraction(0))


class CentroidalDerivation:
    """Finite sum of chi^xi d_theta, stored as xi -> theta with no zero theta"""

    __slots__ = ("nullity", "terms")

    def __init__(self, nullity: int, terms: Mapping[Degree, Sequence] = None):
        self.nullity = nullity
        self.terms: Dict[Degree, HomWeight] = {}
        for xi, theta in (terms or {}).items():
            theta = as_hom_weight(theta)
            if len(xi) != nullity or len(theta) != nullity:
                raise ValueError(f"Derivation term ({xi}, {theta}) does not have length {nullity}")
            if any(theta):
                self.terms[tuple(xi)] = theta

    @classmethod
    def homogeneous(cls, xi: Sequence[int], theta: Sequence) -> "CentroidalDerivation":
        return cls(len(xi), {tuple(xi): theta})

    @classmethod
    def degree_derivation(cls, theta: Sequence) -> "CentroidalDerivation":
        return cls.homogeneous((0,) * len(theta), theta)

    @classmethod
    def standard_basis(cls, nullity: int) -> List["CentroidalDerivation"]:
        """d_{e_1}, ..., d_{e_n} spanning the degree derivations"""
        return [cls.degree_derivation([1 if i == j else 0 for j in range(nullity)]) for i in range(nullity)]

    @property
    def degrees(self) -> List[Degree]:
        return sorted(self.terms)

    def is_homogeneous(self) -> bool:
        return len(self.terms) <= 1

    @property
    def degree(self) -> Degree:
        if len(self.terms) != 1:
            raise ValueError("Degree requested for a non-homogeneous derivation")
        return next(iter(self.terms))

    @property
    def theta(self) -> HomWeight:
        return self.terms[self.degree]

    def is_skew(self) -> bool:
        """Each term satisfies theta(xi) = 0"""
        return all(evaluate(theta, xi) == 0 for xi, theta in self.terms.items())

    def __add__(self, other: "CentroidalDerivation") -> "CentroidalDerivation":
        terms = dict(self.terms)
        for xi, theta in other.terms.items():
            base = terms.get(xi, (Fraction(0),) * self.nullity)
            terms[xi] = tuple(a + b for a, b in zip(base, theta))
        return CentroidalDerivation(self.nullity, terms)

    def scale(self, coeff: Union[int, Fraction]) -> "CentroidalDerivation":
        coeff = Fraction(coeff)
        return CentroidalDerivation(
            self.nullity, {xi: tuple(coeff * t for t in theta) for xi, theta in self.terms.items()}
        )

    def __neg__(self) -> "CentroidalDerivation":
        return self.scale(-1)

    def __sub__(self, other: "CentroidalDerivation") -> "CentroidalDerivation":
        return self + (-other)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CentroidalDerivation):
            return NotImplemented
        return self.nullity == other.nullity and self.terms == other.terms

    __hash__ = None

    def to_json(self) -> List[Dict]:
        return [{"xi": list(xi), "theta": [str(t) for t in theta]} for xi, theta in sorted(self.terms.items())]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"chi^{list(xi)} d_{[str(t) for t in theta]}" for xi, theta in sorted(self.terms.items()))


def apply_derivation(d: CentroidalDerivation, x: GradedElement) -> GradedElement:
    """chi^xi d_theta (l tensor z^lambda) = theta(lambda) l tensor z^(lambda + xi)"""
    terms = {}
    for (slot, degree), coeff in x.terms.items():
        for xi, theta in d.terms.items():
            value = evaluate(theta, degree)
            if value:
                key = (slot, add_degrees(degree, xi))
                terms[key] = terms.get(key, 0) + coeff * value
    return GradedElement(terms)


def der_bracket(d1: CentroidalDerivation, d2: CentroidalDerivation) -> CentroidalDerivation:
    """[chi^xi d_theta, chi^delta d_psi] = chi^(xi + delta) (theta(delta) d_psi - psi(xi) d_theta)"""
    out = CentroidalDerivation(d1.nullity)
    for xi, theta in d1.terms.items():
        for delta, psi in d2.terms.items():
            a, b = evaluate(theta, delta), evaluate(psi, xi)
            theta_out = tuple(a * p - b * t for t, p in zip(theta, psi))
            out = out + CentroidalDerivation(d1.nullity, {add_degrees(xi, delta): theta_out})
    return out
