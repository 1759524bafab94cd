"""Finitely supported elements of a Z^n-graded algebra and the finite degree windows used by checks"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple

from ealakit.exactnum import ZERO, Scalar, as_scalar

Degree = Tuple[int, ...]
Key = Tuple[str, Degree]


def add_degrees(a: Degree, b: Degree) -> Degree:
    return tuple(x + y for x, y in zip(a, b))


def neg_degree(a: Degree) -> Degree:
    return tuple(-x for x in a)


class GradedElement:
    """Sum of coefficient * (slot tensor z^degree); never stores a zero coefficient"""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Key, Scalar] = None):
        self.terms: Dict[Key, Scalar] = {}
        for (slot, degree), coeff in (terms or {}).items():
            coeff = as_scalar(coeff)
            if coeff:
                self.terms[(slot, tuple(degree))] = coeff

    @classmethod
    def monomial(cls, slot: str, degree: Iterable[int], coeff=1) -> "GradedElement":
        return cls({(slot, tuple(degree)): as_scalar(coeff)})

    @classmethod
    def from_json(cls, items: Iterable[Mapping]) -> "GradedElement":
        out = cls()
        for item in items:
            out = out + cls.monomial(item["slot"], item["degree"], Scalar.parse(item["coeff"]))
        return out

    def to_json(self) -> List[Dict]:
        return [
            {"slot": slot, "degree": list(degree), "coeff": str(coeff)}
            for (slot, degree), coeff in sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        ]

    def degrees(self) -> List[Degree]:
        return sorted({degree for _, degree in self.terms})

    def slots(self) -> List[str]:
        return sorted({slot for slot, _ in self.terms})

    def component(self, degree: Degree) -> "GradedElement":
        degree = tuple(degree)
        return GradedElement({k: v for k, v in self.terms.items() if k[1] == degree})

    def components(self) -> Iterator[Tuple[Degree, "GradedElement"]]:
        for degree in self.degrees():
            yield degree, self.component(degree)

    def restrict_slots(self, slots: Iterable[str]) -> "GradedElement":
        keep = set(slots)
        return GradedElement({k: v for k, v in self.terms.items() if k[0] in keep})

    def truncate(self, window: "Window") -> "GradedElement":
        return GradedElement({k: v for k, v in self.terms.items() if window.contains(k[1])})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def coefficient(self, slot: str, degree: Degree) -> Scalar:
        return self.terms.get((slot, tuple(degree)), ZERO)

    def scale(self, coeff) -> "GradedElement":
        coeff = as_scalar(coeff)
        return GradedElement({k: coeff * v for k, v in self.terms.items()})

    def __add__(self, other: "GradedElement") -> "GradedElement":
        terms = dict(self.terms)
        for key, value in other.terms.items():
            terms[key] = terms.get(key, ZERO) + value
        return GradedElement(terms)

    def __neg__(self) -> "GradedElement":
        return GradedElement({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return self + (-other)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"({coeff}){slot}@{list(degree)}" for (slot, degree), coeff in sorted(self.terms.items())]
        return " + ".join(parts)


def span_sum(elements: Iterable[GradedElement]) -> GradedElement:
    total = GradedElement()
    for element in elements:
        total = total + element
    return total


@dataclass(frozen=True)
class Window:
    """The box {lambda in Z^nullity : |lambda_i| <= bound}"""

    bound: int
    nullity: int

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError(f"Window bound must be a positive integer, got {self.bound}")
        if self.nullity < 0:
            raise ValueError(f"Nullity must be non-negative, got {self.nullity}")

    @cached_property
    def degrees(self) -> Tuple[Degree, ...]:
        return tuple(product(range(-self.bound, self.bound + 1), repeat=self.nullity))

    def contains(self, degree: Degree) -> bool:
        return len(degree) == self.nullity and all(abs(c) <= self.bound for c in degree)

    def shrink(self, step: int = 1) -> "Window":
        return Window(max(1, self.bound - step), self.nullity)

    @property
    def zero(self) -> Degree:
        return (0,) * self.nullity
