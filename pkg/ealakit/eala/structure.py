"""E = L + C + D with the twisted product, its Cartan H = h + C^0 + D^0 and the invariant form"""

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from loguru import logger as logging

from ealakit.dercoc import AffineCocycle, Coordinates, DAlgebra, apply_derivation, evaluate, form_L, require_valid, sigma_D
from ealakit.exactnum import ONE, ZERO, Scalar
from ealakit.glie import Degree, GradedAlgebra, GradedElement, Window, span_sum
from ealakit.multiloop import MultiloopAlgebra
from ealakit.rootsys import Root
from ealakit.utils import timeit


class EalaStructure(GradedAlgebra):
    """L slots keep the labels of g; C and D basis vectors use the slots c[k] and d[k] at their own degrees"""

    def __init__(self, ml: MultiloopAlgebra, da: DAlgebra, tau: AffineCocycle):
        super().__init__(ml.nullity)
        self.ml = ml
        self.da = da
        self.tau = tau
        self.name = f"E({ml.name})"
        self.c_index: Dict[str, int] = {da.c_slot(k): k for k in range(da.dim)}
        self.d_index: Dict[str, int] = {da.d_slot(k): k for k in range(da.dim)}

    def split(self, x: GradedElement) -> Tuple[GradedElement, Coordinates, Coordinates]:
        l_terms, c, d = {}, {}, {}
        for (slot, degree), coeff in x.terms.items():
            if slot in self.c_index:
                c[self.c_index[slot]] = coeff
            elif slot in self.d_index:
                d[self.d_index[slot]] = coeff
            else:
                l_terms[(slot, degree)] = coeff
        return GradedElement(l_terms), c, d

    def c_element(self, coords: Coordinates) -> GradedElement:
        return GradedElement({(self.da.c_slot(k), self.da.c_degree(k)): v for k, v in coords.items()})

    def d_element(self, coords: Coordinates) -> GradedElement:
        return GradedElement({(self.da.d_slot(k), self.da.degrees[k]): v for k, v in coords.items()})

    def compose(self, l: GradedElement, c: Coordinates, d: Coordinates) -> GradedElement:
        return l + self.c_element(c) + self.d_element(d)

    def act_on_L(self, d: Coordinates, l: GradedElement) -> GradedElement:
        return span_sum(apply_derivation(self.da.basis[k], l).scale(a) for k, a in sorted(d.items()))

    def degree_basis(self, degree: Degree) -> List[GradedElement]:
        degree = tuple(degree)
        basis = self.ml.degree_basis(degree)
        basis += [self.c_element({k: ONE}) for k in range(self.da.dim) if self.da.c_degree(k) == degree]
        basis += [self.d_element({k: ONE}) for k in range(self.da.dim) if self.da.degrees[k] == degree]
        return basis

    def contains(self, x: GradedElement) -> bool:
        for (slot, degree) in x.terms:
            if slot in self.c_index and self.da.c_degree(self.c_index[slot]) != degree:
                return False
            if slot in self.d_index and self.da.degrees[self.d_index[slot]] != degree:
                return False
        return self.ml.contains(self.split(x)[0])

    def bracket_unchecked(self, x: GradedElement, y: GradedElement) -> GradedElement:
        """[l1+c1+d1, l2+c2+d2] = ([l1,l2] + d1.l2 - d2.l1) + (sigma(l1,l2) + d1.c2 - d2.c1 + tau(d1,d2)) + [d1,d2]"""
        l1, c1, d1 = self.split(x)
        l2, c2, d2 = self.split(y)
        da = self.da
        l = self.ml.bracket_unchecked(l1, l2) + self.act_on_L(d1, l2) - self.act_on_L(d2, l1)
        c: Coordinates = {}
        if l1 and l2:
            c.update(sigma_D(da, l1, l2))
        for part in (da.act_on_c(d1, c2), {k: -v for k, v in da.act_on_c(d2, c1).items()}, self.tau(d1, d2)):
            for k, value in part.items():
                total = c.get(k, ZERO) + value
                if total:
                    c[k] = total
                else:
                    c.pop(k, None)
        return self.compose(l, c, da.bracket(d1, d2))

    def form(self, x: GradedElement, y: GradedElement) -> Scalar:
        """(l1+c1+d1 | l2+c2+d2) = (l1|l2) + c1(d2) + c2(d1)"""
        l1, c1, d1 = self.split(x)
        l2, c2, d2 = self.split(y)
        return form_L(self.ml, l1, l2) + self.da.pair(c1, d2) + self.da.pair(c2, d1)

    @property
    def cartan_basis(self) -> List[GradedElement]:
        """h (the fixed Cartan of g at degree 0), then C^0, then D^0"""
        zero = (0,) * self.nullity
        d0 = self.da.d0_indices
        return (
            [self.ml.element(h, zero) for h in self.ml.cartan_fixed]
            + [self.c_element({k: ONE}) for k in d0]
            + [self.d_element({k: ONE}) for k in d0]
        )

    def functional(self, alpha: Root, degree: Degree) -> List[Scalar]:
        """Values of the root (alpha, lambda) on cartan_basis"""
        weight = self.ml.grading.weight_of_root[tuple(alpha)]
        d0 = self.da.d0_indices
        values = [Scalar.rational(w) for w in weight]
        values += [ZERO] * len(d0)
        values += [Scalar.rational(evaluate(self.da.basis[k].theta, degree)) for k in d0]
        return values

    def central_window_basis(self, window: Window) -> List[GradedElement]:
        return [self.c_element({k: ONE}) for k in range(self.da.dim) if window.contains(self.da.c_degree(k))]

    def core_window_basis(self, window: Window) -> List[GradedElement]:
        return self.ml.window_basis(window) + self.central_window_basis(window)

    def summary(self) -> Dict:
        return {
            "name": self.name,
            "nullity": self.nullity,
            "dim_H": len(self.cartan_basis),
            "dim_D": self.da.dim,
            "D": self.da.to_json(),
            "C_degrees": [list(self.da.c_degree(k)) for k in range(self.da.dim)],
            "tau": self.tau.to_json(),
        }

    def __repr__(self) -> str:
        return f"EalaStructure({self.name}, dim D = {self.da.dim})"


@timeit
def assemble_eala(ml: MultiloopAlgebra, da: DAlgebra, tau: Optional[AffineCocycle] = None) -> EalaStructure:
    if da.ml is not ml:
        raise ValueError("D was built over a different multiloop algebra")
    tau = require_valid(da, AffineCocycle.zero(da.dim) if tau is None else tau)
    e = EalaStructure(ml, da, tau)
    logging.info(f"Assembled {e.name}: dim H = {len(e.cartan_basis)}, dim D = {da.dim}")
    return e


def as_fraction_vector(values: List[Scalar]) -> Optional[Tuple[Fraction, ...]]:
    if not all(v.is_rational() for v in values):
        return None
    return tuple(v.to_fraction() for v in values)
