"""The group Lambda / Xi acting on g tensor S, and L recovered as its fixed points"""

from typing import Dict, List

from loguru import logger as logging

from ealakit.exactnum import ONE, Scalar, SparseMatrix, Subspace, axpy, kernel_basis
from ealakit.glie import Degree, GradedElement, Window
from ealakit.multiloop.algebra import BaseVector, MultiloopAlgebra
from ealakit.schemas import Verdict


class GammaAction:
    """gamma_i . (x tensor z^lambda) = z_{m_i}^{lambda_i} sigma_i^{-1}(x) tensor z^lambda"""

    def __init__(self, ml: MultiloopAlgebra):
        self.ml = ml
        self.orders = ml.orders
        self.inverses = [aut.inverse_matrix() for aut in ml.auts]

    @property
    def generators(self) -> int:
        return len(self.orders)

    def operator(self, i: int, degree: Degree) -> SparseMatrix:
        """gamma_i on g tensor z^degree, as a matrix on the Chevalley basis"""
        return self.inverses[i].scale(Scalar.zeta(self.orders[i], degree[i]))

    def act(self, i: int, x: GradedElement) -> GradedElement:
        """gamma_i applied to an element of g tensor S"""
        out: Dict[Degree, BaseVector] = {}
        for degree, vector in self.ml.to_components(x).items():
            out[degree] = self.operator(i, degree).apply(vector)
        return self.ml.from_components(out)

    def act_word(self, exponents: Degree, x: GradedElement) -> GradedElement:
        """gamma_1^{k_1} ... gamma_n^{k_n} . x"""
        for i, k in enumerate(exponents):
            for _ in range(k % self.orders[i]):
                x = self.act(i, x)
        return x


def fixed_space(ga: GammaAction, degree: Degree) -> List[BaseVector]:
    """Kernel of the stacked maps gamma_i - Id on g tensor z^degree"""
    dim = ga.ml.base.dim
    entries = {}
    for i in range(ga.generators):
        shifted = ga.operator(i, degree) - SparseMatrix.identity(dim)
        for (r, c), value in shifted.entries.items():
            entries[(i * dim + r, c)] = value
    return kernel_basis(SparseMatrix(max(1, ga.generators) * dim, dim, entries))


def gamma_fixed_points(ga: GammaAction, window: Window) -> Dict[Degree, List[GradedElement]]:
    return {
        degree: [ga.ml.element(v, degree) for v in fixed_space(ga, degree)]
        for degree in window.degrees
    }


def descent_check(ml: MultiloopAlgebra, window: Window) -> Verdict:
    """Fixed points of Gamma on g tensor S agree with the eigenspace construction in every window degree"""
    ga = GammaAction(ml)
    dimensions = {}
    for degree in window.degrees:
        fixed = Subspace(fixed_space(ga, degree))
        eigen = Subspace(ml.eigenbasis[ml.residue(degree)])
        dimensions[",".join(map(str, degree))] = fixed.rank
        if not fixed.equals(eigen):
            logging.warning(f"Gamma-fixed points differ from g^(lambda mod m) at degree {degree}")
            return Verdict.fail(
                "descent",
                f"fixed space of dimension {fixed.rank} != eigenspace of dimension {eigen.rank}",
                witness={"degree": list(degree)},
                window=window.bound,
            )
    logging.info(f"Descent reproduces {ml.name} on {len(dimensions)} degrees")
    return Verdict(
        name="descent",
        passed=True,
        detail="(g tensor S)^Gamma equals L degree by degree",
        witness={"dimensions": dimensions},
        window=window.bound,
    )


def is_gamma_fixed(ga: GammaAction, x: GradedElement) -> bool:
    return all(ga.act(i, x) == x for i in range(ga.generators))


def average(ga: GammaAction, x: GradedElement) -> GradedElement:
    """Reynolds projection of g tensor S onto its Gamma-fixed part"""
    total: Dict[Degree, BaseVector] = {}
    size = 1
    for m in ga.orders:
        size *= m
    words = [()]
    for m in ga.orders:
        words = [w + (k,) for w in words for k in range(m)]
    for word in words:
        for degree, vector in ga.ml.to_components(ga.act_word(word, x)).items():
            axpy(total.setdefault(degree, {}), ONE, vector)
    return ga.ml.from_components(total).scale(Scalar.rational(1) / size)
