from ealakit.glie.algebra import (
    ClosureResult,
    GradedAlgebra,
    centralizer_at_window,
    combine,
    ideal_closure_at_window,
    jacobi_check,
    jacobi_sum,
    sample_homogeneous,
)
from ealakit.glie.element import Degree, GradedElement, Key, Window, add_degrees, neg_degree, span_sum
from ealakit.glie.ideals import HasCore, IdealClass, classify_ideal
