from ealakit.multiloop.algebra import MultiloopAlgebra, RootGrading, build_multiloop, root_grading
from ealakit.multiloop.descent import (
    GammaAction,
    average,
    descent_check,
    fixed_space,
    gamma_fixed_points,
    is_gamma_fixed,
)
from ealakit.multiloop.lietorus import (
    check_generation,
    check_grading,
    check_lie_torus,
    check_root_vectors,
    check_support,
    g0_simplicity,
    regrading_shift,
)
