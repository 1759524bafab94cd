from ealakit.dercoc.cocycle import AffineCocycle, require_valid, validate_affine_cocycle
from ealakit.dercoc.dalgebra import Coordinates, DAlgebra, build_D, derivation_space
from ealakit.dercoc.derivations import (
    CentroidalDerivation,
    HomWeight,
    apply_derivation,
    as_hom_weight,
    der_bracket,
    evaluate,
)
from ealakit.dercoc.forms import (
    check_der_jacobi,
    check_dual_compatibility,
    check_form_invariance,
    check_inner_intersection,
    check_sigma_cocycle,
    check_skewness,
    dercoc_report,
    form_L,
    sigma_D,
)
