from ealakit.autmorph.conjugacy import CartanCandidate, ConjugacyResult, conjugacy_construct, conjugacy_roundtrip
from ealakit.autmorph.equivariance import gamma_elements, gamma_equivariance_check, untwisted_eala
from ealakit.autmorph.lifts import (
    elementary_lift_contract,
    exp_ad,
    is_derivation,
    kernel_automorphism,
    kernel_group_law,
    lift_grading_preserving,
    preserves_core,
    random_derivation,
    sample_root_vectors,
    verify_automorphism,
)
from ealakit.autmorph.representation import (
    AutomorphismRep,
    Composite,
    ElementaryWord,
    GammaElement,
    GradingPreserving,
    Identity,
    KernelMap,
    PsiTable,
    compose,
    image_of_span,
    inverse,
    psi_sum,
    psi_table_json,
)
