from ealakit.eala.axioms import (
    CoreResult,
    anisotropic_vectors,
    centreless_core_rank,
    check_connectedness,
    check_core,
    check_core_radical,
    check_eala_axioms,
    check_eala_form,
    check_isotropic_lattice,
    check_local_nilpotency,
    check_window_monotonicity,
    core_compute,
    ideal_dichotomy_sweep,
    random_ideal_generators,
)
from ealakit.eala.roots import (
    EalaRoot,
    RootForm,
    RootPartition,
    RootSpaces,
    classify_roots,
    root_decomposition,
    root_dimensions,
)
from ealakit.eala.structure import EalaStructure, assemble_eala
