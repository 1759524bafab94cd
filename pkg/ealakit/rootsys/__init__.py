from ealakit.rootsys.algebra import ChevalleyConstants, SimpleLieAlgebra, build_simple_algebra, roots_document
from ealakit.rootsys.automorphism import (
    FiniteOrderAut,
    build_automorphism,
    check_commuting,
    diagram_matrix,
    homomorphism_witness,
    torus_matrix,
)
from ealakit.rootsys.datum import (
    ROOT_COUNTS,
    Root,
    RootDatum,
    build_root_system,
    dynkin_to_cartan,
    symmetrizer,
    validate_type,
)
