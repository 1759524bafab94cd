from ealakit.exactnum.scalar import ONE, ZERO, Scalar, as_scalar, field_ops
from ealakit.exactnum.smith import SmithForm, smith_normal_form, smith_rank
from ealakit.exactnum.sparse import (
    SparseMatrix,
    SparseVector,
    Subspace,
    axpy,
    commutes,
    image_basis,
    kernel_basis,
    rank,
    scaled,
    simultaneous_projector,
    solve_linear,
)
