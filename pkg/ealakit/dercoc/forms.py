"""The invariant form kappa tensor epsilon on L, the central cocycle sigma_D and checks of their identities"""

import random
from typing import Dict, List, Optional

from loguru import logger as logging

from ealakit.exactnum import ONE, ZERO, Scalar, SparseMatrix, axpy, kernel_basis
from ealakit.dercoc.dalgebra import Coordinates, DAlgebra
from ealakit.dercoc.derivations import apply_derivation, der_bracket
from ealakit.glie import GradedElement, Window
from ealakit.multiloop import MultiloopAlgebra
from ealakit.schemas import Verdict
from ealakit.variables import settings


def form_L(ml: MultiloopAlgebra, x: GradedElement, y: GradedElement) -> Scalar:
    """(x tensor z^lambda | y tensor z^mu) = kappa(x, y) epsilon(z^(lambda + mu))"""
    return ml.killing_pairing(x, y)


def sigma_D(da: DAlgebra, x: GradedElement, y: GradedElement) -> Coordinates:
    """The functional d -> (d(x) | y), written in the dual basis c_k"""
    out: Coordinates = {}
    for k, d in enumerate(da.basis):
        value = form_L(da.ml, apply_derivation(d, x), y)
        if value:
            out[k] = value
    return out


def _sample(da: DAlgebra, window: Window, rng: random.Random) -> GradedElement:
    basis = da.ml.window_basis(window)
    return basis[rng.randrange(len(basis))]


def check_form_invariance(
    ml: MultiloopAlgebra, window: Window, samples: Optional[int] = None, seed: Optional[int] = None
) -> Verdict:
    samples = settings.SAMPLES if samples is None else samples
    rng = random.Random(settings.SEED if seed is None else seed)
    basis = ml.window_basis(window)
    for _ in range(samples):
        x, y, z = (basis[rng.randrange(len(basis))] for _ in range(3))
        if form_L(ml, ml.bracket_unchecked(x, y), z) != form_L(ml, x, ml.bracket_unchecked(y, z)):
            return Verdict.fail(
                "form_invariance", "([x,y]|z) != (x|[y,z])",
                witness=[x.to_json(), y.to_json(), z.to_json()], window=window.bound,
            )
    return Verdict.ok("form_invariance", f"{samples} sampled triples", window=window.bound)


def check_skewness(da: DAlgebra, window: Window, samples: Optional[int] = None, seed: Optional[int] = None) -> Verdict:
    """(d(x)|y) + (x|d(y)) = 0 for every basis derivation of D"""
    samples = settings.SAMPLES if samples is None else samples
    rng = random.Random(settings.SEED if seed is None else seed)
    for _ in range(samples):
        x, y = _sample(da, window, rng), _sample(da, window, rng)
        for k, d in enumerate(da.basis):
            total = form_L(da.ml, apply_derivation(d, x), y) + form_L(da.ml, x, apply_derivation(d, y))
            if total:
                return Verdict.fail(
                    "skewness", f"{da.d_slot(k)} is not skew for the form",
                    witness=[x.to_json(), y.to_json()], window=window.bound,
                )
    return Verdict.ok("skewness", f"{samples} sampled pairs", window=window.bound)


def check_sigma_cocycle(
    da: DAlgebra, window: Window, samples: Optional[int] = None, seed: Optional[int] = None
) -> Verdict:
    """sigma([x,y],z) + sigma([y,z],x) + sigma([z,x],y) = 0"""
    samples = settings.SAMPLES if samples is None else samples
    rng = random.Random(settings.SEED if seed is None else seed)
    b = da.ml.bracket_unchecked
    for _ in range(samples):
        x, y, z = (_sample(da, window, rng) for _ in range(3))
        total: Coordinates = {}
        for u, v in ((b(x, y), z), (b(y, z), x), (b(z, x), y)):
            axpy(total, ONE, sigma_D(da, u, v))
        if total:
            return Verdict.fail(
                "sigma_cocycle", "cyclic sum of sigma_D is nonzero",
                witness=[x.to_json(), y.to_json(), z.to_json()], window=window.bound,
            )
    return Verdict.ok("sigma_cocycle", f"{samples} sampled triples", window=window.bound)


def check_dual_compatibility(da: DAlgebra) -> Verdict:
    """(d . c)(d') = -c([d, d']) on all basis triples"""
    for i in range(da.dim):
        for k in range(da.dim):
            image = da.act_on_c({i: ONE}, {k: ONE})
            for l in range(da.dim):
                lhs = image.get(l, ZERO)
                rhs = -da.structure.get((i, l), {}).get(k, ZERO)
                if lhs != rhs:
                    return Verdict.fail("dual_compatibility", "contragredient action mismatch", witness=[i, k, l])
    return Verdict.ok("dual_compatibility", f"all {da.dim ** 3} basis triples")


def check_der_jacobi(da: DAlgebra) -> Verdict:
    for i, a in enumerate(da.basis):
        for j, b in enumerate(da.basis):
            for k, c in enumerate(da.basis):
                total = der_bracket(a, der_bracket(b, c)) + der_bracket(b, der_bracket(c, a)) + der_bracket(
                    c, der_bracket(a, b)
                )
                if total:
                    return Verdict.fail("der_jacobi", "Jacobi fails for the derivation bracket", witness=[i, j, k])
    return Verdict.ok("der_jacobi", f"all {da.dim ** 3} basis triples")


def check_inner_intersection(da: DAlgebra, window: Window) -> Verdict:
    """No nonzero degree derivation agrees with some ad x, x in L^0, on the window"""
    ml = da.ml
    zero = window.zero
    l0 = ml.degree_basis(zero)
    basis = ml.window_basis(window)
    d0 = da.d0_indices
    rows: Dict = {}
    entries = {}
    columns = len(l0) + len(d0)
    for b_index, b in enumerate(basis):
        images = [ml.bracket_unchecked(x, b) for x in l0] + [-apply_derivation(da.basis[k], b) for k in d0]
        for col, image in enumerate(images):
            for key, value in image.terms.items():
                entries[(rows.setdefault((b_index, key), len(rows)), col)] = value
    kernel = kernel_basis(SparseMatrix(max(1, len(rows)), columns, entries))
    for vector in kernel:
        if any(col >= len(l0) for col in vector):
            logging.warning("A degree derivation coincides with an inner derivation on the window")
            return Verdict.fail(
                "inner_intersection", "a degree derivation is inner on the window",
                witness={str(c): str(v) for c, v in sorted(vector.items())}, window=window.bound,
            )
    return Verdict.ok("inner_intersection", "IDer and the degree derivations meet in 0", window=window.bound)


def dercoc_report(da: DAlgebra, window: Window, samples: Optional[int] = None, seed: Optional[int] = None) -> List[Verdict]:
    verdicts = [
        check_form_invariance(da.ml, window, samples, seed),
        check_skewness(da, window, samples, seed),
        check_sigma_cocycle(da, window, samples, seed),
        check_dual_compatibility(da),
        check_der_jacobi(da),
        check_inner_intersection(da, window),
    ]
    for verdict in verdicts:
        logging.info(f"{verdict.name}: {'pass' if verdict.passed else 'FAIL'} ({verdict.detail})")
    return verdicts
