"""Elementary lifts exp(ad x), kernel automorphisms d -> d + psi(d), lifts of grading-preserving maps of L"""

import random
from itertools import product
from typing import List, Optional

from loguru import logger as logging

from ealakit.autmorph.representation import (
    AutomorphismRep,
    ElementaryWord,
    GradingPreserving,
    KernelMap,
    PsiTable,
    compose,
    image_of_span,
    psi_sum,
)
from ealakit.dercoc import Coordinates, DAlgebra, apply_derivation, derivation_space
from ealakit.eala import EalaStructure
from ealakit.errors import NotAutomorphismOfL, NotCommutingWithD, NotDerivation, NotNilpotent
from ealakit.exactnum import ONE, Scalar, Subspace, axpy
from ealakit.glie import GradedAlgebra, GradedElement, Window
from ealakit.multiloop import MultiloopAlgebra
from ealakit.schemas import Verdict
from ealakit.variables import settings


def _loop_vector(target: GradedAlgebra, x: GradedElement) -> GradedElement:
    if isinstance(target, EalaStructure):
        l, c, d = target.split(x)
        if c or d:
            raise NotNilpotent("Elementary lifts are defined for elements of L only", witness=x.to_json())
        return l
    return x


def exp_ad(target: GradedAlgebra, x: GradedElement) -> ElementaryWord:
    """exp(ad x) on L or on E, for x in a root space L_alpha with alpha != 0"""
    ml: MultiloopAlgebra = target.ml if isinstance(target, EalaStructure) else target
    l = _loop_vector(target, x)
    ml.require(l)
    alpha = ml.root_of(l) if l else None
    if alpha is None or not any(alpha):
        raise NotNilpotent("x must be a nonzero element of a root space L_alpha, alpha != 0", witness=x.to_json())
    return ElementaryWord(target, [l])


def _derivation_defect(da: DAlgebra, psi: PsiTable, i: int, j: int) -> Coordinates:
    """psi([d_i, d_j]) - d_i . psi(d_j) + d_j . psi(d_i)"""
    out: Coordinates = {}
    for k, a in da.structure.get((i, j), {}).items():
        axpy(out, a, psi.get(k, {}))
    axpy(out, -ONE, da.act_on_c({i: ONE}, psi.get(j, {})))
    axpy(out, ONE, da.act_on_c({j: ONE}, psi.get(i, {})))
    return out


def is_derivation(da: DAlgebra, psi: PsiTable) -> Optional[List[int]]:
    """None when psi lies in Der(D, C), else the first failing basis pair"""
    for i in range(da.dim):
        for j in range(i + 1, da.dim):
            if _derivation_defect(da, psi, i, j):
                return [i, j]
    return None


def kernel_automorphism(e: EalaStructure, psi: PsiTable) -> KernelMap:
    """Accepted iff psi([d1, d2]) = d1 . psi(d2) - d2 . psi(d1) on every basis pair"""
    for k, value in psi.items():
        if not 0 <= int(k) < e.da.dim or any(not 0 <= int(l) < e.da.dim for l in value):
            raise NotDerivation("psi refers to a missing basis element of D or C", witness={"d": int(k)})
    rep = KernelMap(e, psi)
    witness = is_derivation(e.da, rep.psi)
    if witness is not None:
        i, j = witness
        logging.error(f"psi is not a derivation on ({e.da.d_slot(i)}, {e.da.d_slot(j)})")
        raise NotDerivation("psi([d1,d2]) != d1.psi(d2) - d2.psi(d1)", witness=witness)
    return rep


def random_derivation(da: DAlgebra, rng: random.Random, coefficients=(-2, -1, 1, 2, 3)) -> PsiTable:
    """Random integer combination of a basis of Der(D, C)"""
    out: PsiTable = {}
    for table in derivation_space(da):
        c = Scalar.rational(rng.choice(coefficients))
        scaled = {k: {l: v * c for l, v in row.items()} for k, row in table.items()}
        out = psi_sum(out, scaled)
    return out


def lift_grading_preserving(
    e: EalaStructure, g: GradingPreserving, window: Window, samples: Optional[int] = None, seed: Optional[int] = None
) -> GradingPreserving:
    """f_g(l + c + d) = g(l) + c + d after checking g o d = d o g and that g respects the bracket of L"""
    ml = e.ml
    samples = settings.SAMPLES if samples is None else samples
    basis = ml.window_basis(window)
    for b in basis:
        image = g.apply_to_loop(b)
        if not ml.contains(image):
            raise NotAutomorphismOfL("g does not map L into L", witness=b.to_json())
        for k, d in enumerate(e.da.basis):
            if g.apply_to_loop(apply_derivation(d, b)) != apply_derivation(d, image):
                raise NotCommutingWithD(
                    f"g does not commute with {e.da.d_slot(k)}", witness={"d": e.da.d_slot(k), "x": b.to_json()}
                )
    n = len(basis)
    if n * n <= samples:
        pairs = list(product(range(n), repeat=2))
    else:
        rng = random.Random(settings.SEED if seed is None else seed)
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(samples)]
    for i, j in pairs:
        x, y = basis[i], basis[j]
        if g.apply_to_loop(ml.bracket_unchecked(x, y)) != ml.bracket_unchecked(g.apply_to_loop(x), g.apply_to_loop(y)):
            raise NotAutomorphismOfL("g([x,y]) != [g(x), g(y)]", witness=[x.to_json(), y.to_json()])
    logging.debug(f"Lifted {g.label} to {e.name}")
    return g.lifted(e)


def verify_automorphism(
    rep: AutomorphismRep, window: Window, samples: Optional[int] = None, seed: Optional[int] = None
) -> Verdict:
    """f([x,y]) = [f(x), f(y)] on sampled window pairs, and f injective on the window basis"""
    target = rep.target
    samples = settings.SAMPLES if samples is None else samples
    rng = random.Random(settings.SEED if seed is None else seed)
    basis = target.window_basis(window)
    images = [rep.apply(b) for b in basis]
    for _ in range(samples):
        i, j = rng.randrange(len(basis)), rng.randrange(len(basis))
        if rep.apply(target.bracket_unchecked(basis[i], basis[j])) != target.bracket_unchecked(images[i], images[j]):
            return Verdict.fail(
                "automorphism", "f([x,y]) != [f(x), f(y)]",
                witness=[basis[i].to_json(), basis[j].to_json()], window=window.bound,
            )
    if Subspace(x.terms for x in images).rank != len(basis):
        return Verdict.fail("automorphism", "f is not injective on the window basis", window=window.bound)
    return Verdict.ok("automorphism", f"{samples} sampled pairs, injective on {len(basis)} basis vectors", window=window.bound)


def elementary_lift_contract(e: EalaStructure, x: GradedElement, window: Window) -> Verdict:
    """The E-lift f of exp(ad x): pr_L f = exp(ad_L x) on L with f(L) in L + C, f = Id on C, f(d) - d in L + C"""
    lift = exp_ad(e, x)
    on_l = exp_ad(e.ml, x)
    for b in e.ml.window_basis(window):
        l, c, d = e.split(lift.apply(b))
        if d or l != on_l.apply(b):
            return Verdict.fail("elementary_lift", "f(l) is not exp(ad x)(l) + C", witness=b.to_json(), window=window.bound)
    for c in e.central_window_basis(window):
        if lift.apply(c) != c:
            return Verdict.fail("elementary_lift", "f does not fix C", witness=c.to_json(), window=window.bound)
    for k in range(e.da.dim):
        d = e.d_element({k: ONE})
        if e.split(lift.apply(d) - d)[2]:
            return Verdict.fail("elementary_lift", "f(d) - d leaves L + C", witness=d.to_json(), window=window.bound)
    return Verdict.ok("elementary_lift", "L-component exp(ad x), identity on C, D-displacement in L + C", window=window.bound)


def kernel_group_law(e: EalaStructure, psi1: PsiTable, psi2: PsiTable, window: Window) -> Verdict:
    """f_psi1 o f_psi2 = f_(psi1 + psi2) on the window basis"""
    composite = compose(kernel_automorphism(e, psi1), kernel_automorphism(e, psi2))
    total = kernel_automorphism(e, psi_sum(psi1, psi2))
    for b in e.window_basis(window):
        if composite.apply(b) != total.apply(b):
            return Verdict.fail("kernel_group_law", "f_psi1 o f_psi2 != f_(psi1+psi2)", witness=b.to_json(), window=window.bound)
    return Verdict.ok("kernel_group_law", "kernel automorphisms add", window=window.bound)


def preserves_core(e: EalaStructure, rep: AutomorphismRep, window: Window) -> Verdict:
    """f(E_c) lies in E_c = L + C and f restricted to the window core is injective"""
    core = e.core_window_basis(window)
    images = image_of_span(rep, core)
    for b in core:
        if e.split(rep.apply(b))[2]:
            return Verdict.fail("core_stable", "f moves the core into D", witness=b.to_json(), window=window.bound)
    if images.rank != len(core):
        return Verdict.fail("core_stable", "f collapses part of the core", window=window.bound)
    return Verdict.ok("core_stable", f"f(E_c) in E_c on {len(core)} basis vectors", window=window.bound)


def sample_root_vectors(ml: MultiloopAlgebra, window: Window, count: int, rng: random.Random) -> List[GradedElement]:
    """Window basis vectors of L lying in root spaces L_alpha with alpha != 0"""
    candidates = [x for x in ml.window_basis(window) if any(ml.root_of(x) or ())]
    if len(candidates) <= count:
        return candidates
    return rng.sample(candidates, count)
