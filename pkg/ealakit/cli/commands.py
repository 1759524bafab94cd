"""Manifest-driven commands; each returns a report body and whether every verdict passed"""

import random
from collections import Counter
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

from loguru import logger as logging
from pydantic import BaseModel

from ealakit.autmorph import (
    CartanCandidate,
    GradingPreserving,
    PsiTable,
    conjugacy_construct,
    conjugacy_roundtrip,
    elementary_lift_contract,
    exp_ad,
    gamma_equivariance_check,
    kernel_automorphism,
    kernel_group_law,
    lift_grading_preserving,
    preserves_core,
    psi_table_json,
    random_derivation,
    sample_root_vectors,
    verify_automorphism,
)
from ealakit.dercoc import AffineCocycle, CentroidalDerivation, DAlgebra, build_D, dercoc_report
from ealakit.eala import EalaStructure, assemble_eala, check_eala_axioms, ideal_dichotomy_sweep
from ealakit.errors import (
    CoreCartanMismatch,
    EalaKitError,
    InconsistentWeightEquation,
    ManifestError,
    NotAGraph,
    NotAutomorphismOfL,
    NotCommutingWithD,
    NotDerivation,
    NotToral,
)
from ealakit.exactnum import Scalar
from ealakit.glie import GradedElement, Window
from ealakit.multiloop import GammaAction, MultiloopAlgebra, build_multiloop, check_lie_torus, descent_check
from ealakit.rootsys import build_automorphism, build_simple_algebra, roots_document
from ealakit.schemas import (
    AutomorphismSpec,
    BuildReport,
    ConjugacyReport,
    ConjugateSpec,
    DescentReport,
    EalaReport,
    IdealReport,
    LieTorusReport,
    LiftReport,
    LiftSpec,
    Manifest,
    PsiSpec,
    RootsReport,
    Verdict,
)
from ealakit.variables import settings

CONJUGACY_ERRORS = (CoreCartanMismatch, NotAGraph, InconsistentWeightEquation, NotDerivation, NotToral)


class Context(NamedTuple):
    """A validated manifest with the window, seed and sample count every command runs at"""

    manifest: Manifest
    digest: str
    window: int
    seed: int
    samples: int

    @classmethod
    def resolve(
        cls,
        manifest: Manifest,
        digest: str,
        window: Optional[int] = None,
        seed: Optional[int] = None,
        samples: Optional[int] = None,
    ) -> "Context":
        """Flags override the manifest, which overrides settings"""

        def pick(flag, declared, default):
            if flag is not None:
                return flag
            return declared if declared is not None else default

        return cls(
            manifest,
            digest,
            pick(window, manifest.window, settings.WINDOW),
            pick(seed, manifest.seed, settings.SEED),
            pick(samples, manifest.samples, settings.SAMPLES),
        )

    def window_for(self, nullity: int) -> Window:
        return Window(self.window, nullity)


def _invalid(pointer: str, error: EalaKitError) -> ManifestError:
    logging.error(f"Manifest rejected at {pointer or '/'}: {error.message}")
    return ManifestError(
        f"{type(error).__name__}: {error.message}",
        witness=[{"pointer": pointer, "message": error.message, "witness": error.witness}],
    )


def _automorphism(base, spec: AutomorphismSpec, pointer: str):
    try:
        return build_automorphism(base, spec.diagram, spec.kac, spec.order)
    except EalaKitError as error:
        raise _invalid(pointer, error)


def build_algebra(manifest: Manifest) -> MultiloopAlgebra:
    try:
        base = build_simple_algebra(manifest.base.series, manifest.base.rank)
    except EalaKitError as error:
        raise _invalid("/base", error)
    auts = [_automorphism(base, spec, f"/automorphisms/{i}") for i, spec in enumerate(manifest.automorphisms)]
    try:
        return build_multiloop(base, auts)
    except EalaKitError as error:
        raise _invalid("/automorphisms", error)


def build_structure(manifest: Manifest, ml: Optional[MultiloopAlgebra] = None) -> EalaStructure:
    ml = build_algebra(manifest) if ml is None else ml
    extra = [CentroidalDerivation.homogeneous(d.xi, d.theta) for d in manifest.D_extra]
    try:
        da = build_D(ml, extra)
    except EalaKitError as error:
        raise _invalid("/D_extra", error)
    for i, entry in enumerate(manifest.tau):
        for field, index in (("d1", entry.d1), ("d2", entry.d2)):
            if index >= da.dim:
                raise ManifestError(
                    f"tau refers to d[{index + 1}] but D has dimension {da.dim}",
                    witness=[{"pointer": f"/tau/{i}/{field}", "message": "index out of range"}],
                )
    try:
        tau = AffineCocycle.from_entries(da.dim, [entry.model_dump() for entry in manifest.tau])
        return assemble_eala(ml, da, tau)
    except EalaKitError as error:
        raise _invalid("/tau", error)


def parse_psi(da: DAlgebra, spec: PsiSpec, pointer: str) -> PsiTable:
    """{"d[k]": {"c[l]": coeff}} with slot labels as printed in reports"""
    d_index = {da.d_slot(k): k for k in range(da.dim)}
    c_index = {da.c_slot(k): k for k in range(da.dim)}
    psi: PsiTable = {}
    for d_label, row in spec.items():
        if d_label not in d_index:
            raise ManifestError(f"Unknown derivation {d_label}", witness=[{"pointer": f"{pointer}/{d_label}", "message": "unknown slot"}])
        out = psi.setdefault(d_index[d_label], {})
        for c_label, coeff in row.items():
            if c_label not in c_index:
                raise ManifestError(
                    f"Unknown central element {c_label}",
                    witness=[{"pointer": f"{pointer}/{d_label}/{c_label}", "message": "unknown slot"}],
                )
            out[c_index[c_label]] = Scalar.parse(coeff)
    return psi


def _element(items) -> GradedElement:
    return GradedElement.from_json(term.model_dump() for term in items)


def _grading_preserving(ml: MultiloopAlgebra, spec: AutomorphismSpec, pointer: str) -> GradingPreserving:
    return GradingPreserving.from_automorphism(ml, _automorphism(ml.base, spec, pointer))


def cmd_build(ctx: Context) -> Tuple[BaseModel, bool]:
    e = build_structure(ctx.manifest)
    ml = e.ml
    report = BuildReport(
        algebra=ml.name,
        nullity=ml.nullity,
        orders=list(ml.orders),
        dimensions=ml.dimension_table(),
        root_system=ml.root_datum.name,
        xi_lattice=[list(v) for v in ml.xi_lattice],
        gamma_orders=list(GammaAction(ml).orders),
        eala=e.summary(),
    )
    logging.success(f"Built {e.name} with root system {report.root_system}")
    return report, True


def _check_lietorus(ctx: Context) -> Tuple[BaseModel, bool]:
    ml = build_algebra(ctx.manifest)
    report = check_lie_torus(ml, ctx.window_for(ml.nullity))
    return LieTorusReport(axioms=report.verdicts, facts=report.facts), report.passed


def _check_eala(ctx: Context) -> Tuple[BaseModel, bool]:
    e = build_structure(ctx.manifest)
    window = ctx.window_for(e.nullity)
    report = check_eala_axioms(e, window, ctx.samples, ctx.seed)
    extra = dercoc_report(e.da, window, ctx.samples, ctx.seed)
    body = EalaReport(
        axioms=report.verdicts,
        nullity=e.nullity,
        roots=report.facts.get("roots", []),
        core=report.facts.get("core", {"matches_L_plus_C": False}),
        dercoc=extra,
    )
    return body, report.passed and all(v.passed for v in extra)


def _check_ideals(ctx: Context) -> Tuple[BaseModel, bool]:
    e = build_structure(ctx.manifest)
    verdicts = ideal_dichotomy_sweep(e, ctx.window_for(e.nullity), settings.IDEAL_SAMPLES, ctx.seed)
    counts = Counter(v.detail for v in verdicts)
    return IdealReport(ideals=verdicts, counts=dict(sorted(counts.items()))), all(v.passed for v in verdicts)


def _check_descent(ctx: Context) -> Tuple[BaseModel, bool]:
    e = build_structure(ctx.manifest)
    window = ctx.window_for(e.nullity)
    descent = descent_check(e.ml, window)
    equivariance = gamma_equivariance_check(e, window, seed=ctx.seed)
    body = DescentReport(descent=descent, gamma_equivariance=equivariance, gamma_orders=list(e.ml.orders))
    return body, descent.passed and equivariance.passed


CHECKS: Dict[str, Callable[[Context], Tuple[BaseModel, bool]]] = {
    "lietorus": _check_lietorus,
    "eala": _check_eala,
    "ideals": _check_ideals,
    "descent": _check_descent,
}


def cmd_check(ctx: Context, which: str) -> Tuple[BaseModel, bool]:
    if which not in CHECKS:
        raise ValueError(f"Unknown check {which!r}, expected one of {sorted(CHECKS)}")
    return CHECKS[which](ctx)


def cmd_roots(ctx: Context) -> Tuple[BaseModel, bool]:
    ml = build_algebra(ctx.manifest)
    grading = dict(ml.root_datum.to_dict(), name=ml.root_datum.name)
    return RootsReport(base=roots_document(ml.base), grading=grading), True


def cmd_lift(ctx: Context) -> Tuple[BaseModel, bool]:
    e = build_structure(ctx.manifest)
    window = ctx.window_for(e.nullity)
    spec = ctx.manifest.lift or LiftSpec()
    rng = random.Random(ctx.seed)
    if spec.elements:
        elements = [_element(items) for items in spec.elements]
    else:
        elements = sample_root_vectors(e.ml, window, settings.LIFT_SAMPLES, rng)
    verdicts: List[Verdict] = []
    for x in elements:
        verdicts.append(elementary_lift_contract(e, x, window))
        verdicts.append(verify_automorphism(exp_ad(e, x), window, ctx.samples, ctx.seed))
    psi1 = parse_psi(e.da, spec.psi1, "/lift/psi1") if spec.psi1 is not None else random_derivation(e.da, rng)
    psi2 = parse_psi(e.da, spec.psi2, "/lift/psi2") if spec.psi2 is not None else random_derivation(e.da, rng)
    verdicts.append(kernel_group_law(e, psi1, psi2, window))
    kernel = kernel_automorphism(e, psi1)
    verdicts.append(verify_automorphism(kernel, window, ctx.samples, ctx.seed))
    verdicts.append(preserves_core(e, kernel, window))
    if spec.g is not None:
        g = _grading_preserving(e.ml, spec.g, "/lift/g")
        try:
            lift = lift_grading_preserving(e, g, window, ctx.samples, ctx.seed)
            verdicts.append(verify_automorphism(lift, window, ctx.samples, ctx.seed))
        except (NotAutomorphismOfL, NotCommutingWithD) as error:
            verdicts.append(Verdict.fail("grading_preserving_lift", error.message, witness=error.witness, window=window.bound))
    passed = all(v.passed for v in verdicts)
    logging.info(f"{sum(v.passed for v in verdicts)} of {len(verdicts)} lift verdicts pass")
    return LiftReport(verdicts=verdicts), passed


def _h_prime(e: EalaStructure, spec: ConjugateSpec) -> CartanCandidate:
    if spec.psi0 is not None:
        f0 = kernel_automorphism(e, parse_psi(e.da, spec.psi0, "/conjugate/psi0"))
        return CartanCandidate(f0.apply(h) for h in e.cartan_basis)
    if spec.h_prime is not None:
        return CartanCandidate(_element(items) for items in spec.h_prime)
    return CartanCandidate(e.cartan_basis)


def cmd_conjugate(ctx: Context) -> Tuple[BaseModel, bool]:
    e = build_structure(ctx.manifest)
    window = ctx.window_for(e.nullity)
    spec = ctx.manifest.conjugate or ConjugateSpec()
    h_prime = _h_prime(e, spec)
    g = _grading_preserving(e.ml, spec.g, "/conjugate/g") if spec.g is not None else None
    try:
        result = conjugacy_construct(e, h_prime, window, g)
    except CONJUGACY_ERRORS as error:
        logging.error(f"Conjugacy failed with {type(error).__name__}: {error.message}")
        body = ConjugacyReport(status=type(error).__name__, verified=False, window=window.bound, error=error.to_dict())
        return body, False
    check = verify_automorphism(result.rep, window, ctx.samples, ctx.seed)
    verdicts = [result.verdict, check]
    if spec.sweep:
        verdicts += conjugacy_roundtrip(e, window, spec.sweep, ctx.seed, ctx.samples)
    verified = result.verdict.passed and check.passed
    body = ConjugacyReport(
        status="conjugated" if verified else "failed",
        psi=psi_table_json(e.da, result.psi),
        xi=psi_table_json(e.da, result.xi),
        verified=verified,
        window=window.bound,
        verdicts=verdicts,
    )
    return body, all(v.passed for v in verdicts)


COMMANDS = {
    "build": cmd_build,
    "roots": cmd_roots,
    "lift": cmd_lift,
    "conjugate": cmd_conjugate,
}
