"""The untwisted EALA E_S over g tensor S and Gamma-equivariance of restriction to the centreless core"""

import random
from itertools import product
from typing import List, Optional

from loguru import logger as logging

from ealakit.autmorph.lifts import exp_ad, kernel_automorphism, random_derivation, sample_root_vectors
from ealakit.autmorph.representation import GammaElement, compose
from ealakit.dercoc import build_D
from ealakit.eala import EalaStructure, assemble_eala
from ealakit.glie import Window
from ealakit.multiloop import GammaAction
from ealakit.schemas import Verdict
from ealakit.variables import settings


def untwisted_eala(e: EalaStructure) -> EalaStructure:
    """E_S = g tensor S + C_S + D_S with D_S generated by the same derivations as D and tau = 0"""
    cover = e.ml.untwisted_cover()
    extra = [d for d in e.da.basis if any(d.degree)]
    da = build_D(cover, extra, bound=e.da.bound)
    return assemble_eala(cover, da)


def gamma_elements(e_s: EalaStructure, ga: GammaAction) -> List[GammaElement]:
    return [GammaElement(e_s, ga, word) for word in product(*(range(m) for m in ga.orders))]


def gamma_equivariance_check(
    e: EalaStructure, window: Window, samples: Optional[int] = None, seed: Optional[int] = None
) -> Verdict:
    """res_cc(f_gamma o f o f_gamma^-1) = gamma o res_cc(f) o gamma^-1 for sampled elementary lifts f.

    The kernel-map half is a consistency check only: gamma is the identity on C + D, so
    f_gamma o f_psi o f_gamma^-1 = f_psi holds whenever the maps are wired correctly.
    """
    samples = settings.CONJUGACY_SAMPLES if samples is None else samples
    rng = random.Random(settings.SEED if seed is None else seed)
    ga = GammaAction(e.ml)
    if all(m == 1 for m in ga.orders):
        return Verdict.ok("gamma_equivariance", "Gamma is trivial", window=window.bound)
    e_s = untwisted_eala(e)
    cover = e_s.ml
    gammas = gamma_elements(e_s, ga)
    basis = cover.window_basis(window)
    for x in sample_root_vectors(cover, window, samples, rng):
        f = exp_ad(e_s, x)
        f_l = exp_ad(cover, x)
        for gamma in gammas:
            conjugated = compose(gamma, f, gamma.inverse())
            for b in basis:
                lhs = e_s.split(conjugated.apply(b))[0]
                rhs = gamma.apply_to_loop(f_l.apply(gamma.inverse().apply_to_loop(b)))
                if lhs != rhs:
                    logging.warning(f"Gamma-equivariance fails for {gamma.label}")
                    return Verdict.fail(
                        "gamma_equivariance",
                        "res(f_gamma f f_gamma^-1) != gamma res(f) gamma^-1",
                        witness={"gamma": list(gamma.exponents), "x": x.to_json(), "b": b.to_json()},
                        window=window.bound,
                    )
    kernel = kernel_automorphism(e_s, random_derivation(e_s.da, rng))
    for gamma in gammas:
        conjugated = compose(gamma, kernel, gamma.inverse())
        for b in e_s.window_basis(window):
            if conjugated.apply(b) != kernel.apply(b):
                return Verdict.fail(
                    "gamma_equivariance", "a kernel automorphism is not Gamma-fixed",
                    witness={"gamma": list(gamma.exponents), "b": b.to_json()}, window=window.bound,
                )
    logging.info(f"Gamma-equivariance holds on {len(gammas)} group elements at window {window.bound}")
    return Verdict.ok("gamma_equivariance", f"{len(gammas)} elements of Gamma, sampled lifts and a kernel map", window=window.bound)
