from enum import Enum
from typing import List, Optional, Protocol, Sequence

from loguru import logger as logging

from ealakit.exactnum import Subspace
from ealakit.glie.algebra import GradedAlgebra, ideal_closure_at_window
from ealakit.glie.element import GradedElement, Window
from ealakit.schemas import Verdict


class IdealClass(str, Enum):
    SubsetOfC = "SubsetOfC"
    ContainsCore = "ContainsCore"
    Inconclusive = "Inconclusive"


class HasCore(Protocol):
    def central_window_basis(self, window: Window) -> List[GradedElement]: ...

    def core_window_basis(self, window: Window) -> List[GradedElement]: ...


def classify_ideal(
    eala: GradedAlgebra,
    generators: Sequence[GradedElement],
    window: Window,
    max_rounds: Optional[int] = None,
) -> Verdict:
    """Places the ideal generated by `generators` inside C or around the core, as far as the window can tell"""
    closure = ideal_closure_at_window(eala, generators, window, max_rounds)
    span = closure.span()
    central = Subspace(c.terms for c in eala.central_window_basis(window))
    core = eala.core_window_basis(window)
    witness = {"closure_dimension": span.rank, "rounds": closure.rounds, "converged": closure.converged}
    if closure.converged and span.issubset(central):
        outcome = IdealClass.SubsetOfC
    elif all(span.contains(x.terms) for x in core):
        outcome = IdealClass.ContainsCore
    else:
        outcome = IdealClass.Inconclusive
        witness["suggestion"] = f"enlarge the window beyond {window.bound}"
    logging.info(f"Ideal of {len(generators)} generator(s) in {eala.name}: {outcome.value}")
    return Verdict(
        name="ideal_dichotomy",
        passed=outcome is not IdealClass.Inconclusive,
        detail=outcome.value,
        witness=witness,
        window=window.bound,
    )
