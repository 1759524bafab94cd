from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Verdict(BaseModel):
    """Outcome of one checkable property; failures carry the first witness found"""

    name: str
    passed: bool
    detail: str = ""
    witness: Optional[Any] = None
    window: Optional[int] = None

    @classmethod
    def ok(cls, name: str, detail: str = "", window: Optional[int] = None) -> "Verdict":
        return cls(name=name, passed=True, detail=detail, window=window)

    @classmethod
    def fail(cls, name: str, detail: str, witness: Any = None, window: Optional[int] = None) -> "Verdict":
        return cls(name=name, passed=False, detail=detail, witness=witness, window=window)

    def __bool__(self) -> bool:
        return self.passed


class AxiomReport(BaseModel):
    """Named verdicts plus free-form facts computed alongside them"""

    verdicts: Dict[str, Verdict] = Field(default_factory=dict)
    facts: Dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts.values())

    def failed(self) -> List[str]:
        return [name for name, v in self.verdicts.items() if not v.passed]


# Manifest pieces

Coefficient = Union[int, str]
PsiSpec = Dict[str, Dict[str, Coefficient]]


class BaseSpec(BaseModel):
    """Type of the finite-dimensional simple algebra g"""

    model_config = ConfigDict(extra="forbid")

    series: Literal["A", "B", "C", "D", "E", "F", "G"]
    rank: int = Field(ge=1)


class AutomorphismSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    diagram: Optional[List[int]] = None
    kac: Optional[List[int]] = None
    order: int = Field(default=1, ge=1)


class DerivationSpec(BaseModel):
    """One extra generator chi^xi d_theta of D"""

    model_config = ConfigDict(extra="forbid")

    xi: List[int]
    theta: List[Coefficient]

    @field_validator("theta")
    @classmethod
    def rational_theta(cls, theta: List[Coefficient]) -> List[Coefficient]:
        for value in theta:
            Fraction(value)
        return theta

    @model_validator(mode="after")
    def same_length(self) -> "DerivationSpec":
        if len(self.xi) != len(self.theta):
            raise ValueError(f"xi has length {len(self.xi)} but theta has length {len(self.theta)}")
        return self


class CocycleEntry(BaseModel):
    """tau(d_{d1}, d_{d2}) = sum of value[k] c_k, indices starting at 0"""

    model_config = ConfigDict(extra="forbid")

    d1: int = Field(ge=0)
    d2: int = Field(ge=0)
    value: Dict[int, Coefficient]


class ElementTerm(BaseModel):
    model_config = ConfigDict(extra="forbid")

    slot: str
    degree: List[int]
    coeff: Coefficient = "1"


Element = List[ElementTerm]


class LiftSpec(BaseModel):
    """Elements x for exp(ad x); when empty, root vectors are sampled from the window"""

    model_config = ConfigDict(extra="forbid")

    elements: List[Element] = Field(default_factory=list)
    psi1: Optional[PsiSpec] = None
    psi2: Optional[PsiSpec] = None
    g: Optional[AutomorphismSpec] = None


class ConjugateSpec(BaseModel):
    """H' given by a basis, or as f_psi0(H); `sweep` adds that many random round trips"""

    model_config = ConfigDict(extra="forbid")

    h_prime: Optional[List[Element]] = None
    psi0: Optional[PsiSpec] = None
    sweep: int = Field(default=0, ge=0)
    g: Optional[AutomorphismSpec] = None

    @model_validator(mode="after")
    def one_source(self) -> "ConjugateSpec":
        if self.h_prime is not None and self.psi0 is not None:
            raise ValueError("give either h_prime or psi0, not both")
        return self


class Manifest(BaseModel):
    """Root model of a manifest file"""

    model_config = ConfigDict(extra="forbid")

    base: BaseSpec
    automorphisms: List[AutomorphismSpec] = Field(min_length=1)
    D_extra: List[DerivationSpec] = Field(default_factory=list)
    tau: List[CocycleEntry] = Field(default_factory=list)
    window: Optional[int] = Field(default=None, ge=1)
    seed: Optional[int] = None
    samples: Optional[int] = Field(default=None, ge=1)
    lift: Optional[LiftSpec] = None
    conjugate: Optional[ConjugateSpec] = None

    @property
    def nullity(self) -> int:
        return len(self.automorphisms)

    @model_validator(mode="after")
    def degrees_match_nullity(self) -> "Manifest":
        n = self.nullity
        for d in self.D_extra:
            if len(d.xi) != n:
                raise ValueError(f"D_extra degree {d.xi} does not have length {n}")
        elements = list(self.lift.elements) if self.lift else []
        if self.conjugate and self.conjugate.h_prime:
            elements += self.conjugate.h_prime
        for element in elements:
            for term in element:
                if len(term.degree) != n:
                    raise ValueError(f"element degree {term.degree} does not have length {n}")
        return self


# Reports


class BuildReport(BaseModel):
    algebra: str
    nullity: int
    orders: List[int]
    dimensions: Dict[str, int]
    root_system: str
    xi_lattice: List[List[int]]
    gamma_orders: List[int]
    eala: Dict[str, Any]


class LieTorusReport(BaseModel):
    axioms: Dict[str, Verdict]
    facts: Dict[str, Any] = Field(default_factory=dict)


class EalaReport(BaseModel):
    axioms: Dict[str, Verdict]
    nullity: int
    roots: List[Dict[str, Any]]
    core: Dict[str, bool]
    dercoc: List[Verdict] = Field(default_factory=list)


class IdealReport(BaseModel):
    ideals: List[Verdict]
    counts: Dict[str, int]


class DescentReport(BaseModel):
    descent: Verdict
    gamma_equivariance: Verdict
    gamma_orders: List[int]


class RootsReport(BaseModel):
    base: Dict[str, Any]
    grading: Dict[str, Any]


class LiftReport(BaseModel):
    verdicts: List[Verdict]


class ConjugacyReport(BaseModel):
    status: str
    psi: Dict[str, Dict[str, str]] = Field(default_factory=dict)
    xi: Dict[str, Dict[str, str]] = Field(default_factory=dict)
    verified: bool
    window: int
    verdicts: List[Verdict] = Field(default_factory=list)
    error: Optional[Dict[str, Any]] = None


class Report(BaseModel):
    """Envelope of every command's output; contains no timings so reruns are byte-identical"""

    schema_version: int
    command: str
    manifest_digest: str
    tool_version: str
    window: int
    seed: int
    samples: int
    passed: bool
    body: Union[
        BuildReport, LieTorusReport, EalaReport, IdealReport, DescentReport, RootsReport, LiftReport, ConjugacyReport,
        Dict[str, Any],
    ]
