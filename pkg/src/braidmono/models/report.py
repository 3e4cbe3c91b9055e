"""Versioned pipeline report.

The structured output is ``Report.model_dump_json`` with sorted keys; field
names below are the documented schema. Every numeric root carries the
radius of its certified disk.
"""

from typing import Literal

from pydantic import Field

from braidmono.models.base import BraidMonoModel

SCHEMA_VERSION = "1.0"

Status = Literal["complete", "partial", "empty"]


class CurveRecord(BraidMonoModel):
    """The polynomial the pipeline ran on (after any shear)."""

    name: str
    polynomial: str
    degree: int
    degree_y: int
    terms: int
    shear: str | None = None


class RootRecord(BraidMonoModel):
    """A certified discriminant root: center and radius as decimal strings."""

    index: int
    re: str
    im: str
    radius: str
    multiplicity: int
    real: bool


class FactorRecord(BraidMonoModel):
    polynomial: str
    multiplicity: int


class DiscriminantRecord(BraidMonoModel):
    """Discriminant with respect to y, factored as found, and its distinct roots."""

    degree: int
    factors: list[FactorRecord] = Field(default_factory=list)
    roots: list[RootRecord] = Field(default_factory=list)


class LassoRecord(BraidMonoModel):
    """Braid monodromy of one lasso."""

    index: int = Field(..., description="Position in the counter-clockwise lasso order")
    target: int = Field(..., description="Index of the encircled discriminant root")
    letters: list[int]
    braid: str
    crossings: int
    permutation: list[int]
    nudged: bool = False
    relators: list[str] = Field(default_factory=list)


class PresentationRecord(BraidMonoModel):
    generators: int
    relators: list[str] = Field(default_factory=list)
    total_length: int = 0


class OrderRecord(BraidMonoModel):
    """Coset enumeration result; ``order`` is None when the bound was exceeded."""

    status: Literal["finite", "exceeded"]
    order: int | None = None
    bound: int


class QuotientRecord(BraidMonoModel):
    target: str
    target_order: int
    exists: bool
    count: int


class IdentificationRecord(BraidMonoModel):
    label: str
    witness: str | None = None


class LocalBraidRecord(BraidMonoModel):
    """Half twists of the local strand pair at a rational singular fiber point."""

    target: int = Field(..., description="Index of the encircled discriminant root")
    x: str
    y: str
    label: str
    expected: int = Field(..., description="Half twists predicted by the singularity type")
    measured: int = Field(..., description="Half twists of the tracked strand pair")

    @property
    def agrees(self) -> bool:
        return self.expected == self.measured


class AlignmentEventRecord(BraidMonoModel):
    x0: str
    u0: str | None
    aligned: int


class AlignmentRecord(BraidMonoModel):
    """Overcrossing certification of one real segment between singular values."""

    lower: str
    upper: str
    resultant_roots: int
    events: list[AlignmentEventRecord] = Field(default_factory=list)


class Report(BraidMonoModel):
    """Everything a pipeline run produced.

    A default instance is the valid empty report.
    """

    schema_version: str = SCHEMA_VERSION
    status: Status = "empty"
    messages: list[str] = Field(default_factory=list)
    curve: CurveRecord | None = None
    discriminant: DiscriminantRecord | None = None
    basepoint: str | None = None
    epsilon: str | None = None
    tilt: str | None = None
    lassos: list[LassoRecord] = Field(default_factory=list)
    raw_presentation: PresentationRecord | None = None
    simplified_presentation: PresentationRecord | None = None
    abelianization: list[int] | None = None
    order: OrderRecord | None = None
    quotients: list[QuotientRecord] = Field(default_factory=list)
    identification: IdentificationRecord | None = None
    alexander: str | None = None
    redundant_lassos: list[int] | None = None
    local_braids: list[LocalBraidRecord] = Field(default_factory=list)
    certification_log: list[AlignmentRecord] = Field(default_factory=list)
    timing: dict[str, float] = Field(default_factory=dict)

    @property
    def is_conclusive(self) -> bool:
        """False for partial runs and for exceeded coset bounds."""
        if self.status == "partial":
            return False
        return self.order is None or self.order.status == "finite"
