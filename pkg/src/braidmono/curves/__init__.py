"""Shipped curve fixtures and their expected invariants."""

import logging
from importlib import resources
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field

from braidmono.exactpoly import BivariatePoly
from braidmono.parsers.polytext import PolynomialParser

logger = logging.getLogger(__name__)


class SingularPointInfo(BaseModel):
    """A known singular point of a fixture curve."""

    model_config = ConfigDict(frozen=True)

    x: str = Field(..., description="Exact rational x coordinate")
    y: str = Field(..., description="Exact rational y coordinate")
    label: str = Field(..., description="Singularity type, e.g. A9")


class CurveFixture(BaseModel):
    """Metadata for a shipped curve."""

    model_config = ConfigDict(frozen=True)

    name: str
    filename: str
    description: str
    basepoint_side: int = Field(1, description="+1: basepoint right of its anchor, -1: left")
    singular_points: tuple[SingularPointInfo, ...] = ()
    expected_abelianization: tuple[int, ...] = ()
    expected_order: int | None = None
    expected_d10_quotient: bool | None = None
    expected_identification: str | None = None

    @property
    def path(self) -> Path:
        return Path(str(resources.files("braidmono.curves").joinpath(self.filename)))

    def load(self) -> BivariatePoly:
        return PolynomialParser().parse_file(self.path)


FIXTURES: dict[str, CurveFixture] = {
    "C": CurveFixture(
        name="C",
        filename="C.poly",
        description="Sextic with A9 + 2A4 whose group is cyclic of order 6",
        basepoint_side=1,
        singular_points=(
            SingularPointInfo(x="0", y="0", label="A9"),
            SingularPointInfo(x="1", y="0", label="A4"),
            SingularPointInfo(x="0", y="1", label="A4"),
        ),
        expected_abelianization=(6,),
        expected_order=6,
        expected_d10_quotient=False,
    ),
    "Cprime": CurveFixture(
        name="Cprime",
        filename="Cprime.poly",
        description="Sextic with A9 + 2A4 whose group is D10 x Z/3",
        basepoint_side=-1,
        singular_points=(
            SingularPointInfo(x="0", y="0", label="A9"),
            SingularPointInfo(x="1", y="1", label="A4"),
            SingularPointInfo(x="1", y="-1", label="A4"),
        ),
        expected_abelianization=(6,),
        expected_order=30,
        expected_d10_quotient=True,
        expected_identification="D10 x Z/3",
    ),
    "conic": CurveFixture(
        name="conic",
        filename="conic.poly",
        description="Smooth conic",
        expected_abelianization=(2,),
        expected_order=2,
        expected_d10_quotient=False,
    ),
    "cubic": CurveFixture(
        name="cubic",
        filename="cubic.poly",
        description="Smooth Fermat cubic",
        expected_abelianization=(3,),
        expected_order=3,
        expected_d10_quotient=False,
    ),
    "quartic": CurveFixture(
        name="quartic",
        filename="quartic.poly",
        description="Quartic with four fiber roots on one vertical line over x = 0",
    ),
}


def fixture_names() -> list[str]:
    """Names of the shipped curves."""
    return sorted(FIXTURES)


def get_fixture(name: str) -> CurveFixture:
    """Look up fixture metadata by name (case-sensitive, ``C'`` accepted for Cprime)."""
    key = "Cprime" if name in ("C'", "Cp") else name
    try:
        return FIXTURES[key]
    except KeyError as e:
        known = ", ".join(fixture_names())
        raise KeyError(f"unknown curve fixture {name!r}; known: {known}") from e


def load_fixture(name: str) -> BivariatePoly:
    """Parse a shipped curve."""
    return get_fixture(name).load()


__all__ = [
    "FIXTURES",
    "CurveFixture",
    "SingularPointInfo",
    "fixture_names",
    "get_fixture",
    "load_fixture",
]
