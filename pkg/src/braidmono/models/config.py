"""Pipeline configuration model built from CLI flags and settings."""

from fractions import Fraction
from pathlib import Path
from typing import Literal

from pydantic import Field, field_validator, model_validator

from braidmono.config import settings
from braidmono.exactpoly import BivariatePoly, GaussianRational
from braidmono.grouptheory import TietzeLimits
from braidmono.grouptheory.finite import NAMED_GROUPS
from braidmono.models.base import BraidMonoModel
from braidmono.pathtrack import StepPolicy

OutputFormat = Literal["text", "structured"]


def _parse_rational(value: str, name: str) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"{name} must be an exact rational such as 1/64, got {value!r}") from e


class PipelineConfig(BraidMonoModel):
    """Everything run_pipeline needs; unspecified numerics come from settings.

    Exactly one curve source (inline text, file or shipped fixture) must be
    given. Rational options are kept as text and parsed exactly.
    """

    curve_text: str | None = Field(None, description="Polynomial in the repository text format")
    curve_file: Path | None = Field(None, description="File holding the polynomial")
    fixture: str | None = Field(None, description="Name of a shipped curve")

    shear: str | None = Field(None, description="Exact a for the coordinate change x -> x + a*y")
    epsilon: str | None = Field(None, description="Lasso head radius override")
    basepoint: str | None = Field(None, description="Real basepoint override")
    basepoint_side: Literal[-1, 1] | None = Field(
        None, description="Default basepoint side of its anchor (fixture default, else +1)"
    )

    precision_bits: int = Field(default_factory=lambda: settings.precision_bits, gt=0)
    precision_ceiling: int = Field(default_factory=lambda: settings.precision_ceiling, gt=0)
    projection_tilt: str = Field(default_factory=lambda: settings.projection_tilt)
    coset_bound: int = Field(default_factory=lambda: settings.coset_bound, gt=0)
    epimorphism_order_bound: int = Field(
        default_factory=lambda: settings.epimorphism_order_bound, gt=0
    )
    tietze_max_rounds: int = Field(default_factory=lambda: settings.tietze_max_rounds, gt=0)
    tietze_max_relator_length: int = Field(
        default_factory=lambda: settings.tietze_max_relator_length, gt=0
    )
    max_workers: int = Field(default_factory=lambda: settings.max_workers, gt=0)

    quotients: tuple[str, ...] = Field(("d10",), description="Quotient targets to search")
    alexander: bool = False
    identify: bool = True
    check_redundancy: bool = False
    certify_segments: bool = False
    check_local_braids: bool = Field(
        False, description="Compare local half twists with singularity types (tracks every lasso)"
    )

    use_cache: bool = Field(default_factory=lambda: settings.cache_enabled)
    cache_db_path: Path | None = None
    dump_trajectories: Path | None = None
    output_format: OutputFormat = "text"
    timing: bool = False

    @model_validator(mode="after")
    def check_sources(self) -> "PipelineConfig":
        """Require exactly one curve source and a consistent precision range."""
        given = [s for s in (self.curve_text, self.curve_file, self.fixture) if s is not None]
        if len(given) != 1:
            raise ValueError("give exactly one of curve text, curve file or fixture name")
        if self.precision_ceiling < self.precision_bits:
            raise ValueError("precision ceiling must be >= starting precision")
        return self

    @field_validator("fixture")
    @classmethod
    def validate_fixture(cls, v: str | None) -> str | None:
        from braidmono.curves import get_fixture

        if v is not None:
            try:
                get_fixture(v)
            except KeyError as e:
                raise ValueError(str(e).strip("\"'")) from e
        return v

    @field_validator("epsilon")
    @classmethod
    def validate_epsilon(cls, v: str | None) -> str | None:
        if v is not None and _parse_rational(v, "epsilon") <= 0:
            raise ValueError(f"epsilon must be positive, got {v}")
        return v

    @field_validator("shear", "basepoint")
    @classmethod
    def validate_rational(cls, v: str | None) -> str | None:
        if v is not None:
            _parse_rational(v, "value")
        return v

    @field_validator("projection_tilt")
    @classmethod
    def validate_tilt(cls, v: str) -> str:
        tilt = _parse_rational(v, "projection tilt")
        if not 0 < tilt <= Fraction(1, 4):
            raise ValueError(f"projection tilt must lie in (0, 1/4], got {v}")
        return v

    @field_validator("quotients", mode="before")
    @classmethod
    def split_quotients(cls, v: object) -> object:
        """Accept a comma separated string as well as a sequence."""
        if isinstance(v, str):
            return tuple(name.strip() for name in v.split(",") if name.strip())
        return v

    @field_validator("quotients")
    @classmethod
    def validate_quotients(cls, v: tuple[str, ...]) -> tuple[str, ...]:
        for name in v:
            if name.lower() not in NAMED_GROUPS and not Path(name).expanduser().is_file():
                known = ", ".join(sorted(NAMED_GROUPS))
                raise ValueError(f"unknown quotient target {name!r}; use a file or one of {known}")
        return v

    @property
    def epsilon_value(self) -> Fraction | None:
        return None if self.epsilon is None else Fraction(self.epsilon)

    @property
    def shear_value(self) -> Fraction | None:
        return None if self.shear is None else Fraction(self.shear)

    @property
    def basepoint_value(self) -> GaussianRational | None:
        return None if self.basepoint is None else GaussianRational(Fraction(self.basepoint))

    @property
    def tilt(self) -> Fraction:
        return Fraction(self.projection_tilt)

    @property
    def tietze_limits(self) -> TietzeLimits:
        return TietzeLimits(self.tietze_max_rounds, self.tietze_max_relator_length)

    @property
    def step_policy(self) -> StepPolicy:
        return StepPolicy(precision=self.precision_bits, ceiling=self.precision_ceiling)

    @property
    def side(self) -> int:
        """Basepoint side: the explicit flag, else the fixture's, else +1."""
        if self.basepoint_side is not None:
            return self.basepoint_side
        if self.fixture is not None:
            from braidmono.curves import get_fixture

            return get_fixture(self.fixture).basepoint_side
        return 1

    @property
    def curve_label(self) -> str:
        if self.fixture is not None:
            return self.fixture
        if self.curve_file is not None:
            return self.curve_file.stem
        return "expr"

    def load_curve(self) -> BivariatePoly:
        """Parse the configured curve source (before any shear)."""
        from braidmono.curves import load_fixture
        from braidmono.parsers import PolynomialParser, parse_curve

        if self.fixture is not None:
            return load_fixture(self.fixture)
        if self.curve_file is not None:
            return PolynomialParser().parse_file(self.curve_file.expanduser())
        assert self.curve_text is not None
        return parse_curve(self.curve_text)
