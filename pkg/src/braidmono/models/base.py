"""Base model shared by configuration and report records."""

from pydantic import BaseModel as PydanticBaseModel
from pydantic import ConfigDict


class BraidMonoModel(PydanticBaseModel):
    """Base model for pipeline configuration and report records.

    Records are immutable and reject unknown fields so that the structured
    report schema stays fixed.
    """

    model_config = ConfigDict(
        frozen=True,
        extra="forbid",
        str_strip_whitespace=True,
    )
