"""Pydantic models for pipeline configuration and reports."""

from braidmono.models.base import BraidMonoModel
from braidmono.models.config import OutputFormat, PipelineConfig
from braidmono.models.report import (
    SCHEMA_VERSION,
    AlignmentEventRecord,
    AlignmentRecord,
    CurveRecord,
    DiscriminantRecord,
    FactorRecord,
    IdentificationRecord,
    LassoRecord,
    LocalBraidRecord,
    OrderRecord,
    PresentationRecord,
    QuotientRecord,
    Report,
    RootRecord,
)

__all__ = [
    "SCHEMA_VERSION",
    "AlignmentEventRecord",
    "AlignmentRecord",
    "BraidMonoModel",
    "CurveRecord",
    "DiscriminantRecord",
    "FactorRecord",
    "IdentificationRecord",
    "LassoRecord",
    "LocalBraidRecord",
    "OutputFormat",
    "PipelineConfig",
    "PresentationRecord",
    "QuotientRecord",
    "Report",
    "RootRecord",
]
