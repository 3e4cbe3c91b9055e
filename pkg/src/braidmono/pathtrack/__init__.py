"""Lasso systems, certified fiber tracking and braid extraction."""

from braidmono.pathtrack.alignment import (
    AlignmentCandidate,
    SegmentCertificate,
    alignment_resultant,
    certify_real_segment,
)
from braidmono.pathtrack.crossings import (
    DEFAULT_TILT,
    CrossingEvent,
    braid_from_events,
    endpoint_permutation,
    extract_crossings,
    frame_order,
    local_strands,
    relative_half_turns,
)
from braidmono.pathtrack.dump import format_trajectory, write_trajectory_dump
from braidmono.pathtrack.fiber import NumericCurve
from braidmono.pathtrack.lasso import (
    Arc,
    LassoPath,
    Segment,
    build_lasso,
    build_lasso_system,
    default_basepoint,
    default_epsilon,
    real_segments,
)
from braidmono.pathtrack.tracker import (
    StepPolicy,
    Trajectory,
    TrajectorySample,
    basepoint_disks,
    movement_regions,
    track_fiber,
)

__all__ = [
    "DEFAULT_TILT",
    "AlignmentCandidate",
    "Arc",
    "CrossingEvent",
    "LassoPath",
    "NumericCurve",
    "Segment",
    "SegmentCertificate",
    "StepPolicy",
    "Trajectory",
    "TrajectorySample",
    "alignment_resultant",
    "basepoint_disks",
    "braid_from_events",
    "build_lasso",
    "build_lasso_system",
    "certify_real_segment",
    "default_basepoint",
    "default_epsilon",
    "endpoint_permutation",
    "extract_crossings",
    "format_trajectory",
    "frame_order",
    "local_strands",
    "movement_regions",
    "real_segments",
    "relative_half_turns",
    "track_fiber",
    "write_trajectory_dump",
]
