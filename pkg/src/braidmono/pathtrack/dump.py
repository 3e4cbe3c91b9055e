"""Plain-text trajectory dumps for external plotting."""

from __future__ import annotations

import logging
from pathlib import Path

import mpmath

from braidmono.pathtrack.tracker import Trajectory

logger = logging.getLogger(__name__)

DUMP_DIGITS = 17


def format_trajectory(trajectory: Trajectory) -> str:
    """One line per sample: ``piece t re(y1) im(y1) re(y2) im(y2) ...``.

    Roots are listed by label, i.e. by frame position at the basepoint.
    """
    lines = []
    for sample in trajectory.samples:
        fields = [str(sample.piece_index), mpmath.nstr(sample.parameter_float, DUMP_DIGITS)]
        for root in sample.roots:
            fields.append(mpmath.nstr(root.real, DUMP_DIGITS))
            fields.append(mpmath.nstr(root.imag, DUMP_DIGITS))
        lines.append(" ".join(fields))
    return "\n".join(lines) + "\n" if lines else ""


def write_trajectory_dump(trajectory: Trajectory, path: str | Path) -> Path:
    """Write a trajectory dump to path, creating parent directories."""
    target = Path(path).expanduser()
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(format_trajectory(trajectory), encoding="utf-8")
    logger.debug("wrote %d samples to %s", len(trajectory.samples), target)
    return target
