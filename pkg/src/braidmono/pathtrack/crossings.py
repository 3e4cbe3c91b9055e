"""Crossing events of fiber strands in the tilted projection frame.

Strands are ordered by the real part, then the imaginary part, of
z = (1 - i*kappa) * y for a small exact tilt kappa. Two strands exchanging
adjacent positions i, i+1 give one crossing; its sign is +1 when the strand
coming from the left passes below the other one (counter-clockwise relative
rotation).
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Any

import mpmath

from braidmono.exceptions import TangentialCrossingError, TrackingError
from braidmono.vankampen import BraidWord, braid_from_crossings

if TYPE_CHECKING:
    from braidmono.pathtrack.tracker import Trajectory

logger = logging.getLogger(__name__)

DEFAULT_TILT = Fraction(1, 64)


@dataclass(frozen=True)
class CrossingEvent:
    """Exchange of the strands at positions ``position`` and ``position + 1``.

    Attributes:
        position: 1-based frame position of the left strand before the event
        sign: +1 or -1
        piece_index: Path piece on which the event happened
        parameter: Piece parameter of the sample closing the event
        strands: Labels (basepoint positions) of the left and right strand
    """

    position: int
    sign: int
    piece_index: int
    parameter: float
    strands: tuple[int, int]

    def letter(self) -> int:
        return self.sign * self.position


def tilt_value(tilt: Fraction) -> Any:
    """The tilt as an mpf; every frame comparison uses this same rounded value."""
    return mpmath.mpf(tilt.numerator) / tilt.denominator


def frame_key(y: Any, tilt: Any) -> tuple[Any, Any]:
    return (y.real + tilt * y.imag, y.imag - tilt * y.real)


def frame_order(roots: Sequence[Any], tilt: Any) -> tuple[int, ...]:
    """Labels (1-based indices into roots) sorted by frame position."""
    return tuple(
        k + 1 for k in sorted(range(len(roots)), key=lambda k: frame_key(roots[k], tilt))
    )


def adjacent_swaps(before: Sequence[int], after: Sequence[int]) -> list[int] | None:
    """Positions i such that after is before with disjoint swaps (i, i+1) applied, else None."""
    if len(before) != len(after):
        return None
    swaps: list[int] = []
    i = 0
    while i < len(before):
        if before[i] == after[i]:
            i += 1
        elif (
            i + 1 < len(before)
            and before[i] == after[i + 1]
            and before[i + 1] == after[i]
        ):
            swaps.append(i + 1)
            i += 2
        else:
            return None
    return swaps


def crossing_sign(w0: Any, w1: Any) -> int:
    """Sign of the crossing of a strand pair with differences w0 -> w1 (left minus right).

    Zero when the rotation is not decided.
    """
    if w0 == 0 or w1 == 0:
        return 0
    rotation = mpmath.arg(w1 / w0)
    if rotation > 0:
        return 1
    if rotation < 0:
        return -1
    return 0


def extract_crossings(trajectory: Trajectory) -> list[CrossingEvent]:
    """Crossing events between consecutive samples, in path order.

    Raises:
        TangentialCrossingError: If two consecutive samples differ by more than
            disjoint adjacent exchanges, or a crossing direction is undecided
    """
    tilt = trajectory.tilt_value
    events: list[CrossingEvent] = []
    samples = trajectory.samples
    order = frame_order(samples[0].roots, tilt) if samples else ()
    for previous, current in zip(samples, samples[1:], strict=False):
        next_order = frame_order(current.roots, tilt)
        swaps = adjacent_swaps(order, next_order)
        if swaps is None:
            raise TangentialCrossingError(
                "strand order change between samples is not a set of adjacent exchanges",
                current.piece_index,
                current.parameter_float,
            )
        for position in swaps:
            left, right = order[position - 1], order[position]
            w0 = previous.roots[left - 1] - previous.roots[right - 1]
            w1 = current.roots[left - 1] - current.roots[right - 1]
            sign = crossing_sign(w0, w1)
            if sign == 0:
                raise TangentialCrossingError(
                    f"crossing of strands {left} and {right} has no direction",
                    current.piece_index,
                    current.parameter_float,
                )
            events.append(
                CrossingEvent(
                    position, sign, current.piece_index, current.parameter_float, (left, right)
                )
            )
        order = next_order
    logger.debug("extracted %d crossing events", len(events))
    return events


def braid_from_events(events: Sequence[CrossingEvent], strands: int) -> BraidWord:
    return braid_from_crossings(((e.position, e.sign) for e in events), strands)


def endpoint_permutation(trajectory: Trajectory) -> tuple[int, ...]:
    """perm[k-1] = final frame position of the strand starting at position k."""
    tilt = trajectory.tilt_value
    start = frame_order(trajectory.samples[0].roots, tilt)
    end = frame_order(trajectory.samples[-1].roots, tilt)
    final_position = {label: position for position, label in enumerate(end, start=1)}
    return tuple(final_position[label] for label in start)


def relative_half_turns(trajectory: Trajectory, a: int, b: int) -> float:
    """Signed number of half turns of strand a around strand b along the trajectory."""
    total = mpmath.mpf(0)
    samples = trajectory.samples
    for previous, current in zip(samples, samples[1:], strict=False):
        w0 = previous.roots[a - 1] - previous.roots[b - 1]
        w1 = current.roots[a - 1] - current.roots[b - 1]
        total += mpmath.arg(w1 / w0)
    return float(total / mpmath.pi)


def local_strands(trajectory: Trajectory, piece_index: int, y0: Any) -> tuple[int, int]:
    """Labels of the two strands closest to y0 midway along one piece.

    On the head circle of a lasso these are the strands that meet at the
    singular fiber point (eta, y0) once the circle is small enough.

    Raises:
        TrackingError: If the piece has no samples or there are fewer than two strands
    """
    on_piece = [s for s in trajectory.samples if s.piece_index == piece_index]
    if not on_piece or trajectory.degree < 2:
        raise TrackingError(f"no two strands sampled on piece {piece_index}", piece_index)
    middle = min(on_piece, key=lambda s: abs(s.parameter - Fraction(1, 2)))
    nearest = sorted(range(trajectory.degree), key=lambda k: abs(middle.roots[k] - y0))
    a, b = sorted(nearest[:2])
    return a + 1, b + 1
