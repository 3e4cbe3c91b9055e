"""Certified continuation of the fiber roots along a path.

A step from x0 to x1 first certifies a movement region for every root: the
old disk around it is inflated to a fixed fraction of the distance to its
nearest neighbour, and Rouche's theorem, with the drift of f over the
whole step bounded from its Taylor expansion at x0, shows that each
inflated disk holds exactly one root for every x on the step. The roots at
x1 are then approximated from second-order Taylor predictions and enclosed
in pairwise disjoint inclusion disks. A step is accepted when

* each new disk meets exactly one movement region, and the matching is a
  bijection;
* no pair of strands moves by more than half of its distance, so relative
  windings and crossing directions can be read off consecutive samples;
* the change of the frame order is a set of disjoint adjacent exchanges.

Otherwise the step is halved; below the minimal step the working precision
is doubled up to the ceiling.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import mpmath

from braidmono.exactpoly import BivariatePoly, GaussianRational, evaluate_partial
from braidmono.exceptions import CertificationError, TangentialCrossingError, TrackingError
from braidmono.numroots.disks import (
    ComplexDisk,
    RootConfiguration,
    fraction_to_mpf,
    make_context,
    sort_configuration,
)
from braidmono.numroots.isolation import approximate_roots, isolate_complex_roots, smith_disks
from braidmono.pathtrack.crossings import DEFAULT_TILT, adjacent_swaps, frame_order, tilt_value
from braidmono.pathtrack.fiber import NumericCurve
from braidmono.pathtrack.lasso import LassoPath, Piece, Segment

logger = logging.getLogger(__name__)

REASON_CROSSING = "crossing"


@dataclass(frozen=True)
class StepPolicy:
    """Step size and precision control for the tracker.

    Attributes:
        initial_step: First step on every piece (piece parameters run over [0, 1])
        max_step: Largest accepted step
        min_step: Smallest step before the precision is raised
        precision: Starting working precision in bits
        ceiling: Largest working precision
        region_ratio: Movement region radius as a fraction of the nearest-neighbour distance
        rouche_margin: Required ratio between the lower bound of |f| on a region boundary
            and the drift bound
        pair_ratio: Bound for the relative motion of every strand pair per step
    """

    initial_step: Fraction = Fraction(1, 32)
    max_step: Fraction = Fraction(1, 8)
    min_step: Fraction = Fraction(1, 2**30)
    precision: int = 64
    ceiling: int = 4096
    region_ratio: Fraction = Fraction(3, 8)
    rouche_margin: Fraction = Fraction(2)
    pair_ratio: Fraction = Fraction(1, 2)


@dataclass(frozen=True)
class TrajectorySample:
    """Certified fiber roots at one path point.

    ``disks[k]`` continues the root at basepoint frame position k+1.
    """

    piece_index: int
    parameter: Fraction
    x: Any
    disks: tuple[ComplexDisk, ...]

    @property
    def roots(self) -> tuple[Any, ...]:
        return tuple(d.center for d in self.disks)

    @property
    def parameter_float(self) -> float:
        return float(self.parameter)

    def configuration(self) -> RootConfiguration:
        precision = max((d.precision for d in self.disks), default=64)
        source = f"piece {self.piece_index} t={self.parameter}"
        return sort_configuration(self.disks, [1] * len(self.disks), source, precision)


@dataclass(frozen=True)
class Trajectory:
    """Labelled fiber roots along a path, one sample per accepted step.

    Labels are the frame positions at the first sample, so consecutive
    samples are matched by index.
    """

    samples: tuple[TrajectorySample, ...]
    tilt: Fraction = DEFAULT_TILT
    stats: dict[str, int] = field(default_factory=dict, compare=False)

    @property
    def tilt_value(self) -> Any:
        return tilt_value(self.tilt)

    @property
    def degree(self) -> int:
        return len(self.samples[0].disks) if self.samples else 0

    def matching(self, index: int) -> tuple[int, ...]:
        """Bijection from configuration order at sample index to that at index + 1."""
        before = self.samples[index].configuration()
        after = self.samples[index + 1].configuration()
        label_at_before = [self.samples[index].disks.index(d) for d in before.disks]
        position_after = {
            self.samples[index + 1].disks.index(d): k for k, d in enumerate(after.disks)
        }
        return tuple(position_after[label] for label in label_at_before)


def basepoint_disks(
    curve: BivariatePoly,
    basepoint: GaussianRational,
    tilt: Fraction = DEFAULT_TILT,
    precision: int = 64,
    ceiling: int = 4096,
) -> tuple[ComplexDisk, ...]:
    """Certified fiber roots over the basepoint, sorted by frame position.

    Raises:
        TrackingError: If the fiber over the basepoint has a multiple root
    """
    fiber = evaluate_partial(curve, basepoint)
    configuration = isolate_complex_roots(fiber, precision, ceiling, source=str(basepoint))
    if any(m != 1 for m in configuration.multiplicities):
        raise TrackingError(f"fiber over the basepoint {basepoint} has a multiple root", 0, 0.0)
    tilt_mp = tilt_value(tilt)
    order = frame_order(configuration.centers, tilt_mp)
    return tuple(configuration.disks[label - 1] for label in order)


@dataclass
class _StepOutcome:
    disks: list[ComplexDisk] | None
    reason: str = ""
    easy: bool = False


def movement_regions(
    curve: NumericCurve,
    ctx: mpmath.MPContext,
    x0: Any,
    reach: Any,
    disks: Sequence[ComplexDisk],
    policy: StepPolicy,
) -> tuple[list[Any], Any] | None:
    """Radii of disks around the old centers that each keep exactly one root over a step.

    Every point x of the step satisfies |x - x0| <= reach. On the boundary of
    region i, |f(x0, y)| is bounded below through the certified old disks
    and |f(x, y) - f(x0, y)| above through ``drift_bounds``; when the lower
    bound exceeds ``rouche_margin`` times the upper one, f(x, .) has exactly
    one root inside for every such x.

    Returns:
        The region radii and the smallest certified ratio, or None if some
        region cannot be certified
    """
    centers = [ctx.convert(d.center) for d in disks]
    radii = [ctx.convert(d.radius) for d in disks]
    if len(centers) == 1:
        return [ctx.inf], ctx.inf
    fraction = fraction_to_mpf(ctx, policy.region_ratio)
    regions = []
    for i, center in enumerate(centers):
        nearest = min(abs(center - c) for k, c in enumerate(centers) if k != i)
        region = fraction * nearest
        if region <= radii[i]:
            return None
        regions.append(region)
    leading = abs(curve.fiber_coefficients(ctx, x0)[0])
    drifts = curve.drift_bounds(ctx, x0, reach, centers, regions)
    margin = fraction_to_mpf(ctx, policy.rouche_margin)
    worst = ctx.inf
    for i, center in enumerate(centers):
        lower = leading * (regions[i] - radii[i])
        for k, other in enumerate(centers):
            if k != i:
                gap = abs(center - other) - regions[i] - radii[k]
                if gap <= 0:
                    return None
                lower *= gap
        if drifts[i] == 0:
            continue
        ratio = lower / drifts[i]
        if not ratio > margin:
            return None
        worst = min(worst, ratio)
    return regions, worst


def _attempt(
    curve: NumericCurve,
    ctx: mpmath.MPContext,
    piece: Piece,
    s0: Fraction,
    s1: Fraction,
    current: Sequence[ComplexDisk],
    policy: StepPolicy,
    tilt: Any,
) -> _StepOutcome:
    x0 = piece.point(ctx, fraction_to_mpf(ctx, s0))
    x1 = piece.point(ctx, fraction_to_mpf(ctx, s1))
    certified = movement_regions(curve, ctx, x0, piece.reach(ctx, s0, s1), current, policy)
    if certified is None:
        return _StepOutcome(None, "root movement not certified")
    regions, rouche_ratio = certified

    roots = [ctx.convert(d.center) for d in current]
    predictions = [curve.predict(ctx, x0, y, x1 - x0) for y in roots]
    coefficients = curve.fiber_coefficients(ctx, x1)
    approximations = approximate_roots(ctx, coefficients, predictions)
    if approximations is None:
        return _StepOutcome(None, "root approximation did not converge")
    disks = smith_disks(ctx, coefficients, approximations)
    if disks is None:
        return _StepOutcome(None, "inclusion disks overlap")

    matched: list[ComplexDisk | None] = [None] * len(roots)
    for disk in disks:
        hits = [
            i
            for i, (center, region) in enumerate(zip(roots, regions, strict=True))
            if abs(disk.center - center) < disk.radius + region
        ]
        if len(hits) != 1:
            return _StepOutcome(None, "new disk does not meet exactly one movement region")
        if matched[hits[0]] is not None:
            return _StepOutcome(None, "root matching is not a bijection")
        matched[hits[0]] = disk
    new = [d for d in matched if d is not None]

    pair_bound = fraction_to_mpf(ctx, policy.pair_ratio)
    worst = ctx.mpf(0)
    for a in range(len(roots)):
        for b in range(a + 1, len(roots)):
            before = roots[a] - roots[b]
            after = new[a].center - new[b].center
            motion = abs(after - before) / abs(before)
            if motion > pair_bound:
                return _StepOutcome(None, "strand pair moved too far")
            worst = max(worst, motion)

    order0 = frame_order(roots, tilt)
    order1 = frame_order([d.center for d in new], tilt)
    if adjacent_swaps(order0, order1) is None:
        return _StepOutcome(None, REASON_CROSSING)
    easy = worst < pair_bound / 4 and rouche_ratio > 4 * fraction_to_mpf(ctx, policy.rouche_margin)
    return _StepOutcome(new, easy=bool(easy))


def _track_piece(
    curve: NumericCurve,
    piece: Piece,
    piece_index: int,
    start: Sequence[ComplexDisk],
    policy: StepPolicy,
    tilt: Any,
    stats: dict[str, int],
) -> list[TrajectorySample]:
    samples: list[TrajectorySample] = []
    current = list(start)
    s = Fraction(0)
    h = policy.initial_step
    bits = policy.precision
    ctx = make_context(bits)
    while s < 1:
        s1 = min(Fraction(1), s + h)
        outcome = _attempt(curve, ctx, piece, s, s1, current, policy, tilt)
        if outcome.disks is not None:
            current = outcome.disks
            s = s1
            x = piece.point(ctx, fraction_to_mpf(ctx, s))
            samples.append(TrajectorySample(piece_index, s, x, tuple(current)))
            stats["steps"] = stats.get("steps", 0) + 1
            if outcome.easy:
                h = min(2 * h, policy.max_step)
            continue
        stats["rejected"] = stats.get("rejected", 0) + 1
        if h / 2 >= policy.min_step:
            h /= 2
            logger.debug("piece %d t=%s: %s; step %s", piece_index, s, outcome.reason, h)
            continue
        if bits * 2 <= policy.ceiling:
            bits *= 2
            ctx = make_context(bits)
            h = policy.initial_step
            stats["escalations"] = stats.get("escalations", 0) + 1
            logger.debug("piece %d t=%s: raising precision to %d bits", piece_index, s, bits)
            continue
        error = TangentialCrossingError if outcome.reason == REASON_CROSSING else TrackingError
        raise error(
            f"tracking failed at precision ceiling {policy.ceiling}: {outcome.reason}",
            piece_index,
            float(s),
        )
    return samples


def track_fiber(
    curve: BivariatePoly | NumericCurve,
    path: LassoPath | Sequence[Piece],
    policy: StepPolicy | None = None,
    tilt: Fraction = DEFAULT_TILT,
    start: Sequence[ComplexDisk] | None = None,
) -> Trajectory:
    """Track all fiber roots along a path.

    Args:
        curve: The curve, or its prepared numeric form
        path: A lasso or any continuous sequence of pieces
        policy: Step and precision control
        tilt: Projection frame tilt
        start: Basepoint roots in frame order (computed when omitted)

    Returns:
        Trajectory whose first sample is the basepoint fiber.

    Raises:
        TrackingError: If certification fails at the precision ceiling
        TangentialCrossingError: If crossings cannot be separated
    """
    policy = policy or StepPolicy()
    numeric = curve if isinstance(curve, NumericCurve) else NumericCurve(curve)
    pieces = path.pieces if isinstance(path, LassoPath) else tuple(path)
    if not pieces:
        raise TrackingError("cannot track along an empty path")
    basepoint = pieces[0].start
    if start is None:
        try:
            start = basepoint_disks(
                numeric.curve, basepoint, tilt, policy.precision, policy.ceiling
            )
        except CertificationError as e:
            raise TrackingError(f"basepoint fiber not certified: {e}", 0, 0.0) from e
    tilt_mp = tilt_value(tilt)
    ctx = make_context(policy.precision)
    samples = [TrajectorySample(0, Fraction(0), basepoint.to_mp(ctx), tuple(start))]
    stats: dict[str, int] = {}
    current: Sequence[ComplexDisk] = start
    for index, piece in enumerate(pieces):
        if isinstance(piece, Segment) and piece.start == piece.end:
            continue
        piece_samples = _track_piece(numeric, piece, index, current, policy, tilt_mp, stats)
        samples.extend(piece_samples)
        if piece_samples:
            current = piece_samples[-1].disks
    logger.debug(
        "tracked %d pieces: %d steps, %d rejected",
        len(pieces),
        stats.get("steps", 0),
        stats.get("rejected", 0),
    )
    return Trajectory(tuple(samples), tilt, stats)
