"""Lasso systems around the singular values of a pencil.

A lasso is a tail from the basepoint to a small circle around one singular
value, the circle itself traversed counter-clockwise (the head), and the
tail back. Tails run along the real axis and pass real singular values on
half circles in the upper half-plane; a non-real singular value is reached
by a vertical descent from its real part. All path data is exact: centers
are dyadic rationals and arc angles are rational numbers of turns, so every
piece starts exactly where the previous one ends.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import mpmath

from braidmono.exactpoly import GaussianRational
from braidmono.exactpoly.gaussian import ExactNumber
from braidmono.exceptions import LassoConstructionError
from braidmono.numroots.disks import (
    ComplexDisk,
    dyadic_below,
    fraction_to_mpf,
    make_context,
    mpf_to_fraction,
)

logger = logging.getLogger(__name__)

# Snapped centers differ from the certified ones by at most epsilon / SNAP_FACTOR.
SNAP_FACTOR = 1024
NUDGE_FRACTION = Fraction(1, 8)

_QUARTER_POINTS = {
    Fraction(0): GaussianRational(1, 0),
    Fraction(1, 4): GaussianRational(0, 1),
    Fraction(1, 2): GaussianRational(-1, 0),
    Fraction(3, 4): GaussianRational(0, -1),
}


@dataclass(frozen=True)
class Segment:
    start: GaussianRational
    end: GaussianRational

    def point(self, ctx: mpmath.MPContext, s: Any) -> Any:
        a, b = self.start.to_mp(ctx), self.end.to_mp(ctx)
        return a + (b - a) * s

    def velocity(self, ctx: mpmath.MPContext, s: Any) -> Any:
        return self.end.to_mp(ctx) - self.start.to_mp(ctx)

    def reach(self, ctx: mpmath.MPContext, s0: Fraction, s1: Fraction) -> Any:
        """Upper bound of |x(s) - x(s0)| for s in [s0, s1]."""
        return abs(self.end.to_mp(ctx) - self.start.to_mp(ctx)) * fraction_to_mpf(ctx, s1 - s0)

    def distance_to(self, ctx: mpmath.MPContext, z: Any) -> Any:
        a, b = self.start.to_mp(ctx), self.end.to_mp(ctx)
        direction = b - a
        length2 = abs(direction) ** 2
        if length2 == 0:
            return abs(z - a)
        t = ((z - a) * direction.conjugate()).real / length2
        t = min(max(t, ctx.mpf(0)), ctx.mpf(1))
        return abs(a + direction * t - z)

    def reversed(self) -> Segment:
        return Segment(self.end, self.start)

    def describe(self) -> str:
        return f"segment {self.start} -> {self.end}"


@dataclass(frozen=True)
class Arc:
    """Circular arc center + radius * exp(2*pi*i*(start_turn + s*sweep)).

    Angles are measured in turns; a positive sweep runs counter-clockwise.
    Endpoints must fall on quarter turns so that they are exact.
    """

    center: GaussianRational
    radius: Fraction
    start_turn: Fraction
    sweep: Fraction

    def __post_init__(self) -> None:
        if self.radius <= 0:
            raise LassoConstructionError(f"arc radius must be positive, got {self.radius}")
        for turn in (self.start_turn, self.start_turn + self.sweep):
            if turn % 1 not in _QUARTER_POINTS:
                raise LassoConstructionError(f"arc endpoint at {turn} turns is not exact")

    def _at_turn(self, turn: Fraction) -> GaussianRational:
        return self.center + _QUARTER_POINTS[turn % 1] * self.radius

    @property
    def start(self) -> GaussianRational:
        return self._at_turn(self.start_turn)

    @property
    def end(self) -> GaussianRational:
        return self._at_turn(self.start_turn + self.sweep)

    def _phase(self, ctx: mpmath.MPContext, s: Any) -> Any:
        turn = ctx.mpf(self.start_turn.numerator) / self.start_turn.denominator
        sweep = ctx.mpf(self.sweep.numerator) / self.sweep.denominator
        return ctx.expjpi(2 * (turn + s * sweep))

    def point(self, ctx: mpmath.MPContext, s: Any) -> Any:
        radius = ctx.mpf(self.radius.numerator) / self.radius.denominator
        return self.center.to_mp(ctx) + radius * self._phase(ctx, s)

    def velocity(self, ctx: mpmath.MPContext, s: Any) -> Any:
        radius = ctx.mpf(self.radius.numerator) / self.radius.denominator
        sweep = ctx.mpf(self.sweep.numerator) / self.sweep.denominator
        return 2 * ctx.pi * ctx.j * sweep * radius * self._phase(ctx, s)

    def reach(self, ctx: mpmath.MPContext, s0: Fraction, s1: Fraction) -> Any:
        """Arc length between s0 and s1, an upper bound of |x(s) - x(s0)|."""
        return 2 * ctx.pi * fraction_to_mpf(ctx, self.radius * abs(self.sweep) * (s1 - s0))

    def distance_to(self, ctx: mpmath.MPContext, z: Any) -> Any:
        offset = z - self.center.to_mp(ctx)
        radius = ctx.mpf(self.radius.numerator) / self.radius.denominator
        if abs(self.sweep) >= 1 or offset == 0:
            return abs(abs(offset) - radius)
        turn = mpf_to_fraction((ctx.arg(offset) / (2 * ctx.pi)).real) % 1
        along = (turn - self.start_turn) % 1 if self.sweep > 0 else (self.start_turn - turn) % 1
        if along <= abs(self.sweep):
            return abs(abs(offset) - radius)
        return min(abs(z - self.start.to_mp(ctx)), abs(z - self.end.to_mp(ctx)))

    def reversed(self) -> Arc:
        return Arc(self.center, self.radius, self.start_turn + self.sweep, -self.sweep)

    def describe(self) -> str:
        return (
            f"arc center {self.center} radius {self.radius} "
            f"from {self.start_turn} sweep {self.sweep}"
        )


Piece = Segment | Arc


@dataclass(frozen=True)
class LassoPath:
    """A closed path from the basepoint around one singular value.

    Attributes:
        pieces: Tail, head circle and reversed tail, end to start continuous
        basepoint: Start and end point of the path
        target: Index of the encircled singular value
        head_index: Index of the head circle in pieces
        nudged: Whether the radii and descent were shifted after a failed attempt
    """

    pieces: tuple[Piece, ...]
    basepoint: GaussianRational
    target: int
    head_index: int
    nudged: bool = False

    def __post_init__(self) -> None:
        if not self.pieces:
            raise LassoConstructionError("a lasso needs at least one piece")
        if self.pieces[0].start != self.basepoint or self.pieces[-1].end != self.basepoint:
            raise LassoConstructionError("lasso must start and end at the basepoint")
        for a, b in zip(self.pieces, self.pieces[1:], strict=False):
            if a.end != b.start:
                raise LassoConstructionError(f"discontinuous lasso: {a.end} != {b.start}")

    @property
    def head(self) -> Arc:
        head = self.pieces[self.head_index]
        assert isinstance(head, Arc)
        return head

    @property
    def tail(self) -> tuple[Piece, ...]:
        return self.pieces[: self.head_index]

    def describe(self) -> str:
        """Canonical text description (one piece per line)."""
        return "\n".join(piece.describe() for piece in self.pieces)


def _snap(value: Any, epsilon: Fraction) -> Fraction:
    """Dyadic rational within epsilon / SNAP_FACTOR of value."""
    exact = mpf_to_fraction(value)
    bits = max(0, math.ceil(math.log2(SNAP_FACTOR / epsilon)))
    scale = 2**bits
    return Fraction(math.floor(exact * scale), scale)


def _min_pairwise_distance(singular_values: Sequence[ComplexDisk]) -> Any:
    bounds = [
        a.distance_lower_bound(b)
        for i, a in enumerate(singular_values)
        for b in singular_values[i + 1 :]
    ]
    return min(bounds) if bounds else None


def default_epsilon(singular_values: Sequence[ComplexDisk]) -> Fraction:
    """A quarter of the minimal distance between singular values, rounded down to a dyadic."""
    distance = _min_pairwise_distance(singular_values)
    if distance is None:
        return Fraction(1, 4)
    if distance <= 0:
        raise LassoConstructionError("singular value disks are not disjoint")
    return dyadic_below(distance / 4, bits=8)


def default_basepoint(
    singular_values: Sequence[ComplexDisk], epsilon: Fraction, side: int = 1
) -> GaussianRational:
    """Point on the circle of radius epsilon around the real singular value closest to 0.

    ``side`` = +1 puts the basepoint to the right of that value, -1 to the
    left. Without real singular values the basepoint is placed left of all
    of them.
    """
    if side not in (1, -1):
        raise LassoConstructionError(f"basepoint side must be +1 or -1, got {side}")
    real = [d for d in singular_values if d.is_real_certified]
    if real:
        anchor = min(real, key=lambda d: abs(d.center))
        return GaussianRational(_snap(anchor.real, epsilon) + side * epsilon)
    if not singular_values:
        return GaussianRational(0)
    leftmost = min(mpf_to_fraction(d.real) for d in singular_values)
    return GaussianRational(math.floor(leftmost) - 1)


@dataclass(frozen=True)
class _Target:
    index: int
    re: Fraction
    im: Fraction
    is_real: bool


def _targets(singular_values: Sequence[ComplexDisk], epsilon: Fraction) -> list[_Target]:
    targets = []
    for index, disk in enumerate(singular_values):
        if disk.is_real_certified:
            targets.append(_Target(index, _snap(disk.real, epsilon), Fraction(0), True))
        else:
            targets.append(
                _Target(index, _snap(disk.real, epsilon), _snap(disk.imag, epsilon), False)
            )
    return targets


def real_segments(
    singular_values: Sequence[ComplexDisk], epsilon: Fraction
) -> list[tuple[Fraction, Fraction]]:
    """Real tail segments [eta_i + epsilon, eta_{i+1} - epsilon] between consecutive
    real singular values, with the same snapped centers as the lassos."""
    centers = sorted(t.re for t in _targets(singular_values, epsilon) if t.is_real)
    return [
        (a + epsilon, b - epsilon)
        for a, b in zip(centers, centers[1:], strict=False)
        if a + epsilon < b - epsilon
    ]


def _real_walk(
    start: Fraction, stop: Fraction, obstacles: list[Fraction], radius: Fraction
) -> list[Piece]:
    """Pieces along the real axis from start to stop, passing obstacles above."""
    if start == stop:
        return []
    direction = 1 if stop > start else -1
    pieces: list[Piece] = []
    current = start
    for center in sorted(obstacles, key=lambda c: direction * c):
        entry, exit_ = center - direction * radius, center + direction * radius
        if direction * (entry - current) < 0 or direction * (stop - exit_) < 0:
            raise LassoConstructionError(
                f"real path from {start} to {stop} starts or ends inside the detour around {center}"
            )
        if entry != current:
            pieces.append(Segment(GaussianRational(current), GaussianRational(entry)))
        if direction > 0:
            pieces.append(Arc(GaussianRational(center), radius, Fraction(1, 2), Fraction(-1, 2)))
        else:
            pieces.append(Arc(GaussianRational(center), radius, Fraction(0), Fraction(1, 2)))
        current = exit_
    if current != stop:
        pieces.append(Segment(GaussianRational(current), GaussianRational(stop)))
    return pieces


def _between(targets: list[_Target], a: Fraction, b: Fraction, skip: int) -> list[Fraction]:
    low, high = min(a, b), max(a, b)
    return [t.re for t in targets if t.is_real and t.index != skip and low < t.re < high]


def _lasso_for(
    target: _Target,
    targets: list[_Target],
    basepoint: Fraction,
    epsilon: Fraction,
    nudge: bool,
) -> LassoPath:
    radius = epsilon - epsilon * NUDGE_FRACTION if nudge else epsilon
    if target.is_real:
        right = target.re > basepoint
        stop = target.re - radius if right else target.re + radius
        obstacles = _between(targets, basepoint, target.re, target.index)
        tail = _real_walk(basepoint, stop, obstacles, radius)
        head = Arc(
            GaussianRational(target.re),
            radius,
            Fraction(1, 2) if right else Fraction(0),
            Fraction(1),
        )
    else:
        abscissa = target.re + epsilon * NUDGE_FRACTION if nudge else target.re
        for t in targets:
            if t.is_real and abs(t.re - abscissa) <= radius:
                raise LassoConstructionError(
                    f"descent to singular value {target.index} starts inside a detour"
                )
        tail = _real_walk(basepoint, abscissa, _between(targets, basepoint, abscissa, -1), radius)
        above = target.im > 0
        landing = target.im - radius if above else target.im + radius
        tail.append(Segment(GaussianRational(abscissa), GaussianRational(abscissa, landing)))
        head = Arc(
            GaussianRational(abscissa, target.im),
            radius,
            Fraction(3, 4) if above else Fraction(1, 4),
            Fraction(1),
        )
    back = [piece.reversed() for piece in reversed(tail)]
    pieces = (*tail, head, *back)
    return LassoPath(pieces, GaussianRational(basepoint), target.index, len(tail), nudge)


def _order(targets: list[_Target], basepoint: Fraction) -> list[_Target]:
    """Counter-clockwise order of the tails around the basepoint."""
    right = [t for t in targets if t.re >= basepoint]
    left = [t for t in targets if t.re < basepoint]
    return (
        sorted((t for t in right if t.im <= 0), key=lambda t: t.re)
        + sorted((t for t in right if t.im > 0), key=lambda t: -t.re)
        + sorted((t for t in left if t.im > 0), key=lambda t: -t.re)
        + sorted((t for t in left if t.im <= 0), key=lambda t: t.re)
    )


def check_clearance(
    lasso: LassoPath, singular_values: Sequence[ComplexDisk], clearance: Fraction
) -> None:
    """Raise unless every piece stays at least ``clearance`` away from every singular value."""
    ctx = make_context(64)
    bound = ctx.mpf(clearance.numerator) / clearance.denominator
    for k, piece in enumerate(lasso.pieces):
        for index, disk in enumerate(singular_values):
            center = ctx.convert(disk.center)
            if piece.distance_to(ctx, center) - ctx.mpf(disk.radius) < bound:
                raise LassoConstructionError(
                    f"lasso {lasso.target} piece {k} ({piece.describe()}) comes within "
                    f"{clearance} of singular value {index}"
                )


def _validate(
    singular_values: Sequence[ComplexDisk], basepoint: GaussianRational, epsilon: Fraction
) -> None:
    if not basepoint.is_real:
        raise LassoConstructionError(f"basepoint must be real, got {basepoint}")
    if epsilon <= 0:
        raise LassoConstructionError(f"epsilon must be positive, got {epsilon}")
    distance = _min_pairwise_distance(singular_values)
    if distance is not None and not 2 * epsilon < mpf_to_fraction(distance):
        raise LassoConstructionError(
            f"epsilon {epsilon} is not below half the minimal distance "
            f"{mpmath.nstr(distance, 6)} between singular values"
        )
    ctx = make_context(64)
    point = basepoint.to_mp(ctx)
    half = ctx.mpf(epsilon.numerator) / epsilon.denominator / 2
    for index, disk in enumerate(singular_values):
        if abs(point - ctx.convert(disk.center)) - ctx.mpf(disk.radius) < half:
            raise LassoConstructionError(
                f"basepoint {basepoint} is too close to singular value {index}"
            )


def build_lasso(
    singular_values: Sequence[ComplexDisk],
    index: int,
    basepoint: ExactNumber,
    epsilon: Fraction,
    nudge: bool = False,
) -> LassoPath:
    """The lasso around singular value ``index`` (optionally nudged)."""
    base = GaussianRational.coerce(basepoint)
    _validate(singular_values, base, epsilon)
    targets = _targets(singular_values, epsilon)
    lasso = _lasso_for(targets[index], targets, base.re, epsilon, nudge)
    check_clearance(lasso, singular_values, epsilon / 2)
    return lasso


def build_lasso_system(
    singular_values: Sequence[ComplexDisk],
    basepoint: ExactNumber,
    epsilon: Fraction,
) -> list[LassoPath]:
    """One lasso per singular value, in counter-clockwise order of their tails.

    Traversing the lassos in list order gives a loop around all singular
    values.

    Raises:
        LassoConstructionError: If the basepoint is not real or too close to a
            singular value, epsilon is not below half the minimal distance, or a
            piece violates the clearance of epsilon / 2
    """
    base = GaussianRational.coerce(basepoint)
    _validate(singular_values, base, epsilon)
    targets = _targets(singular_values, epsilon)
    lassos = []
    for target in _order(targets, base.re):
        lasso = _lasso_for(target, targets, base.re, epsilon, nudge=False)
        check_clearance(lasso, singular_values, epsilon / 2)
        lassos.append(lasso)
    logger.info("built %d lassos with epsilon %s around basepoint %s", len(lassos), epsilon, base)
    return lassos
