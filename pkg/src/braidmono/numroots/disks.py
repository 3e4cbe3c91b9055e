"""Certified root disks and root configurations.

Numbers are mpmath values. Every computation runs in its own mpmath context
so that precision changes never leak into other calls or threads.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import mpmath

logger = logging.getLogger(__name__)

# How a disk was certified
WITNESS_SMITH = "smith"  # Weierstrass/Smith inclusion disks, pairwise disjoint
WITNESS_NEWTON = "newton"  # Newton-Kantorovich contraction inside the previous disk
WITNESS_EXACT = "exact"  # root known exactly (rational)


def make_context(bits: int) -> mpmath.MPContext:
    """A fresh mpmath context with the given binary precision."""
    ctx = mpmath.MPContext()
    ctx.prec = bits
    return ctx


def fraction_to_mpf(ctx: mpmath.MPContext, value: Fraction) -> Any:
    return ctx.mpf(value.numerator) / value.denominator


def mpf_to_fraction(value: Any) -> Fraction:
    """Exact rational value of a finite mpf (no rounding to the global context)."""
    if isinstance(value, int | Fraction):
        return Fraction(value)
    sign, man, exp, _ = value._mpf_
    magnitude = Fraction(int(man)) * Fraction(2) ** int(exp)
    return -magnitude if sign else magnitude


def dyadic_below(value: Any, bits: int = 32) -> Fraction:
    """A dyadic rational <= value with about ``bits`` significant bits."""
    exact = mpf_to_fraction(value)
    if exact == 0:
        return exact
    shift = bits - math.floor(math.log2(abs(exact)))
    scale = Fraction(2) ** shift
    return Fraction(math.floor(exact * scale)) / scale


@dataclass(frozen=True)
class ComplexDisk:
    """Closed disk in the complex plane.

    Attributes:
        center: Complex center (mpc)
        radius: Nonnegative radius (mpf)
        precision: Working precision (bits) at which it was certified
        witness: Name of the certificate that the disk isolates one root
    """

    center: Any
    radius: Any
    precision: int = 64
    witness: str = WITNESS_SMITH

    @property
    def real(self) -> Any:
        return self.center.real

    @property
    def imag(self) -> Any:
        return self.center.imag

    def contains(self, z: Any) -> bool:
        return bool(abs(z - self.center) <= self.radius)

    def contains_disk(self, other: ComplexDisk) -> bool:
        return bool(abs(other.center - self.center) + other.radius <= self.radius)

    def overlaps(self, other: ComplexDisk) -> bool:
        return bool(abs(other.center - self.center) <= self.radius + other.radius)

    def distance_lower_bound(self, other: ComplexDisk) -> Any:
        """Lower bound for the distance between any point of self and of other."""
        return max(mpmath.mpf(0), abs(other.center - self.center) - self.radius - other.radius)

    def inflate(self, amount: Any) -> ComplexDisk:
        return ComplexDisk(self.center, self.radius + amount, self.precision, self.witness)

    def conjugate(self) -> ComplexDisk:
        return ComplexDisk(self.center.conjugate(), self.radius, self.precision, self.witness)

    @property
    def is_real_certified(self) -> bool:
        """True when the disk is symmetric about the real axis (center on the axis)."""
        return bool(self.center.imag == 0)

    def describe(self, digits: int = 6) -> str:
        return f"{mpmath.nstr(self.center, digits)} +/- {mpmath.nstr(self.radius, 3)}"


def lex_key(disk: ComplexDisk) -> tuple[Any, Any]:
    """Repository-wide root order: real part, then imaginary part of the center."""
    return (disk.center.real, disk.center.imag)


@dataclass(frozen=True)
class RootConfiguration:
    """Certified, pairwise disjoint disks for the distinct roots of a polynomial.

    Attributes:
        disks: Disks ordered by (real part, imaginary part) of their centers
        multiplicities: Multiplicity of the root in each disk
        source: Description of the evaluated fiber parameter
    """

    disks: tuple[ComplexDisk, ...]
    multiplicities: tuple[int, ...]
    source: str = ""
    precision: int = 64
    metadata: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if len(self.disks) != len(self.multiplicities):
            raise ValueError("disks and multiplicities must have the same length")

    def __len__(self) -> int:
        return len(self.disks)

    @property
    def degree(self) -> int:
        return sum(self.multiplicities)

    @property
    def centers(self) -> list[Any]:
        return [d.center for d in self.disks]

    def is_pairwise_disjoint(self) -> bool:
        return all(
            not a.overlaps(b)
            for i, a in enumerate(self.disks)
            for b in self.disks[i + 1 :]
        )

    def min_separation(self) -> Any:
        """Lower bound on the distance between distinct roots."""
        bounds = [
            a.distance_lower_bound(b)
            for i, a in enumerate(self.disks)
            for b in self.disks[i + 1 :]
        ]
        return min(bounds) if bounds else mpmath.inf

    def max_radius(self) -> Any:
        return max((d.radius for d in self.disks), default=mpmath.mpf(0))

    def real_roots(self) -> list[ComplexDisk]:
        return [d for d in self.disks if d.is_real_certified]


def sort_configuration(
    disks: Sequence[ComplexDisk],
    multiplicities: Sequence[int],
    source: str = "",
    precision: int = 64,
) -> RootConfiguration:
    order = sorted(range(len(disks)), key=lambda k: lex_key(disks[k]))
    return RootConfiguration(
        tuple(disks[k] for k in order),
        tuple(multiplicities[k] for k in order),
        source,
        precision,
    )
