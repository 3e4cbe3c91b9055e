"""Certified isolation and refinement of complex roots.

Approximations come from mpmath's Durand-Kerner solver (``polyroots``).
They are certified with Weierstrass corrections: for a monic squarefree
polynomial of degree n with approximations z_1..z_n, every root lies in the
union of the disks D(z_i, n*|W_i|), and a connected component made of k
disks holds exactly k roots. Pairwise disjoint disks therefore isolate one
root each. Failed certifications double the working precision up to a
ceiling.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction
from typing import Any

import mpmath
from mpmath.libmp import NoConvergence

from braidmono.exactpoly import UnivariatePoly
from braidmono.exceptions import CertificationError, PolynomialError
from braidmono.numroots.disks import (
    WITNESS_NEWTON,
    WITNESS_SMITH,
    ComplexDisk,
    RootConfiguration,
    fraction_to_mpf,
    make_context,
    sort_configuration,
)

logger = logging.getLogger(__name__)

DEFAULT_PRECISION = 64
DEFAULT_CEILING = 4096


def _slack(ctx: mpmath.MPContext, z: Any, degree: int) -> Any:
    # rounding allowance for evaluating at working precision
    return ctx.ldexp(ctx.mpf(1), -ctx.prec + 8) * (1 + abs(z)) * (degree + 1)


def approximate_roots(
    ctx: mpmath.MPContext,
    coefficients: Sequence[Any],
    initial: Sequence[Any] | None = None,
) -> list[Any] | None:
    """Durand-Kerner approximations of all roots, or None if the solver did not converge.

    Args:
        ctx: mpmath context fixing the working precision
        coefficients: Coefficients highest degree first, leading one nonzero
        initial: Optional starting approximations (one per root)
    """
    degree = len(coefficients) - 1
    if degree < 1:
        return []
    try:
        roots = ctx.polyroots(
            list(coefficients),
            maxsteps=max(100, 20 * degree),
            cleanup=False,
            extraprec=ctx.prec,
            roots_init=list(initial) if initial is not None else None,
        )
    except NoConvergence:
        logger.debug("polyroots did not converge at %d bits", ctx.prec)
        return None
    return [ctx.mpc(r) for r in roots]


def smith_disks(
    ctx: mpmath.MPContext,
    coefficients: Sequence[Any],
    approximations: Sequence[Any],
    real_coefficients: bool = False,
) -> list[ComplexDisk] | None:
    """Inclusion disks around approximations of the roots of a squarefree polynomial.

    Returns None unless the disks are pairwise disjoint. With real
    coefficients, a disk meeting the real axis is re-centered on it; if it
    stays disjoint from the others its root is certified real.
    """
    degree = len(coefficients) - 1
    if degree != len(approximations):
        return None
    lc = coefficients[0]
    disks: list[ComplexDisk] = []
    for i, z in enumerate(approximations):
        denominator = lc
        for j, w in enumerate(approximations):
            if i != j:
                denominator *= z - w
        if denominator == 0:
            return None
        correction = ctx.polyval(list(coefficients), z) / denominator
        radius = degree * abs(correction) + _slack(ctx, z, degree)
        center = ctx.mpc(z)
        if real_coefficients and abs(center.imag) <= radius:
            radius += abs(center.imag)
            center = ctx.mpc(center.real, 0)
        disks.append(ComplexDisk(center, radius, ctx.prec, WITNESS_SMITH))
    for i, a in enumerate(disks):
        for b in disks[i + 1 :]:
            if a.overlaps(b):
                return None
    return disks


def _certify_factors(
    factors: list[tuple[UnivariatePoly, int]], bits: int
) -> tuple[list[ComplexDisk], list[int]] | None:
    ctx = make_context(bits)
    disks: list[ComplexDisk] = []
    multiplicities: list[int] = []
    for factor, multiplicity in factors:
        if factor.degree < 1:
            continue
        coefficients = factor.mp_coefficients(ctx)
        approximations = approximate_roots(ctx, coefficients)
        if approximations is None:
            return None
        found = smith_disks(ctx, coefficients, approximations, factor.is_rational)
        if found is None:
            return None
        disks.extend(found)
        multiplicities.extend([multiplicity] * len(found))
    for i, a in enumerate(disks):
        for b in disks[i + 1 :]:
            if a.overlaps(b):
                return None
    return disks, multiplicities


def isolate_complex_roots(
    p: UnivariatePoly,
    precision: int = DEFAULT_PRECISION,
    ceiling: int = DEFAULT_CEILING,
    source: str = "",
) -> RootConfiguration:
    """Certified disjoint disks around all distinct roots of p.

    Multiplicities come from the exact squarefree decomposition; disks are
    certified against the squarefree factors only.

    Args:
        p: Nonzero polynomial
        precision: Starting working precision in bits
        ceiling: Largest working precision to try

    Returns:
        RootConfiguration ordered by (real part, imaginary part).

    Raises:
        PolynomialError: If p is zero
        CertificationError: If certification fails at the ceiling
    """
    if p.is_zero:
        raise PolynomialError("cannot isolate the roots of the zero polynomial")
    if p.degree == 0:
        return RootConfiguration((), (), source, precision)
    factors = p.squarefree_factors()
    bits = precision
    while True:
        result = _certify_factors(factors, bits)
        if result is not None:
            disks, multiplicities = result
            logger.debug("isolated %d roots of a degree %d polynomial at %d bits",
                         len(disks), p.degree, bits)
            return sort_configuration(disks, multiplicities, source, bits)
        if bits * 2 > ceiling:
            raise CertificationError(
                f"root isolation failed for a degree {p.degree} polynomial", ceiling
            )
        bits *= 2
        logger.debug("escalating root isolation precision to %d bits", bits)


def _to_mpf(ctx: mpmath.MPContext, value: Any) -> Any:
    if isinstance(value, Fraction):
        return fraction_to_mpf(ctx, value)
    return ctx.mpf(value)


def refine_root(
    p: UnivariatePoly,
    disk: ComplexDisk,
    target_radius: Any,
    ceiling: int = DEFAULT_CEILING,
) -> ComplexDisk:
    """Shrink a certified root disk below target_radius by Newton iteration.

    A Newton iterate z is enclosed in D(z, n*|q(z)/q'(z)|) with q the
    squarefree part of p; the new disk is accepted only inside the old one,
    so it contains the same root.

    Raises:
        CertificationError: If the target is not reached at the ceiling
    """
    q = p.squarefree_part()
    derivative = q.derivative()
    degree = q.degree
    bits = max(disk.precision, DEFAULT_PRECISION)
    z = disk.center
    while True:
        ctx = make_context(bits)
        coefficients = q.mp_coefficients(ctx)
        derivative_coefficients = derivative.mp_coefficients(ctx)
        target = _to_mpf(ctx, target_radius)
        z = ctx.convert(z)
        radius = None
        for _ in range(8 + bits // 8):
            value = ctx.polyval(coefficients, z)
            slope = ctx.polyval(derivative_coefficients, z)
            if slope == 0 or degree * abs(value / slope) <= target / 4:
                break
            z = z - value / slope
        slope = ctx.polyval(derivative_coefficients, z)
        if slope != 0:
            radius = degree * abs(ctx.polyval(coefficients, z) / slope) + _slack(ctx, z, degree)
        if radius is not None:
            candidate = ComplexDisk(ctx.mpc(z), radius, bits, WITNESS_NEWTON)
            if disk.contains_disk(candidate) and radius <= target:
                return candidate
        if bits * 2 > ceiling:
            raise CertificationError(
                f"could not refine root near {mpmath.nstr(disk.center, 8)} "
                f"to radius {mpmath.nstr(target, 3)}",
                ceiling,
            )
        bits *= 2
        logger.debug("escalating root refinement precision to %d bits", bits)
