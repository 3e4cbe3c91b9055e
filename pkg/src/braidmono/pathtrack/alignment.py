"""Exact certification of vertical alignments of fiber roots over a real segment.

Over a real parameter x the non-real fiber roots of a real curve come in
conjugate pairs u +/- i*v. With f(x, u + i*v) = f_e + i*v*f_oo, they are
the common zeros of f_e and f_oo with v != 0. Two pairs on one vertical
line Re y = u force the remainder (R2'/R2'') v^2 + R0'/R0'' of f_e modulo
f_oo to vanish identically, so x is a root of Res_u(R2', R0'). Each real
root of that resultant in the segment is checked: its u-values are found,
and the positive solutions w = v^2 of f_oo = f_e = 0 are counted.

For fiber degree four f_oo is linear in w, so four roots on one line force
f_oo itself to vanish identically there. Its two v-coefficients then take
the place of R2' and R0', and the aligned roots are the positive roots of f_e.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import sympy as sp

from braidmono.exactpoly import BivariatePoly, UnivariatePoly, to_fraction
from braidmono.exactpoly.gaussian import RationalLike
from braidmono.exactpoly.realimag import U, pseudo_remainder_in_v, real_imag_split
from braidmono.exceptions import DegenerateAlignmentError, PolynomialError
from braidmono.numroots.disks import make_context
from braidmono.numroots.isolation import approximate_roots
from braidmono.numroots.realroots import RealRootInterval, real_roots_in_interval

logger = logging.getLogger(__name__)

ALIGNED_EVENT_MINIMUM = 4


@dataclass(frozen=True)
class AlignmentCandidate:
    """A real root x0 of the alignment resultant and what is aligned over it.

    Attributes:
        interval: Isolating interval of x0
        x0: Numerical value of x0
        u0: Common real part of the aligned roots (None if no real u fits)
        aligned: Number of non-real fiber roots on the line Re y = u0
    """

    interval: RealRootInterval
    x0: float
    u0: float | None
    aligned: int

    @property
    def is_event(self) -> bool:
        return self.aligned >= ALIGNED_EVENT_MINIMUM


@dataclass(frozen=True)
class SegmentCertificate:
    """Outcome of certify_real_segment on [lower, upper]."""

    lower: Fraction
    upper: Fraction
    resultant_root_count: int
    candidates: tuple[AlignmentCandidate, ...] = ()
    resultant: UnivariatePoly | None = field(default=None, compare=False)

    @property
    def events(self) -> list[AlignmentCandidate]:
        return [c for c in self.candidates if c.is_event]


def _v_coefficient(poly: sp.Poly, power: int) -> sp.Poly:
    """Coefficient of v^power in a polynomial in (x, u, v), as a polynomial in (x, u)."""
    x, u, _ = poly.gens
    terms = {(i, j): c for (i, j, k), c in poly.as_dict(native=False).items() if k == power}
    return sp.Poly.from_dict(terms or {(0, 0): 0}, x, u, domain=sp.QQ)


def alignment_resultant(curve: BivariatePoly) -> tuple[UnivariatePoly, sp.Poly, sp.Poly]:
    """Res_u(R2', R0') together with R2' and R0'.

    For fiber degree four the v^2 and v^0 coefficients of f_oo are used instead.

    Raises:
        DegenerateAlignmentError: If R2' and R0' share a factor depending on u,
            or the resultant vanishes identically
    """
    parts = real_imag_split(curve)
    x = curve.symbols[0]
    if curve.degree_inner == ALIGNED_EVENT_MINIMUM:
        r2 = _v_coefficient(parts.f_oo, 2)
        r0 = _v_coefficient(parts.f_oo, 0)
    else:
        remainder = pseudo_remainder_in_v(parts.f_e, parts.f_oo)
        r2_num, _, r0_num, _ = remainder.quadratic_parts()
        r2 = sp.Poly(r2_num.as_expr(), x, U)
        r0 = sp.Poly(r0_num.as_expr(), x, U)
    if r2.is_zero or r0.is_zero:
        raise DegenerateAlignmentError("the remainder has a vanishing v-coefficient")
    common = sp.gcd(r2, r0)
    if common.degree(U) > 0:
        raise DegenerateAlignmentError("R2' and R0' share a factor depending on u")
    resultant = sp.resultant(r2.as_expr(), r0.as_expr(), U)
    if sp.expand(resultant) == 0:
        raise DegenerateAlignmentError("the alignment resultant vanishes identically")
    return UnivariatePoly.from_sympy(sp.Poly(resultant, x), str(x)), r2, r0


def _numeric_poly(
    ctx: Any, poly: sp.Poly, substitutions: dict[sp.Symbol, Any], var: sp.Symbol
) -> list[Any]:
    """Coefficients (highest first) in var of poly with the other generators substituted."""
    by_power: dict[int, Any] = {}
    for monomial, coefficient in poly.as_dict(native=False).items():
        term = ctx.mpf(int(coefficient.p)) / int(coefficient.q)
        power = 0
        for gen, exponent in zip(poly.gens, monomial, strict=True):
            if gen == var:
                power = exponent
            else:
                term *= substitutions[gen] ** exponent
        by_power[power] = by_power.get(power, ctx.mpf(0)) + term
    degree = max(by_power, default=0)
    return [by_power.get(k, ctx.mpf(0)) for k in range(degree, -1, -1)]


def _even_in_v(poly: sp.Poly, w: sp.Symbol) -> sp.Poly:
    """Rewrite a polynomial in (x, u, v) that is even in v as a polynomial in (x, u, w = v^2)."""
    terms: dict[tuple[int, int, int], Any] = {}
    for (i, j, k), coefficient in poly.as_dict(native=False).items():
        if k % 2:
            raise PolynomialError("polynomial is not even in v")
        terms[(i, j, k // 2)] = coefficient
    x, u, _ = poly.gens
    return sp.Poly.from_dict(terms or {(0, 0, 0): 0}, x, u, w, domain=sp.QQ)


def _real_roots(ctx: Any, coefficients: list[Any], tolerance: Any) -> list[Any]:
    while len(coefficients) > 1 and coefficients[0] == 0:
        coefficients = coefficients[1:]
    if len(coefficients) < 2:
        return []
    roots = approximate_roots(ctx, coefficients)
    if roots is None:
        return []
    return [r.real for r in roots if abs(r.imag) <= tolerance * (1 + abs(r))]


def _refine(resultant: UnivariatePoly, root: RealRootInterval, bits: int) -> Fraction:
    poly = resultant.squarefree_part().poly
    lower, upper = poly.refine_root(
        sp.Rational(root.lower.numerator, root.lower.denominator),
        sp.Rational(root.upper.numerator, root.upper.denominator),
        eps=sp.Rational(1, 2**bits),
    )
    return (to_fraction(lower) + to_fraction(upper)) / 2


def _check_candidate(
    curve: BivariatePoly,
    f_e: sp.Poly,
    f_oo: sp.Poly,
    r2: sp.Poly,
    r0: sp.Poly,
    root: RealRootInterval,
    resultant: UnivariatePoly,
    bits: int,
) -> AlignmentCandidate:
    ctx = make_context(bits)
    x = curve.symbols[0]
    x0_exact = _refine(resultant, root, bits // 2) if root.lower != root.upper else root.lower
    x0 = ctx.mpf(x0_exact.numerator) / x0_exact.denominator
    tolerance = ctx.ldexp(ctx.mpf(1), -bits // 4)

    u_r2 = _real_roots(ctx, _numeric_poly(ctx, r2, {x: x0}, U), tolerance)
    r0_coefficients = _numeric_poly(ctx, r0, {x: x0}, U)
    scale = max(abs(c) for c in r0_coefficients) or ctx.mpf(1)
    best_u, best_value = None, None
    for u in u_r2:
        growth = (1 + abs(u)) ** len(r0_coefficients)
        value = abs(ctx.polyval(r0_coefficients, u)) / (scale * growth)
        if best_value is None or value < best_value:
            best_u, best_value = u, value
    if best_u is None or best_value > tolerance:
        return AlignmentCandidate(root, float(x0), None, 0)

    w = sp.Symbol("w")
    aligned = 0
    foo_w = _even_in_v(f_oo, w)
    fe_w = _even_in_v(f_e, w)
    substitutions = {x: x0, U: best_u}
    foo_coefficients = _numeric_poly(ctx, foo_w, substitutions, w)
    fe_coefficients = _numeric_poly(ctx, fe_w, substitutions, w)
    fe_scale = max(abs(c) for c in fe_coefficients) or ctx.mpf(1)
    if curve.degree_inner == ALIGNED_EVENT_MINIMUM:
        # f_oo vanishes on the whole line
        positive = [r for r in _real_roots(ctx, fe_coefficients, tolerance) if r > tolerance]
        return AlignmentCandidate(root, float(x0), float(best_u), 2 * len(positive))
    for value in _real_roots(ctx, foo_coefficients, tolerance):
        if value <= tolerance:
            continue
        growth = (1 + value) ** len(fe_coefficients)
        residual = abs(ctx.polyval(fe_coefficients, value)) / (fe_scale * growth)
        if residual <= tolerance:
            aligned += 2
    return AlignmentCandidate(root, float(x0), float(best_u), aligned)


def certify_real_segment(
    curve: BivariatePoly,
    lower: RationalLike,
    upper: RationalLike,
    precision: int = 256,
) -> SegmentCertificate:
    """Certified vertical alignments of at least four fiber roots over [lower, upper].

    Curves of fiber degree below four cannot have such alignments and give an
    empty certificate.

    Raises:
        PolynomialError: If lower > upper
        DegenerateAlignmentError: If the alignment resultant vanishes identically
    """
    a, b = to_fraction(lower), to_fraction(upper)
    if a > b:
        raise PolynomialError(f"empty segment [{a}, {b}]")
    if curve.degree_inner < ALIGNED_EVENT_MINIMUM:
        return SegmentCertificate(a, b, 0)
    resultant, r2, r0 = alignment_resultant(curve)
    roots = real_roots_in_interval(resultant, a, b)
    parts = real_imag_split(curve)
    candidates = tuple(
        _check_candidate(curve, parts.f_e, parts.f_oo, r2, r0, root, resultant, precision)
        for root in roots
    )
    certificate = SegmentCertificate(a, b, len(roots), candidates, resultant)
    logger.info(
        "segment [%s, %s]: %d resultant roots, %d alignment events",
        float(a),
        float(b),
        len(roots),
        len(certificate.events),
    )
    return certificate
