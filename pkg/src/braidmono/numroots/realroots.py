"""Exact real root counting and isolation on rational intervals."""

import logging
from dataclasses import dataclass
from fractions import Fraction

import sympy as sp

from braidmono.exactpoly import UnivariatePoly
from braidmono.exactpoly.gaussian import RationalLike, fraction_to_sympy, to_fraction
from braidmono.exceptions import PolynomialError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RealRootInterval:
    """Closed interval [lower, upper] with rational endpoints holding one real root.

    lower == upper when the root is rational and found exactly.
    """

    lower: Fraction
    upper: Fraction
    multiplicity: int = 1

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    def contains(self, value: RationalLike) -> bool:
        return self.lower <= to_fraction(value) <= self.upper


def _sign_changes(values: list[sp.Rational]) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:], strict=False) if a != b)


def sturm_count(p: UnivariatePoly, a: RationalLike, b: RationalLike) -> int:
    """Number of distinct real roots of p in the half-open interval (a, b].

    Computed from sign variations of the Sturm sequence of p at a and b.
    """
    if p.is_zero:
        raise PolynomialError("Sturm sequence of the zero polynomial")
    if not p.is_rational:
        raise PolynomialError("Sturm counting needs rational coefficients")
    lo, hi = fraction_to_sympy(to_fraction(a)), fraction_to_sympy(to_fraction(b))
    sequence = sp.sturm(p.poly)
    at_lo = [s.eval(lo) for s in sequence]
    at_hi = [s.eval(hi) for s in sequence]
    return _sign_changes(at_lo) - _sign_changes(at_hi)


def count_real_roots(p: UnivariatePoly, a: RationalLike, b: RationalLike) -> int:
    """Number of distinct real roots in the closed interval [a, b]."""
    lo = to_fraction(a)
    count = sturm_count(p, lo, b)
    if p(lo) == 0:
        count += 1
    return count


def real_roots_in_interval(
    p: UnivariatePoly,
    a: RationalLike,
    b: RationalLike,
    width: RationalLike | None = None,
) -> list[RealRootInterval]:
    """Isolating intervals with multiplicities for the real roots of p in [a, b].

    Args:
        p: Nonzero rational polynomial
        a: Lower endpoint
        b: Upper endpoint, not below a
        width: Optional maximal interval width (intervals are refined below it)

    Raises:
        PolynomialError: If a > b, p is zero, or p has non-rational coefficients
    """
    lo, hi = to_fraction(a), to_fraction(b)
    if lo > hi:
        raise PolynomialError(f"empty interval [{lo}, {hi}]")
    if p.is_zero:
        raise PolynomialError("real roots of the zero polynomial")
    if not p.is_rational:
        raise PolynomialError("real root isolation needs rational coefficients")
    if p.degree == 0:
        return []
    eps = fraction_to_sympy(to_fraction(width)) if width is not None else None
    raw = p.poly.intervals(
        inf=fraction_to_sympy(lo), sup=fraction_to_sympy(hi), eps=eps, sqf=False
    )
    result = [
        RealRootInterval(to_fraction(s), to_fraction(t), int(k)) for (s, t), k in raw
    ]
    result.sort(key=lambda r: r.lower)
    expected = count_real_roots(p, lo, hi)
    if len(result) != expected:
        raise PolynomialError(
            f"isolation found {len(result)} roots but the Sturm count is {expected}"
        )
    logger.debug("%d real roots in [%s, %s]", len(result), lo, hi)
    return result
