"""Exact Gaussian rational numbers used as pencil parameters and path anchors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Union

import sympy as sp

if TYPE_CHECKING:
    from mpmath import MPContext

RationalLike = Union[int, Fraction, sp.Rational, str]
ExactNumber = Union[RationalLike, "GaussianRational"]


def to_fraction(value: RationalLike) -> Fraction:
    """Convert an exact rational value to a Fraction.

    Raises:
        TypeError: If the value is a float or otherwise inexact
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rational numbers")
    if isinstance(value, Fraction | int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, sp.Rational):
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def fraction_to_sympy(value: Fraction) -> sp.Rational:
    """Convert a Fraction to a sympy Rational."""
    return sp.Rational(value.numerator, value.denominator)


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """Complex number re + i*im with exact rational parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", to_fraction(self.re))
        object.__setattr__(self, "im", to_fraction(self.im))

    @classmethod
    def coerce(cls, value: ExactNumber) -> GaussianRational:
        """Return value as a GaussianRational (rationals get a zero imaginary part)."""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, sp.Expr) and not isinstance(value, sp.Rational):
            re_part, im_part = value.as_real_imag()
            return cls(to_fraction(sp.nsimplify(re_part)), to_fraction(sp.nsimplify(im_part)))
        return cls(to_fraction(value))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus re^2 + im^2."""
        return self.re * self.re + self.im * self.im

    def __add__(self, other: ExactNumber) -> GaussianRational:
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: ExactNumber) -> GaussianRational:
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: ExactNumber) -> GaussianRational:
        return GaussianRational.coerce(other) - self

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: ExactNumber) -> GaussianRational:
        o = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: ExactNumber) -> GaussianRational:
        o = GaussianRational.coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * o.conjugate() * GaussianRational(1 / n)

    def __pow__(self, exponent: int) -> GaussianRational:
        if exponent < 0:
            return GaussianRational(1) / self ** (-exponent)
        result = GaussianRational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def to_sympy(self) -> sp.Expr:
        return fraction_to_sympy(self.re) + sp.I * fraction_to_sympy(self.im)

    def to_mp(self, ctx: MPContext) -> object:
        """Return the value as an mpc of the given mpmath context."""
        return ctx.mpc(
            ctx.mpf(self.re.numerator) / self.re.denominator,
            ctx.mpf(self.im.numerator) / self.im.denominator,
        )

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*I"
