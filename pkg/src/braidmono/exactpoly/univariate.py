"""Exact univariate polynomials with rational or Gaussian rational coefficients."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction
from typing import TYPE_CHECKING

import sympy as sp

from braidmono.exactpoly.gaussian import (
    ExactNumber,
    GaussianRational,
    fraction_to_sympy,
    to_fraction,
)
from braidmono.exceptions import PolynomialError

if TYPE_CHECKING:
    from mpmath import MPContext

logger = logging.getLogger(__name__)


def _coefficient_from_sympy(value: sp.Expr) -> Fraction | GaussianRational:
    if value.is_Rational:
        return to_fraction(value)
    re_part, im_part = value.as_real_imag()
    if im_part == 0:
        return to_fraction(sp.Rational(re_part))
    return GaussianRational(to_fraction(sp.Rational(re_part)), to_fraction(sp.Rational(im_part)))


def _coefficient_to_sympy(value: ExactNumber) -> sp.Expr:
    if isinstance(value, GaussianRational):
        return value.to_sympy()
    return fraction_to_sympy(to_fraction(value))


class UnivariatePoly:
    """Exact polynomial in one variable, stored as a sympy Poly over QQ or QQ_I.

    Coefficients are exposed lowest degree first. The leading coefficient is
    nonzero unless the polynomial is zero.
    """

    __slots__ = ("_poly",)

    def __init__(self, coefficients: Sequence[ExactNumber], variable: str = "x") -> None:
        """Build a polynomial from coefficients listed lowest degree first.

        Args:
            coefficients: Exact rationals or Gaussian rationals
            variable: Name of the polynomial variable
        """
        symbol = sp.Symbol(variable)
        gaussian = any(
            isinstance(c, GaussianRational) and not c.is_real for c in coefficients
        )
        terms = [_coefficient_to_sympy(c) for c in reversed(list(coefficients))] or [sp.Integer(0)]
        self._poly = sp.Poly(terms, symbol, domain=sp.QQ_I if gaussian else sp.QQ)

    @classmethod
    def from_sympy(cls, poly: sp.Poly | sp.Expr, variable: str | None = None) -> UnivariatePoly:
        """Wrap a sympy polynomial or expression in a single variable."""
        if not isinstance(poly, sp.Poly):
            if variable is None:
                free = sorted(poly.free_symbols, key=str)
                if len(free) > 1:
                    raise PolynomialError(f"expected a univariate expression, got {poly}")
                variable = str(free[0]) if free else "x"
            poly = sp.Poly(poly, sp.Symbol(variable))
        if len(poly.gens) != 1:
            raise PolynomialError(f"expected a univariate polynomial, got gens {poly.gens}")
        coefficients = [_coefficient_from_sympy(c) for c in reversed(poly.all_coeffs())]
        return cls(coefficients, str(poly.gens[0]))

    @property
    def poly(self) -> sp.Poly:
        return self._poly

    @property
    def variable(self) -> str:
        return str(self._poly.gens[0])

    @property
    def is_zero(self) -> bool:
        return bool(self._poly.is_zero)

    @property
    def is_rational(self) -> bool:
        """True when every coefficient is rational."""
        return self._poly.get_domain() == sp.QQ or all(
            not isinstance(c, GaussianRational) for c in self.coefficients
        )

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return -1 if self.is_zero else int(self._poly.degree())

    @property
    def coefficients(self) -> list[Fraction | GaussianRational]:
        """Coefficients lowest degree first."""
        if self.is_zero:
            return []
        return [_coefficient_from_sympy(c) for c in reversed(self._poly.all_coeffs())]

    @property
    def leading_coefficient(self) -> Fraction | GaussianRational:
        if self.is_zero:
            return Fraction(0)
        return _coefficient_from_sympy(self._poly.LC())

    def as_expr(self) -> sp.Expr:
        return self._poly.as_expr()

    def __call__(self, value: ExactNumber) -> Fraction | GaussianRational:
        """Evaluate exactly by Horner's scheme."""
        point = GaussianRational.coerce(value)
        acc = GaussianRational(0)
        for c in reversed(self.coefficients):
            acc = acc * point + GaussianRational.coerce(c)
        return acc.re if acc.is_real else acc

    def derivative(self) -> UnivariatePoly:
        return UnivariatePoly.from_sympy(self._poly.diff(), self.variable)

    def gcd(self, other: UnivariatePoly) -> UnivariatePoly:
        """Monic greatest common divisor."""
        return UnivariatePoly.from_sympy(self._poly.gcd(other._poly).monic(), self.variable)

    def squarefree_factors(self) -> list[tuple[UnivariatePoly, int]]:
        """Squarefree decomposition as (factor, multiplicity) pairs, factors monic."""
        if self.is_zero:
            raise PolynomialError("squarefree decomposition of the zero polynomial")
        _, factors = self._poly.sqf_list()
        return [(UnivariatePoly.from_sympy(f.monic(), self.variable), k) for f, k in factors]

    def squarefree_part(self) -> UnivariatePoly:
        if self.is_zero:
            raise PolynomialError("squarefree part of the zero polynomial")
        return UnivariatePoly.from_sympy(self._poly.sqf_part().monic(), self.variable)

    def primitive(self) -> UnivariatePoly:
        """Integer primitive part with positive leading coefficient (rational input only)."""
        if not self.is_rational:
            raise PolynomialError("primitive part is only defined for rational polynomials")
        if self.is_zero:
            return self
        _, cleared = self._poly.clear_denoms(convert=True)
        _, prim = cleared.primitive()
        if prim.LC() < 0:
            prim = -prim
        return UnivariatePoly.from_sympy(prim.set_domain(sp.QQ), self.variable)

    def exquo(self, other: UnivariatePoly) -> UnivariatePoly:
        """Exact quotient; raises PolynomialError when the division leaves a remainder."""
        quotient, remainder = self._poly.div(other._poly)
        if not remainder.is_zero:
            raise PolynomialError(f"{other.as_expr()} does not divide {self.as_expr()}")
        return UnivariatePoly.from_sympy(quotient, self.variable)

    def divides(self, other: UnivariatePoly) -> bool:
        _, remainder = other._poly.div(self._poly)
        return bool(remainder.is_zero)

    def multiplicity_of(self, factor: UnivariatePoly) -> int:
        """Largest k with factor**k dividing this polynomial."""
        if factor.degree < 1:
            raise PolynomialError("multiplicity is only defined for nonconstant factors")
        k = 0
        current = self
        while not current.is_zero and factor.divides(current):
            current = current.exquo(factor)
            k += 1
        return k

    def mp_coefficients(self, ctx: MPContext) -> list[object]:
        """Coefficients as mpc values of ctx, highest degree first."""
        return [GaussianRational.coerce(c).to_mp(ctx) for c in reversed(self.coefficients)]

    def _unify(self, other: UnivariatePoly | ExactNumber) -> tuple[sp.Poly, sp.Poly]:
        if not isinstance(other, UnivariatePoly):
            other = UnivariatePoly([other], self.variable)
        if other.variable != self.variable:
            raise PolynomialError(f"variable mismatch: {self.variable} vs {other.variable}")
        return self._poly, other._poly

    def __add__(self, other: UnivariatePoly | ExactNumber) -> UnivariatePoly:
        a, b = self._unify(other)
        return UnivariatePoly.from_sympy(a + b, self.variable)

    def __sub__(self, other: UnivariatePoly | ExactNumber) -> UnivariatePoly:
        a, b = self._unify(other)
        return UnivariatePoly.from_sympy(a - b, self.variable)

    def __mul__(self, other: UnivariatePoly | ExactNumber) -> UnivariatePoly:
        a, b = self._unify(other)
        return UnivariatePoly.from_sympy(a * b, self.variable)

    def __pow__(self, exponent: int) -> UnivariatePoly:
        return UnivariatePoly.from_sympy(self._poly**exponent, self.variable)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnivariatePoly):
            return NotImplemented
        return self.variable == other.variable and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.variable, tuple(self.coefficients)))

    def __repr__(self) -> str:
        return f"UnivariatePoly({self.as_expr()}, {self.variable!r})"
