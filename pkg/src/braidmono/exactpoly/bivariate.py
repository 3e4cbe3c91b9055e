"""Exact bivariate polynomials over the rationals.

A BivariatePoly has an ordered pair of variables (outer, inner), by default
("x", "y"): x is the pencil parameter and y the fiber coordinate.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from fractions import Fraction

import sympy as sp

from braidmono.exactpoly.gaussian import (
    ExactNumber,
    GaussianRational,
    RationalLike,
    fraction_to_sympy,
    to_fraction,
)
from braidmono.exactpoly.univariate import UnivariatePoly
from braidmono.exceptions import PolynomialError

logger = logging.getLogger(__name__)

DEFAULT_VARIABLES = ("x", "y")


class BivariatePoly:
    """Exact polynomial sum a_ij * outer^i * inner^j with rational a_ij.

    No zero coefficient is stored; arithmetic is exact throughout.
    """

    __slots__ = ("_poly",)

    def __init__(
        self,
        coefficients: Mapping[tuple[int, int], RationalLike],
        variables: tuple[str, str] = DEFAULT_VARIABLES,
    ) -> None:
        """Build a polynomial from an exponent map.

        Args:
            coefficients: Map (i, j) -> coefficient of outer^i * inner^j
            variables: Names of the (outer, inner) variables
        """
        if len(variables) != 2 or variables[0] == variables[1]:
            raise PolynomialError(f"need two distinct variable names, got {variables}")
        terms: dict[tuple[int, int], sp.Rational] = {}
        for (i, j), value in coefficients.items():
            if i < 0 or j < 0:
                raise PolynomialError(f"negative exponent in term {(i, j)}")
            c = to_fraction(value)
            if c != 0:
                terms[(int(i), int(j))] = fraction_to_sympy(c)
        symbols = (sp.Symbol(variables[0]), sp.Symbol(variables[1]))
        self._poly = sp.Poly.from_dict(terms or {(0, 0): 0}, *symbols, domain=sp.QQ)

    @classmethod
    def from_sympy(
        cls, poly: sp.Poly | sp.Expr, variables: tuple[str, str] = DEFAULT_VARIABLES
    ) -> BivariatePoly:
        """Convert a sympy expression or polynomial in the two named variables."""
        expr = poly.as_expr() if isinstance(poly, sp.Poly) else sp.sympify(poly)
        symbols = (sp.Symbol(variables[0]), sp.Symbol(variables[1]))
        extra = expr.free_symbols - set(symbols)
        if extra:
            raise PolynomialError(f"unexpected symbols {sorted(map(str, extra))}")
        try:
            converted = sp.Poly(expr, *symbols, domain=sp.QQ)
        except (sp.PolynomialError, sp.CoercionFailed) as e:
            raise PolynomialError(f"not a rational polynomial: {expr}") from e
        return cls(
            {k: to_fraction(v) for k, v in converted.as_dict().items()},
            variables,
        )

    @property
    def poly(self) -> sp.Poly:
        return self._poly

    @property
    def variables(self) -> tuple[str, str]:
        outer, inner = self._poly.gens
        return (str(outer), str(inner))

    @property
    def symbols(self) -> tuple[sp.Symbol, sp.Symbol]:
        outer, inner = self._poly.gens
        return (outer, inner)

    @property
    def coefficients(self) -> dict[tuple[int, int], Fraction]:
        if self.is_zero:
            return {}
        return {k: to_fraction(v) for k, v in self._poly.as_dict().items()}

    @property
    def is_zero(self) -> bool:
        return bool(self._poly.is_zero)

    @property
    def nterms(self) -> int:
        return len(self.coefficients)

    @property
    def degree(self) -> int:
        """Total degree, -1 for the zero polynomial."""
        return -1 if self.is_zero else int(self._poly.total_degree())

    @property
    def degree_outer(self) -> int:
        return -1 if self.is_zero else int(self._poly.degree(self.symbols[0]))

    @property
    def degree_inner(self) -> int:
        return -1 if self.is_zero else int(self._poly.degree(self.symbols[1]))

    def as_expr(self) -> sp.Expr:
        return self._poly.as_expr()

    def diff(self, variable: str) -> BivariatePoly:
        """Partial derivative with respect to one of the two variables."""
        if variable not in self.variables:
            raise PolynomialError(f"unknown variable {variable!r}")
        return BivariatePoly.from_sympy(self._poly.diff(sp.Symbol(variable)), self.variables)

    def inner_coefficients(self) -> list[UnivariatePoly]:
        """The a_j(outer) with self = sum a_j * inner^j, lowest j first."""
        outer = self.variables[0]
        columns: dict[int, dict[int, Fraction]] = {}
        for (i, j), c in self.coefficients.items():
            columns.setdefault(j, {})[i] = c
        result = []
        for j in range(self.degree_inner + 1):
            column = columns.get(j, {})
            top = max(column, default=-1)
            result.append(UnivariatePoly([column.get(i, 0) for i in range(top + 1)], outer))
        return result

    def leading_inner_coefficient(self) -> UnivariatePoly:
        return self.inner_coefficients()[-1]

    def evaluate(self, outer: ExactNumber, inner: ExactNumber) -> Fraction | GaussianRational:
        """Exact value at a point with (Gaussian) rational coordinates."""
        a = GaussianRational.coerce(outer)
        b = GaussianRational.coerce(inner)
        acc = GaussianRational(0)
        for (i, j), c in self.coefficients.items():
            acc = acc + a**i * b**j * c
        return acc.re if acc.is_real else acc

    def substitute(self, outer: sp.Expr, inner: sp.Expr) -> sp.Expr:
        """Expanded sympy expression self(outer, inner) for arbitrary sympy arguments."""
        x, y = self.symbols
        return sp.expand(self.as_expr().subs({x: outer, y: inner}, simultaneous=True))

    def translate(self, outer: RationalLike, inner: RationalLike) -> BivariatePoly:
        """Polynomial of the translated curve: self(outer + X, inner + Y)."""
        x, y = self.symbols
        shifted = self.substitute(
            x + fraction_to_sympy(to_fraction(outer)),
            y + fraction_to_sympy(to_fraction(inner)),
        )
        return BivariatePoly.from_sympy(shifted, self.variables)

    def shear(self, amount: RationalLike) -> BivariatePoly:
        """Apply the exact coordinate change outer -> outer + amount * inner."""
        x, y = self.symbols
        return BivariatePoly.from_sympy(
            self.substitute(x + fraction_to_sympy(to_fraction(amount)) * y, y),
            self.variables,
        )

    def rename(self, variables: tuple[str, str]) -> BivariatePoly:
        return BivariatePoly(self.coefficients, variables)

    def _other(self, other: BivariatePoly | RationalLike) -> BivariatePoly:
        if isinstance(other, BivariatePoly):
            if other.variables != self.variables:
                raise PolynomialError(
                    f"variable mismatch: {self.variables} vs {other.variables}"
                )
            return other
        return BivariatePoly({(0, 0): other}, self.variables)

    def __add__(self, other: BivariatePoly | RationalLike) -> BivariatePoly:
        return BivariatePoly.from_sympy(self._poly + self._other(other)._poly, self.variables)

    __radd__ = __add__

    def __sub__(self, other: BivariatePoly | RationalLike) -> BivariatePoly:
        return BivariatePoly.from_sympy(self._poly - self._other(other)._poly, self.variables)

    def __neg__(self) -> BivariatePoly:
        return BivariatePoly.from_sympy(-self._poly, self.variables)

    def __mul__(self, other: BivariatePoly | RationalLike) -> BivariatePoly:
        return BivariatePoly.from_sympy(self._poly * self._other(other)._poly, self.variables)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> BivariatePoly:
        return BivariatePoly.from_sympy(self._poly**exponent, self.variables)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self.variables == other.variables and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.coefficients.items())))

    def __repr__(self) -> str:
        return f"BivariatePoly({self.as_expr()}, {self.variables!r})"


def evaluate_partial(p: BivariatePoly, x0: ExactNumber) -> UnivariatePoly:
    """Substitute the outer variable exactly: returns p(x0, inner).

    Args:
        p: Nonzero bivariate polynomial
        x0: Exact rational or Gaussian rational value of the outer variable

    Returns:
        Univariate polynomial in the inner variable, with Gaussian rational
        coefficients when x0 is not real.
    """
    if p.is_zero:
        raise PolynomialError("evaluate_partial of the zero polynomial")
    point = GaussianRational.coerce(x0)
    coefficients = []
    for a_j in p.inner_coefficients():
        value = GaussianRational.coerce(a_j(point))
        coefficients.append(value.re if value.is_real else value)
    return UnivariatePoly(coefficients, p.variables[1])
