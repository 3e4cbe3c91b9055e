"""Real/imaginary decomposition of a curve along complex fibers.

Writing the fiber coordinate as u + i*v turns f(x, y) into
h(x, u, v) = f_e(x, u, v) + i*f_o(x, u, v). Both parts are real polynomials,
f_o is divisible by v, and f_oo = f_o / v. Reducing f_e modulo f_oo in v
leaves a remainder that is even in v.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import NamedTuple

import sympy as sp

from braidmono.exactpoly.bivariate import BivariatePoly
from braidmono.exactpoly.gaussian import fraction_to_sympy
from braidmono.exceptions import PolynomialError

logger = logging.getLogger(__name__)

U, V = sp.symbols("u v")


class RealImagParts(NamedTuple):
    """Real part f_e and reduced imaginary part f_oo = f_o / v, both in (x, u, v)."""

    f_e: sp.Poly
    f_oo: sp.Poly


def _split_gens(p: BivariatePoly) -> tuple[sp.Symbol, sp.Symbol, sp.Symbol]:
    outer = p.symbols[0]
    if outer in (U, V):
        raise PolynomialError(f"outer variable {outer} clashes with the split variables u, v")
    return outer, U, V


def real_imag_split(p: BivariatePoly) -> RealImagParts:
    """Split p(x, u + i*v) into its real part and reduced imaginary part.

    BivariatePoly only holds rational coefficients, so both parts are real.
    """
    gens = _split_gens(p)
    even: dict[tuple[int, int, int], sp.Rational] = {}
    odd: dict[tuple[int, int, int], sp.Rational] = {}
    for (i, j), c in p.coefficients.items():
        coefficient = fraction_to_sympy(c)
        for k in range(j + 1):
            term = coefficient * comb(j, k)
            if k % 2 == 0:
                key = (i, j - k, k)
                even[key] = even.get(key, 0) + term * (-1) ** (k // 2)
            else:
                key = (i, j - k, k - 1)
                odd[key] = odd.get(key, 0) + term * (-1) ** ((k - 1) // 2)
    f_e = sp.Poly.from_dict(even or {(0, 0, 0): 0}, *gens, domain=sp.QQ)
    f_oo = sp.Poly.from_dict(odd or {(0, 0, 0): 0}, *gens, domain=sp.QQ)
    return RealImagParts(f_e, f_oo)


def imaginary_part(p: BivariatePoly) -> sp.Poly:
    """The full imaginary part f_o = v * f_oo."""
    return real_imag_split(p).f_oo * V


@dataclass(frozen=True)
class VRemainder:
    """Remainder of f_e modulo f_oo in v, as sum over k of (num_k / den_k) * v^k.

    Attributes:
        f_e: Dividend in (x, u, v)
        f_oo: Divisor in (x, u, v)
        numerators: v-exponent -> numerator polynomial in (x, u)
        denominators: v-exponent -> denominator polynomial in (x, u)
        lc_power: Power of the leading v-coefficient of f_oo used for pseudo-division
    """

    f_e: sp.Poly
    f_oo: sp.Poly
    numerators: dict[int, sp.Poly]
    denominators: dict[int, sp.Poly]
    lc_power: sp.Expr

    @property
    def is_zero(self) -> bool:
        return not self.numerators

    @property
    def is_even(self) -> bool:
        return all(k % 2 == 0 for k in self.numerators)

    def _part(self, k: int) -> tuple[sp.Poly, sp.Poly]:
        x, u = self.f_e.gens[0], self.f_e.gens[1]
        zero = sp.Poly(0, x, u, domain=sp.QQ)
        one = sp.Poly(1, x, u, domain=sp.QQ)
        return self.numerators.get(k, zero), self.denominators.get(k, one)

    def quadratic_parts(self) -> tuple[sp.Poly, sp.Poly, sp.Poly, sp.Poly]:
        """(R2', R2'', R0', R0'') for a remainder of the shape (R2'/R2'') v^2 + R0'/R0''."""
        extra = set(self.numerators) - {0, 2}
        if extra:
            raise PolynomialError(f"remainder has unexpected v-powers {sorted(extra)}")
        r2_num, r2_den = self._part(2)
        r0_num, r0_den = self._part(0)
        return r2_num, r2_den, r0_num, r0_den

    def as_expr(self) -> sp.Expr:
        v = self.f_e.gens[2]
        return sum(
            (self.numerators[k].as_expr() / self.denominators[k].as_expr() * v**k
             for k in sorted(self.numerators)),
            sp.Integer(0),
        )

    def _cleared(self) -> sp.Expr:
        v = self.f_e.gens[2]
        common = sp.Integer(1)
        for den in self.denominators.values():
            common = sp.lcm(common, den.as_expr())
        rest = sum(
            (sp.cancel(common / self.denominators[k].as_expr()) * self.numerators[k].as_expr()
             * v**k for k in self.numerators),
            sp.Integer(0),
        )
        return sp.expand(common * self.f_e.as_expr() - rest)

    def verify(self) -> bool:
        """Check that D*f_e - D*R is divisible by f_oo in Q(x, u)[v], D the common denominator."""
        v = self.f_e.gens[2]
        residue = sp.Poly(self._cleared(), v).prem(sp.Poly(self.f_oo.as_expr(), v))
        return bool(residue.is_zero)

    def quotient(self) -> sp.Expr:
        """The q with D*f_e - q*f_oo = D*R, as a rational function in (x, u) times powers of v."""
        v = self.f_e.gens[2]
        q, _ = sp.Poly(self._cleared(), v).pdiv(sp.Poly(self.f_oo.as_expr(), v))
        divisor_lc = sp.Poly(self.f_oo.as_expr(), v).LC()
        delta = max(sp.degree(self._cleared(), v) - sp.degree(self.f_oo.as_expr(), v) + 1, 0)
        return sp.cancel(q.as_expr() / divisor_lc**delta)


def pseudo_remainder_in_v(f_e: sp.Poly, f_oo: sp.Poly) -> VRemainder:
    """Remainder of f_e by f_oo as polynomials in v with coefficients in Q(x, u).

    Args:
        f_e: Polynomial in (x, u, v) as returned by real_imag_split
        f_oo: Nonzero polynomial in the same generators

    Raises:
        PolynomialError: If f_oo is zero or deg_v f_e < deg_v f_oo
    """
    if f_e.gens != f_oo.gens or len(f_e.gens) != 3:
        raise PolynomialError("pseudo_remainder_in_v needs two polynomials in (x, u, v)")
    x, u, v = f_e.gens
    if f_oo.is_zero:
        raise PolynomialError("division by the zero polynomial")
    dividend = sp.Poly(f_e.as_expr(), v)
    divisor = sp.Poly(f_oo.as_expr(), v)
    if dividend.degree() < divisor.degree():
        raise PolynomialError(
            f"deg_v f_e = {dividend.degree()} is below deg_v f_oo = {divisor.degree()}"
        )
    delta = dividend.degree() - divisor.degree() + 1
    lc_power = divisor.LC() ** delta
    remainder = dividend.prem(divisor)

    numerators: dict[int, sp.Poly] = {}
    denominators: dict[int, sp.Poly] = {}
    for (k,), coefficient in remainder.as_dict(native=False).items():
        if coefficient == 0:
            continue
        num, den = sp.fraction(sp.cancel(sp.expand(coefficient) / lc_power))
        numerators[k] = sp.Poly(num, x, u, domain=sp.QQ)
        denominators[k] = sp.Poly(den, x, u, domain=sp.QQ)
    logger.debug(
        "v-remainder has powers %s, denominator degrees %s",
        sorted(numerators),
        [d.total_degree() for d in denominators.values()],
    )
    return VRemainder(f_e, f_oo, numerators, denominators, lc_power)
