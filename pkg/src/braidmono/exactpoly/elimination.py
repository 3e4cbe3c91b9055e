"""Resultants and discriminants by subresultant pseudo-remainder sequences."""

import logging

import sympy as sp

from braidmono.exactpoly.bivariate import BivariatePoly
from braidmono.exactpoly.univariate import UnivariatePoly
from braidmono.exceptions import PolynomialError

logger = logging.getLogger(__name__)


def resultant(p: BivariatePoly, q: BivariatePoly, variable: str | None = None) -> UnivariatePoly:
    """Exact resultant of p and q with respect to one of their variables.

    Args:
        p: Nonzero polynomial
        q: Nonzero polynomial in the same variables as p
        variable: Variable to eliminate, defaults to the inner one

    Returns:
        Univariate polynomial in the remaining variable.

    Raises:
        PolynomialError: If an input is zero or the variables disagree
    """
    if p.variables != q.variables:
        raise PolynomialError(f"variable mismatch: {p.variables} vs {q.variables}")
    if p.is_zero or q.is_zero:
        raise PolynomialError("resultant with a zero polynomial is undefined")
    variable = variable or p.variables[1]
    if variable not in p.variables:
        raise PolynomialError(f"unknown variable {variable!r}")
    remaining = p.variables[0] if variable == p.variables[1] else p.variables[1]

    gens = (sp.Symbol(variable), sp.Symbol(remaining))
    lhs = sp.Poly(p.as_expr(), *gens, domain=sp.QQ)
    rhs = sp.Poly(q.as_expr(), *gens, domain=sp.QQ)
    res = lhs.resultant(rhs)
    logger.debug("Res_%s computed, degree %s in %s", variable, sp.degree(res, gens[1]), remaining)
    return UnivariatePoly.from_sympy(sp.Poly(res.as_expr(), gens[1], domain=sp.QQ), remaining)


def discriminant_y(p: BivariatePoly) -> UnivariatePoly:
    """Res_inner(p, dp/dinner), made primitive with positive leading coefficient.

    The normalization only fixes a nonzero rational constant, so comparisons
    with other sources must be made up to such a constant.

    Raises:
        PolynomialError: If p is constant in the inner variable
    """
    inner = p.variables[1]
    if p.degree_inner < 1:
        raise PolynomialError(f"polynomial is constant in {inner}; no discriminant")
    disc = resultant(p, p.diff(inner), inner)
    if disc.is_zero:
        logger.warning("discriminant vanishes identically: curve has a multiple component")
        return disc
    return disc.primitive()


def same_up_to_constant(a: UnivariatePoly, b: UnivariatePoly) -> bool:
    """True when a = c * b for a nonzero rational constant c."""
    if a.is_zero or b.is_zero:
        return a.is_zero and b.is_zero
    return a.primitive() == b.primitive()
