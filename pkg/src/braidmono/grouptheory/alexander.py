"""Alexander polynomial of a presentation by Fox calculus."""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Sequence
from typing import Any

import sympy as sp
from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from braidmono.exactpoly import UnivariatePoly
from braidmono.exceptions import PresentationError
from braidmono.grouptheory.presentation import GroupPresentation
from braidmono.vankampen.words import FreeWord

logger = logging.getLogger(__name__)

T = sp.Symbol("t")

# Laurent polynomial in t: exponent -> integer coefficient
Laurent = dict[int, int]


def fox_derivative(r: FreeWord, j: int, degrees: Sequence[int]) -> Laurent:
    """Fox derivative d r / d x_j pushed to Z[t, 1/t] by x_k -> t^degrees[k-1]."""
    result: defaultdict[int, int] = defaultdict(int)
    prefix = 0
    for letter in r:
        k = abs(letter)
        if letter > 0:
            if k == j:
                result[prefix] += 1
            prefix += degrees[k - 1]
        else:
            prefix -= degrees[k - 1]
            if k == j:
                result[prefix] -= 1
    return {e: c for e, c in result.items() if c}


def fox_jacobian(p: GroupPresentation, degrees: Sequence[int]) -> list[list[Laurent]]:
    """Rows: relators, columns: generators."""
    return [
        [fox_derivative(r, j, degrees) for j in range(1, p.generator_count + 1)]
        for r in p.relators
    ]


def fox_identity_holds(r: FreeWord, generator_count: int, degrees: Sequence[int]) -> bool:
    """Check sum_j (dr/dx_j)(t^deg_j - 1) == t^deg(r) - 1 in Z[t, 1/t]."""
    total: defaultdict[int, int] = defaultdict(int)
    for j in range(1, generator_count + 1):
        for e, c in fox_derivative(r, j, degrees).items():
            total[e + degrees[j - 1]] += c
            total[e] -= c
    total[r.degree(degrees)] -= 1
    total[0] += 1
    return all(c == 0 for c in total.values())


def _check_degrees(p: GroupPresentation, degrees: Sequence[int]) -> None:
    if len(degrees) != p.generator_count:
        raise PresentationError(
            f"degree map has {len(degrees)} entries for {p.generator_count} generators"
        )
    for r in p.relators:
        if r.degree(degrees) != 0:
            raise PresentationError(
                f"degree map is not a homomorphism: relator {r.format()} has degree "
                f"{r.degree(degrees)}"
            )


def _row_to_polynomials(row: list[Laurent]) -> list[sp.Expr]:
    low = min((e for entry in row for e in entry), default=0)
    return [sum((c * T ** (e - low) for e, c in entry.items()), sp.Integer(0)) for entry in row]


def _normalize_chain(values: list[Any], domain: Any) -> list[Any]:
    values = list(values)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            a, b = values[i], values[j]
            if not a or not b:
                values[i], values[j] = a or b, domain.zero
            else:
                values[i], values[j] = domain.gcd(a, b), domain.lcm(a, b)
    return values


def _normalize(poly: UnivariatePoly) -> UnivariatePoly:
    if poly.is_zero:
        return poly
    coefficients = poly.primitive().coefficients
    while coefficients and coefficients[0] == 0:
        coefficients = coefficients[1:]
    return UnivariatePoly(coefficients, "t")


def alexander_polynomial(
    p: GroupPresentation, degrees: Sequence[int] | None = None
) -> UnivariatePoly:
    """Generator of the first elementary ideal of the Alexander module.

    The Fox Jacobian is evaluated under x_k -> t^degrees[k-1] (all ones by
    default) and the product of its first n-1 invariant factors over Q[t]
    is taken. The result is primitive with positive leading coefficient and
    no factor t. Rank deficiency gives 0; a one-generator presentation
    gives 1.

    Raises:
        PresentationError: If the degree map sends some relator to a nonzero degree
    """
    degrees = list(degrees) if degrees is not None else [1] * p.generator_count
    _check_degrees(p, degrees)
    n = p.generator_count
    if n <= 1:
        return UnivariatePoly([1], "t")
    if len(p.relators) < n - 1:
        return UnivariatePoly([], "t")
    ring = QQ[T]
    rows = [
        [ring.from_sympy(entry) for entry in _row_to_polynomials(row)]
        for row in fox_jacobian(p, degrees)
    ]
    matrix = DomainMatrix(rows, (len(rows), n), ring)
    factors = _normalize_chain(list(invariant_factors(matrix)), ring)
    leading = factors[: n - 1]
    if len(leading) < n - 1 or any(not f for f in leading):
        logger.debug("Fox matrix is rank deficient; Alexander polynomial is 0")
        return UnivariatePoly([], "t")
    product = ring.one
    for f in leading:
        product *= f
    result = _normalize(UnivariatePoly.from_sympy(sp.Poly(ring.to_sympy(product), T), "t"))
    logger.info("Alexander polynomial: %s", result.as_expr())
    return result
