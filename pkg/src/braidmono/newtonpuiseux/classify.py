"""Recognition of A_n singularities and local braid predictions.

A singular point with two smooth branches of intersection multiplicity k
is A_{2k-1}; a unibranch point of multiplicity two with characteristic
exponent 2m+1 is A_{2m}. Everything else is reported as unsupported.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import sympy as sp

from braidmono.exactpoly import BivariatePoly, to_fraction
from braidmono.exactpoly.gaussian import RationalLike, fraction_to_sympy
from braidmono.exceptions import PuiseuxError
from braidmono.newtonpuiseux.puiseux import (
    PuiseuxBranch,
    intersection_with_vertical,
    is_zero,
    puiseux_expansions,
)

logger = logging.getLogger(__name__)

UNSUPPORTED = "Unsupported"
START_ORDER = 4
MAX_ORDER = 64

Point = tuple[RationalLike, RationalLike]


@dataclass(frozen=True)
class SingularityType:
    """Topological type of a singular point.

    Attributes:
        label: "A<n>" or "Unsupported"
        n: Index of A_n (None when unsupported)
        branch_count: Number of local branches
        contacts: Pairwise intersection multiplicities of the branches
        strands: Intersection multiplicity with the vertical line (local fiber roots)
    """

    label: str
    n: int | None
    branch_count: int
    contacts: tuple[int, ...] = ()
    strands: int = 0

    @classmethod
    def a(
        cls, n: int, branch_count: int, contacts: tuple[int, ...], strands: int
    ) -> SingularityType:
        return cls(f"A{n}", n, branch_count, contacts, strands)

    @classmethod
    def unsupported(
        cls, branch_count: int, contacts: tuple[int, ...] = (), strands: int = 0
    ) -> SingularityType:
        return cls(UNSUPPORTED, None, branch_count, contacts, strands)

    @property
    def is_supported(self) -> bool:
        return self.n is not None

    @property
    def milnor_number(self) -> int:
        if self.n is None:
            raise PuiseuxError("Milnor number of an unsupported singularity")
        return self.n

    @property
    def delta(self) -> int:
        return math.ceil(self.milnor_number / 2)


@dataclass(frozen=True)
class VerticalTangency:
    """A smooth point where the vertical line is tangent with the given contact."""

    contact: int

    @property
    def label(self) -> str:
        return f"T{self.contact}"

    @property
    def strands(self) -> int:
        return self.contact

    @property
    def milnor_number(self) -> int:
        return 0


FiberPointType = SingularityType | VerticalTangency


def _x_order(difference: dict[Fraction, sp.Expr], limit: float | Fraction) -> Fraction | None:
    for exponent in sorted(difference):
        if exponent > limit:
            return None
        if not is_zero(difference[exponent]):
            return exponent
    return None


def branch_intersection(first: PuiseuxBranch, second: PuiseuxBranch) -> int | None:
    """Intersection multiplicity of two distinct branches at the same point.

    None when the truncations are too short to separate them.
    """
    limit = min(first.known_through, second.known_through)
    e1, e2 = first.ramification, second.ramification
    y1 = first.x_exponent_terms()
    total = Fraction(0)
    for j in range(e2):
        conjugate: dict[Fraction, sp.Expr] = {}
        for k, c in second.terms:
            zeta = sp.exp(2 * sp.pi * sp.I * sp.Rational(j * k, e2))
            conjugate[Fraction(k, e2)] = sp.expand(c * zeta)
        difference = {
            exponent: sp.expand(y1.get(exponent, 0) - conjugate.get(exponent, 0))
            for exponent in set(y1) | set(conjugate)
        }
        order = _x_order(difference, limit)
        if order is None:
            return None
        total += order
    value = total * e1
    if value.denominator != 1:
        raise PuiseuxError(f"non-integral intersection multiplicity {value}")
    return int(value)


def _first_odd_exponent(branch: PuiseuxBranch) -> int | None:
    for k, c in branch.terms:
        if k % 2 and not is_zero(c):
            return k
    return None


def swap_coordinates(curve: BivariatePoly) -> BivariatePoly:
    x, y = curve.symbols
    swapped = curve.as_expr().subs({x: y, y: x}, simultaneous=True)
    return BivariatePoly.from_sympy(swapped, curve.variables)


def _characteristic_exponent(
    curve: BivariatePoly, point: tuple[Fraction, Fraction], branch: PuiseuxBranch, order: int
) -> int | None:
    """2m+1 for a multiplicity two branch, using a parametrization with x = t^2."""
    if branch.ramification == 2:
        return _first_odd_exponent(branch)
    swapped = puiseux_expansions(swap_coordinates(curve), (point[1], point[0]), order)
    if len(swapped) != 1 or swapped[0].ramification != 2:
        raise PuiseuxError("unexpected branch structure in swapped coordinates")
    return _first_odd_exponent(swapped[0])


def _is_singular(curve: BivariatePoly, a: Fraction, b: Fraction) -> bool:
    x_name, y_name = curve.variables
    return curve.diff(x_name).evaluate(a, b) == 0 and curve.diff(y_name).evaluate(a, b) == 0


def classify_simple_singularity(
    curve: BivariatePoly, point: Point, max_order: int = MAX_ORDER
) -> SingularityType:
    """Recognize an A_n singularity from the Puiseux branches at the point.

    Raises:
        PuiseuxError: If the point is not on the curve or is smooth
    """
    a, b = to_fraction(point[0]), to_fraction(point[1])
    if curve.evaluate(a, b) != 0:
        raise PuiseuxError(f"({a}, {b}) is not on the curve")
    if not _is_singular(curve, a, b):
        raise PuiseuxError(f"({a}, {b}) is a smooth point of the curve")
    strands = intersection_with_vertical(curve, (a, b))
    order = START_ORDER
    count = 0
    while order <= max_order:
        branches = puiseux_expansions(curve, (a, b), order)
        count = len(branches)
        if count == 2 and all(br.is_smooth for br in branches):
            contact = branch_intersection(branches[0], branches[1])
            if contact is not None:
                return SingularityType.a(2 * contact - 1, 2, (contact,), strands)
        elif count == 1 and branches[0].multiplicity == 2:
            exponent = _characteristic_exponent(curve, (a, b), branches[0], order)
            if exponent is not None:
                return SingularityType.a(exponent - 1, 1, (), strands)
        else:
            contacts = tuple(
                c
                for i, first in enumerate(branches)
                for second in branches[i + 1 :]
                if (c := branch_intersection(first, second)) is not None
            )
            logger.info("singularity at (%s, %s) is not of type A_n", a, b)
            return SingularityType.unsupported(count, contacts, strands)
        order *= 2
        logger.debug("raising the Puiseux truncation at (%s, %s) to %d", a, b, order)
    logger.warning(
        "could not classify the singularity at (%s, %s) up to order %d", a, b, max_order
    )
    return SingularityType.unsupported(count, (), strands)


def classify_fiber_point(curve: BivariatePoly, point: Point) -> FiberPointType | None:
    """A_n type of a singular point, VerticalTangency at a smooth point with
    vertical tangent, None at a point where the vertical line is transversal.
    """
    a, b = to_fraction(point[0]), to_fraction(point[1])
    if curve.evaluate(a, b) != 0:
        raise PuiseuxError(f"({a}, {b}) is not on the curve")
    if _is_singular(curve, a, b):
        return classify_simple_singularity(curve, (a, b))
    contact = intersection_with_vertical(curve, (a, b))
    return VerticalTangency(contact) if contact >= 2 else None


def local_braid_exponent(kind: FiberPointType) -> int:
    """Half twists made by the local strand pair when x circles the singular value once.

    Raises:
        PuiseuxError: If the point does not carry exactly two local strands or
            is not of type A_n
    """
    if isinstance(kind, VerticalTangency):
        if kind.contact != 2:
            raise PuiseuxError(f"{kind.contact} local strands at a vertical tangency")
        return 1
    if not kind.is_supported:
        raise PuiseuxError("no braid prediction for an unsupported singularity")
    if kind.strands != 2:
        raise PuiseuxError(f"{kind.label} has {kind.strands} local strands, expected 2")
    return kind.milnor_number + 1


def local_discriminant_contribution(curve: BivariatePoly, point: Point) -> int:
    """mu + i(L, C)_P - 1 for the vertical line L through the point."""
    kind = classify_fiber_point(curve, point)
    if kind is None:
        return 0
    return kind.milnor_number + kind.strands - 1


def fiber_singular_points(
    curve: BivariatePoly, eta: RationalLike
) -> list[tuple[Fraction, Fraction]]:
    """Points (eta, y) where the vertical line meets the curve with multiplicity > 1.

    Raises:
        PuiseuxError: If such a point has an irrational y coordinate
    """
    a = to_fraction(eta)
    x, y = curve.symbols
    fiber = sp.Poly(curve.as_expr().subs(x, fraction_to_sympy(a)), y)
    multiple = sp.gcd(fiber, fiber.diff(y))
    points = []
    for factor, _ in sp.factor_list(multiple)[1]:
        if factor.degree() != 1:
            raise PuiseuxError(
                f"multiple fiber roots over x = {a} are irrational: {factor.as_expr()}"
            )
        c1, c0 = factor.all_coeffs()
        points.append((a, to_fraction(-c0 / c1)))
    return sorted(points, key=lambda p: p[1])


def local_contributions(
    curve: BivariatePoly, eta: RationalLike
) -> dict[tuple[Fraction, Fraction], int]:
    """Discriminant multiplicity contributed by each special point over x = eta."""
    points = fiber_singular_points(curve, eta)
    return {p: local_discriminant_contribution(curve, p) for p in points}


def leading_form_after_substitution(
    curve: BivariatePoly,
    substitution: tuple[sp.Expr | str, sp.Expr | str],
    weights: tuple[int, int],
) -> BivariatePoly:
    """Weighted-lowest part of curve(X(x, y), Y(x, y)).

    Args:
        curve: The curve
        substitution: Polynomial expressions replacing (x, y)
        weights: Positive weights of x and y
    """
    if min(weights) <= 0:
        raise PuiseuxError(f"weights must be positive, got {weights}")
    x, y = curve.symbols
    new_x, new_y = (sp.sympify(s, locals={str(x): x, str(y): y}) for s in substitution)
    transformed = BivariatePoly.from_sympy(curve.substitute(new_x, new_y), curve.variables)
    if transformed.is_zero:
        raise PuiseuxError("substitution annihilates the curve")
    coefficients = transformed.coefficients
    lowest = min(weights[0] * i + weights[1] * j for i, j in coefficients)
    return BivariatePoly(
        {
            (i, j): c
            for (i, j), c in coefficients.items()
            if weights[0] * i + weights[1] * j == lowest
        },
        curve.variables,
    )
