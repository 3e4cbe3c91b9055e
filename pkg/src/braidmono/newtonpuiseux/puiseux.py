"""Newton-Puiseux expansions of a plane curve at a rational point.

Every local branch through (a, b) that is not the vertical line x = a is
returned as x = a + t^e, y = b + sum c_k t^k. Coefficients are exact sympy
algebraic numbers; the expansion follows the Newton polygon of the local
equation, one root of each characteristic polynomial per orbit under the
roots of unity of the edge denominator, so every branch appears once.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import sympy as sp
from sympy.polys.polyerrors import NotAlgebraic

from braidmono.exactpoly import BivariatePoly, UnivariatePoly, to_fraction
from braidmono.exactpoly.gaussian import RationalLike, fraction_to_sympy
from braidmono.exceptions import PuiseuxError
from braidmono.numroots.disks import WITNESS_EXACT, ComplexDisk
from braidmono.numroots.isolation import isolate_complex_roots

logger = logging.getLogger(__name__)

T = sp.Symbol("t")
_X, _Y = sp.symbols("X Y")
_Z = sp.Symbol("z")

DEFAULT_ORDER = 6
MAX_DEPTH = 256
_NUMERIC_DIGITS = 40


def is_zero(value: sp.Expr) -> bool:
    """Exact zero test for an algebraic sympy number."""
    value = sp.sympify(value)
    if value.is_Rational:
        return bool(value == 0)
    if abs(complex(sp.N(value, _NUMERIC_DIGITS))) > 1e-20:
        return False
    try:
        return bool(sp.minimal_polynomial(value, _Z) == _Z)
    except (NotAlgebraic, NotImplementedError):
        logger.debug("falling back to a numeric zero test for %s", value)
        return abs(sp.N(value, 2 * _NUMERIC_DIGITS)) < sp.Float(10) ** (-_NUMERIC_DIGITS)


@dataclass(frozen=True)
class AlgebraicCoefficient:
    """An algebraic number as its minimal polynomial and a disk isolating it."""

    value: sp.Expr
    minimal_polynomial: UnivariatePoly
    disk: ComplexDisk

    def __str__(self) -> str:
        return str(self.value)


def algebraic_coefficient(value: sp.Expr, precision: int = 64) -> AlgebraicCoefficient:
    value = sp.sympify(value)
    if value.is_Rational:
        exact = to_fraction(value)
        center = mpmath.mpc(mpmath.mpf(exact.numerator) / exact.denominator)
        disk = ComplexDisk(center, mpmath.mpf(0), precision, WITNESS_EXACT)
        return AlgebraicCoefficient(value, UnivariatePoly([-exact, 1], "z"), disk)
    minimal = sp.minimal_polynomial(value, _Z, polys=True)
    polynomial = UnivariatePoly.from_sympy(minimal, "z")
    configuration = isolate_complex_roots(polynomial, precision, source=str(value))
    approximation = mpmath.mpc(complex(sp.N(value, _NUMERIC_DIGITS)))
    disk = min(configuration.disks, key=lambda d: abs(d.center - approximation))
    return AlgebraicCoefficient(value, polynomial, disk)


@dataclass(frozen=True)
class PuiseuxBranch:
    """One local branch x = a + t^e, y = b + sum c_k t^k.

    Attributes:
        point: The rational point (a, b)
        ramification: e
        terms: (k, c_k) with c_k != 0, increasing k
        order: Terms are known for x-exponents k/e <= order
        exact: The series terminates (all terms are known)
    """

    point: tuple[Fraction, Fraction]
    ramification: int
    terms: tuple[tuple[int, sp.Expr], ...]
    order: int
    exact: bool = False

    @property
    def t_order(self) -> int:
        return self.order * self.ramification

    @property
    def known_through(self) -> float | Fraction:
        """Largest x-exponent up to which the series is complete."""
        return math.inf if self.exact else Fraction(self.order)

    @property
    def y_order(self) -> int | None:
        """Order in t of y - b (None when y is constant)."""
        return self.terms[0][0] if self.terms else None

    @property
    def multiplicity(self) -> int:
        y_order = self.y_order
        return self.ramification if y_order is None else min(self.ramification, y_order)

    @property
    def is_smooth(self) -> bool:
        return self.multiplicity == 1

    def coefficient(self, k: int) -> sp.Expr:
        return dict(self.terms).get(k, sp.Integer(0))

    def x_expr(self, symbol: sp.Symbol = T) -> sp.Expr:
        return fraction_to_sympy(self.point[0]) + symbol**self.ramification

    def y_expr(self, symbol: sp.Symbol = T) -> sp.Expr:
        series = sum((c * symbol**k for k, c in self.terms), sp.Integer(0))
        return fraction_to_sympy(self.point[1]) + series

    def x_exponent_terms(self) -> dict[Fraction, sp.Expr]:
        """The y-series as {x-exponent: coefficient}."""
        return {Fraction(k, self.ramification): c for k, c in self.terms}

    def valuation(self, curve: BivariatePoly) -> int | None:
        """Order in t of curve(x(t), y(t)); None if it vanishes identically."""
        expr = sp.expand(curve.substitute(self.x_expr(), self.y_expr()))
        if expr == 0:
            return None
        poly = sp.Poly(expr, T)
        for (k,), c in sorted(poly.as_dict(native=False).items()):
            if not is_zero(c):
                return int(k)
        return None

    def algebraic_coefficients(
        self, precision: int = 64
    ) -> list[tuple[int, AlgebraicCoefficient]]:
        return [(k, algebraic_coefficient(c, precision)) for k, c in self.terms]

    def describe(self) -> str:
        a, b = self.point
        x_part = f"x = {a} + t^{self.ramification}" if a else f"x = t^{self.ramification}"
        y_part = " + ".join(f"({c})*t^{k}" for k, c in self.terms) or "0"
        tail = "" if self.exact else f" + O(t^{self.t_order + 1})"
        return f"{x_part}, y = {b} + {y_part}{tail}"


def _support(h: sp.Expr) -> dict[tuple[int, int], sp.Expr]:
    """Nonzero terms of h as {(i, j): coefficient of X^i Y^j}."""
    expanded = sp.expand(h)
    if expanded == 0:
        return {}
    poly = sp.Poly(expanded, _X, _Y)
    return {
        (int(i), int(j)): c
        for (i, j), c in poly.as_dict(native=False).items()
        if not is_zero(c)
    }


def _lower_hull(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Lower convex hull of points (j, i) sorted by j."""
    hull: list[tuple[int, int]] = []
    for p in sorted(points):
        while len(hull) >= 2:
            (j1, i1), (j2, i2) = hull[-2], hull[-1]
            if (j2 - j1) * (p[1] - i1) - (i2 - i1) * (p[0] - j1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def newton_polygon_edges(
    support: dict[tuple[int, int], sp.Expr], j_max: int
) -> list[tuple[Fraction, list[tuple[int, int]]]]:
    """Edges of positive slope between the Y^0 column and (j_max, 0).

    Each edge is (slope gamma, support points (i, j) on it); branches along
    the edge start as Y = c * X^gamma.
    """
    lowest: dict[int, int] = {}
    for i, j in support:
        if j <= j_max:
            lowest[j] = min(i, lowest.get(j, i))
    hull = _lower_hull([(j, i) for j, i in lowest.items()])
    edges = []
    for (j1, i1), (j2, i2) in zip(hull, hull[1:], strict=False):
        gamma = Fraction(i1 - i2, j2 - j1)
        if gamma <= 0:
            continue
        height = i1 + gamma * j1
        on_edge = sorted(
            (i, j) for i, j in support if j1 <= j <= j2 and i + gamma * j == height
        )
        edges.append((gamma, on_edge))
    return edges


def _characteristic_roots(
    support: dict[tuple[int, int], sp.Expr],
    on_edge: list[tuple[int, int]],
    denominator: int,
) -> list[tuple[sp.Expr, int]]:
    """Nonzero roots of the edge polynomial, one per orbit c -> zeta * c, zeta^q = 1."""
    j_low = min(j for _, j in on_edge)
    polynomial = sp.Poly(
        sum(support[(i, j)] * _Z ** (j - j_low) for i, j in on_edge), _Z
    )
    found = sp.roots(polynomial)
    if sum(found.values()) != polynomial.degree():
        raise PuiseuxError(f"cannot solve the edge polynomial {polynomial.as_expr()} exactly")
    representatives: list[tuple[sp.Expr, int]] = []
    for root, multiplicity in found.items():
        root = sp.simplify(root)
        if is_zero(root):
            continue
        power = sp.expand(root**denominator)
        if any(is_zero(sp.expand(power - c**denominator)) for c, _ in representatives):
            continue
        representatives.append((root, multiplicity))
    return representatives


def _transform(h: sp.Expr, gamma: Fraction, root: sp.Expr, shift: int) -> sp.Expr:
    """h(X^q, X^m (root + Y)) / X^shift for gamma = m / q."""
    m, q = gamma.numerator, gamma.denominator
    substituted = sp.expand(h.subs({_X: _X**q, _Y: _X**m * (root + _Y)}, simultaneous=True))
    poly = sp.Poly(substituted, _X, _Y)
    terms = {
        (int(i) - shift, int(j)): c
        for (i, j), c in poly.as_dict(native=False).items()
        if not is_zero(c)
    }
    if any(i < 0 for i, _ in terms):
        raise PuiseuxError("edge transform left a negative exponent")
    return sum((c * _X**i * _Y**j for (i, j), c in terms.items()), sp.Integer(0))


@dataclass
class _Partial:
    h: sp.Expr
    ramification: int
    exponent: Fraction
    terms: list[tuple[Fraction, sp.Expr]]
    depth: int = 0


_Raw = tuple[int, list[tuple[Fraction, sp.Expr]], bool]


def _expand(start: _Partial, order: int) -> list[_Raw]:
    finished: list[_Raw] = []
    pending = [start]
    while pending:
        partial = pending.pop()
        if partial.depth > MAX_DEPTH:
            raise PuiseuxError("Newton polygon recursion did not separate the branches")
        support = _support(partial.h)
        if not support:
            raise PuiseuxError("local equation vanishes identically")
        if not any(j == 0 for _, j in support):
            finished.append((partial.ramification, partial.terms, True))
            partial.h = sp.expand(sp.cancel(partial.h / _Y))
            support = _support(partial.h)
            if not any(j == 0 for _, j in support):
                raise PuiseuxError("repeated branch: the curve is not reduced")
        column = [j for i, j in support if i == 0]
        if not column:
            raise PuiseuxError("the curve contains the vertical line through the point")
        j_max = min(column)
        if j_max == 0:
            continue
        for gamma, on_edge in newton_polygon_edges(support, j_max):
            exponent = partial.exponent + gamma / partial.ramification
            if j_max == 1 and exponent > order:
                finished.append((partial.ramification, partial.terms, False))
                continue
            i_low, j_low = min(on_edge, key=lambda p: p[1])
            shift = gamma.denominator * i_low + gamma.numerator * j_low
            for root, _ in _characteristic_roots(support, on_edge, gamma.denominator):
                pending.append(
                    _Partial(
                        _transform(partial.h, gamma, root, shift),
                        partial.ramification * gamma.denominator,
                        exponent,
                        [*partial.terms, (exponent, root)],
                        partial.depth + 1,
                    )
                )
    return finished


def _check_reduced(curve: BivariatePoly, a: Fraction, b: Fraction) -> None:
    _, factors = sp.factor_list(curve.poly)
    for factor, multiplicity in factors:
        if multiplicity > 1:
            x, y = curve.symbols
            value = factor.as_expr().subs({x: fraction_to_sympy(a), y: fraction_to_sympy(b)})
            if value == 0:
                raise PuiseuxError(
                    f"non-isolated singularity: repeated factor {factor.as_expr()} at ({a}, {b})"
                )


def _local_equation(curve: BivariatePoly, a: Fraction, b: Fraction) -> sp.Expr:
    x, y = curve.symbols
    local = curve.translate(a, b).as_expr()
    return sp.expand(local.subs({x: _X, y: _Y}, simultaneous=True))


def puiseux_expansions(
    curve: BivariatePoly,
    point: tuple[RationalLike, RationalLike],
    order: int = DEFAULT_ORDER,
) -> list[PuiseuxBranch]:
    """All local branches of the curve at a rational point.

    Args:
        curve: Reduced curve f(x, y)
        point: Rational point (a, b) on the curve
        order: Truncation order in x; every branch is exact through x^order

    Returns:
        Branches sorted by (ramification, first terms).

    Raises:
        PuiseuxError: If the point is not on the curve, lies on a repeated
            component, or the curve contains the vertical line x = a
    """
    if order < 1:
        raise PuiseuxError(f"truncation order must be positive, got {order}")
    a, b = to_fraction(point[0]), to_fraction(point[1])
    if curve.evaluate(a, b) != 0:
        raise PuiseuxError(f"({a}, {b}) is not on the curve")
    _check_reduced(curve, a, b)
    local = _local_equation(curve, a, b)
    raw = _expand(_Partial(local, 1, Fraction(0), []), order)
    branches = []
    for ramification, terms, exact in raw:
        kept = tuple(
            (int(exponent * ramification), coefficient)
            for exponent, coefficient in terms
            if exact or exponent <= order
        )
        branches.append(PuiseuxBranch((a, b), ramification, kept, order, exact))
    branches.sort(key=lambda br: (br.ramification, [str(c) for _, c in br.terms]))
    logger.debug(
        "%d branches at (%s, %s): ramifications %s",
        len(branches),
        a,
        b,
        [br.ramification for br in branches],
    )
    return branches


def intersection_with_vertical(
    curve: BivariatePoly, point: tuple[RationalLike, RationalLike]
) -> int:
    """Intersection multiplicity of the curve with the line x = a at (a, b)."""
    a, b = to_fraction(point[0]), to_fraction(point[1])
    local = _local_equation(curve, a, b).subs(_X, 0)
    if sp.expand(local) == 0:
        raise PuiseuxError(f"the curve contains the vertical line x = {a}")
    poly = sp.Poly(local, _Y)
    return min(int(j) for (j,), c in poly.as_dict().items() if c != 0)
