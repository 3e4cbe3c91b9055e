"""Numerical evaluation of a curve along its vertical pencil."""

from __future__ import annotations

import logging
import threading
import weakref
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import mpmath

from braidmono.exactpoly import BivariatePoly, UnivariatePoly
from braidmono.exceptions import GenericityError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partials:
    """f and its partial derivatives up to order two at a point."""

    f: Any
    fx: Any
    fy: Any
    fxx: Any
    fxy: Any
    fyy: Any


class NumericCurve:
    """f(x, y) = sum_j a_j(x) y^j with the a_j and their derivatives ready for mpmath.

    Coefficient lists are converted once per mpmath context; values bound to
    one context are never handed to another.
    """

    def __init__(self, curve: BivariatePoly) -> None:
        self.curve = curve
        self.coefficients: list[UnivariatePoly] = curve.inner_coefficients()
        self.degree = len(self.coefficients) - 1
        if self.degree < 1:
            raise GenericityError("the curve is constant along the fibers")
        if self.coefficients[-1].degree != 0:
            raise GenericityError(
                "leading coefficient in the fiber variable is not constant; "
                "the vertical pencil is not generic"
            )
        first = [a.derivative() for a in self.coefficients]
        second = [a.derivative() for a in first]
        self._exact = (self.coefficients, first, second)
        self._converted: weakref.WeakKeyDictionary[
            mpmath.MPContext, tuple[int, tuple[list[list[Any]], ...]]
        ] = weakref.WeakKeyDictionary()
        self._lock = threading.Lock()

    def _lists(self, ctx: mpmath.MPContext) -> tuple[list[list[Any]], ...]:
        with self._lock:
            cached = self._converted.get(ctx)
        if cached is not None and cached[0] == ctx.prec:
            return cached[1]
        lists = tuple(
            [a.mp_coefficients(ctx) if not a.is_zero else [ctx.zero] for a in family]
            for family in self._exact
        )
        with self._lock:
            self._converted[ctx] = (ctx.prec, lists)
        return lists

    def fiber_coefficients(self, ctx: mpmath.MPContext, x: Any) -> list[Any]:
        """Coefficients of f(x, .) highest degree first."""
        values, _, _ = self._lists(ctx)
        return [ctx.polyval(values[j], x) for j in range(self.degree, -1, -1)]

    def partials(self, ctx: mpmath.MPContext, x: Any, y: Any) -> Partials:
        values, first, second = self._lists(ctx)
        a = [ctx.polyval(c, x) for c in values]
        da = [ctx.polyval(c, x) for c in first]
        dda = [ctx.polyval(c, x) for c in second]
        f = fx = fy = fxx = fxy = fyy = ctx.mpc(0)
        power = ctx.mpc(1)
        powers = [power]
        for _ in range(self.degree):
            power = power * y
            powers.append(power)
        for j in range(self.degree + 1):
            f += a[j] * powers[j]
            fx += da[j] * powers[j]
            fxx += dda[j] * powers[j]
            if j >= 1:
                fy += j * a[j] * powers[j - 1]
                fxy += j * da[j] * powers[j - 1]
            if j >= 2:
                fyy += j * (j - 1) * a[j] * powers[j - 2]
        return Partials(f, fx, fy, fxx, fxy, fyy)

    def predict(self, ctx: mpmath.MPContext, x0: Any, y0: Any, dx: Any) -> Any:
        """Second-order Taylor prediction of the root continuing y0 from x0 to x0 + dx."""
        p = self.partials(ctx, x0, y0)
        if p.fy == 0:
            return y0
        slope = -p.fx / p.fy
        curvature = -(p.fxx + 2 * p.fxy * slope + p.fyy * slope**2) / p.fy
        return y0 + slope * dx + curvature * dx**2 / 2

    def drift_bounds(
        self,
        ctx: mpmath.MPContext,
        x0: Any,
        reach: Any,
        centers: Sequence[Any],
        radii: Sequence[Any],
    ) -> list[Any]:
        """Bounds of |f(x, y) - f(x0, y)| over |x - x0| <= reach and |y - centers[i]| <= radii[i].

        f is expanded in (x - x0) and (y - centers[i]); the bound adds the
        absolute values of all terms with a positive power of x - x0.
        """
        values, _, _ = self._lists(ctx)
        shifted = [taylor_coefficients(ctx, values[j], x0) for j in range(self.degree + 1)]
        order = max(len(s) for s in shifted)
        columns = [
            [shifted[j][k] if k < len(shifted[j]) else ctx.zero for j in range(self.degree, -1, -1)]
            for k in range(1, order)
        ]
        bounds = []
        for center, radius in zip(centers, radii, strict=True):
            total = ctx.mpf(0)
            for k, column in enumerate(columns, start=1):
                in_y = taylor_coefficients(ctx, column, center)
                total += reach**k * sum(abs(c) * radius**m for m, c in enumerate(in_y))
            bounds.append(total)
        return bounds


def taylor_coefficients(ctx: mpmath.MPContext, coefficients: Sequence[Any], at: Any) -> list[Any]:
    """Coefficients of p(at + h) in h, constant term first, for p given highest degree first."""
    work = list(coefficients)
    out: list[Any] = []
    while work:
        acc = ctx.mpc(0)
        quotient = []
        for c in work:
            acc = acc * at + c
            quotient.append(acc)
        out.append(quotient.pop())
        work = quotient
    return out
