"""Tests for Newton polygons and Puiseux expansions."""

from fractions import Fraction

import mpmath
import pytest
import sympy as sp

from braidmono.exactpoly import UnivariatePoly
from braidmono.exceptions import PuiseuxError
from braidmono.newtonpuiseux import (
    algebraic_coefficient,
    intersection_with_vertical,
    newton_polygon_edges,
    puiseux_expansions,
)
from braidmono.parsers import parse_curve


class TestNewtonPolygon:
    def test_cusp_has_one_edge(self):
        support = {(0, 2): sp.Integer(1), (3, 0): sp.Integer(-1)}
        assert newton_polygon_edges(support, 2) == [(Fraction(3, 2), [(0, 2), (3, 0)])]

    def test_node_edge_slope(self):
        support = {(0, 2): sp.Integer(1), (2, 0): sp.Integer(-1), (3, 0): sp.Integer(-1)}
        edges = newton_polygon_edges(support, 2)
        assert [gamma for gamma, _ in edges] == [Fraction(1)]


class TestPuiseuxExpansions:
    """Local branches at rational points."""

    def test_cusp_single_ramified_branch(self):
        (branch,) = puiseux_expansions(parse_curve("y^2 - x^3"), (0, 0))
        assert branch.ramification == 2
        assert branch.y_order == 3
        assert branch.multiplicity == 2
        assert not branch.is_smooth
        assert sp.expand(branch.coefficient(3) ** 2) == 1

    def test_node_two_smooth_branches(self):
        branches = puiseux_expansions(parse_curve("y^2 - x^2 - x^3"), (0, 0), order=4)
        assert len(branches) == 2
        assert all(br.is_smooth for br in branches)
        assert sorted(sp.expand(br.coefficient(1)) for br in branches) == [-1, 1]

    def test_branches_annihilate_curve_to_order(self):
        curve = parse_curve("y^2 - x^2 - x^3")
        for branch in puiseux_expansions(curve, (0, 0), order=5):
            valuation = branch.valuation(curve)
            assert valuation is None or valuation > branch.t_order

    def test_translated_point(self):
        curve = parse_curve("(y - 1)^2 - (x - 2)^3")
        (branch,) = puiseux_expansions(curve, (2, 1))
        assert branch.point == (Fraction(2), Fraction(1))
        assert branch.describe().startswith("x = 2 + t^2, y = 1 + ")

    def test_smooth_point(self):
        (branch,) = puiseux_expansions(parse_curve("y - x^2"), (0, 0))
        assert branch.ramification == 1
        assert branch.exact
        assert branch.terms == ((2, 1),)

    def test_point_not_on_curve(self):
        with pytest.raises(PuiseuxError, match="not on the curve"):
            puiseux_expansions(parse_curve("y^2 - x^3"), (1, 0))

    def test_repeated_component(self):
        with pytest.raises(PuiseuxError, match="non-isolated"):
            puiseux_expansions(parse_curve("(y - x)^2"), (0, 0))

    def test_order_must_be_positive(self):
        with pytest.raises(PuiseuxError):
            puiseux_expansions(parse_curve("y^2 - x^3"), (0, 0), order=0)


class TestVerticalIntersection:
    def test_tangent_line(self):
        assert intersection_with_vertical(parse_curve("y^2 - x"), (0, 0)) == 2
        assert intersection_with_vertical(parse_curve("y^3 - x^2"), (0, 0)) == 3

    def test_vertical_component(self):
        with pytest.raises(PuiseuxError, match="vertical line"):
            intersection_with_vertical(parse_curve("x*y - x"), (0, 1))


class TestAlgebraicCoefficient:
    def test_rational(self):
        coefficient = algebraic_coefficient(sp.Rational(3, 4))
        assert coefficient.minimal_polynomial == UnivariatePoly([Fraction(-3, 4), 1], "z")
        assert coefficient.disk.radius == 0

    def test_square_root(self):
        coefficient = algebraic_coefficient(sp.sqrt(2))
        assert coefficient.minimal_polynomial == UnivariatePoly([-2, 0, 1], "z")
        assert coefficient.disk.contains(mpmath.sqrt(2))
        assert str(coefficient) == "sqrt(2)"


@pytest.mark.slow
class TestSexticCBranches:
    """Branches of C over the line x = 0."""

    def test_a9_branches_at_origin(self, curve_c):
        branches = puiseux_expansions(curve_c, (0, 0), order=5)
        assert len(branches) == 2
        assert all(br.ramification == 1 for br in branches)
        for branch in branches:
            assert [sp.expand(branch.coefficient(k)) for k in (1, 2, 3, 4)] == [0, 1, 5, 51]
        # 503 +/- 32*sqrt(6) are the roots of c^2 - 1006 c + 246865
        fifth = [sp.expand(br.coefficient(5)) for br in branches]
        assert all(sp.simplify(c**2 - 1006 * c + 246865) == 0 for c in fifth)
        assert sorted(float(c) for c in fifth) == pytest.approx(
            [503 - 32 * 6**0.5, 503 + 32 * 6**0.5]
        )

    def test_a4_branch_at_zero_one(self, curve_c):
        (branch,) = puiseux_expansions(curve_c, (0, 1), order=3)
        assert branch.ramification == 2
        assert branch.y_order == 4
        assert branch.coefficient(4) == sp.Rational(-1, 2)
        fifth = sp.expand(branch.coefficient(5))
        assert sp.simplify(fifth**2 + sp.Rational(1, 20)) == 0
        assert abs(complex(fifth)) == pytest.approx(5**0.5 / 10)
        assert complex(fifth).real == pytest.approx(0)
