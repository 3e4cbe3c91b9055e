"""Tests for A_n recognition and local discriminant contributions."""

from fractions import Fraction

import pytest

from braidmono.exceptions import PuiseuxError
from braidmono.newtonpuiseux import (
    VerticalTangency,
    classify_fiber_point,
    classify_simple_singularity,
    fiber_singular_points,
    leading_form_after_substitution,
    local_braid_exponent,
    local_contributions,
    local_discriminant_contribution,
)
from braidmono.parsers import parse_curve


class TestSimpleSingularities:
    """Local models at the origin."""

    @pytest.mark.parametrize(
        ("text", "label", "branches"),
        [
            ("y^2 - x^2 - x^3", "A1", 2),
            ("y^2 - x^3", "A2", 1),
            ("y^2 - x^4 - x^5", "A3", 2),
            ("y^2 - x^5", "A4", 1),
            ("y^2 - x^6 - x^7", "A5", 2),
        ],
    )
    def test_an_types(self, text, label, branches):
        kind = classify_simple_singularity(parse_curve(text), (0, 0))
        assert kind.label == label
        assert kind.branch_count == branches
        assert kind.strands == 2
        assert kind.milnor_number == int(label[1:])

    def test_tacnode_contact(self):
        kind = classify_simple_singularity(parse_curve("y^2 - x^4 - x^5"), (0, 0))
        assert kind.contacts == (2,)
        assert kind.delta == 2

    def test_cusp_with_vertical_tangent(self):
        kind = classify_simple_singularity(parse_curve("x^2 - y^3"), (0, 0))
        assert kind.label == "A2"
        assert kind.strands == 3

    def test_ordinary_triple_point_unsupported(self):
        kind = classify_simple_singularity(parse_curve("y^3 - x^3 - x^4"), (0, 0))
        assert not kind.is_supported
        assert kind.branch_count == 3
        with pytest.raises(PuiseuxError):
            _ = kind.milnor_number

    def test_smooth_point_rejected(self):
        with pytest.raises(PuiseuxError, match="smooth"):
            classify_simple_singularity(parse_curve("y - x^2"), (0, 0))


class TestFiberPoints:
    """Types and contributions of points over one vertical line."""

    def test_vertical_tangency(self):
        kind = classify_fiber_point(parse_curve("y^2 - x"), (0, 0))
        assert kind == VerticalTangency(2)
        assert kind.label == "T2"
        assert local_braid_exponent(kind) == 1

    def test_transversal_point(self):
        assert classify_fiber_point(parse_curve("y - x"), (0, 0)) is None
        assert local_discriminant_contribution(parse_curve("y - x"), (0, 0)) == 0

    def test_braid_exponents(self):
        assert local_braid_exponent(classify_fiber_point(parse_curve("y^2 - x^2"), (0, 0))) == 2
        assert local_braid_exponent(classify_fiber_point(parse_curve("y^2 - x^5"), (0, 0))) == 5

    def test_braid_exponent_needs_two_strands(self):
        with pytest.raises(PuiseuxError):
            local_braid_exponent(VerticalTangency(3))
        kind = classify_fiber_point(parse_curve("y^3 - x^3 - x^4"), (0, 0))
        with pytest.raises(PuiseuxError):
            local_braid_exponent(kind)

    def test_contribution_matches_discriminant(self):
        # discriminant of y^2 - x^3 is 4x^3
        assert local_contributions(parse_curve("y^2 - x^3"), 0) == {(0, 0): 3}

    def test_fiber_singular_points(self):
        points = fiber_singular_points(parse_curve("y^2 - x^2 - x^3"), 0)
        assert points == [(Fraction(0), Fraction(0))]
        assert fiber_singular_points(parse_curve("y^2 - x"), 1) == []

    def test_irrational_multiple_roots(self):
        with pytest.raises(PuiseuxError, match="irrational"):
            fiber_singular_points(parse_curve("y^4 - 4*y^2 + 4 + x"), 0)

    def test_point_not_on_curve(self):
        with pytest.raises(PuiseuxError):
            classify_fiber_point(parse_curve("y^2 - x"), (1, 0))


class TestLeadingForm:
    def test_weights_positive(self):
        with pytest.raises(PuiseuxError):
            leading_form_after_substitution(parse_curve("y^2 - x^3"), ("x", "y"), (0, 1))

    def test_identity_substitution(self):
        form = leading_form_after_substitution(parse_curve("y^2 - x^3 + x^4"), ("x", "y"), (2, 3))
        assert form.coefficients == {(0, 2): 1, (3, 0): -1}


@pytest.mark.slow
class TestSexticSingularities:
    """Singular points of the two shipped sextics."""

    def test_c_over_origin_line(self, curve_c):
        contributions = local_contributions(curve_c, 0)
        assert contributions == {(0, 0): 10, (0, 1): 5}
        assert classify_fiber_point(curve_c, (0, 0)).label == "A9"
        assert classify_fiber_point(curve_c, (0, 1)).label == "A4"

    def test_c_vertical_a4(self, curve_c):
        kind = classify_fiber_point(curve_c, (1, 0))
        assert kind.label == "A4"
        assert kind.strands == 4
        assert sum(local_contributions(curve_c, 1).values()) == 7

    def test_cprime_a9_has_four_strands(self, curve_cprime):
        kind = classify_fiber_point(curve_cprime, (0, 0))
        assert kind.label == "A9"
        assert kind.strands == 4
        assert local_contributions(curve_cprime, 0) == {(0, 0): 12}

    def test_cprime_a4_pair(self, curve_cprime):
        contributions = local_contributions(curve_cprime, 1)
        assert contributions == {(1, -1): 5, (1, 1): 5}

    def test_cprime_leading_form(self, curve_cprime):
        form = leading_form_after_substitution(
            curve_cprime, ("x - y**4/3 + y**2", "y"), (5, 1)
        )
        assert form.coefficients == {(2, 0): 1, (0, 10): Fraction(4, 27)}
