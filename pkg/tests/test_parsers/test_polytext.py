"""Tests for the polynomial text format."""

from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidmono.exactpoly import BivariatePoly
from braidmono.exceptions import NonRationalCoefficientError, PolynomialParseError
from braidmono.parsers import PolynomialParser, format_poly, parse_curve


class TestParseCurve:
    """Parsing polynomial text."""

    def test_parse_simple_curve(self):
        p = parse_curve("y^2 - x")
        assert p.degree == 2
        assert p.degree_inner == 2
        assert p.coefficients == {(0, 2): Fraction(1), (1, 0): Fraction(-1)}

    def test_implicit_multiplication_and_powers(self):
        assert parse_curve("2x y**3") == parse_curve("2*x*y^3")

    def test_rational_coefficients(self):
        p = parse_curve("369/364*y^6 - 1/7*y^3")
        assert p.coefficients[(0, 6)] == Fraction(369, 364)
        assert p.coefficients[(0, 3)] == Fraction(-1, 7)

    def test_parentheses_expand(self):
        assert parse_curve("(x - y)^2") == parse_curve("x^2 - 2*x*y + y^2")

    def test_comments_are_ignored(self):
        assert parse_curve("# a conic\nx^2 + y^2 - 1  # unit circle") == parse_curve(
            "x^2+y^2-1"
        )

    def test_double_caret_is_syntax_error(self):
        with pytest.raises(PolynomialParseError) as exc_info:
            parse_curve("y^^2")
        assert exc_info.value.position == 2

    def test_unknown_variable(self):
        with pytest.raises(PolynomialParseError) as exc_info:
            parse_curve("x + z")
        assert exc_info.value.position == 4

    def test_decimal_coefficient_rejected(self):
        with pytest.raises(NonRationalCoefficientError):
            parse_curve("0.5*x + y")

    def test_imaginary_unit_rejected(self):
        with pytest.raises(NonRationalCoefficientError):
            parse_curve("I*x + y")

    def test_division_by_zero(self):
        with pytest.raises(PolynomialParseError):
            parse_curve("x/0 + y")

    def test_empty_input(self):
        with pytest.raises(PolynomialParseError):
            parse_curve("   ")

    def test_unbalanced_parenthesis(self):
        with pytest.raises(PolynomialParseError):
            parse_curve("(x + y")


class TestPolynomialParser:
    """File parsing and custom variables."""

    def test_parse_file(self, tmp_path: Path):
        path = tmp_path / "curve.poly"
        path.write_text("# cusp\ny^2 - x^3\n", encoding="utf-8")
        p = PolynomialParser().parse_file(path)
        assert p.nterms == 2

    def test_missing_file(self, tmp_path: Path):
        with pytest.raises(FileNotFoundError):
            PolynomialParser().parse_file(tmp_path / "missing.poly")

    def test_custom_variables(self):
        p = PolynomialParser(("s", "t")).parse_text("t^2 - s")
        assert p.variables == ("s", "t")


class TestFormatPoly:
    """Canonical formatting."""

    def test_format_order(self):
        assert format_poly(parse_curve("x - 1 + y^2 - 2/3*x*y")) == "y^2 - 2/3*x*y + x - 1"

    def test_format_zero(self):
        assert format_poly(BivariatePoly({})) == "0"

    def test_fixture_text_round_trips(self, curve_c):
        assert parse_curve(format_poly(curve_c)) == curve_c

    @given(
        st.dictionaries(
            st.tuples(st.integers(0, 4), st.integers(0, 4)),
            st.fractions(max_denominator=50).filter(lambda c: c != 0),
            max_size=8,
        )
    )
    def test_parse_inverts_format(self, coefficients):
        p = BivariatePoly(coefficients)
        assert parse_curve(format_poly(p)) == p
