"""Tests for the shipped curve fixtures."""

import hashlib
from fractions import Fraction

import pytest

from braidmono.curves import FIXTURES, fixture_names, get_fixture, load_fixture


class TestFixtureRegistry:
    """Fixture lookup."""

    def test_fixture_names(self):
        assert fixture_names() == ["C", "Cprime", "conic", "cubic", "quartic"]

    def test_prime_alias(self):
        assert get_fixture("C'") is FIXTURES["Cprime"]

    def test_unknown_fixture(self):
        with pytest.raises(KeyError):
            get_fixture("quintic")

    def test_fixture_files_ship_with_package(self):
        for name in fixture_names():
            assert get_fixture(name).path.is_file()


class TestSexticFixtures:
    """Transcription checks for the two sextics."""

    def test_c_shape(self, curve_c):
        assert curve_c.degree == 6
        assert curve_c.degree_inner == 6
        assert curve_c.nterms == 22
        assert curve_c.coefficients[(0, 6)] == Fraction(369, 364)

    def test_cprime_shape(self, curve_cprime):
        assert curve_cprime.degree == 6
        assert curve_cprime.degree_inner == 6
        assert curve_cprime.nterms == 13
        assert curve_cprime.coefficients[(0, 6)] == Fraction(-4, 3)

    @pytest.mark.parametrize("name", ["C", "Cprime"])
    def test_singular_points_lie_on_curve(self, name):
        curve = load_fixture(name)
        for point in get_fixture(name).singular_points:
            x, y = Fraction(point.x), Fraction(point.y)
            assert curve.evaluate(x, y) == 0
            assert curve.diff("x").evaluate(x, y) == 0
            assert curve.diff("y").evaluate(x, y) == 0

    @pytest.mark.parametrize(
        ("name", "digest"),
        [
            ("C", "d98b15584fb855463edf3b5d2e78ffea261155ec95bba1989363f711676b78f3"),
            ("Cprime", "3a35ca48d06c81da52663c72d915732eef2fd6530ee9565a050016baf2dd8ce1"),
        ],
    )
    def test_fixture_checksum(self, name, digest):
        """Guards the shipped equations against accidental edits."""
        assert hashlib.sha256(get_fixture(name).path.read_bytes()).hexdigest() == digest

    def test_cprime_lowest_terms(self, curve_cprime):
        """Near the origin C' starts with (x - y^2)^2."""
        lowest = {k: v for k, v in curve_cprime.coefficients.items() if 2 * k[0] + k[1] == 4}
        assert lowest == {(2, 0): 1, (1, 2): -2, (0, 4): 1}
