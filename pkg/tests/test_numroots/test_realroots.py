"""Tests for exact real root counting."""

from fractions import Fraction

import pytest

from braidmono.exactpoly import UnivariatePoly
from braidmono.exceptions import PolynomialError
from braidmono.numroots import count_real_roots, real_roots_in_interval, sturm_count

CUBIC = UnivariatePoly([0, -1, 0, 1])  # x^3 - x


class TestSturm:
    """Sturm sequence counts."""

    def test_half_open_count(self):
        assert sturm_count(CUBIC, -1, 1) == 2
        assert count_real_roots(CUBIC, -1, 1) == 3

    def test_non_rational_rejected(self):
        from braidmono.exactpoly import GaussianRational

        with pytest.raises(PolynomialError):
            sturm_count(UnivariatePoly([GaussianRational(0, 1), 1]), 0, 1)


class TestRealRootsInInterval:
    """Isolating intervals."""

    def test_intervals_contain_roots(self):
        p = UnivariatePoly([-2, 0, 1])
        intervals = real_roots_in_interval(p, 0, 2, width=Fraction(1, 1000))
        assert len(intervals) == 1
        root = intervals[0]
        assert root.width <= Fraction(1, 1000)
        assert root.lower ** 2 <= 2 <= root.upper ** 2

    def test_multiplicity_reported(self):
        p = UnivariatePoly([-1, 1]) ** 2
        (root,) = real_roots_in_interval(p, 0, 2)
        assert root.multiplicity == 2
        assert root.contains(1)

    def test_empty_interval_rejected(self):
        with pytest.raises(PolynomialError):
            real_roots_in_interval(CUBIC, 1, 0)
