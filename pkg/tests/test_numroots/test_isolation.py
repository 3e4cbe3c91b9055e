"""Tests for certified complex root isolation."""

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidmono.exactpoly import UnivariatePoly, discriminant_y
from braidmono.exceptions import CertificationError, PolynomialError
from braidmono.numroots import (
    ComplexDisk,
    dyadic_below,
    isolate_complex_roots,
    make_context,
    mpf_to_fraction,
    refine_root,
)

C_ROOTS = [
    -0.7408,
    -0.3914,
    -0.1309,
    0,
    0.0598,
    0.0778,
    0.6274,
    complex(0.9933, -0.1446),
    complex(0.9933, 0.1446),
    1,
]

CPRIME_ROOTS = [
    -5.5758,
    -0.3708,
    -0.3677,
    0,
    0.9708,
    1,
    complex(1.9718, -0.7077),
    complex(1.9718, 0.7077),
]


def _assert_matches(disks, expected, tolerance=1e-3):
    assert len(disks) == len(expected)
    for disk, value in zip(disks, expected, strict=True):
        assert abs(complex(disk.center) - complex(value)) < tolerance


class TestDisks:
    """Disk helpers."""

    def test_overlap_and_containment(self):
        a = ComplexDisk(mpmath.mpc(0), mpmath.mpf(1))
        b = ComplexDisk(mpmath.mpc(3), mpmath.mpf(1))
        c = ComplexDisk(mpmath.mpc("0.5"), mpmath.mpf("0.25"))
        assert not a.overlaps(b)
        assert a.contains_disk(c)
        assert a.distance_lower_bound(b) == 1

    def test_mpf_to_fraction_is_exact(self):
        ctx = make_context(53)
        assert mpf_to_fraction(ctx.mpf(0.375)) == Fraction(3, 8)

    def test_dyadic_below(self):
        value = dyadic_below(mpmath.mpf("0.3"), bits=8)
        assert value <= Fraction(3, 10)
        assert Fraction(3, 10) - value < Fraction(1, 2**8)
        assert (value.denominator & (value.denominator - 1)) == 0


class TestIsolateComplexRoots:
    """Certified isolation of all distinct roots."""

    def test_quadratic_with_real_roots(self):
        roots = isolate_complex_roots(UnivariatePoly([-2, 0, 1]))
        assert len(roots) == 2
        assert all(d.is_real_certified for d in roots.disks)
        assert abs(roots.disks[1].center - mpmath.sqrt(2)) < 1e-15

    def test_complex_pair(self):
        roots = isolate_complex_roots(UnivariatePoly([1, 0, 1]))
        assert len(roots) == 2
        assert roots.real_roots() == []
        assert roots.disks[0].imag < 0 < roots.disks[1].imag

    def test_multiplicities_from_squarefree_decomposition(self):
        p = UnivariatePoly([0, 1]) ** 3 * UnivariatePoly([-1, 1])
        roots = isolate_complex_roots(p)
        assert roots.multiplicities == (3, 1)
        assert roots.degree == 4

    def test_constant_has_no_roots(self):
        assert len(isolate_complex_roots(UnivariatePoly([5]))) == 0

    def test_zero_polynomial_rejected(self):
        with pytest.raises(PolynomialError):
            isolate_complex_roots(UnivariatePoly([]))

    def test_disks_pairwise_disjoint(self, curve_c):
        roots = isolate_complex_roots(discriminant_y(curve_c))
        assert roots.is_pairwise_disjoint()

    def test_discriminant_roots_of_c(self, curve_c):
        roots = isolate_complex_roots(discriminant_y(curve_c))
        _assert_matches(roots.disks, C_ROOTS)
        assert len(roots.real_roots()) == 8

    def test_discriminant_roots_of_cprime(self, curve_cprime):
        roots = isolate_complex_roots(discriminant_y(curve_cprime))
        _assert_matches(roots.disks, CPRIME_ROOTS)
        assert roots.multiplicities == (1, 2, 1, 12, 2, 10, 1, 1)

    def test_ceiling_below_start_fails_fast(self):
        """A Wilkinson-like cluster cannot be separated at 16 bits."""
        p = UnivariatePoly([1])
        for k in range(1, 12):
            p = p * UnivariatePoly([Fraction(-k, 1000) - 1, 1])
        with pytest.raises(CertificationError):
            isolate_complex_roots(p, precision=16, ceiling=16)

    @settings(max_examples=25, deadline=None)
    @given(st.lists(st.integers(-20, 20), min_size=1, max_size=5, unique=True))
    def test_integer_roots_are_enclosed(self, values):
        p = UnivariatePoly([1])
        for v in values:
            p = p * UnivariatePoly([-v, 1])
        roots = isolate_complex_roots(p)
        assert len(roots) == len(values)
        for v in values:
            assert sum(d.contains(mpmath.mpc(v)) for d in roots.disks) == 1


class TestRefineRoot:
    """Newton refinement inside a certified disk."""

    def test_refine_sqrt2(self):
        p = UnivariatePoly([-2, 0, 1])
        disk = isolate_complex_roots(p).disks[1]
        refined = refine_root(p, disk, mpmath.mpf(2) ** -100, ceiling=512)
        assert refined.radius <= mpmath.mpf(2) ** -100
        assert disk.contains_disk(refined)
