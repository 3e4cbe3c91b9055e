"""Tests for the order 30 classification."""

import pytest

from braidmono.exceptions import IdentificationError
from braidmono.grouptheory import (
    GroupPresentation,
    coset_enumeration_order,
    identify_order30,
    verify_witness,
)
from braidmono.vankampen import FreeWord


class TestIdentifyOrder30:
    """Abelianization and D10 quotients separate the four groups of order 30."""

    def test_d10_times_z3(self, order30_presentation):
        verdict = identify_order30(order30_presentation)
        assert verdict.label == "D10 x Z/3"
        assert verdict.is_d10_times_z3
        assert verdict.abelianization == (6,)
        assert verdict.has_d10_quotient

    def test_witness_has_order_15_and_central_fifth_power(self, order30_presentation):
        verdict = identify_order30(order30_presentation)
        assert verdict.witness is not None
        cosets = coset_enumeration_order(order30_presentation, 1000)
        assert cosets.element_order(verdict.witness) == 15
        assert cosets.is_central(verdict.witness**5)

    def test_cyclic(self):
        verdict = identify_order30(GroupPresentation.from_lists(1, [[1] * 30]))
        assert verdict.label == "Z/30"
        assert not verdict.has_d10_quotient

    def test_dihedral(self):
        p = GroupPresentation.from_lists(2, [[1, 1], [2, 2], [1, 2] * 15])
        assert identify_order30(p).label == "D30"

    def test_wrong_order(self, s3_presentation):
        with pytest.raises(IdentificationError, match="order 6"):
            identify_order30(s3_presentation)


class TestVerifyWitness:
    """A given word of order 15 with central fifth power."""

    def test_x2_x1(self, order30_presentation):
        assert verify_witness(order30_presentation, FreeWord((2, 1)))

    def test_generator_is_not_a_witness(self, order30_presentation):
        assert not verify_witness(order30_presentation, FreeWord((1,)))

    def test_coset_bound(self, order30_presentation):
        with pytest.raises(IdentificationError, match="exceeded"):
            verify_witness(order30_presentation, FreeWord((2, 1)), max_cosets=2)
