"""Tests for abelianization via Smith normal form."""

from math import prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidmono.grouptheory import (
    AbelianInvariants,
    GroupPresentation,
    abelianization,
    smith_invariants,
)


class TestSmithInvariants:
    def test_diagonal_is_divisibility_chain(self):
        assert smith_invariants([[2, 0], [0, 3]], 2) == [1, 6]

    def test_empty(self):
        assert smith_invariants([], 3) == []


class TestAbelianInvariants:
    """Invariant factor bookkeeping."""

    def test_divisibility_enforced(self):
        with pytest.raises(ValueError):
            AbelianInvariants((2, 3))

    def test_rank_and_torsion(self):
        invariants = AbelianInvariants((2, 6, 0))
        assert invariants.rank == 1
        assert invariants.torsion == (2, 6)
        assert not invariants.is_finite
        assert invariants.order is None
        assert str(invariants) == "Z/2 x Z/6 x Z"

    def test_trivial(self):
        assert str(AbelianInvariants(())) == "trivial"
        assert AbelianInvariants(()).order == 1


class TestAbelianization:
    """Abelianizations of small presentations."""

    def test_cyclic(self):
        assert abelianization(GroupPresentation.from_lists(1, [[1] * 6])).as_list() == [6]

    def test_free(self):
        assert abelianization(GroupPresentation.free(2)).as_list() == [0, 0]

    def test_symmetric_group(self, s3_presentation):
        assert abelianization(s3_presentation).as_list() == [2]

    def test_order30_group(self, order30_presentation):
        assert abelianization(order30_presentation).as_list() == [6]

    def test_trefoil_group(self, trefoil_presentation):
        assert abelianization(trefoil_presentation).as_list() == [0]

    @given(st.lists(st.integers(1, 12), min_size=1, max_size=4))
    def test_order_of_diagonal_presentation(self, exponents):
        p = GroupPresentation.from_lists(
            len(exponents), [[k] * e for k, e in enumerate(exponents, start=1)]
        )
        invariants = abelianization(p)
        assert invariants.is_finite
        assert invariants.order == prod(exponents)

    @given(st.lists(st.integers(1, 12), min_size=2, max_size=4))
    def test_invariant_under_commutator_relators(self, exponents):
        n = len(exponents)
        powers = [[k] * e for k, e in enumerate(exponents, start=1)]
        commutator = [1, 2, -1, -2]
        base = GroupPresentation.from_lists(n, powers)
        extended = GroupPresentation.from_lists(n, [*powers, commutator])
        assert abelianization(base) == abelianization(extended)
