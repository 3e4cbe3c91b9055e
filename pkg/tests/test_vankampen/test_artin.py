"""Tests for the Artin action and monodromy relators."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidmono.exactpoly import UnivariatePoly
from braidmono.exceptions import PresentationError
from braidmono.grouptheory import abelianization, alexander_polynomial
from braidmono.vankampen import (
    BraidWord,
    FreeWord,
    affine_presentation,
    artin_act,
    fixes_boundary_product,
    generator_images,
    product_of_generators,
    relators_from_lasso,
)

x1, x2, x3 = (FreeWord.generator(k) for k in (1, 2, 3))


def braids(strands: int) -> st.SearchStrategy[BraidWord]:
    letter = st.integers(1, strands - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(letter, max_size=8).map(lambda letters: BraidWord(letters, strands))


class TestArtinAction:
    """The automorphisms attached to braid generators."""

    def test_positive_generator(self):
        s1 = BraidWord([1], 3)
        assert artin_act(s1, x1) == x1 * x2 * x1.inverse()
        assert artin_act(s1, x2) == x1
        assert artin_act(s1, x3) == x3

    def test_negative_generator(self):
        s1_inv = BraidWord([-1], 2)
        assert artin_act(s1_inv, x1) == x2
        assert artin_act(s1_inv, x2) == x2.inverse() * x1 * x2

    def test_generator_images(self):
        assert generator_images(BraidWord([2], 3)) == [x1, x2 * x3 * x2.inverse(), x2]

    def test_word_beyond_strands_rejected(self):
        with pytest.raises(PresentationError):
            artin_act(BraidWord([1], 2), x3)

    @given(braids(4), braids(4), st.lists(st.sampled_from([1, -1, 2, -2, 3, 4]), max_size=6))
    def test_left_action(self, b1, b2, letters):
        w = FreeWord(letters)
        assert artin_act(b1 * b2, w) == artin_act(b1, artin_act(b2, w))

    @given(braids(4))
    def test_boundary_product_fixed(self, b):
        assert fixes_boundary_product(b)

    @given(braids(3), st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=6))
    def test_inverse_braid_undoes_action(self, b, letters):
        w = FreeWord(letters)
        assert artin_act(b.inverse(), artin_act(b, w)) == w

    @pytest.mark.parametrize("strands", [2, 3])
    def test_full_twist_conjugates_by_boundary_product(self, strands):
        twist = BraidWord.full_twist(strands)
        boundary = product_of_generators(strands)
        for k in range(1, strands + 1):
            xk = FreeWord.generator(k)
            assert artin_act(twist, xk) == xk.conjugate_by(boundary)


class TestRelators:
    """Relators x_k^-1 * b(x_k) of a single lasso braid."""

    def test_identity_braid_gives_nothing(self):
        assert relators_from_lasso(BraidWord.identity(3)) == []

    def test_transversal_crossing_identifies_generators(self):
        assert relators_from_lasso(BraidWord([1], 2)) == [FreeWord([2, -1])]
        assert relators_from_lasso(BraidWord([1], 3)) == [FreeWord([2, -1])]

    def test_node_gives_commutator(self):
        assert relators_from_lasso(BraidWord([1, 1], 2)) == [FreeWord([2, 1, -2, -1])]

    def test_cusp_gives_braid_relation(self):
        relators = relators_from_lasso(BraidWord([1, 1, 1], 2))
        assert relators == [FreeWord([2, 1, 2, -1, -2, -1])]

    def test_a4_point_gives_length_five_braid_relation(self):
        # five half twists: x1 x2 x1 x2 x1 = x2 x1 x2 x1 x2
        relators = relators_from_lasso(BraidWord([1] * 5, 2))
        assert relators == [FreeWord([2, 1, 2, 1, 2, -1, -2, -1, -2, -1])]
        relation = FreeWord([1, 2, 1, 2, 1, -2, -1, -2, -1, -2])
        assert relators[0].canonical_cyclic() == relation.canonical_cyclic()

    def test_a4_point_alexander_polynomial(self):
        p = affine_presentation([BraidWord([1] * 5, 2)], 2)
        assert alexander_polynomial(p) == UnivariatePoly([1, -1, 1, -1, 1], "t")
        assert abelianization(p).as_list() == [0]

    def test_relators_are_cyclically_reduced(self):
        b = BraidWord([2, 1, 1, -2], 3)
        for r in relators_from_lasso(b):
            assert r == r.cyclically_reduced()
            assert not r.is_identity
