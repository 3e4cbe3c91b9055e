"""Tests for Fox calculus and the Alexander polynomial."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidmono.exactpoly import UnivariatePoly
from braidmono.exceptions import PresentationError
from braidmono.grouptheory import GroupPresentation, alexander_polynomial, fox_derivative
from braidmono.grouptheory.alexander import fox_identity_holds
from braidmono.vankampen import FreeWord

letters = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=12)


class TestFoxDerivative:
    def test_simple_words(self):
        assert fox_derivative(FreeWord([1, 2]), 2, [1, 1]) == {1: 1}
        assert fox_derivative(FreeWord([-1]), 1, [1]) == {-1: -1}
        assert fox_derivative(FreeWord([2]), 1, [1, 1]) == {}

    @given(letters)
    def test_fundamental_identity(self, word):
        assert fox_identity_holds(FreeWord(word), 3, [1, 1, 1])

    @given(letters, st.lists(st.integers(-3, 3), min_size=3, max_size=3))
    def test_fundamental_identity_any_degrees(self, word, degrees):
        assert fox_identity_holds(FreeWord(word), 3, degrees)

    def test_fundamental_identity_on_fixture_relators(
        self, order30_presentation, trefoil_presentation, s3_presentation
    ):
        for p in (order30_presentation, trefoil_presentation, s3_presentation):
            n = p.generator_count
            for relator in p.relators:
                assert fox_identity_holds(relator, n, [1] * n)
                assert fox_identity_holds(relator, n, list(range(1, n + 1)))


class TestAlexanderPolynomial:
    """Normalized generators of the first elementary ideal."""

    def test_trefoil(self, trefoil_presentation):
        assert alexander_polynomial(trefoil_presentation) == UnivariatePoly([1, -1, 1], "t")

    def test_free_abelian_rank_two(self):
        p = GroupPresentation.from_lists(2, [[1, 2, -1, -2]])
        assert alexander_polynomial(p) == UnivariatePoly([-1, 1], "t")

    def test_one_generator(self):
        p = GroupPresentation.from_lists(1, [])
        assert alexander_polynomial(p) == UnivariatePoly([1], "t")

    def test_too_few_relators(self):
        assert alexander_polynomial(GroupPresentation.free(2)).is_zero

    def test_degree_map_must_kill_relators(self):
        with pytest.raises(PresentationError, match="homomorphism"):
            alexander_polynomial(GroupPresentation.from_lists(2, [[1, 1]]))

    def test_degree_map_length(self, trefoil_presentation):
        with pytest.raises(PresentationError):
            alexander_polynomial(trefoil_presentation, [1])
