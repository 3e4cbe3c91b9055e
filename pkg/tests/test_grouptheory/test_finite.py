"""Tests for finite group tables and the named catalog."""

import pytest

from braidmono.exceptions import PresentationError
from braidmono.grouptheory import FiniteGroupTable, named_group
from braidmono.grouptheory.finite import NAMED_GROUPS
from braidmono.vankampen import FreeWord


class TestFiniteGroupTable:
    """Construction and structure queries."""

    def test_dihedral(self):
        d10 = FiniteGroupTable.dihedral(10)
        assert d10.order == 10
        assert not d10.is_abelian()
        assert d10.center() == frozenset({d10.identity})
        assert sorted(d10.element_order(g) for g in range(10)).count(2) == 5

    def test_odd_dihedral_rejected(self):
        with pytest.raises(PresentationError):
            FiniteGroupTable.dihedral(9)

    def test_symmetric(self):
        s3 = FiniteGroupTable.symmetric(3)
        assert s3.order == 6
        assert not s3.is_abelian()
        assert s3.exponent() == 6

    def test_direct_product(self):
        group = FiniteGroupTable.direct_product(
            FiniteGroupTable.dihedral(10), FiniteGroupTable.cyclic(3)
        )
        assert group.order == 30
        assert len(group.center()) == 3
        assert group.name == "D10 x Z/3"

    def test_evaluate_and_generation(self):
        z6 = FiniteGroupTable.cyclic(6)
        assert z6.evaluate(FreeWord([1, 1, -2]), [1, 4]) == 4
        assert z6.generates([1])
        assert not z6.generates([2])

    def test_not_latin_square(self):
        with pytest.raises(PresentationError):
            FiniteGroupTable([[0, 1], [0, 1]])

    def test_not_associative(self):
        # Latin square with identity 0 that is not a group
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(PresentationError):
            FiniteGroupTable(table)

    def test_text_round_trip(self, tmp_path):
        group = FiniteGroupTable.symmetric(3)
        path = tmp_path / "s3.txt"
        path.write_text("# S3\n" + group.to_text(), encoding="utf-8")
        loaded = FiniteGroupTable.from_file(path)
        assert loaded.table == group.table
        assert loaded.name == "s3"

    def test_malformed_text(self):
        with pytest.raises(PresentationError):
            FiniteGroupTable.from_text("2\n0 1\n1")

    def test_automorphisms(self):
        assert len(FiniteGroupTable.symmetric(3).automorphisms()) == 6
        assert len(FiniteGroupTable.cyclic(5).automorphisms()) == 4


class TestNamedGroup:
    @pytest.mark.parametrize("name", sorted(NAMED_GROUPS))
    def test_catalog_builds(self, name):
        orders = {"s3": 6, "d6": 6, "d10": 10}
        assert named_group(name).order == orders.get(name, int(name[1:]))

    def test_case_insensitive(self):
        assert named_group("D10").order == 10

    def test_unknown(self):
        with pytest.raises(PresentationError, match="known groups"):
            named_group("q8")
