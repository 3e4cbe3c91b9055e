"""Presentations shared by the group theory tests."""

import pytest

from braidmono.grouptheory import GroupPresentation


@pytest.fixture
def s3_presentation() -> GroupPresentation:
    """<a, b | a^2, b^2, (ab)^3>, the symmetric group on three letters."""
    return GroupPresentation.from_strings(2, ["x1^2", "x2^2", "x1*x2*x1*x2*x1*x2"])


@pytest.fixture
def order30_presentation() -> GroupPresentation:
    """<x1, x2 | (x2 x1)^4 (x1 x2)^-1, (x2 x1 x2)^2>."""
    return GroupPresentation.from_lists(
        2,
        [
            [2, 1, 2, 1, 2, 1, 2, 1, -2, -1],
            [2, 1, 2, 2, 1, 2],
        ],
    )


@pytest.fixture
def trefoil_presentation() -> GroupPresentation:
    """<x1, x2 | x1 x2 x1 = x2 x1 x2>."""
    return GroupPresentation.from_lists(2, [[1, 2, 1, -2, -1, -2]])
