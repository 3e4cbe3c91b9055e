"""Assembly of the fundamental group presentation from lasso braids."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence

from braidmono.exceptions import PresentationError
from braidmono.grouptheory.cosets import coset_enumeration_order
from braidmono.grouptheory.presentation import GroupPresentation
from braidmono.vankampen.artin import relators_from_lasso
from braidmono.vankampen.words import BraidWord, FreeWord, product_of_generators

logger = logging.getLogger(__name__)

REDUNDANCY_COSET_BOUND = 20_000


def braid_from_crossings(crossings: Iterable[tuple[int, int]], strands: int) -> BraidWord:
    """Braid of a path from its crossings in path order.

    Each crossing is (position i, sign) for the strands at positions i and
    i+1. The first crossing along the path becomes the rightmost letter.
    """
    letters = [sign * position for position, sign in crossings]
    return BraidWord(reversed(letters), strands)


def projective_relator(d: int) -> FreeWord:
    """x1 x2 ... xd, the loop around all fiber points."""
    return product_of_generators(d)


def _check_strands(braids: Sequence[BraidWord], d: int) -> None:
    for index, b in enumerate(braids):
        if b.strands != d:
            raise PresentationError(f"lasso {index} braid has {b.strands} strands, expected {d}")


def assemble_presentation(
    braids: Sequence[BraidWord], d: int, projective: bool = True
) -> GroupPresentation:
    """Zariski-van Kampen presentation on generators x1..xd.

    Relators are the monodromy relators of every lasso braid in order,
    followed by the projective relator x1 x2 ... xd unless ``projective`` is
    False (affine complement).
    """
    _check_strands(braids, d)
    relators: list[FreeWord] = []
    for b in braids:
        relators.extend(relators_from_lasso(b))
    if projective:
        relators.append(projective_relator(d))
    presentation = GroupPresentation(d, tuple(relators))
    logger.info(
        "assembled %s presentation: %d generators, %d relators",
        "projective" if projective else "affine",
        d,
        len(presentation.relators),
    )
    return presentation


def affine_presentation(braids: Sequence[BraidWord], d: int) -> GroupPresentation:
    return assemble_presentation(braids, d, projective=False)


def redundant_lassos(
    braids: Sequence[BraidWord],
    d: int,
    projective: bool = True,
    max_cosets: int = REDUNDANCY_COSET_BOUND,
) -> list[int] | None:
    """Indices of lassos whose relators follow from those of the other lassos.

    Each lasso is dropped in turn; its relators are then checked in the group
    presented without it. Returns None when that group is not finite within
    the coset bound for some lasso, so redundancy could not be decided.
    """
    redundant: list[int] = []
    for index, b in enumerate(braids):
        own = relators_from_lasso(b)
        if not own:
            redundant.append(index)
            continue
        others = [braids[k] for k in range(len(braids)) if k != index]
        reduced = assemble_presentation(others, d, projective)
        cosets = coset_enumeration_order(reduced, max_cosets)
        if cosets.exceeded:
            logger.warning("redundancy of lasso %d undecided within %d cosets", index, max_cosets)
            return None
        if all(cosets.is_trivial(r) for r in own):
            redundant.append(index)
    logger.info("%d of %d lassos are redundant", len(redundant), len(braids))
    return redundant
