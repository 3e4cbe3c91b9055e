"""Presentation simplification by Tietze transformations."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from sympy.combinatorics.fp_groups import simplify_presentation

from braidmono.grouptheory.presentation import (
    GroupPresentation,
    element_to_word,
    word_to_element,
)
from braidmono.vankampen.words import FreeWord

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TietzeLimits:
    """Bounds for simplification.

    Attributes:
        max_rounds: Number of simplification passes
        max_relator_length: Results with a longer relator are discarded
    """

    max_rounds: int = 20
    max_relator_length: int = 200


@dataclass(frozen=True)
class SimplifiedPresentation:
    """A simplified presentation and the input generators it keeps.

    Attributes:
        presentation: The simplified presentation
        kept_generators: Input generator index of each remaining generator
        rounds: Passes performed
    """

    presentation: GroupPresentation
    kept_generators: tuple[int, ...]
    rounds: int


def _sort_key(word: FreeWord) -> tuple[int, list[int]]:
    return (len(word), [abs(a) * 2 + (a < 0) for a in word])


def _one_round(p: GroupPresentation) -> SimplifiedPresentation:
    group, gens = p.to_fpgroup()
    identity = group.free_group.identity
    relators = [word_to_element(r, gens, identity) for r in p.relators]
    new_gens, new_relators = simplify_presentation(list(gens), relators, change_gens=True)
    kept = sorted(int(str(g.array_form[0][0])[1:]) for g in new_gens)
    index_of = {f"x{old}": new for new, old in enumerate(kept, start=1)}
    words = sorted(
        (element_to_word(r, index_of).canonical_cyclic() for r in new_relators),
        key=_sort_key,
    )
    return SimplifiedPresentation(GroupPresentation(len(kept), tuple(words)), tuple(kept), 1)


def tietze_simplify(
    p: GroupPresentation, limits: TietzeLimits | None = None
) -> SimplifiedPresentation:
    """Simplify p: eliminate redundant generators, shorten and drop relators.

    The result is deterministic for fixed limits. When a pass produces a
    relator longer than the limit, the last acceptable presentation (at worst
    the input) is returned.

    Args:
        p: Presentation to simplify
        limits: Iteration and relator length bounds

    Returns:
        SimplifiedPresentation with the surviving input generators.
    """
    limits = limits or TietzeLimits()
    current = SimplifiedPresentation(
        GroupPresentation(p.generator_count, p.relators),
        tuple(range(1, p.generator_count + 1)),
        0,
    )
    for round_index in range(1, limits.max_rounds + 1):
        if current.presentation.generator_count == 0:
            break
        step = _one_round(current.presentation)
        if step.presentation.max_relator_length > limits.max_relator_length:
            logger.warning(
                "Tietze pass %d exceeded relator length %d; keeping previous presentation",
                round_index,
                limits.max_relator_length,
            )
            break
        kept = tuple(current.kept_generators[k - 1] for k in step.kept_generators)
        unchanged = (
            step.presentation.generator_count == current.presentation.generator_count
            and step.presentation.relators == current.presentation.relators
        )
        current = SimplifiedPresentation(step.presentation, kept, round_index)
        if unchanged:
            break
    logger.info(
        "Tietze: %d generators / %d relators -> %d / %d",
        p.generator_count,
        len(p.relators),
        current.presentation.generator_count,
        len(current.presentation.relators),
    )
    return current
