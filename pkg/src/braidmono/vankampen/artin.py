"""Artin action of the braid group on the free group.

s_i sends x_i to x_i x_(i+1) x_i^-1 and x_(i+1) to x_i and fixes the other
generators; s_i^-1 acts by the inverse substitution. The action is a left
action: the rightmost letter of a braid acts first, so
artin_act(b1 * b2, w) == artin_act(b1, artin_act(b2, w)).
"""

from __future__ import annotations

import logging
from functools import lru_cache

from braidmono.exceptions import PresentationError
from braidmono.vankampen.words import BraidWord, FreeWord, product_of_generators

logger = logging.getLogger(__name__)


@lru_cache(maxsize=4096)
def _letter_images(letter: int) -> dict[int, FreeWord]:
    i = abs(letter)
    xi, xj = FreeWord.generator(i), FreeWord.generator(i + 1)
    if letter > 0:
        return {i: xi * xj * xi.inverse(), i + 1: xi}
    return {i: xj, i + 1: xj.inverse() * xi * xj}


def artin_act(b: BraidWord, w: FreeWord) -> FreeWord:
    """Image of the word w under the automorphism of the braid b."""
    if w.max_generator > b.strands:
        raise PresentationError(
            f"word uses x{w.max_generator} but the braid has {b.strands} strands"
        )
    for letter in reversed(b.letters):
        w = w.substitute(_letter_images(letter))
    return w


def generator_images(b: BraidWord) -> list[FreeWord]:
    """Images of x1 .. xd under the braid automorphism."""
    return [artin_act(b, FreeWord.generator(k)) for k in range(1, b.strands + 1)]


def fixes_boundary_product(b: BraidWord) -> bool:
    """True when b fixes x1 x2 ... xd exactly."""
    product = product_of_generators(b.strands)
    return artin_act(b, product) == product


def relators_from_lasso(b: BraidWord) -> list[FreeWord]:
    """Monodromy relators x_k^-1 * b(x_k), cyclically reduced, deduplicated.

    Trivial relators are dropped; two relators equal up to rotation and
    inversion count as duplicates.
    """
    relators: list[FreeWord] = []
    seen: set[FreeWord] = set()
    for k in range(1, b.strands + 1):
        xk = FreeWord.generator(k)
        relator = (xk.inverse() * artin_act(b, xk)).cyclically_reduced()
        if relator.is_identity:
            continue
        key = relator.canonical_cyclic()
        if key in seen:
            continue
        seen.add(key)
        relators.append(relator)
    logger.debug("braid %s gives %d relators", b.to_list(), len(relators))
    return relators
