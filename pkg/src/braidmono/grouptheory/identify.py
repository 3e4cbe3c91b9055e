"""Recognition of the groups of order 30."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product

from braidmono.exceptions import IdentificationError
from braidmono.grouptheory.abelian import abelianization
from braidmono.grouptheory.cosets import CosetResult, coset_enumeration_order
from braidmono.grouptheory.epimorphisms import has_epimorphism
from braidmono.grouptheory.finite import FiniteGroupTable
from braidmono.grouptheory.presentation import GroupPresentation
from braidmono.vankampen.words import FreeWord

logger = logging.getLogger(__name__)

# (abelianization, has a dihedral quotient of order 10) -> group
ORDER30: dict[tuple[tuple[int, ...], bool], str] = {
    ((30,), False): "Z/30",
    ((2,), True): "D30",
    ((6,), True): "D10 x Z/3",
    ((10,), False): "S3 x Z/5",
}

WITNESS_MAX_LENGTH = 3


@dataclass(frozen=True)
class Order30Verdict:
    """Identification of a group of order 30.

    Attributes:
        label: Name of the group from the classification table
        abelianization: Invariant factors of the abelianization
        has_d10_quotient: Whether the group surjects onto the dihedral group of order 10
        witness: Word b of order 15 with b^5 central, if one was found
    """

    label: str
    abelianization: tuple[int, ...]
    has_d10_quotient: bool
    witness: FreeWord | None = None

    @property
    def is_d10_times_z3(self) -> bool:
        return self.label == "D10 x Z/3"


def _candidate_words(generator_count: int) -> list[FreeWord]:
    words: list[FreeWord] = []
    if generator_count >= 2:
        words.append(FreeWord((2, 1)))
    letters = [k for g in range(1, generator_count + 1) for k in (g, -g)]
    for length in range(1, WITNESS_MAX_LENGTH + 1):
        for combo in product(letters, repeat=length):
            word = FreeWord(combo)
            if len(word) == length:
                words.append(word)
    return words


def is_order15_witness(cosets: CosetResult, word: FreeWord) -> bool:
    return cosets.element_order(word) == 15 and cosets.is_central(word**5)


def find_order15_witness(cosets: CosetResult) -> FreeWord | None:
    """Shortest word b (trying x2*x1 first) with b of order 15 and b^5 central."""
    for word in _candidate_words(cosets.generator_count):
        if is_order15_witness(cosets, word):
            return word
    return None


def verify_witness(p: GroupPresentation, word: FreeWord, max_cosets: int = 1_000_000) -> bool:
    """Whether word has order 15 and a central fifth power in the group of p.

    Raises:
        IdentificationError: If coset enumeration exceeds max_cosets
    """
    cosets = coset_enumeration_order(p, max_cosets)
    if cosets.exceeded:
        raise IdentificationError(f"coset enumeration exceeded {max_cosets} cosets")
    return is_order15_witness(cosets, word)


def identify_order30(p: GroupPresentation, max_cosets: int = 1_000_000) -> Order30Verdict:
    """Identify a group of order 30 from its abelianization and D10 quotients.

    Raises:
        IdentificationError: If the order is not 30 (or could not be
            certified), or the invariants match no group of order 30
    """
    cosets = coset_enumeration_order(p, max_cosets)
    if cosets.order != 30:
        found = "unknown" if cosets.exceeded else str(cosets.order)
        raise IdentificationError(f"expected a group of order 30, got order {found}")
    invariants = abelianization(p).torsion
    d10 = has_epimorphism(p, FiniteGroupTable.dihedral(10))
    label = ORDER30.get((invariants, d10))
    if label is None:
        raise IdentificationError(
            f"abelianization {list(invariants)} with D10 quotient {d10} "
            "matches no group of order 30"
        )
    witness = find_order15_witness(cosets)
    if witness is not None:
        logger.info("witness %s has order 15 and a central fifth power", witness.format())
    logger.info("order 30 group identified as %s", label)
    return Order30Verdict(label, invariants, d10, witness)
