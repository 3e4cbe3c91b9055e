"""Finite presentations of groups."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any

from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import FreeGroupElement, free_group

from braidmono.exceptions import PresentationError
from braidmono.vankampen.words import FreeWord

logger = logging.getLogger(__name__)


def _normalize_relators(relators: Iterable[FreeWord]) -> tuple[FreeWord, ...]:
    kept: list[FreeWord] = []
    seen: set[FreeWord] = set()
    for relator in relators:
        reduced = relator.cyclically_reduced()
        if reduced.is_identity:
            continue
        key = reduced.canonical_cyclic()
        if key in seen:
            continue
        seen.add(key)
        kept.append(reduced)
    return tuple(kept)


@dataclass(frozen=True)
class GroupPresentation:
    """Presentation <x1, ..., xn | relators>.

    Relators are stored freely and cyclically reduced; trivial relators and
    duplicates up to rotation and inversion are dropped.

    Attributes:
        generator_count: Number of generators n
        relators: Relator words in x1..xn
        labels: Optional display names of the generators (default x1..xn)
    """

    generator_count: int
    relators: tuple[FreeWord, ...] = ()
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.generator_count < 0:
            raise PresentationError("generator count must be nonnegative")
        relators = _normalize_relators(self.relators)
        for r in relators:
            if r.max_generator > self.generator_count:
                raise PresentationError(
                    f"relator {r.format()} uses a generator beyond x{self.generator_count}"
                )
        object.__setattr__(self, "relators", relators)
        if self.labels and len(self.labels) != self.generator_count:
            raise PresentationError("one label per generator is required")

    @classmethod
    def free(cls, n: int) -> GroupPresentation:
        return cls(n, ())

    @classmethod
    def from_lists(
        cls, generator_count: int, relators: Sequence[Sequence[int]]
    ) -> GroupPresentation:
        """Build from signed index lists, e.g. ``[[1, 1], [1, 2, -1, -2]]``."""
        return cls(generator_count, tuple(FreeWord(r) for r in relators))

    @classmethod
    def from_strings(cls, generator_count: int, relators: Sequence[str]) -> GroupPresentation:
        """Build from formatted words such as ``x1^2`` or ``x1*x2*x1^-1``."""
        return cls(generator_count, tuple(FreeWord.parse(r) for r in relators))

    def to_lists(self) -> dict[str, Any]:
        return {
            "generators": self.generator_count,
            "relators": [r.to_list() for r in self.relators],
        }

    def with_relators(self, extra: Iterable[FreeWord]) -> GroupPresentation:
        return GroupPresentation(self.generator_count, self.relators + tuple(extra), self.labels)

    def without_relators(self, drop: Iterable[FreeWord]) -> GroupPresentation:
        dropped = {r.canonical_cyclic() for r in drop}
        return GroupPresentation(
            self.generator_count,
            tuple(r for r in self.relators if r.canonical_cyclic() not in dropped),
            self.labels,
        )

    @property
    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    @property
    def max_relator_length(self) -> int:
        return max((len(r) for r in self.relators), default=0)

    def exponent_matrix(self) -> list[list[int]]:
        """Rows: relators, columns: generator exponent sums."""
        return [r.exponent_vector(self.generator_count) for r in self.relators]

    def generator_label(self, k: int) -> str:
        return self.labels[k - 1] if self.labels else f"x{k}"

    def format(self) -> str:
        gens = ", ".join(self.generator_label(k) for k in range(1, self.generator_count + 1))
        rels = ", ".join(r.format() for r in self.relators)
        return f"< {gens} | {rels} >"

    def to_fpgroup(self) -> tuple[FpGroup, list[FreeGroupElement]]:
        """sympy FpGroup on generators named x1..xn, plus its free generators."""
        if self.generator_count == 0:
            raise PresentationError("sympy needs at least one generator")
        names = ", ".join(f"x{k}" for k in range(1, self.generator_count + 1))
        free, *gens = free_group(names)
        relators = [word_to_element(r, gens, free.identity) for r in self.relators]
        return FpGroup(free, relators), gens


def word_to_element(
    word: FreeWord, gens: Sequence[FreeGroupElement], identity: FreeGroupElement
) -> FreeGroupElement:
    element = identity
    for a in word:
        element = element * (gens[a - 1] if a > 0 else gens[-a - 1] ** -1)
    return element


def element_to_word(element: FreeGroupElement, index_of: dict[str, int]) -> FreeWord:
    """Convert a sympy free group element using a symbol-name -> generator index map."""
    letters: list[int] = []
    for symbol, exponent in element.array_form:
        k = index_of[str(symbol)]
        letters.extend([k if exponent > 0 else -k] * abs(exponent))
    return FreeWord(letters)
