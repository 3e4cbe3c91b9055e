"""Bounded Todd-Coxeter coset enumeration over the trivial subgroup."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from math import lcm

from sympy.combinatorics.coset_table import coset_enumeration_r

from braidmono.grouptheory.finite import FiniteGroupTable
from braidmono.grouptheory.presentation import GroupPresentation
from braidmono.vankampen.words import FreeWord

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CosetResult:
    """Outcome of a bounded enumeration.

    When the enumeration completes, ``table`` is the standardized coset table
    of the trivial subgroup: the right regular action of the group. Column
    2(k-1) holds the action of x_k, column 2(k-1)+1 that of its inverse.
    ``order`` is None when the bound was exceeded (inconclusive, not a proof
    of infiniteness).
    """

    bound: int
    order: int | None
    table: tuple[tuple[int, ...], ...] = ()

    @property
    def exceeded(self) -> bool:
        return self.order is None

    @property
    def generator_count(self) -> int:
        return len(self.table[0]) // 2 if self.table else 0

    def _require_table(self) -> None:
        if self.exceeded:
            raise ValueError(f"coset enumeration exceeded {self.bound} cosets")

    def act(self, coset: int, word: FreeWord) -> int:
        """coset . word under the right action (letters applied left to right)."""
        self._require_table()
        for letter in word:
            column = 2 * (abs(letter) - 1) + (letter < 0)
            coset = self.table[coset][column]
        return coset

    def permutation(self, word: FreeWord) -> tuple[int, ...]:
        self._require_table()
        return tuple(self.act(c, word) for c in range(len(self.table)))

    def is_trivial(self, word: FreeWord) -> bool:
        return self.act(0, word) == 0

    def element_order(self, word: FreeWord) -> int:
        """Order of the group element represented by word."""
        perm = self.permutation(word)
        seen: set[int] = set()
        cycles: list[int] = []
        for start in range(len(perm)):
            if start in seen:
                continue
            length, c = 0, start
            while c not in seen:
                seen.add(c)
                c = perm[c]
                length += 1
            cycles.append(length)
        return lcm(*cycles)

    def commutes(self, u: FreeWord, w: FreeWord) -> bool:
        return self.is_trivial(u * w * u.inverse() * w.inverse())

    def is_central(self, word: FreeWord) -> bool:
        return all(
            self.commutes(word, FreeWord.generator(k))
            for k in range(1, self.generator_count + 1)
        )

    def to_group_table(self) -> FiniteGroupTable:
        """Multiplication table of the enumerated group.

        Coset c stands for the element g_c with 0.g_c = c.
        """
        self._require_table()
        n = len(self.table)
        columns = [
            tuple(self.table[c][2 * k] for c in range(n)) for k in range(self.generator_count)
        ]
        element_perm: list[tuple[int, ...] | None] = [None] * n
        element_perm[0] = tuple(range(n))
        queue = deque([0])
        while queue:
            c = queue.popleft()
            perm_c = element_perm[c]
            assert perm_c is not None
            for k, column in enumerate(columns):
                target = self.table[c][2 * k]
                if element_perm[target] is None:
                    element_perm[target] = tuple(column[perm_c[j]] for j in range(n))
                    queue.append(target)
        perms = [p if p is not None else tuple(range(n)) for p in element_perm]
        table = [[perms[b][a] for b in range(n)] for a in range(n)]
        return FiniteGroupTable(table, name=f"order {n}")


def coset_enumeration_order(p: GroupPresentation, max_cosets: int) -> CosetResult:
    """Order of the group presented by p, or an exceeded result.

    Runs HLT coset enumeration of the trivial subgroup, stopping once more
    than ``max_cosets`` cosets have been defined.
    """
    if p.generator_count == 0:
        return CosetResult(max_cosets, 1, ((),))
    group, _ = p.to_fpgroup()
    try:
        table = coset_enumeration_r(group, [], max_cosets=max_cosets)
    except ValueError:
        logger.warning("coset enumeration exceeded %d cosets; order inconclusive", max_cosets)
        return CosetResult(max_cosets, None)
    table.compress()
    table.standardize()
    rows = tuple(tuple(int(v) for v in row) for row in table.table)
    logger.info("coset enumeration: order %d", len(rows))
    return CosetResult(max_cosets, len(rows), rows)
