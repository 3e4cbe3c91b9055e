"""Finite groups given by multiplication tables."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Callable, Iterable, Sequence
from itertools import product
from math import lcm
from pathlib import Path

from braidmono.exceptions import PresentationError
from braidmono.vankampen.words import FreeWord

logger = logging.getLogger(__name__)


class FiniteGroupTable:
    """A finite group on elements 0..N-1 with an explicit multiplication table.

    ``table[a][b]`` is the product a*b. The table must be a Latin square with
    a two-sided identity and associative; all three are checked on
    construction.
    """

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        labels: Sequence[str] | None = None,
        name: str = "",
    ) -> None:
        n = len(table)
        if n == 0:
            raise PresentationError("a group table needs at least one element")
        rows = tuple(tuple(int(v) for v in row) for row in table)
        full = set(range(n))
        for row in rows:
            if len(row) != n or set(row) != full:
                raise PresentationError("multiplication table is not a Latin square")
        for col in range(n):
            if {rows[r][col] for r in range(n)} != full:
                raise PresentationError("multiplication table is not a Latin square")
        identity = next((e for e in range(n) if rows[e] == tuple(range(n))), None)
        if identity is None or any(rows[a][identity] != a for a in range(n)):
            raise PresentationError("multiplication table has no identity element")
        for a, b, c in product(range(n), repeat=3):
            if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                raise PresentationError(f"multiplication is not associative at ({a}, {b}, {c})")
        if labels is not None and len(labels) != n:
            raise PresentationError("one label per element is required")
        self._table = rows
        self._identity = identity
        self._inverse = tuple(rows[a].index(identity) for a in range(n))
        self.labels = tuple(labels) if labels is not None else tuple(str(a) for a in range(n))
        self.name = name

    # Constructors

    @classmethod
    def cyclic(cls, n: int) -> FiniteGroupTable:
        return cls(
            [[(a + b) % n for b in range(n)] for a in range(n)],
            [f"a^{a}" for a in range(n)],
            name=f"Z/{n}",
        )

    @classmethod
    def dihedral(cls, order: int) -> FiniteGroupTable:
        """Dihedral group of the given (even) order; element i + m*j is r^i s^j."""
        if order < 2 or order % 2:
            raise PresentationError(f"dihedral order must be even and positive, got {order}")
        m = order // 2

        def mul(a: int, b: int) -> int:
            (i1, j1), (i2, j2) = divmod(a, m)[::-1], divmod(b, m)[::-1]
            i = (i1 + (-i2 if j1 else i2)) % m
            return i + m * ((j1 + j2) % 2)

        labels = [f"r^{i}" if j == 0 else f"r^{i}s" for j in range(2) for i in range(m)]
        return cls([[mul(a, b) for b in range(order)] for a in range(order)], labels, f"D{order}")

    @classmethod
    def symmetric(cls, n: int) -> FiniteGroupTable:
        """Symmetric group on n points (composition: apply the right factor first)."""
        perms = sorted(_permutations(n))
        index = {p: k for k, p in enumerate(perms)}
        table = [
            [index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms
        ]
        return cls(table, ["".join(str(i + 1) for i in p) for p in perms], f"S{n}")

    @classmethod
    def direct_product(cls, left: FiniteGroupTable, right: FiniteGroupTable) -> FiniteGroupTable:
        m = right.order
        n = left.order * m
        table = [
            [left.multiply(a // m, b // m) * m + right.multiply(a % m, b % m) for b in range(n)]
            for a in range(n)
        ]
        labels = [f"({la},{lb})" for la in left.labels for lb in right.labels]
        return cls(table, labels, f"{left.name} x {right.name}")

    @classmethod
    def from_text(cls, text: str, name: str = "") -> FiniteGroupTable:
        """Parse the plain format: the order N, then N rows of N 0-based indices."""
        tokens = [t for line in text.splitlines() for t in line.split("#", 1)[0].split()]
        if not tokens:
            raise PresentationError("empty group table")
        try:
            values = [int(t) for t in tokens]
        except ValueError as e:
            raise PresentationError(f"group table entries must be integers: {e}") from e
        n = values[0]
        if n < 1 or len(values) != 1 + n * n:
            raise PresentationError(f"expected {n} x {n} entries after the order")
        return cls([values[1 + r * n : 1 + (r + 1) * n] for r in range(n)], name=name)

    @classmethod
    def from_file(cls, path: Path | str) -> FiniteGroupTable:
        path = Path(path)
        return cls.from_text(path.read_text(encoding="utf-8"), name=path.stem)

    def to_text(self) -> str:
        lines = [str(self.order)]
        lines.extend(" ".join(str(v) for v in row) for row in self._table)
        return "\n".join(lines) + "\n"

    # Structure

    @property
    def order(self) -> int:
        return len(self._table)

    @property
    def identity(self) -> int:
        return self._identity

    @property
    def table(self) -> tuple[tuple[int, ...], ...]:
        return self._table

    def multiply(self, a: int, b: int) -> int:
        return self._table[a][b]

    def inverse(self, a: int) -> int:
        return self._inverse[a]

    def power(self, a: int, k: int) -> int:
        base = a if k >= 0 else self._inverse[a]
        result = self._identity
        for _ in range(abs(k)):
            result = self._table[result][base]
        return result

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self._identity:
            x = self._table[x][a]
            k += 1
        return k

    def exponent(self) -> int:
        return lcm(*(self.element_order(a) for a in range(self.order)))

    def evaluate(self, word: FreeWord, images: Sequence[int]) -> int:
        """Image of a word under generator k -> images[k-1]."""
        result = self._identity
        for letter in word:
            g = images[abs(letter) - 1]
            result = self._table[result][g if letter > 0 else self._inverse[g]]
        return result

    def closure(self, generators: Iterable[int]) -> frozenset[int]:
        gens = list(generators)
        seen = {self._identity}
        queue = deque([self._identity])
        while queue:
            a = queue.popleft()
            for g in gens:
                b = self._table[a][g]
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return frozenset(seen)

    def generates(self, generators: Iterable[int]) -> bool:
        return len(self.closure(generators)) == self.order

    def commutes(self, a: int, b: int) -> bool:
        return self._table[a][b] == self._table[b][a]

    def is_abelian(self) -> bool:
        return all(self.commutes(a, b) for a in range(self.order) for b in range(a))

    def center(self) -> frozenset[int]:
        return frozenset(
            a for a in range(self.order) if all(self.commutes(a, b) for b in range(self.order))
        )

    def generating_set(self) -> tuple[int, ...]:
        """A small generating tuple, chosen greedily by decreasing element order."""
        by_order = sorted(range(self.order), key=lambda a: (-self.element_order(a), a))
        gens: list[int] = []
        span = frozenset({self._identity})
        for a in by_order:
            if len(span) == self.order:
                break
            if a not in span:
                gens.append(a)
                span = self.closure(gens)
        return tuple(gens)

    def extend_homomorphism(
        self, generators: Sequence[int], images: Sequence[int], target: FiniteGroupTable
    ) -> tuple[int, ...] | None:
        """Element map of the homomorphism sending generators to images, or None.

        ``generators`` must generate self. Returns None when the assignment
        does not extend to a homomorphism.
        """
        phi: dict[int, int] = {self._identity: target.identity}
        queue = deque([self._identity])
        while queue:
            a = queue.popleft()
            for g, h in zip(generators, images, strict=True):
                b = self._table[a][g]
                value = target.multiply(phi[a], h)
                if b in phi:
                    if phi[b] != value:
                        return None
                else:
                    phi[b] = value
                    queue.append(b)
        if len(phi) != self.order:
            raise PresentationError("elements passed as generators do not generate the group")
        return tuple(phi[a] for a in range(self.order))

    def automorphisms(self) -> list[tuple[int, ...]]:
        """All automorphisms as element permutations, by brute force on a generating set."""
        gens = self.generating_set()
        orders = [self.element_order(g) for g in gens]
        candidates = [
            [a for a in range(self.order) if self.element_order(a) == k] for k in orders
        ]
        result: list[tuple[int, ...]] = []
        for images in product(*candidates):
            if not self.generates(images):
                continue
            phi = self.extend_homomorphism(gens, images, self)
            if phi is not None and len(set(phi)) == self.order:
                result.append(phi)
        logger.debug("%s has %d automorphisms", self.name or "group", len(result))
        return result

    def __repr__(self) -> str:
        return f"FiniteGroupTable({self.name or 'order ' + str(self.order)})"


def _permutations(n: int) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    out: list[tuple[int, ...]] = []
    for p in _permutations(n - 1):
        for k in range(n):
            out.append(p[:k] + (n - 1,) + p[k:])
    return out


NAMED_GROUPS: dict[str, Callable[[], FiniteGroupTable]] = {
    "z2": lambda: FiniteGroupTable.cyclic(2),
    "z3": lambda: FiniteGroupTable.cyclic(3),
    "z5": lambda: FiniteGroupTable.cyclic(5),
    "z6": lambda: FiniteGroupTable.cyclic(6),
    "s3": lambda: FiniteGroupTable.symmetric(3),
    "d6": lambda: FiniteGroupTable.dihedral(6),
    "d10": lambda: FiniteGroupTable.dihedral(10),
    "z30": lambda: FiniteGroupTable.cyclic(30),
}


def named_group(name: str) -> FiniteGroupTable:
    """Catalog lookup by short name (z2, z3, z5, z6, s3, d6, d10, z30)."""
    try:
        factory = NAMED_GROUPS[name.lower()]
    except KeyError:
        known = ", ".join(sorted(NAMED_GROUPS))
        raise PresentationError(f"unknown group {name!r}; known groups: {known}") from None
    return factory()
