"""Abelianization by Smith normal form."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd, prod

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from braidmono.grouptheory.presentation import GroupPresentation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant factors d1 | d2 | ... of a finitely generated abelian group; 0 means Z."""

    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        for a, b in zip(self.factors, self.factors[1:], strict=False):
            divides = b == 0 if a == 0 else b % a == 0
            if not divides:
                raise ValueError(f"invariant factors {self.factors} violate divisibility")

    @property
    def rank(self) -> int:
        return sum(1 for d in self.factors if d == 0)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.factors if d != 0)

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def order(self) -> int | None:
        return prod(self.factors) if self.is_finite else None

    def as_list(self) -> list[int]:
        return list(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "trivial"
        return " x ".join("Z" if d == 0 else f"Z/{d}" for d in self.factors)


def _lcm(a: int, b: int) -> int:
    return 0 if a == 0 or b == 0 else a * b // gcd(a, b)


def normalize_diagonal(diagonal: list[int]) -> list[int]:
    """Turn any diagonal of an equivalent matrix into a divisibility chain (zeros last)."""
    values = [abs(d) for d in diagonal]
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            a, b = values[i], values[j]
            values[i], values[j] = gcd(a, b), _lcm(a, b)
    return values


def smith_invariants(rows: list[list[int]], columns: int) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix (length min(m, n))."""
    if not rows or columns == 0:
        return []
    matrix = DomainMatrix([[ZZ(v) for v in row] for row in rows], (len(rows), columns), ZZ)
    raw = [int(d) for d in invariant_factors(matrix)]
    return normalize_diagonal(raw)


def abelianization(p: GroupPresentation) -> AbelianInvariants:
    """Invariant factors of the abelianized group.

    Unit factors are dropped; one zero is appended per free rank.
    """
    n = p.generator_count
    diagonal = smith_invariants(p.exponent_matrix(), n)
    nonzero = [d for d in diagonal if d != 0]
    factors = tuple([d for d in nonzero if d != 1] + [0] * (n - len(nonzero)))
    logger.debug("abelianization of %d-generator presentation: %s", n, factors)
    return AbelianInvariants(factors)
