"""Search for surjections of a finitely presented group onto a finite group."""

from __future__ import annotations

import logging
from math import gcd

from braidmono.exceptions import PresentationError
from braidmono.grouptheory.finite import FiniteGroupTable
from braidmono.grouptheory.presentation import GroupPresentation
from braidmono.vankampen.words import FreeWord

logger = logging.getLogger(__name__)

DEFAULT_ORDER_BOUND = 120


def _power_bounds(p: GroupPresentation) -> dict[int, int]:
    """Generators forced to have order dividing k by a relator x^k."""
    bounds: dict[int, int] = {}
    for r in p.relators:
        used = r.generators_used()
        if len(used) == 1:
            (k,) = used
            exponent = abs(r.exponent_sum(k))
            bounds[k] = exponent if k not in bounds else gcd(bounds[k], exponent)
    return bounds


def _relators_by_last_generator(p: GroupPresentation) -> dict[int, list[FreeWord]]:
    grouped: dict[int, list[FreeWord]] = {}
    for r in p.relators:
        grouped.setdefault(r.max_generator, []).append(r)
    return grouped


def _canonical(images: tuple[int, ...], automorphisms: list[tuple[int, ...]]) -> tuple[int, ...]:
    return min(tuple(alpha[g] for g in images) for alpha in automorphisms)


def find_epimorphisms(
    p: GroupPresentation,
    target: FiniteGroupTable,
    order_bound: int = DEFAULT_ORDER_BOUND,
) -> list[tuple[int, ...]]:
    """All surjections p -> target, one per orbit of Aut(target).

    Each surjection is the tuple of images of x1..xn. Generator images are
    assigned one at a time; a relator is checked as soon as all of its
    generators have images, and images whose order does not divide a power
    relator are skipped.

    Args:
        p: Source presentation
        target: Finite target group
        order_bound: Largest target order accepted

    Returns:
        Sorted list of canonical image tuples (empty when no surjection exists).

    Raises:
        PresentationError: If the target order exceeds order_bound
    """
    if target.order > order_bound:
        raise PresentationError(
            f"target order {target.order} exceeds the epimorphism search bound {order_bound}"
        )
    n = p.generator_count
    relators = _relators_by_last_generator(p)
    bounds = _power_bounds(p)
    candidates = [
        [g for g in range(target.order) if bounds.get(k, 0) % target.element_order(g) == 0]
        for k in range(1, n + 1)
    ]
    automorphisms = target.automorphisms()
    found: set[tuple[int, ...]] = set()
    images: list[int] = []

    def extend() -> None:
        k = len(images)
        if k == n:
            if target.generates(images):
                found.add(_canonical(tuple(images), automorphisms))
            return
        for g in candidates[k]:
            images.append(g)
            if all(target.evaluate(r, images) == target.identity for r in relators.get(k + 1, [])):
                extend()
            images.pop()

    extend()
    result = sorted(found)
    logger.info(
        "epimorphisms onto %s: %d up to automorphism", target.name or target.order, len(result)
    )
    return result


def has_epimorphism(p: GroupPresentation, target: FiniteGroupTable, **kwargs: int) -> bool:
    return bool(find_epimorphisms(p, target, **kwargs))
