"""1-factorizations of K_n up to isomorphism."""
import logging
from typing import Iterator, Sequence

from errors import DomainError, SizeLimitError
from explorer.colorings import ColoringClass, canonical_labels, colex_edges

logger = logging.getLogger(__name__)

MAX_FACTORIZATION_N = 8


def perfect_matchings(n: int, free: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """
    Perfect matchings of the graph on n vertices whose edges are the free edge indices.

    The smallest unmatched vertex is always matched next, so every matching
    appears once.
    """
    edges = colex_edges(n)
    partners: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for index in free:
        a, b = edges[index]
        partners[a].append((b, index))
        partners[b].append((a, index))
    for row in partners:
        row.sort()
    matched = [False] * n
    chosen: list[int] = []

    def extend(u: int) -> Iterator[tuple[int, ...]]:
        while u < n and matched[u]:
            u += 1
        if u == n:
            yield tuple(sorted(chosen))
            return
        matched[u] = True
        for v, index in partners[u]:
            if matched[v]:
                continue
            matched[v] = True
            chosen.append(index)
            yield from extend(u + 1)
            chosen.pop()
            matched[v] = False
        matched[u] = False

    yield from extend(0)


def enumerate_one_factorizations(n: int) -> list[ColoringClass]:
    """
    One representative per isomorphism class of 1-factorizations of K_n.

    Factors are added one perfect matching at a time; after each step the
    partial factorizations are reduced to one canonical representative per
    isomorphism class, so only canonical partial states are extended.

    Args:
        n: Even vertex count, at most 8

    Returns:
        ColoringClass list sorted by canonical form
    """
    if n < 2 or n % 2:
        raise DomainError(f"1-factorizations need an even n >= 2, got {n}")
    if n > MAX_FACTORIZATION_N:
        raise SizeLimitError(f"1-factorization enumeration is capped at n = {MAX_FACTORIZATION_N}, got {n}")

    edge_total = n * (n - 1) // 2
    level: set[tuple[int, ...]] = {tuple([0] * edge_total)}
    for factor in range(1, n):
        following: set[tuple[int, ...]] = set()
        for labels in sorted(level):
            free = [i for i, label in enumerate(labels) if not label]
            for matching in perfect_matchings(n, free):
                extended = list(labels)
                for index in matching:
                    extended[index] = factor
                following.add(canonical_labels(n, extended))
        level = following
        logger.debug(f"K_{n}: {len(level)} classes of {factor} disjoint perfect matchings")

    classes = [ColoringClass.from_labels(n, labels, canonical=True) for labels in sorted(level)]
    logger.info(f"Enumerated {len(classes)} 1-factorizations of K_{n}")
    return classes
