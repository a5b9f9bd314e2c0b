"""Proper edge colorings of small complete graphs up to isomorphism."""
import logging
from typing import Iterator

from errors import DomainError, PreconditionError, SizeLimitError
from explorer.colorings import ColoringClass, canonical_labels, edge_index

logger = logging.getLogger(__name__)

MAX_PROPER_N = 6


def chromatic_index_complete(n: int) -> int:
    if n < 2:
        return 0
    return n - 1 if n % 2 == 0 else n


def _new_vertex_colorings(labels: tuple[int, ...], v: int, max_colors: int) -> Iterator[tuple[int, ...]]:
    """Every proper coloring of the edges (0,v)..(v-1,v) on top of a coloring of K_v."""
    at_vertex = [set() for _ in range(v)]
    for b in range(v):
        for a in range(b):
            label = labels[edge_index(a, b)]
            at_vertex[a].add(label)
            at_vertex[b].add(label)
    segment: list[int] = []

    def assign(a: int, top: int) -> Iterator[tuple[int, ...]]:
        if a == v:
            yield labels + tuple(segment)
            return
        # Colors above top are interchangeable, so only top + 1 is tried.
        for color in range(1, min(max_colors, top + 1) + 1):
            if color in at_vertex[a] or color in segment:
                continue
            segment.append(color)
            yield from assign(a + 1, max(top, color))
            segment.pop()

    yield from assign(0, max(labels, default=0))


def enumerate_proper_colorings(n: int, max_colors: int) -> Iterator[ColoringClass]:
    """
    Stream every proper edge coloring of K_n with at most max_colors colors, once per isomorphism class.

    Vertices are added one at a time; after each addition the colorings of
    K_{v+1} are reduced to canonical representatives before they are
    extended, which is complete because isomorphic colorings of K_{v+1}
    have isomorphic sets of extensions.

    Args:
        n: Vertex count, at most 6
        max_colors: Color cap, at least the chromatic index of K_n
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if n > MAX_PROPER_N:
        raise SizeLimitError(f"proper coloring enumeration is capped at n = {MAX_PROPER_N}, got {n}")
    if max_colors < chromatic_index_complete(n):
        raise PreconditionError(f"K_{n} needs {chromatic_index_complete(n)} colors, max_colors is {max_colors}")

    level: set[tuple[int, ...]] = {()}
    for v in range(1, n):
        following: set[tuple[int, ...]] = set()
        for labels in sorted(level):
            for extended in _new_vertex_colorings(labels, v, max_colors):
                following.add(canonical_labels(v + 1, extended))
        level = following
        logger.debug(f"K_{v + 1}: {len(level)} proper coloring classes with at most {max_colors} colors")

    logger.info(f"Streaming {len(level)} proper colorings of K_{n} with at most {max_colors} colors")
    for labels in sorted(level):
        yield ColoringClass.from_labels(n, labels, canonical=True)
