"""Exhaustive enumeration of free trees, one per isomorphism class."""
import logging
from bisect import bisect_left
from functools import lru_cache

from errors import DomainError, SizeLimitError
from config.settings import settings
from patterns.canonical import adjacency_lists, centroids, rooted_code
from patterns.trees import TreePattern

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def rooted_trees(n: int) -> tuple[tuple[int, ...], ...]:
    """
    Canonical level sequences of every rooted tree on n vertices.

    A rooted tree is its multiset of child subtrees; listing the children in
    non-increasing canonical order produces each multiset exactly once.
    """
    if n == 1:
        return ((0,),)
    subtrees = sorted((seq for m in range(1, n) for seq in rooted_trees(m)), reverse=True)
    # fitting[r]: indices of the subtrees with at most r vertices
    fitting = [[i for i, seq in enumerate(subtrees) if len(seq) <= r] for r in range(n)]
    found: list[tuple[int, ...]] = []

    def extend(remaining: int, start: int, children: list[tuple[int, ...]]) -> None:
        if remaining == 0:
            found.append((0,) + tuple(d + 1 for child in children for d in child))
            return
        candidates = fitting[remaining]
        for i in candidates[bisect_left(candidates, start):]:
            child = subtrees[i]
            children.append(child)
            extend(remaining - len(child), i, children)
            children.pop()

    extend(n - 1, 0, [])
    return tuple(found)


def level_sequence_edges(levels: tuple[int, ...]) -> list[tuple[int, int]]:
    """Parent of node i is the last earlier node one level up."""
    edges = []
    last_at_depth: dict[int, int] = {}
    for i, depth in enumerate(levels):
        if depth:
            edges.append((last_at_depth[depth - 1], i))
        last_at_depth[depth] = i
    return edges


def enumerate_free_trees(k_edges: int) -> list[TreePattern]:
    """
    One representative per free-tree class on k_edges + 1 vertices.

    Args:
        k_edges: Edge count in [1, settings.MAX_TREE_EDGES]

    Returns:
        Patterns sorted by canonical code
    """
    if k_edges < 1:
        raise DomainError(f"k_edges must be >= 1, got {k_edges}")
    if k_edges > settings.MAX_TREE_EDGES:
        raise SizeLimitError(f"free-tree enumeration is capped at {settings.MAX_TREE_EDGES} edges, got {k_edges}")
    n = k_edges + 1
    classes: dict[bytes, TreePattern] = {}
    for levels in rooted_trees(n):
        edges = level_sequence_edges(levels)
        adj = adjacency_lists(n, edges)
        cents = centroids(adj)
        if 0 not in cents:
            continue
        if levels != min(rooted_code(adj, c) for c in cents):
            continue
        pattern = TreePattern.from_edges(n, edges)
        classes.setdefault(pattern.canonical_code, pattern)
    logger.info(f"Enumerated {len(classes)} free trees with {k_edges} edges")
    return [classes[code] for code in sorted(classes)]
