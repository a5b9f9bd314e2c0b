"""Canonical level sequences and automorphism counts of free trees."""
from itertools import groupby
from math import factorial
from typing import Sequence


def adjacency_lists(vertex_count: int, edges: Sequence[tuple[int, int]]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(vertex_count)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj


def centroids(adj: list[list[int]]) -> list[int]:
    """The one or two vertices minimizing the largest remaining component."""
    n = len(adj)
    parent = [-1] * n
    seen = [False] * n
    seen[0] = True
    order = [0]
    for v in order:
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                order.append(w)

    size = [1] * n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]

    heaviest = [n - size[v] for v in range(n)]
    for v in order[1:]:
        heaviest[parent[v]] = max(heaviest[parent[v]], size[v])
    best = min(heaviest)
    return [v for v in range(n) if heaviest[v] == best]


def rooted_code(adj: list[list[int]], root: int, banned: int = -1) -> tuple[int, ...]:
    """
    Canonical level sequence of the tree rooted at `root`.

    Child subtrees are concatenated in decreasing lexicographic order, which
    yields the lexicographically largest level sequence of the rooted tree.
    `banned` excludes one neighbor of the root (used to split at an edge).
    """
    def code(v: int, parent: int) -> tuple[int, ...]:
        children = sorted((code(w, v) for w in adj[v] if w != parent), reverse=True)
        return (0,) + tuple(d + 1 for child in children for d in child)

    return code(root, banned)


def free_code(vertex_count: int, edges: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    """Minimum rooted code over the centroid rootings."""
    adj = adjacency_lists(vertex_count, edges)
    return min(rooted_code(adj, c) for c in centroids(adj))


def _rooted_automorphisms(adj: list[list[int]], v: int, parent: int) -> tuple[tuple[int, ...], int]:
    children = sorted((_rooted_automorphisms(adj, w, v) for w in adj[v] if w != parent), reverse=True)
    count = 1
    for _, group in groupby(children, key=lambda child: child[0]):
        group = list(group)
        count *= factorial(len(group))
        for _, child_aut in group:
            count *= child_aut
    code = (0,) + tuple(d + 1 for child_code, _ in children for d in child_code)
    return code, count


def automorphism_count(vertex_count: int, edges: Sequence[tuple[int, int]]) -> int:
    """
    Order of the automorphism group of a free tree.

    Every automorphism fixes the centroid set, so the group is that of the
    tree rooted at its centroid, doubled when two centroids carry
    isomorphic halves.
    """
    adj = adjacency_lists(vertex_count, edges)
    cents = centroids(adj)
    if len(cents) == 1:
        return _rooted_automorphisms(adj, cents[0], -1)[1]
    a, b = cents
    code_a, aut_a = _rooted_automorphisms(adj, a, b)
    code_b, aut_b = _rooted_automorphisms(adj, b, a)
    return aut_a * aut_b * (2 if code_a == code_b else 1)


def twin_leaf_groups(vertex_count: int, edges: Sequence[tuple[int, int]]) -> list[list[int]]:
    """Leaves grouped by their common neighbor; groups of size >= 2 only."""
    adj = adjacency_lists(vertex_count, edges)
    groups: dict[int, list[int]] = {}
    for v in range(vertex_count):
        if len(adj[v]) == 1 and vertex_count > 2:
            groups.setdefault(adj[v][0], []).append(v)
    return [sorted(g) for _, g in sorted(groups.items()) if len(g) >= 2]
