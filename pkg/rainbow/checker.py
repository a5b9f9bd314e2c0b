"""Witness re-validation against the host graph.

Uses none of the search helpers; only the host edge list and the pattern
edge list are read.
"""
from graphs.ecgraph import ColoredGraph
from patterns.trees import TreePattern


def _edge_colors(g: ColoredGraph) -> dict[frozenset, int]:
    return {frozenset((e.u, e.v)): e.color for e in g.edges}


def check_tree_embedding(g: ColoredGraph, pattern: TreePattern, vertex_map) -> bool:
    """True iff vertex_map is injective, maps every pattern edge onto a host edge, and the colors are distinct."""
    if len(vertex_map) != pattern.vertex_count:
        return False
    if len(set(vertex_map)) != len(vertex_map):
        return False
    if any(not 0 <= x < g.n for x in vertex_map):
        return False
    colors = _edge_colors(g)
    seen = []
    for a, b in pattern.edges:
        key = frozenset((vertex_map[a], vertex_map[b]))
        if key not in colors:
            return False
        seen.append(colors[key])
    return len(seen) == len(set(seen))


def check_path(g: ColoredGraph, vertices) -> bool:
    """True iff the vertex sequence is a rainbow path in g."""
    if len(set(vertices)) != len(vertices):
        return False
    colors = _edge_colors(g)
    seen = []
    for a, b in zip(vertices, vertices[1:]):
        key = frozenset((a, b))
        if key not in colors:
            return False
        seen.append(colors[key])
    return len(seen) == len(set(seen))


def check_cycle(g: ColoredGraph, vertices) -> bool:
    """True iff the closed vertex sequence is a rainbow cycle of length >= 3."""
    if len(vertices) < 3 or len(set(vertices)) != len(vertices):
        return False
    colors = _edge_colors(g)
    seen = []
    for i, a in enumerate(vertices):
        key = frozenset((a, vertices[(i + 1) % len(vertices)]))
        if key not in colors:
            return False
        seen.append(colors[key])
    return len(seen) == len(set(seen))
