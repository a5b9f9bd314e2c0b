"""Edge colorings of K_n and their canonical forms.

A coloring of K_n is stored as a label array over the edges in colex order
(0,1), (0,2), (1,2), (0,3), ... where label 0 means "edge absent" and
positive labels are colors. Two colorings are isomorphic when a vertex
permutation followed by a color permutation maps one onto the other.
"""
from dataclasses import dataclass
from typing import Mapping, Sequence

from errors import DomainError
from graphs.ecgraph import ColoredGraph


def edge_index(a: int, b: int) -> int:
    if a > b:
        a, b = b, a
    return b * (b - 1) // 2 + a


def colex_edges(n: int) -> list[tuple[int, int]]:
    return [(a, b) for b in range(n) for a in range(b)]


def _check_labels(n: int, labels: Sequence[int]) -> None:
    if len(labels) != n * (n - 1) // 2:
        raise DomainError(f"expected {n * (n - 1) // 2} edge labels for K_{n}, got {len(labels)}")


def canonical_labels(n: int, labels: Sequence[int]) -> tuple[int, ...]:
    """
    Lex-minimal relabeled label array.

    New vertices are chosen one at a time; choosing new vertex j fixes the
    labels of the edges (0,j)..(j-1,j), renamed by first appearance. Only
    the candidates with the smallest such segment are explored, and a
    branch stops as soon as its prefix exceeds the best complete form.
    """
    _check_labels(n, labels)
    best: list[tuple[int, ...] | None] = [None]

    def search(order: list[int], rename: dict[int, int], prefix: tuple[int, ...]) -> None:
        if len(order) == n:
            if best[0] is None or prefix < best[0]:
                best[0] = prefix
            return
        children = []
        for v in range(n):
            if v in order:
                continue
            mapping = dict(rename)
            segment = []
            for u in order:
                label = labels[edge_index(u, v)]
                if label and label not in mapping:
                    mapping[label] = len(mapping) + 1
                segment.append(mapping[label] if label else 0)
            children.append((tuple(segment), v, mapping))
        smallest = min(child[0] for child in children)
        extended = prefix + smallest
        if best[0] is not None and extended > best[0][:len(extended)]:
            return
        for segment, v, mapping in children:
            if segment == smallest:
                search(order + [v], mapping, extended)

    search([], {}, ())
    return best[0]


def coloring_canonical_form(n: int, colors: Mapping[tuple[int, int], int]) -> tuple[int, ...]:
    """
    Canonical form of a (possibly partial) edge coloring of K_n.

    Args:
        n: Vertex count
        colors: {(a, b): color} for the colored edges; missing pairs are non-edges

    Returns:
        Label array in colex edge order, 0 for non-edges
    """
    labels = [0] * (n * (n - 1) // 2)
    for (a, b), color in colors.items():
        if a == b or not (0 <= a < n and 0 <= b < n):
            raise DomainError(f"bad edge ({a}, {b}) for K_{n}")
        labels[edge_index(a, b)] = color + 1
    return canonical_labels(n, labels)


def graph_canonical_form(g: ColoredGraph) -> tuple[int, ...]:
    return coloring_canonical_form(g.n, {(e.u, e.v): e.color for e in g.edges})


def colorings_isomorphic(a: ColoredGraph, b: ColoredGraph) -> bool:
    """Equal up to a vertex permutation composed with a color permutation."""
    if a.n != b.n or a.edge_count != b.edge_count or a.color_count != b.color_count:
        return False
    return graph_canonical_form(a) == graph_canonical_form(b)


@dataclass(frozen=True)
class ColoringClass:
    """One isomorphism class of colorings of K_n, as its list of color classes."""
    base_n: int
    color_classes: tuple[tuple[tuple[int, int], ...], ...]
    canonical: bool = False

    @classmethod
    def from_labels(cls, n: int, labels: Sequence[int], canonical: bool = False) -> "ColoringClass":
        _check_labels(n, labels)
        groups: dict[int, list[tuple[int, int]]] = {}
        for edge, label in zip(colex_edges(n), labels):
            if label:
                groups.setdefault(label, []).append(edge)
        return cls(n, tuple(tuple(groups[label]) for label in sorted(groups)), canonical)

    @property
    def color_count(self) -> int:
        return len(self.color_classes)

    def labels(self) -> tuple[int, ...]:
        labels = [0] * (self.base_n * (self.base_n - 1) // 2)
        for color, edges in enumerate(self.color_classes, start=1):
            for a, b in edges:
                labels[edge_index(a, b)] = color
        return tuple(labels)

    def to_graph(self) -> ColoredGraph:
        return ColoredGraph(
            self.base_n,
            [(a, b, color) for color, edges in enumerate(self.color_classes) for a, b in edges],
        )

    def to_json(self) -> dict:
        return {
            "n": self.base_n,
            "color_classes": [[list(e) for e in edges] for edges in self.color_classes],
        }
