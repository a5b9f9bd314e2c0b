"""Properly edge-colored simple graphs and degree utilities."""
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from errors import DomainError, PreconditionError, SizeLimitError
from config.settings import settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class ColoredEdge:
    """An undirected edge stored with u < v."""
    u: int
    v: int
    color: int


class ColoredGraph:
    """Immutable simple graph on vertices 0..n-1 with one color per edge.

    Colors are opaque non-negative integers. Properness is not enforced here:
    an improper coloring can be built so that `validate_proper` can report it,
    but every search operation refuses one.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int] | ColoredEdge]):
        if n < 0:
            raise DomainError(f"vertex count must be non-negative, got {n}")

        color_of: dict[tuple[int, int], int] = {}
        for edge in edges:
            if isinstance(edge, ColoredEdge):
                a, b, color = edge.u, edge.v, edge.color
            else:
                a, b, color = edge
            a, b, color = int(a), int(b), int(color)
            if a == b:
                raise DomainError(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise DomainError(f"edge ({a}, {b}) leaves vertex range [0, {n})")
            if color < 0:
                raise DomainError(f"negative color {color} on edge ({a}, {b})")
            key = (a, b) if a < b else (b, a)
            if key in color_of:
                raise DomainError(f"parallel edge {key}")
            color_of[key] = color

        self.n = n
        self.edges: tuple[ColoredEdge, ...] = tuple(
            ColoredEdge(u, v, c) for (u, v), c in sorted(color_of.items())
        )
        self._color_of = color_of

        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for e in self.edges:
            adjacency[e.u].append((e.v, e.color))
            adjacency[e.v].append((e.u, e.color))
        self.adjacency: tuple[tuple[tuple[int, int], ...], ...] = tuple(
            tuple(sorted(row)) for row in adjacency
        )

        self.color_ids: tuple[int, ...] = tuple(sorted(set(color_of.values())))
        self.color_count = len(self.color_ids)
        # Dense color bits for mask-based searches; Python ints never overflow.
        self.color_bit: dict[int, int] = {c: 1 << i for i, c in enumerate(self.color_ids)}
        self.bit_adjacency: tuple[tuple[tuple[int, int], ...], ...] = tuple(
            tuple((w, self.color_bit[c]) for w, c in row) for row in self.adjacency
        )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int] | ColoredEdge]) -> "ColoredGraph":
        return cls(n, edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, edges={len(self.edges)}, colors={self.color_count})"

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(row) for row in self.adjacency]

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adjacency[v]]

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._color_of

    def color_of(self, u: int, v: int) -> int | None:
        """Color of edge {u, v}, or None if the edge is absent."""
        key = (u, v) if u < v else (v, u)
        return self._color_of.get(key)

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def delete_vertex(self, v: int) -> "ColoredGraph":
        """Remove v and shift the labels above it down by one."""
        if not 0 <= v < self.n:
            raise DomainError(f"vertex {v} not in graph on {self.n} vertices")

        def shift(x: int) -> int:
            return x - 1 if x > v else x

        kept = [(shift(e.u), shift(e.v), e.color) for e in self.edges if v not in (e.u, e.v)]
        return ColoredGraph(self.n - 1, kept)

    def induced(self, vertices: Iterable[int]) -> "ColoredGraph":
        """Induced subgraph, relabelled in increasing vertex order."""
        chosen = sorted(set(vertices))
        index = {x: i for i, x in enumerate(chosen)}
        kept = [
            (index[e.u], index[e.v], e.color)
            for e in self.edges
            if e.u in index and e.v in index
        ]
        return ColoredGraph(len(chosen), kept)

    def rebuild_adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Adjacency recomputed from the edge set alone (round-trip check)."""
        return ColoredGraph(self.n, self.edges).adjacency


def validate_proper(g: ColoredGraph) -> list[tuple[ColoredEdge, ColoredEdge]]:
    """
    Find every pair of incident edges sharing a color.

    Args:
        g: Graph to check

    Returns:
        List of violating edge pairs, empty iff the coloring is proper
    """
    violations = []
    for v in range(g.n):
        by_color: dict[int, list[ColoredEdge]] = {}
        for w, color in g.adjacency[v]:
            a, b = (v, w) if v < w else (w, v)
            by_color.setdefault(color, []).append(ColoredEdge(a, b, color))
        for group in by_color.values():
            for i in range(len(group)):
                for j in range(i + 1, len(group)):
                    violations.append((group[i], group[j]))
    return violations


def is_proper(g: ColoredGraph) -> bool:
    for row in g.adjacency:
        colors = [c for _, c in row]
        if len(colors) != len(set(colors)):
            return False
    return True


def require_proper(g: ColoredGraph) -> None:
    if not is_proper(g):
        raise PreconditionError("host graph coloring is not proper")


def average_degree(g: ColoredGraph) -> Fraction:
    """Exact average degree 2|E|/n."""
    if g.n == 0:
        raise DomainError("average degree of the empty graph is undefined")
    return Fraction(2 * g.edge_count, g.n)


@dataclass(frozen=True)
class BalanceResult:
    balanced: bool
    density: Fraction                  # average degree of g
    witness: tuple[int, ...] | None    # densest induced vertex set when unbalanced
    witness_density: Fraction | None


def is_balanced_small(g: ColoredGraph, max_n: int | None = None) -> BalanceResult:
    """
    Brute-force balancedness over every non-empty vertex subset.

    Args:
        g: Graph with at least one vertex
        max_n: Hard cap on the vertex count (defaults to settings.BALANCE_MAX_N)

    Returns:
        BalanceResult; on failure the witness is a densest subset (smallest
        bitmask among ties)
    """
    max_n = settings.BALANCE_MAX_N if max_n is None else max_n
    if g.n > max_n:
        raise SizeLimitError(f"balancedness brute force capped at n={max_n}, got n={g.n}")
    density = average_degree(g)

    adj_mask = [0] * g.n
    for e in g.edges:
        adj_mask[e.u] |= 1 << e.v
        adj_mask[e.v] |= 1 << e.u

    # Compare 2e/|S| against 2E/n by cross-multiplication.
    best_num, best_den, best_mask = 2 * g.edge_count, g.n, None
    for mask in range(1, 1 << g.n):
        twice_edges = 0
        rest = mask
        while rest:
            low = rest & -rest
            twice_edges += (adj_mask[low.bit_length() - 1] & mask).bit_count()
            rest ^= low
        size = mask.bit_count()
        if twice_edges * best_den > best_num * size:
            best_num, best_den, best_mask = twice_edges, size, mask

    if best_mask is None:
        return BalanceResult(True, density, None, None)
    witness = tuple(v for v in range(g.n) if best_mask >> v & 1)
    logger.debug(f"Unbalanced: subset {witness} has average degree {Fraction(best_num, best_den)} > {density}")
    return BalanceResult(False, density, witness, Fraction(best_num, best_den))


def drop_low_degree_check(g: ColoredGraph, v: int) -> bool:
    """
    Check that deleting a low-degree vertex raises the average degree.

    Args:
        g: Graph
        v: Vertex with d(v) < d(G)/2

    Returns:
        True iff d(G - v) > d(G)
    """
    if not 0 <= v < g.n:
        raise DomainError(f"vertex {v} not in graph on {g.n} vertices")
    density = average_degree(g)
    if not Fraction(g.degree(v)) < density / 2:
        raise PreconditionError(f"d({v})={g.degree(v)} is not below d(G)/2={density / 2}")
    return average_degree(g.delete_vertex(v)) > density


def disjoint_union(g: ColoredGraph, copies: int, pad_to: int | None = None) -> ColoredGraph:
    """
    Vertex-disjoint copies of g sharing one color set, optionally padded.

    Args:
        g: Base graph
        copies: Number of copies (>= 1)
        pad_to: Total vertex count after appending isolated vertices

    Returns:
        New graph; copy i occupies vertices [i*n, (i+1)*n)
    """
    if copies < 1:
        raise DomainError(f"copies must be >= 1, got {copies}")
    total = copies * g.n
    if pad_to is not None and pad_to < total:
        raise DomainError(f"pad_to={pad_to} is smaller than {copies} copies of {g.n} vertices")
    edges = [
        (e.u + i * g.n, e.v + i * g.n, e.color)
        for i in range(copies)
        for e in g.edges
    ]
    return ColoredGraph(total if pad_to is None else pad_to, edges)


def random_proper_coloring(n: int, p: float, rng: random.Random, extra_colors: int = 2) -> ColoredGraph:
    """
    Random simple graph G(n, p) with a random greedy proper coloring.

    Edges are colored in shuffled order with the first free color of a
    shuffled palette of size max_degree*2 - 1 + extra_colors, so the
    coloring is always proper and usually uses more than Delta colors.
    """
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    rng.shuffle(pairs)
    degree = [0] * n
    for a, b in pairs:
        degree[a] += 1
        degree[b] += 1
    palette = list(range(max(1, 2 * max(degree, default=0) - 1 + extra_colors)))
    rng.shuffle(palette)

    used: list[set[int]] = [set() for _ in range(n)]
    edges = []
    for a, b in pairs:
        color = next(c for c in palette if c not in used[a] and c not in used[b])
        used[a].add(color)
        used[b].add(color)
        edges.append((a, b, color))
    return ColoredGraph(n, edges)
