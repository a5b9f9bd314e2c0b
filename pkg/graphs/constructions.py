"""Builders for the explicit edge-colored graphs."""
import logging
from dataclasses import dataclass
from enum import Enum

from errors import DomainError
from config.settings import settings
from graphs.ecgraph import ColoredGraph

logger = logging.getLogger(__name__)


class ConstructionKind(str, Enum):
    K_STAR = "kstar"
    D_STAR = "dstar"
    K6_GEOMETRIC = "k6"
    COMPLETE_MINUS_COLOR = "kminus"
    ROUND_ROBIN = "roundrobin"


@dataclass(frozen=True)
class ConstructionSpec:
    kind: ConstructionKind
    parameter: int = 0

    def build(self) -> ColoredGraph:
        builders = {
            ConstructionKind.K_STAR: lambda: build_k_star(self.parameter),
            ConstructionKind.D_STAR: lambda: build_d_star(self.parameter),
            ConstructionKind.K6_GEOMETRIC: build_k6_geometric,
            ConstructionKind.COMPLETE_MINUS_COLOR: lambda: build_complete_minus_color(self.parameter),
            ConstructionKind.ROUND_ROBIN: lambda: build_round_robin(self.parameter),
        }
        return builders[self.kind]()


def _check_s(s: int) -> None:
    if not 1 <= s <= settings.MAX_CONSTRUCTION_S:
        raise DomainError(f"s must be in [1, {settings.MAX_CONSTRUCTION_S}], got {s}")


def build_k_star(s: int) -> ColoredGraph:
    """
    Complete graph on GF(2)^s with edge {v, w} colored v XOR w.

    Vertex and color ids are the integer values of the bit vectors.
    """
    _check_s(s)
    n = 1 << s
    edges = [(v, w, v ^ w) for v in range(n) for w in range(v + 1, n)]
    logger.debug(f"Built K*_(2^{s}): {n} vertices, {len(edges)} edges")
    return ColoredGraph(n, edges)


def build_d_star(s: int) -> ColoredGraph:
    """
    Hypercube with diagonals: the edges of K*_(2^s) at Hamming distance 1 or s.

    (s+1)-regular with colors e_1..e_s and the all-ones vector.
    """
    _check_s(s)
    n = 1 << s
    allowed = {1 << i for i in range(s)} | {n - 1}
    edges = [(v, v ^ c, c) for v in range(n) for c in sorted(allowed) if v < v ^ c]
    logger.debug(f"Built D*_(2^{s}): {n} vertices, {len(edges)} edges")
    return ColoredGraph(n, edges)


def build_k6_geometric() -> ColoredGraph:
    """
    Proper 5-edge-coloring of K_6: a center joined to a regular pentagon.

    Color i is the spoke to pentagon vertex i and the two chords
    perpendicular to it.
    """
    def p(j: int) -> int:
        return 1 + j % 5

    edges = []
    for i in range(5):
        edges.append((0, p(i), i))
        edges.append((p(i + 1), p(i + 4), i))
        edges.append((p(i + 2), p(i + 3), i))
    return ColoredGraph(6, edges)


def build_complete_minus_color(k: int) -> ColoredGraph:
    """
    K_(k+1) with the round-robin (k+1)-coloring, minus one color class.

    Color of {a, b} is (a + b) mod (k+1); the class of color k is removed,
    leaving k^2/2 edges in k colors.
    """
    if k < 2 or k % 2:
        raise DomainError(f"k must be even and >= 2, got {k}")
    m = k + 1
    edges = [
        (a, b, (a + b) % m)
        for a in range(m)
        for b in range(a + 1, m)
        if (a + b) % m != k
    ]
    return ColoredGraph(m, edges)


def build_round_robin(n: int) -> ColoredGraph:
    """
    Round-robin 1-factorization of K_n (n even).

    Vertex n-1 is fixed; in round r it meets r, and (r+i, r-i) mod (n-1)
    are paired for i = 1..(n-2)/2. Color = round.
    """
    if n < 2 or n % 2:
        raise DomainError(f"n must be even and >= 2, got {n}")
    m = n - 1
    edges = []
    for r in range(m):
        edges.append((r, m, r))
        for i in range(1, n // 2):
            edges.append(((r + i) % m, (r - i) % m, r))
    return ColoredGraph(n, edges)
