"""Tree patterns: the search targets."""
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from errors import DomainError
from patterns.canonical import adjacency_lists, automorphism_count as _automorphisms, free_code


@dataclass(frozen=True)
class TreePattern:
    """An uncolored free tree on vertices 0..vertex_count-1."""
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    canonical_code: bytes = field(compare=False)
    name: str = field(default="", compare=False)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Sequence[tuple[int, int]], name: str = "") -> "TreePattern":
        """
        Validate and build a pattern.

        Args:
            vertex_count: Number of pattern vertices (k + 1)
            edges: Pairs over 0..vertex_count-1
            name: Optional display name, ignored by equality

        Returns:
            TreePattern with its canonical code
        """
        normalized = tuple(sorted((min(a, b), max(a, b)) for a, b in edges))
        if vertex_count < 2:
            raise DomainError("a pattern needs at least one edge")
        if len(normalized) != vertex_count - 1:
            raise DomainError(f"{len(normalized)} edges cannot form a tree on {vertex_count} vertices")
        if len(set(normalized)) != len(normalized):
            raise DomainError("duplicate pattern edge")
        for a, b in normalized:
            if a == b or not (0 <= a < vertex_count and 0 <= b < vertex_count):
                raise DomainError(f"bad pattern edge ({a}, {b})")

        adj = adjacency_lists(vertex_count, normalized)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != vertex_count:
            raise DomainError("pattern is not connected")

        code = bytes(free_code(vertex_count, normalized))
        return cls(vertex_count, normalized, code, name)

    @property
    def edge_count(self) -> int:
        return self.vertex_count - 1

    def adjacency(self) -> list[list[int]]:
        return adjacency_lists(self.vertex_count, self.edges)

    def degrees(self) -> list[int]:
        return [len(row) for row in self.adjacency()]

    def is_isomorphic(self, other: "TreePattern") -> bool:
        return self.canonical_code == other.canonical_code

    def to_json(self) -> dict[str, Any]:
        return {
            "vertices": self.vertex_count,
            "edges": [list(e) for e in self.edges],
            "code": self.canonical_code.hex(),
        }


@dataclass(frozen=True)
class CaterpillarSpec:
    leaf_counts: tuple[int, ...]

    @property
    def edge_count(self) -> int:
        return len(self.leaf_counts) - 1 + sum(self.leaf_counts)

    def label(self) -> str:
        return "CP(" + ",".join(str(s) for s in self.leaf_counts) + ")"


def automorphism_count(t: TreePattern) -> int:
    """|Aut(T)| of the free tree."""
    return _automorphisms(t.vertex_count, t.edges)


def path_pattern(k: int) -> TreePattern:
    if k < 1:
        raise DomainError(f"path needs k >= 1 edges, got {k}")
    return TreePattern.from_edges(k + 1, [(i, i + 1) for i in range(k)], name=f"P{k}")


def star_pattern(k: int) -> TreePattern:
    if k < 1:
        raise DomainError(f"star needs k >= 1 edges, got {k}")
    return TreePattern.from_edges(k + 1, [(0, i) for i in range(1, k + 1)], name=f"K1,{k}")


def broom_pattern(k: int, l: int) -> TreePattern:
    """
    Broom B(k, l): a path of l-1 edges joined by one edge to the center of a
    star with k-l edges. The center has degree k-l+1.
    """
    if not k >= l >= 2:
        raise DomainError(f"broom needs k >= l >= 2, got k={k}, l={l}")
    center = l
    edges = [(i, i + 1) for i in range(l - 1)]
    edges.append((l - 1, center))
    edges.extend((center, center + j) for j in range(1, k - l + 1))
    return TreePattern.from_edges(k + 1, edges, name=f"B({k},{l})")


def caterpillar_pattern(spec: CaterpillarSpec | Sequence[int]) -> TreePattern:
    """Central path on t vertices with s_i leaves hanging from vertex i."""
    if not isinstance(spec, CaterpillarSpec):
        spec = CaterpillarSpec(tuple(spec))
    counts = spec.leaf_counts
    if not counts:
        raise DomainError("caterpillar spec is empty")
    if any(s < 0 for s in counts):
        raise DomainError(f"negative leaf count in {counts}")
    if spec.edge_count < 1:
        raise DomainError("caterpillar must have at least one edge")
    t = len(counts)
    edges = [(i, i + 1) for i in range(t - 1)]
    nxt = t
    for i, s in enumerate(counts):
        for _ in range(s):
            edges.append((i, nxt))
            nxt += 1
    return TreePattern.from_edges(nxt, edges, name=spec.label())


def spider_pattern(t: int, star_edges: int) -> TreePattern:
    """Star with star_edges edges, t of them subdivided once."""
    if not star_edges >= t >= 0:
        raise DomainError(f"spider needs star_edges >= t >= 0, got t={t}, star_edges={star_edges}")
    if star_edges < 1:
        raise DomainError("spider needs at least one star edge")
    edges = [(0, i) for i in range(1, star_edges + 1)]
    nxt = star_edges + 1
    for i in range(1, t + 1):
        edges.append((i, nxt))
        nxt += 1
    return TreePattern.from_edges(nxt, edges, name=f"Spider({t},{star_edges})")


def pattern_from_json(data: dict[str, Any]) -> TreePattern:
    try:
        vertex_count = int(data["vertices"])
        edges = [(int(a), int(b)) for a, b in data["edges"]]
    except (KeyError, TypeError, ValueError) as e:
        raise DomainError(f"malformed pattern JSON: {e}") from e
    pattern = TreePattern.from_edges(vertex_count, edges, name=data.get("name", ""))
    if "code" in data and data["code"] != pattern.canonical_code.hex():
        raise DomainError("pattern code does not match its edges")
    return pattern


def load_pattern(path: str | Path) -> TreePattern:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise DomainError(f"{path} is not valid JSON: {e}") from e
    return pattern_from_json(data)
