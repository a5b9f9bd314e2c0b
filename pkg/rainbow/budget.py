"""Search budgets and tri-state results."""
from dataclasses import dataclass, field
from enum import Enum

from errors import DomainError
from config.settings import settings
from patterns.trees import TreePattern


class SearchStatus(str, Enum):
    FOUND = "found"
    NONE = "none"          # the whole space was searched
    BUDGET = "budget"      # the space was not fully searched


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = settings.DEFAULT_SEARCH_BUDGET

    def __post_init__(self):
        if self.max_nodes < 1:
            raise DomainError(f"max_nodes must be >= 1, got {self.max_nodes}")


class BudgetHit(Exception):
    """Internal unwinding signal; converted to SearchStatus.BUDGET at the API edge."""


class NodeCounter:
    def __init__(self, limit: int):
        self.limit = limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise BudgetHit()


@dataclass(frozen=True)
class Embedding:
    """Injective map pattern vertex -> host vertex."""
    pattern: TreePattern
    vertex_map: tuple[int, ...]
    used_colors: frozenset[int]

    @property
    def is_rainbow(self) -> bool:
        return len(self.used_colors) == self.pattern.edge_count

    def to_json(self) -> dict:
        return {
            "vertex_map": list(self.vertex_map),
            "colors": sorted(self.used_colors),
        }


@dataclass(frozen=True)
class CycleWitness:
    """Closed vertex sequence v_0..v_{L-1} (v_0 repeated implicitly) with edge colors."""
    vertices: tuple[int, ...]
    colors: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {"cycle": list(self.vertices), "colors": list(self.colors)}


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]
    colors: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.colors)

    def to_json(self) -> dict:
        return {"path": list(self.vertices), "colors": list(self.colors)}


@dataclass
class SearchResult:
    status: SearchStatus
    witness: Embedding | CycleWitness | PathWitness | None = None
    nodes_visited: int = 0
    count: int | None = None
    extra: dict = field(default_factory=dict)

    @property
    def timed_out(self) -> bool:
        return self.status is SearchStatus.BUDGET

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND

    def to_json(self) -> dict:
        data = {
            "status": self.status.value,
            "witness": self.witness.to_json() if self.witness else None,
            "count": self.count,
            "nodes_visited": self.nodes_visited,
        }
        data.update(self.extra)
        return data
