"""Rainbow paths: longest path and the maximal-path endpoint degree bound."""
import logging
from dataclasses import dataclass, field

from errors import BudgetExceededError, InvariantError
from graphs.ecgraph import ColoredGraph, require_proper
from rainbow.budget import NodeCounter, PathWitness, SearchBudget, SearchStatus
from rainbow.checker import check_path
from rainbow.parallel import BranchKernel, MergeMode, search_branches

logger = logging.getLogger(__name__)


@dataclass
class LongestPathResult:
    length: int
    witness: PathWitness | None
    status: SearchStatus
    nodes_visited: int = 0

    @property
    def timed_out(self) -> bool:
        return self.status is SearchStatus.BUDGET

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "length": self.length,
            "witness": self.witness.to_json() if self.witness else None,
            "nodes_visited": self.nodes_visited,
        }


@dataclass(frozen=True)
class _PathContext:
    graph: ColoredGraph
    cap: int


class LongestPathKernel(BranchKernel):
    """All rainbow paths starting at one vertex; keeps the first longest."""

    def __init__(self, context: _PathContext):
        super().__init__(context)
        self.adj = context.graph.bit_adjacency
        self.cap = context.cap
        self.used = [False] * context.graph.n
        self.path: list[int] = []
        self.best: list[int] = []

    def explore(self, start: int, counter: NodeCounter):
        counter.tick()
        self.path = [start]
        self.best = [start]
        self.used[start] = True
        try:
            self._extend(start, 0, counter)
        finally:
            self.used[start] = False
        return len(self.best) - 1, tuple(self.best)

    def _extend(self, last: int, cmask: int, counter: NodeCounter) -> bool:
        if len(self.path) > len(self.best):
            self.best = list(self.path)
            if len(self.best) - 1 >= self.cap:
                return True
        for w, bit in self.adj[last]:
            if self.used[w] or bit & cmask:
                continue
            counter.tick()
            self.used[w] = True
            self.path.append(w)
            stop = self._extend(w, cmask | bit, counter)
            self.path.pop()
            self.used[w] = False
            if stop:
                return True
        return False


def longest_rainbow_path(g: ColoredGraph, budget: SearchBudget | None = None, anchored: bool = False,
                         threads: int = 1) -> LongestPathResult:
    """
    Exact maximum length of a rainbow path.

    Args:
        g: Properly colored host graph
        budget: Node cap; on exhaustion the best length so far is a lower bound
        anchored: Start paths at vertex 0 only (caller asserts g is vertex-transitive)
        threads: Worker processes

    Returns:
        LongestPathResult with a witness path (a single vertex when g has no edges)
    """
    require_proper(g)
    budget = budget or SearchBudget()
    if g.n == 0:
        return LongestPathResult(0, None, SearchStatus.NONE)
    cap = min(g.n - 1, g.color_count)
    starts = [0] if anchored else list(range(g.n))
    merged = search_branches(LongestPathKernel, _PathContext(g, cap), starts, budget.max_nodes, MergeMode.MAX, threads)

    witness = None
    if merged.witness is not None:
        vertices = merged.witness
        if not check_path(g, vertices):
            logger.error(f"Longest path search returned an invalid path {vertices}")
            raise InvariantError(f"path {vertices} failed re-validation")
        witness = PathWitness(tuple(vertices), tuple(g.color_of(a, b) for a, b in zip(vertices, vertices[1:])))
    if merged.status is SearchStatus.BUDGET:
        logger.warning(f"Longest path search stopped at the {budget.max_nodes} node budget, best so far {merged.value}")
        return LongestPathResult(merged.value, witness, SearchStatus.BUDGET, merged.nodes)
    return LongestPathResult(merged.value, witness, SearchStatus.FOUND, merged.nodes)


@dataclass
class _EndpointStats:
    maximal_paths: int = 0
    max_degree: dict[int, int] = field(default_factory=dict)
    proved_violation: tuple[int, ...] | None = None
    stated_violation: tuple[int, ...] | None = None


class MaximalPathKernel(BranchKernel):
    """Every rainbow path with a fixed endpoint v, checked for extendability at v."""

    def __init__(self, context: ColoredGraph):
        super().__init__(context)
        self.adj = context.bit_adjacency
        self.used = [False] * context.n
        self.path: list[int] = []

    def explore(self, start: int, counter: NodeCounter):
        counter.tick()
        self.start = start
        self.degree = len(self.adj[start])
        self.stats = _EndpointStats()
        self.path = [start]
        self.used[start] = True
        try:
            self._extend(start, 0, counter)
        finally:
            self.used[start] = False
        return self.stats.maximal_paths, self.stats

    def _blocked_at_start(self, cmask: int) -> bool:
        return all(self.used[x] or bit & cmask for x, bit in self.adj[self.start])

    def _extend(self, last: int, cmask: int, counter: NodeCounter) -> None:
        k = len(self.path) - 1
        if k >= 1 and self._blocked_at_start(cmask):
            stats = self.stats
            stats.maximal_paths += 1
            stats.max_degree[k] = max(stats.max_degree.get(k, 0), self.degree)
            if self.degree > 2 * k - 1 and stats.proved_violation is None:
                stats.proved_violation = tuple(self.path)
            if self.degree > 2 * k - 2 and stats.stated_violation is None:
                stats.stated_violation = tuple(self.path)
        for w, bit in self.adj[last]:
            if self.used[w] or bit & cmask:
                continue
            counter.tick()
            self.used[w] = True
            self.path.append(w)
            self._extend(w, cmask | bit, counter)
            self.path.pop()
            self.used[w] = False


@dataclass
class PathDegreeReport:
    """
    Endpoint degrees of maximal rainbow paths.

    A path of length k is maximal at its endpoint v when no edge at v leads
    to a new vertex with a new color. The proved bound is d(v) <= 2k-1;
    the sharper 2k-2 form is reported separately because it fails on small
    graphs.
    """
    status: SearchStatus
    maximal_paths: int
    max_endpoint_degree: dict[int, int]
    proved_violation: tuple[int, ...] | None
    stated_violation: tuple[int, ...] | None
    nodes_visited: int

    @property
    def holds(self) -> bool:
        return self.status is not SearchStatus.BUDGET and self.proved_violation is None

    @property
    def stated_holds(self) -> bool:
        return self.status is not SearchStatus.BUDGET and self.stated_violation is None

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "maximal_paths": self.maximal_paths,
            "max_endpoint_degree": {str(k): d for k, d in sorted(self.max_endpoint_degree.items())},
            "bound_2k_minus_1": self.holds,
            "bound_2k_minus_2": self.stated_holds,
            "violation_2k_minus_1": list(self.proved_violation) if self.proved_violation else None,
            "violation_2k_minus_2": list(self.stated_violation) if self.stated_violation else None,
            "nodes_visited": self.nodes_visited,
        }


def maximal_path_degree_report(g: ColoredGraph, budget: SearchBudget | None = None,
                               threads: int = 1) -> PathDegreeReport:
    """Enumerate every rainbow path from every endpoint and collect the degree statistics."""
    require_proper(g)
    budget = budget or SearchBudget()
    merged = search_branches(MaximalPathKernel, g, list(range(g.n)), budget.max_nodes, MergeMode.COLLECT, threads)

    max_degree: dict[int, int] = {}
    proved = stated = None
    for stats in merged.witness or []:
        for k, d in stats.max_degree.items():
            max_degree[k] = max(max_degree.get(k, 0), d)
        proved = proved or stats.proved_violation
        stated = stated or stats.stated_violation
    status = SearchStatus.BUDGET if merged.status is SearchStatus.BUDGET else SearchStatus.NONE
    if proved:
        logger.error(f"Maximal rainbow path {proved} breaks the 2k-1 endpoint bound")
        status = SearchStatus.FOUND
    return PathDegreeReport(status, merged.value, max_degree, proved, stated, merged.nodes)


def check_maximal_path_degree_bound(g: ColoredGraph, budget: SearchBudget | None = None, threads: int = 1) -> bool:
    """
    True iff every maximal rainbow path of length k ending at v has d(v) <= 2k-1.

    Raises:
        BudgetExceededError: the enumeration did not finish
    """
    report = maximal_path_degree_report(g, budget, threads)
    if report.status is SearchStatus.BUDGET:
        raise BudgetExceededError("maximal path enumeration exceeded the node budget", report.nodes_visited)
    return report.holds
