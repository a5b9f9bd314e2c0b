"""Rainbow cycles: existence, counts and rainbow girth."""
import logging
from dataclasses import dataclass

from errors import BudgetExceededError, DomainError, InvariantError
from graphs.ecgraph import ColoredGraph, require_proper
from rainbow.budget import CycleWitness, NodeCounter, SearchBudget, SearchResult, SearchStatus
from rainbow.checker import check_cycle
from rainbow.parallel import BranchKernel, MergeMode, search_branches

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _CycleContext:
    graph: ColoredGraph
    length: int
    counting: bool
    canonical: bool   # False enumerates every labeled closed walk (both directions, every start)


class CycleKernel(BranchKernel):
    """
    Extends v_0 v_1 ... into a rainbow cycle of fixed length.

    In canonical mode v_0 is the smallest vertex of the cycle and
    v_1 < v_{L-1}, so every cycle is produced exactly once.
    """

    def __init__(self, context: _CycleContext):
        super().__init__(context)
        g = context.graph
        self.length = context.length
        self.counting = context.counting
        self.canonical = context.canonical
        self.adj = g.bit_adjacency
        self.bit_to = [dict(row) for row in g.bit_adjacency]
        self.path = [-1] * self.length
        self.used = [False] * g.n
        self.count = 0

    def explore(self, branch: tuple[int, int], counter: NodeCounter):
        v0, v1 = branch
        self.path[0], self.path[1] = v0, v1
        self.used[v0] = self.used[v1] = True
        self.count = 0
        counter.tick()
        try:
            stop = self._extend(2, self.bit_to[v0][v1], counter)
        finally:
            self.used[v0] = self.used[v1] = False
        if self.counting:
            return self.count, None
        return (1, tuple(self.path)) if stop else (0, None)

    def _extend(self, i: int, cmask: int, counter: NodeCounter) -> bool:
        v0, last = self.path[0], self.path[i - 1]
        closing = i == self.length - 1
        floor = v0 if self.canonical else -1
        if closing and self.canonical:
            floor = max(floor, self.path[1])
        for w, bit in self.adj[last]:
            if self.used[w] or bit & cmask or w <= floor:
                continue
            if closing:
                back = self.bit_to[w].get(v0)
                if back is None or back & (cmask | bit):
                    continue
                counter.tick()
                if self.counting:
                    self.count += 1
                    continue
                self.path[i] = w
                return True
            counter.tick()
            self.path[i] = w
            self.used[w] = True
            stop = self._extend(i + 1, cmask | bit, counter)
            self.used[w] = False
            if stop:
                return True
        return False


def _branches(g: ColoredGraph, canonical: bool, anchored: bool) -> list[tuple[int, int]]:
    starts = [0] if anchored and g.n else range(g.n)
    return [
        (v0, v1)
        for v0 in starts
        for v1, _ in g.adjacency[v0]
        if not canonical or v1 > v0
    ]


def _check_length(length: int) -> None:
    if length < 3:
        raise DomainError(f"cycle length must be >= 3, got {length}")


def _impossible(g: ColoredGraph, length: int) -> bool:
    return length > g.n or length > g.color_count


def find_rainbow_cycle(g: ColoredGraph, length: int, budget: SearchBudget | None = None,
                       anchored: bool = False, threads: int = 1) -> SearchResult:
    """
    Search for a rainbow cycle with `length` edges.

    Args:
        g: Properly colored host graph
        length: Cycle length, at least 3
        budget: Node cap; exhaustion yields status BUDGET
        anchored: Only look for cycles through vertex 0 (caller asserts g is vertex-transitive)
        threads: Worker processes

    Returns:
        SearchResult whose witness is a CycleWitness
    """
    _check_length(length)
    require_proper(g)
    budget = budget or SearchBudget()
    if _impossible(g, length):
        return SearchResult(SearchStatus.NONE, nodes_visited=1)

    merged = search_branches(CycleKernel, _CycleContext(g, length, False, True), _branches(g, True, anchored),
                             budget.max_nodes, MergeMode.FIRST, threads)
    witness = None
    if merged.witness:
        vertices = merged.witness
        if not check_cycle(g, vertices):
            logger.error(f"Cycle search returned an invalid cycle {vertices}")
            raise InvariantError(f"cycle {vertices} failed re-validation")
        colors = tuple(g.color_of(a, vertices[(i + 1) % length]) for i, a in enumerate(vertices))
        witness = CycleWitness(tuple(vertices), colors)
    if merged.status is SearchStatus.BUDGET:
        logger.warning(f"Cycle search C{length} stopped at the {budget.max_nodes} node budget")
    return SearchResult(merged.status, witness, merged.nodes)


def count_rainbow_closed_walks(g: ColoredGraph, length: int, budget: SearchBudget | None = None,
                               threads: int = 1) -> int:
    """Labeled rainbow cycles: every start vertex and both directions."""
    _check_length(length)
    require_proper(g)
    budget = budget or SearchBudget()
    if _impossible(g, length):
        return 0
    merged = search_branches(CycleKernel, _CycleContext(g, length, True, False), _branches(g, False, False),
                             budget.max_nodes, MergeMode.SUM, threads)
    if merged.status is SearchStatus.BUDGET:
        raise BudgetExceededError(f"closed-walk count C{length} exceeded the node budget", merged.nodes)
    return merged.value


def count_rainbow_cycles_result(g: ColoredGraph, length: int, budget: SearchBudget | None = None,
                                anchored: bool = False, threads: int = 1) -> SearchResult:
    """Like count_rainbow_cycles but returns the tri-state result instead of raising on budget."""
    _check_length(length)
    require_proper(g)
    budget = budget or SearchBudget()
    if _impossible(g, length):
        return SearchResult(SearchStatus.NONE, nodes_visited=1, count=0)
    merged = search_branches(CycleKernel, _CycleContext(g, length, True, True), _branches(g, True, anchored),
                             budget.max_nodes, MergeMode.SUM, threads)
    if merged.status is SearchStatus.BUDGET:
        return SearchResult(SearchStatus.BUDGET, nodes_visited=merged.nodes)
    total = merged.value * g.n if anchored else merged.value
    if anchored and total % length:
        raise InvariantError(f"anchored cycle count {merged.value} * {g.n} not divisible by {length}")
    count = total // length if anchored else total
    return SearchResult(SearchStatus.FOUND if count else SearchStatus.NONE, nodes_visited=merged.nodes, count=count)


def count_rainbow_cycles(g: ColoredGraph, length: int, budget: SearchBudget | None = None,
                         anchored: bool = False, threads: int = 1) -> int:
    """
    Number of rainbow cycles with `length` edges, each counted once.

    With anchored=True only cycles through vertex 0 are enumerated and the
    total is n * count / length (caller asserts vertex-transitivity).

    Raises:
        BudgetExceededError: the node budget ran out
    """
    result = count_rainbow_cycles_result(g, length, budget, anchored, threads)
    if result.timed_out:
        raise BudgetExceededError(f"cycle count C{length} exceeded the node budget", result.nodes_visited)
    return result.count


@dataclass
class GirthResult:
    girth: int | None                 # None: no rainbow cycle up to cap
    cap: int
    status: SearchStatus
    nodes_visited: int = 0

    def to_json(self) -> dict:
        return {"girth": self.girth, "cap": self.cap, "status": self.status.value, "nodes_visited": self.nodes_visited}


def rainbow_girth(g: ColoredGraph, cap: int, budget: SearchBudget | None = None,
                  anchored: bool = False, threads: int = 1) -> GirthResult:
    """Smallest rainbow cycle length up to cap; the budget applies to each length separately."""
    if cap < 3:
        raise DomainError(f"cap must be >= 3, got {cap}")
    nodes = 0
    for length in range(3, cap + 1):
        result = find_rainbow_cycle(g, length, budget, anchored, threads)
        nodes += result.nodes_visited
        if result.timed_out:
            return GirthResult(None, cap, SearchStatus.BUDGET, nodes)
        if result.found:
            return GirthResult(length, cap, SearchStatus.FOUND, nodes)
    return GirthResult(None, cap, SearchStatus.NONE, nodes)
