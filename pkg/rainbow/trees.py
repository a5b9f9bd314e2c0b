"""Rainbow copies of tree patterns: find and count."""
import logging
from dataclasses import dataclass
from math import factorial, prod

from errors import BudgetExceededError, InvariantError
from graphs.ecgraph import ColoredGraph, require_proper
from patterns.canonical import twin_leaf_groups
from patterns.trees import TreePattern, automorphism_count
from rainbow.budget import Embedding, NodeCounter, SearchBudget, SearchResult, SearchStatus
from rainbow.checker import check_tree_embedding
from rainbow.parallel import BranchKernel, MergeMode, search_branches

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PlacementPlan:
    """
    Order in which pattern vertices are mapped.

    Position 0 is a maximum-degree vertex, inner vertices follow in BFS
    order and leaves come last grouped by parent. Leaves sharing a parent
    are twins: their images are forced to increase.
    """
    order: tuple[int, ...]
    parent_pos: tuple[int, ...]
    need: tuple[int, ...]             # pattern degree, a lower bound on the host degree
    twin_prev: tuple[int, ...]        # position of the previous twin leaf or -1
    group_left: tuple[int, ...]       # leaves of the group still to place, 0 for inner vertices
    twin_factor: int                  # product of twin-group factorials

    @classmethod
    def for_pattern(cls, t: TreePattern) -> "PlacementPlan":
        adj = t.adjacency()
        degrees = [len(row) for row in adj]
        root = min(range(t.vertex_count), key=lambda v: (-degrees[v], v))

        parent = {root: -1}
        bfs = [root]
        for v in bfs:
            for w in sorted(adj[v]):
                if w not in parent:
                    parent[w] = v
                    bfs.append(w)

        inner = [v for v in bfs if v == root or degrees[v] > 1]
        position = {v: i for i, v in enumerate(inner)}
        leaves = sorted((v for v in bfs if v not in position), key=lambda v: (position[parent[v]], v))
        order = inner + leaves
        position = {v: i for i, v in enumerate(order)}

        twin_prev, group_left = [], []
        for v in order:
            if v in inner:
                twin_prev.append(-1)
                group_left.append(0)
                continue
            siblings = [w for w in leaves if parent[w] == parent[v]]
            index = siblings.index(v)
            twin_prev.append(position[siblings[index - 1]] if index else -1)
            group_left.append(len(siblings) - index)

        return cls(
            order=tuple(order),
            parent_pos=tuple(position[parent[v]] if parent[v] >= 0 else -1 for v in order),
            need=tuple(degrees[v] for v in order),
            twin_prev=tuple(twin_prev),
            group_left=tuple(group_left),
            twin_factor=prod(factorial(len(group)) for group in twin_leaf_groups(t.vertex_count, t.edges)),
        )


@dataclass(frozen=True)
class _TreeContext:
    graph: ColoredGraph
    plan: PlacementPlan
    counting: bool


class TreeKernel(BranchKernel):
    """Backtracking over one (root image, first child image) branch."""

    def __init__(self, context: _TreeContext):
        super().__init__(context)
        g = context.graph
        self.plan = context.plan
        self.counting = context.counting
        self.degree = g.degrees()
        # Host neighbors by degree descending, vertex index on ties.
        self.adj = tuple(
            tuple(sorted(row, key=lambda item: (-self.degree[item[0]], item[0])))
            for row in g.bit_adjacency
        )
        self.images = [-1] * len(self.plan.order)
        self.used = [False] * g.n

    def candidates(self, i: int, cmask: int) -> list[tuple[int, int]]:
        plan = self.plan
        host = self.images[plan.parent_pos[i]]
        low = self.images[plan.twin_prev[i]] if plan.twin_prev[i] >= 0 else -1
        need = plan.need[i]
        found = [
            (w, bit) for w, bit in self.adj[host]
            if not self.used[w] and not bit & cmask and w > low and self.degree[w] >= need
        ]
        # A leaf group needs that many free neighbors of its parent.
        if len(found) < plan.group_left[i]:
            return []
        return found

    def explore(self, branch: tuple[int, int], counter: NodeCounter):
        root, first = branch
        bit = dict(self.adj[root])[first]
        self.images[0], self.images[1] = root, first
        self.used[root] = self.used[first] = True
        counter.tick()
        try:
            self.count = 0
            stop = self._place(2, bit, counter)
        finally:
            self.used[root] = self.used[first] = False
        if self.counting:
            return self.count, None
        return (1, tuple(self.images)) if stop else (0, None)

    def _place(self, i: int, cmask: int, counter: NodeCounter) -> bool:
        if i == len(self.plan.order):
            if self.counting:
                self.count += 1
                return False
            return True
        for w, bit in self.candidates(i, cmask):
            counter.tick()
            self.images[i] = w
            self.used[w] = True
            stop = self._place(i + 1, cmask | bit, counter)
            self.used[w] = False
            if stop:
                return True
        return False


def _branches(g: ColoredGraph, plan: PlacementPlan, anchored: bool) -> list[tuple[int, int]]:
    kernel = TreeKernel(_TreeContext(g, plan, False))
    roots = [0] if anchored and g.n else range(g.n)
    branches = []
    for root in roots:
        if kernel.degree[root] < plan.need[0]:
            continue
        kernel.images[0] = root
        kernel.used[root] = True
        branches.extend((root, w) for w, _ in kernel.candidates(1, 0))
        kernel.used[root] = False
    return branches


def _embedding(g: ColoredGraph, t: TreePattern, plan: PlacementPlan, images: tuple[int, ...]) -> Embedding:
    vertex_map = [0] * t.vertex_count
    for position, v in enumerate(plan.order):
        vertex_map[v] = images[position]
    vertex_map = tuple(vertex_map)
    if not check_tree_embedding(g, t, vertex_map):
        logger.error(f"Tree search returned an invalid embedding {vertex_map}")
        raise InvariantError(f"embedding {vertex_map} failed re-validation")
    colors = frozenset(g.color_of(vertex_map[a], vertex_map[b]) for a, b in t.edges)
    return Embedding(t, vertex_map, colors)


def find_rainbow_tree(g: ColoredGraph, t: TreePattern, budget: SearchBudget | None = None,
                      anchored: bool = False, threads: int = 1) -> SearchResult:
    """
    Search for a rainbow copy of t in g.

    Args:
        g: Properly colored host graph
        t: Tree pattern
        budget: Node cap; exhaustion yields status BUDGET, never NONE
        anchored: Only map the pattern root to vertex 0 (caller asserts g is vertex-transitive)
        threads: Worker processes

    Returns:
        SearchResult with an Embedding witness when found
    """
    require_proper(g)
    budget = budget or SearchBudget()
    plan = PlacementPlan.for_pattern(t)
    if t.edge_count > g.color_count or t.vertex_count > g.n:
        return SearchResult(SearchStatus.NONE, nodes_visited=1)

    merged = search_branches(TreeKernel, _TreeContext(g, plan, False), _branches(g, plan, anchored),
                             budget.max_nodes, MergeMode.FIRST, threads)
    witness = _embedding(g, t, plan, merged.witness) if merged.witness else None
    if merged.status is SearchStatus.BUDGET:
        logger.warning(f"Tree search for {t.name or t.edges} stopped at the {budget.max_nodes} node budget")
    logger.debug(f"Tree search {t.name or t.edges}: {merged.status.value} after {merged.nodes} nodes")
    return SearchResult(merged.status, witness, merged.nodes)


def count_rainbow_tree_result(g: ColoredGraph, t: TreePattern, budget: SearchBudget | None = None,
                              anchored: bool = False, threads: int = 1) -> SearchResult:
    """Like count_rainbow_tree but returns the tri-state result instead of raising on budget."""
    require_proper(g)
    budget = budget or SearchBudget()
    plan = PlacementPlan.for_pattern(t)
    if t.edge_count > g.color_count or t.vertex_count > g.n:
        return SearchResult(SearchStatus.NONE, nodes_visited=1, count=0)

    merged = search_branches(TreeKernel, _TreeContext(g, plan, True), _branches(g, plan, anchored),
                             budget.max_nodes, MergeMode.SUM, threads)
    if merged.status is SearchStatus.BUDGET:
        return SearchResult(SearchStatus.BUDGET, nodes_visited=merged.nodes)

    labeled = merged.value * plan.twin_factor * (g.n if anchored else 1)
    aut = automorphism_count(t)
    if labeled % aut:
        logger.error(f"Labeled count {labeled} of {t.name or t.edges} is not divisible by |Aut| = {aut}")
        raise InvariantError(f"labeled count {labeled} not divisible by |Aut(T)| = {aut}")
    count = labeled // aut
    return SearchResult(SearchStatus.FOUND if count else SearchStatus.NONE, nodes_visited=merged.nodes,
                        count=count, extra={"labeled": labeled, "automorphisms": aut})


def count_rainbow_tree(g: ColoredGraph, t: TreePattern, budget: SearchBudget | None = None,
                       anchored: bool = False, threads: int = 1) -> int:
    """
    Number of rainbow subgraphs of g isomorphic to t.

    Labeled embeddings divided by |Aut(t)|; with anchored=True the count at
    vertex 0 is scaled by n (caller asserts vertex-transitivity).

    Raises:
        BudgetExceededError: the node budget ran out
        InvariantError: the division by |Aut(t)| is not exact
    """
    result = count_rainbow_tree_result(g, t, budget, anchored, threads)
    if result.timed_out:
        raise BudgetExceededError(f"counting {t.name or 'pattern'} exceeded the node budget", result.nodes_visited)
    return result.count
