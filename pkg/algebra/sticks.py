"""Broom-stick sequences: distinct nonzero GF(2) vectors whose prefix sums stay inside the set.

Only the linear relations among w_1..w_d matter, and d vectors span at most
d dimensions, so searching GF(2)^d covers vectors of any length. Sequences
are generated up to invertible linear maps by canonical extension: every new
vector is either an element of the span of its predecessors or the next
unused standard basis vector. With that convention the span of a prefix of
rank r is exactly the integers in [0, 2^r).
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from errors import DomainError, InvariantError, PreconditionError, SizeLimitError
from config.settings import settings
from algebra.gf2 import GF2Vec, rank

logger = logging.getLogger(__name__)

SPLIT_DEPTH = 4


@dataclass(frozen=True)
class StickSequence:
    vectors: tuple[GF2Vec, ...]

    @property
    def d(self) -> int:
        return len(self.vectors)

    @classmethod
    def from_ints(cls, values: list[int] | tuple[int, ...], dimension: int | None = None) -> "StickSequence":
        dimension = dimension if dimension is not None else max(1, max(values, default=0).bit_length())
        return cls(tuple(GF2Vec(v, dimension) for v in values))

    def as_ints(self) -> list[int]:
        return [v.bits for v in self.vectors]

    def prefix_sums(self) -> list[int]:
        sums, total = [], 0
        for v in self.vectors:
            total ^= v.bits
            sums.append(total)
        return sums


@dataclass
class StickSearchResult:
    d: int
    status: str                       # "sat" | "unsat"
    witness: StickSequence | None
    nodes: int
    witnesses: list[StickSequence] = field(default_factory=list)

    def to_json(self) -> dict:
        data = {
            "d": self.d,
            "status": self.status,
            "witness": self.witness.as_ints() if self.witness else [],
            "nodes": self.nodes,
        }
        if self.witnesses:
            data["all"] = [w.as_ints() for w in self.witnesses]
        return data


def stick_sequence_valid(seq: StickSequence) -> bool:
    """
    Check that every prefix sum of the sequence is one of its vectors.

    Raises PreconditionError when the vectors are not distinct and nonzero.
    """
    values = seq.as_ints()
    if any(v == 0 for v in values):
        raise PreconditionError("stick vectors must be nonzero")
    if len(set(values)) != len(values):
        raise PreconditionError("stick vectors must be distinct")
    members = set(values)
    return all(s in members for s in seq.prefix_sums())


@dataclass
class _State:
    """Search position after choosing a prefix of the sequence."""
    chosen: list[int]
    prefix: int
    rank: int
    pending: frozenset[int]           # prefix sums not yet present among the chosen vectors


class _Search:
    def __init__(self, d: int, collect_all: bool):
        self.d = d
        self.collect_all = collect_all
        self.nodes = 0
        self.witnesses: list[list[int]] = []

    def children(self, state: _State) -> list[_State]:
        a = len(state.chosen)
        slots_after = self.d - a - 1
        members = set(state.chosen)
        candidates = [c for c in range(1, 1 << state.rank) if c not in members]
        if state.rank < self.d:
            candidates.append(1 << state.rank)

        result = []
        for c in candidates:
            prefix = state.prefix ^ c
            if prefix == 0:
                continue
            pending = state.pending - {c}
            if prefix != c and prefix not in members and prefix not in pending:
                pending = pending | {prefix}
            if len(pending) > slots_after:
                continue
            new_rank = state.rank + 1 if c == 1 << state.rank else state.rank
            result.append(_State(state.chosen + [c], prefix, new_rank, pending))
        return result

    def run(self, state: _State) -> bool:
        """Depth-first from state; True once a witness stops the search."""
        self.nodes += 1
        if len(state.chosen) == self.d:
            if not state.pending:
                self.witnesses.append(list(state.chosen))
                return not self.collect_all
            return False
        for child in self.children(state):
            if self.run(child):
                return True
        return False

    def frontier(self, state: _State, depth: int, out: list[tuple[int, _State]]) -> bool:
        """Collect states at `depth`, each tagged with the nodes visited before it."""
        if len(state.chosen) == depth or len(state.chosen) == self.d:
            out.append((self.nodes, state))
            return False
        self.nodes += 1
        for child in self.children(state):
            if self.frontier(child, depth, out):
                return True
        return False


def _run_subtree(d: int, collect_all: bool, state: _State) -> tuple[int, list[list[int]]]:
    search = _Search(d, collect_all)
    search.run(state)
    return search.nodes, search.witnesses


def stick_sequence_search(d: int, find_all: bool = False, threads: int = 1) -> StickSearchResult:
    """
    Exhaustive search for a stick sequence of length d.

    Args:
        d: Sequence length in [1, settings.MAX_STICK_LENGTH]
        find_all: Collect every canonical witness instead of stopping at the first
        threads: Worker processes; results are identical for any value

    Returns:
        StickSearchResult; "unsat" only after the space is exhausted
    """
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    if d > settings.MAX_STICK_LENGTH:
        raise SizeLimitError(f"stick search is capped at d = {settings.MAX_STICK_LENGTH}, got {d}")
    root = _State([], 0, 0, frozenset())

    if threads <= 1:
        search = _Search(d, find_all)
        search.run(root)
        nodes, found = search.nodes, search.witnesses
    else:
        splitter = _Search(d, find_all)
        frontier: list[tuple[int, _State]] = []
        splitter.frontier(root, min(SPLIT_DEPTH, d), frontier)
        logger.debug(f"Stick search d={d}: {len(frontier)} subtrees over {threads} workers")
        subtree_nodes, found = 0, []
        nodes = None
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_run_subtree, d, find_all, state) for _, state in frontier]
            for (visited_before, _), future in zip(frontier, futures):
                sub_nodes, sub_found = future.result()
                subtree_nodes += sub_nodes
                if not find_all and sub_found:
                    # Same count as the sequential run: prefix states seen before this subtree.
                    nodes = visited_before + subtree_nodes
                    found = sub_found
                    pool.shutdown(cancel_futures=True)
                    break
                found.extend(sub_found)
        if nodes is None:
            nodes = splitter.nodes + subtree_nodes

    witnesses = [StickSequence.from_ints(w, d) for w in found]
    for w in witnesses:
        if not stick_sequence_valid(w):
            raise InvariantError(f"solver produced an invalid stick sequence {w.as_ints()}")
    status = "sat" if witnesses else "unsat"
    witness = witnesses[0] if witnesses else None
    if witness:
        logger.info(f"Stick sequence d={d}: sat after {nodes} nodes, witness {witness.as_ints()} (rank {rank(witness.as_ints())})")
    else:
        logger.info(f"Stick sequence d={d}: unsat after {nodes} nodes")
    return StickSearchResult(d, status, witness, nodes, witnesses if find_all else [])
