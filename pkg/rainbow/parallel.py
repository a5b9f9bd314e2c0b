"""Branch-partitioned search with a merge that does not depend on the worker count.

A search is split into top-level branches (root image, start vertex, ...).
Every branch is explored on its own with the full node budget and reports a
BranchOutcome; outcomes are then merged strictly in branch order with a
cumulative node count. Sequential and parallel runs therefore return the
same status, witness, count and node total.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, Iterator, Sequence

from rainbow.budget import BudgetHit, NodeCounter, SearchStatus

logger = logging.getLogger(__name__)

CHUNKS_PER_WORKER = 4


class MergeMode(str, Enum):
    FIRST = "first"   # first witness in branch order
    SUM = "sum"       # add the branch counts
    MAX = "max"       # largest branch value, earliest branch on ties
    COLLECT = "collect"  # keep every branch witness in order, add the values


@dataclass
class BranchOutcome:
    nodes: int
    budget_hit: bool = False
    value: int = 0
    witness: Any = None


@dataclass
class MergedResult:
    status: SearchStatus
    nodes: int
    value: int
    witness: Any


class BranchKernel:
    """
    Per-process search state over one read-only context.

    Subclasses implement explore(branch, counter); it returns (value, witness)
    and may raise BudgetHit through the counter.
    """

    def __init__(self, context: Any):
        self.context = context

    def explore(self, branch: Any, counter: NodeCounter) -> tuple[int, Any]:
        raise NotImplementedError


def _run_chunk(kernel_cls: type[BranchKernel], context: Any, branches: Sequence[Any],
               limit: int, mode: MergeMode) -> list[BranchOutcome]:
    kernel = kernel_cls(context)
    outcomes = []
    spent = 0
    for branch in branches:
        counter = NodeCounter(limit)
        try:
            value, witness = kernel.explore(branch, counter)
        except BudgetHit:
            outcomes.append(BranchOutcome(counter.nodes, budget_hit=True))
            break
        outcomes.append(BranchOutcome(counter.nodes, False, value, witness))
        spent += counter.nodes
        # Later branches of this chunk cannot change the merged verdict.
        if spent > limit or (mode is MergeMode.FIRST and witness is not None):
            break
    return outcomes


def _chunks(items: Sequence[Any], count: int) -> list[Sequence[Any]]:
    size = max(1, -(-len(items) // count))
    return [items[i:i + size] for i in range(0, len(items), size)]


def _outcomes(kernel_cls, context, branches, limit, mode, threads) -> Iterator[BranchOutcome]:
    if threads <= 1 or len(branches) <= 1:
        yield from _run_chunk(kernel_cls, context, branches, limit, mode)
        return
    chunks = _chunks(branches, threads * CHUNKS_PER_WORKER)
    logger.debug(f"{kernel_cls.__name__}: {len(branches)} branches in {len(chunks)} chunks over {threads} workers")
    pool = ProcessPoolExecutor(max_workers=threads)
    try:
        futures = [pool.submit(_run_chunk, kernel_cls, context, chunk, limit, mode) for chunk in chunks]
        for chunk, future in zip(chunks, futures):
            results = future.result()
            yield from results
            if len(results) < len(chunk):
                return
    finally:
        pool.shutdown(wait=False, cancel_futures=True)


def merge_outcomes(outcomes: Iterable[BranchOutcome], limit: int, mode: MergeMode) -> MergedResult:
    """Fold branch outcomes in branch order; a budget verdict reports `limit` nodes."""
    nodes, total, best, witness = 0, 0, -1, None
    collected = []
    for outcome in outcomes:
        nodes += outcome.nodes
        if outcome.budget_hit or nodes > limit:
            return MergedResult(SearchStatus.BUDGET, limit, best if mode is MergeMode.MAX else total, collected if mode is MergeMode.COLLECT else witness)
        if mode is MergeMode.FIRST:
            if outcome.witness is not None:
                return MergedResult(SearchStatus.FOUND, nodes, 1, outcome.witness)
        elif mode is MergeMode.SUM:
            total += outcome.value
        elif mode is MergeMode.COLLECT:
            total += outcome.value
            collected.append(outcome.witness)
        elif outcome.value > best:
            best, witness = outcome.value, outcome.witness

    if mode is MergeMode.FIRST:
        return MergedResult(SearchStatus.NONE, nodes, 0, None)
    if mode is MergeMode.SUM:
        return MergedResult(SearchStatus.FOUND if total else SearchStatus.NONE, nodes, total, None)
    if mode is MergeMode.COLLECT:
        return MergedResult(SearchStatus.FOUND if total else SearchStatus.NONE, nodes, total, collected)
    return MergedResult(SearchStatus.FOUND if witness is not None else SearchStatus.NONE, nodes, max(best, 0), witness)


def search_branches(kernel_cls: type[BranchKernel], context: Any, branches: Sequence[Any],
                    limit: int, mode: MergeMode, threads: int = 1) -> MergedResult:
    """
    Explore every branch and merge deterministically.

    Args:
        kernel_cls: Module-level BranchKernel subclass (must pickle by reference)
        context: Read-only data handed to each kernel instance
        branches: Top-level branches in their canonical order
        limit: Node budget for the whole search
        mode: How branch outcomes combine
        threads: Worker processes; 1 runs in-process

    Returns:
        MergedResult identical for every value of threads
    """
    return merge_outcomes(_outcomes(kernel_cls, context, list(branches), limit, mode, threads), limit, mode)
