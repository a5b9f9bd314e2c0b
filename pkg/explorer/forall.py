"""Universally quantified checks over streams of coloring classes."""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import islice
from typing import Callable, Iterable

from errors import BudgetExceededError
from explorer.colorings import ColoringClass
from graphs.ecgraph import ColoredGraph
from patterns.trees import TreePattern, path_pattern
from rainbow.budget import SearchBudget
from rainbow.trees import find_rainbow_tree

logger = logging.getLogger(__name__)

BATCH_PER_WORKER = 8

# A predicate returns its verdict, or the verdict and the search nodes it spent.
Predicate = Callable[[ColoredGraph], bool | tuple[bool, int]]


@dataclass(frozen=True)
class RainbowTreePredicate:
    """
    "g has a rainbow copy of pattern" (present=True) or "g has none" (present=False).

    A frozen dataclass so it pickles into worker processes.
    """
    pattern: TreePattern
    present: bool
    max_nodes: int | None = None

    @classmethod
    def path(cls, k: int, present: bool) -> "RainbowTreePredicate":
        return cls(path_pattern(k), present)

    def describe(self) -> str:
        name = self.pattern.name or f"tree on {self.pattern.vertex_count} vertices"
        return f"{'has' if self.present else 'no'} rainbow {name}"

    def __call__(self, g: ColoredGraph) -> tuple[bool, int]:
        budget = SearchBudget(self.max_nodes) if self.max_nodes else None
        result = find_rainbow_tree(g, self.pattern, budget)
        if result.timed_out:
            raise BudgetExceededError(f"could not decide '{self.describe()}'", result.nodes_visited)
        return result.found == self.present, result.nodes_visited


@dataclass
class ForallReport:
    holds: bool
    classes_checked: int
    counterexample_index: int | None = None
    counterexample: ColoringClass | None = None
    nodes_visited: int = 0

    def to_json(self) -> dict:
        return {
            "verdict": "holds_for_all" if self.holds else "counterexample",
            "classes_checked": self.classes_checked,
            "counterexample_index": self.counterexample_index,
            "counterexample": self.counterexample.to_json() if self.counterexample else None,
            "nodes_visited": self.nodes_visited,
        }


def _evaluate(predicate: Predicate, coloring: ColoringClass) -> tuple[bool, int]:
    outcome = predicate(coloring.to_graph())
    if isinstance(outcome, tuple):
        return bool(outcome[0]), int(outcome[1])
    return bool(outcome), 0


def forall_check(classes: Iterable[ColoringClass], predicate: Predicate, threads: int = 1) -> ForallReport:
    """
    Evaluate predicate on every class until the first counterexample.

    Args:
        classes: Stream of coloring classes, consumed lazily
        predicate: Pure function of a ColoredGraph; must pickle when threads > 1
        threads: Worker processes; batches are evaluated in stream order

    Returns:
        ForallReport with the index of the first failing class, if any
    """
    stream = iter(classes)
    checked, nodes = 0, 0
    if threads <= 1:
        for index, coloring in enumerate(stream):
            verdict, spent = _evaluate(predicate, coloring)
            checked += 1
            nodes += spent
            if not verdict:
                logger.info(f"Counterexample at class {index}")
                return ForallReport(False, checked, index, coloring, nodes)
        return ForallReport(True, checked, nodes_visited=nodes)

    with ProcessPoolExecutor(max_workers=threads) as pool:
        while batch := list(islice(stream, threads * BATCH_PER_WORKER)):
            outcomes = list(pool.map(_evaluate, [predicate] * len(batch), batch))
            for coloring, (verdict, spent) in zip(batch, outcomes):
                checked += 1
                nodes += spent
                if not verdict:
                    logger.info(f"Counterexample at class {checked - 1}")
                    return ForallReport(False, checked, checked - 1, coloring, nodes)
    return ForallReport(True, checked, nodes_visited=nodes)
