"""Claim and report types shared by the claim bodies, the registry and the archive."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable

from errors import InvariantError
from config.settings import settings
from rainbow.budget import SearchBudget


class ClaimStatus(str, Enum):
    VERIFIED = "VERIFIED"
    REFUTED = "REFUTED"
    SKIPPED = "SKIPPED"
    MISMATCH = "MISMATCH"


class SkipReason(str, Enum):
    BUDGET = "budget"
    PARAMETER_INFEASIBLE = "parameter-infeasible"
    SIZE_CAP = "size-cap"


@dataclass(frozen=True)
class ClaimContext:
    """What a claim body may depend on. Nothing else influences a verdict."""
    budget: SearchBudget = field(default_factory=SearchBudget)
    threads: int = settings.DEFAULT_THREADS


@dataclass
class ClaimReport:
    claim_id: str
    status: ClaimStatus
    reason: SkipReason | None = None
    expected: Any = None
    found: Any = None
    witness: Any = None
    nodes_visited: int = 0
    wall_time: float = 0.0
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status in (ClaimStatus.REFUTED, ClaimStatus.MISMATCH) and self.witness is None and self.found is None:
            raise InvariantError(f"{self.claim_id}: {self.status.value} needs a witness or a computed value")
        if self.status is ClaimStatus.SKIPPED and self.reason is None:
            raise InvariantError(f"{self.claim_id}: SKIPPED needs a reason")

    @property
    def ok(self) -> bool:
        return self.status is ClaimStatus.VERIFIED

    def to_json(self, include_time: bool = True) -> dict:
        """Fixed field order; wall_time is the only field that varies between identical runs."""
        data = {
            "claim_id": self.claim_id,
            "status": self.status.value,
            "reason": self.reason.value if self.reason else None,
            "expected": self.expected,
            "found": self.found,
            "witness": self.witness,
            "nodes_visited": self.nodes_visited,
        }
        if include_time:
            data["wall_time"] = round(self.wall_time, 6)
        data["details"] = self.details
        return data


ClaimRunner = Callable[[ClaimContext], ClaimReport]


@dataclass(frozen=True)
class Claim:
    """
    A registered, executable statement.

    Attributes:
        id: Stable identifier such as "D-PATH-S3"
        description: What is checked
        statement: The source statement being checked, in words
        parameters: Instance parameters
        expected: Expected verdict or value
        runner: Claim body
        formula_check: MISMATCH is an accepted outcome (counting formula comparisons)
        optional: SKIPPED is an accepted outcome (instances known to strain the budget)
        deep: Only run with run_all(deep=True)
        reference: Which published result the claim checks, as a short topical label
    """
    id: str
    description: str
    statement: str
    parameters: dict
    expected: Any
    runner: ClaimRunner
    formula_check: bool = False
    optional: bool = False
    deep: bool = False
    reference: str = ""

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "statement": self.statement,
            "reference": self.reference,
            "parameters": self.parameters,
            "expected": self.expected,
            "formula_check": self.formula_check,
            "optional": self.optional,
            "deep": self.deep,
        }
