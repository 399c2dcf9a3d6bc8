"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                          Search Models                                           │
│                                                                                                  │
│  Description: Budgets, results and enumeration entries for the exact trapping-set searches.      │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

from enum import Enum
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from models.tanner_graph import TrappingSetKind


class SearchStatus(str, Enum):
    FOUND = "found"
    INFEASIBLE = "infeasible"
    BUDGET_EXCEEDED = "budget_exceeded"


class SearchProblem(str, Enum):
    MIN_B = "min_b"
    MIN_A = "min_a"
    ENUMERATE = "enumerate"


class SearchBudget(BaseModel):
    """Limits for one search; None means unlimited.

    max_nodes bounds the whole call. Worker partitions each get an even share,
    and min_a levels draw on what earlier levels left, so the reported
    nodes_expanded exceeds max_nodes by at most one node per partition.
    """

    model_config = ConfigDict(frozen=True)

    max_subset_size: Optional[int] = Field(default=None, ge=1)
    max_nodes: Optional[int] = Field(default=None, ge=1)
    max_seconds: Optional[float] = Field(default=None, gt=0)


# Excluded when comparing results of runs that differ only in effort
EFFORT_FIELDS = {"nodes_expanded", "elapsed_seconds", "threads", "pruning"}


class SearchResult(BaseModel):
    """Outcome of min_b or min_a.

    found: `witness` is an (a, b) set of `kind` and the optimum is exact.
    infeasible: the search finished and no set of `kind` meets the constraint.
    budget_exceeded: a limit hit first; `a`, `b` and `witness` then describe
    the best set seen so far, if any, and are only a bound.
    """

    model_config = ConfigDict(frozen=True)

    problem: SearchProblem
    kind: TrappingSetKind
    status: SearchStatus
    a: Optional[int] = None
    b: Optional[int] = None
    witness: Optional[Tuple[int, ...]] = None
    nodes_expanded: int = 0
    elapsed_seconds: float = 0.0
    threads: int = 1
    pruning: bool = True
    notes: Tuple[str, ...] = ()

    @model_validator(mode="after")
    def _check_witness(self) -> "SearchResult":
        if self.status == SearchStatus.FOUND:
            if self.witness is None or self.a is None or self.b is None:
                raise ValueError("a found result carries a, b and a witness")
            if len(self.witness) != self.a:
                raise ValueError("witness size must equal a")
        if self.status == SearchStatus.INFEASIBLE and self.witness is not None:
            raise ValueError("an infeasible result has no witness")
        return self

    @property
    def found(self) -> bool:
        return self.status == SearchStatus.FOUND

    def comparable(self) -> Dict[str, Any]:
        """Fields that must not depend on pruning or worker count"""
        return self.model_dump(mode="json", exclude=EFFORT_FIELDS)


class ClassEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    a: int
    b: int
    witness: Tuple[int, ...]


class EnumerationResult(BaseModel):
    """Every set of `kind` with a <= a_max and b <= b_max, ordered by (a, b, witness)"""

    model_config = ConfigDict(frozen=True)

    kind: TrappingSetKind
    a_max: int
    b_max: int
    status: SearchStatus
    entries: Tuple[ClassEntry, ...] = ()
    nodes_expanded: int = 0
    elapsed_seconds: float = 0.0
    threads: int = 1
    pruning: bool = True
    notes: Tuple[str, ...] = ()

    @property
    def partial(self) -> bool:
        return self.status == SearchStatus.BUDGET_EXCEEDED

    def comparable(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", exclude=EFFORT_FIELDS)
