"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                     Monotone Formula Models                                      │
│                                                                                                  │
│  Description: Negation-free CNF formulas, total truth assignments and formula class descriptors. │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

from typing import Dict, Iterable, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from utils.errors import AssignmentError


class MonotoneFormula(BaseModel):
    """Variables X (by name, id = position) and clauses C as sorted id tuples.

    There is no way to express a negation. Repeated whole clauses are allowed;
    a variable may not repeat inside one clause.
    """

    model_config = ConfigDict(frozen=True)

    variables: Tuple[str, ...]
    clauses: Tuple[Tuple[int, ...], ...]

    @field_validator("variables")
    @classmethod
    def _check_names(cls, names: Tuple[str, ...]) -> Tuple[str, ...]:
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        for name in names:
            if not name or any(ch.isspace() for ch in name):
                raise ValueError(f"invalid variable name {name!r}")
        return names

    @model_validator(mode="after")
    def _check_clauses(self) -> "MonotoneFormula":
        n = len(self.variables)
        for index, clause in enumerate(self.clauses):
            if not clause:
                raise ValueError(f"clause {index} is empty")
            if len(set(clause)) != len(clause):
                raise ValueError(f"clause {index} repeats a variable")
            if any(not 0 <= x < n for x in clause):
                raise ValueError(f"clause {index} references an unknown variable")
            if list(clause) != sorted(clause):
                raise ValueError(f"clause {index} is not sorted")
        return self

    @classmethod
    def build(cls, variables: Iterable[str], clauses: Iterable[Iterable[int]]) -> "MonotoneFormula":
        """Construct from unsorted clauses"""
        return cls(
            variables=tuple(variables),
            clauses=tuple(tuple(sorted(c)) for c in clauses),
        )

    @property
    def n_vars(self) -> int:
        return len(self.variables)

    @property
    def n_clauses(self) -> int:
        return len(self.clauses)

    def occurrences(self) -> List[int]:
        counts = [0] * self.n_vars
        for clause in self.clauses:
            for x in clause:
                counts[x] += 1
        return counts

    @property
    def beta(self) -> Optional[int]:
        """Common clause width, None when irregular"""
        widths = {len(c) for c in self.clauses}
        return widths.pop() if len(widths) == 1 else None

    @property
    def alpha(self) -> Optional[int]:
        """Common occurrence count, None when irregular"""
        counts = set(self.occurrences())
        return counts.pop() if len(counts) == 1 else None

    @property
    def is_cubic(self) -> bool:
        return self.alpha == 3

    def index_of(self, name: str) -> int:
        return self.variables.index(name)

    def clause_names(self, index: int) -> Tuple[str, ...]:
        return tuple(self.variables[x] for x in self.clauses[index])


class Assignment(BaseModel):
    """Total truth assignment, values[i] is the value of variable i"""

    model_config = ConfigDict(frozen=True)

    values: Tuple[bool, ...]

    @classmethod
    def from_true_set(cls, n_vars: int, true_vars: Iterable[int]) -> "Assignment":
        chosen = set(true_vars)
        return cls(values=tuple(i in chosen for i in range(n_vars)))

    @classmethod
    def from_mapping(cls, formula: MonotoneFormula, mapping: Dict[str, bool]) -> "Assignment":
        """Total assignment from a name->value map; raises on missing names"""
        missing = [name for name in formula.variables if name not in mapping]
        if missing:
            raise AssignmentError(f"assignment is partial, missing {', '.join(missing[:5])}")
        return cls(values=tuple(bool(mapping[name]) for name in formula.variables))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index: int) -> bool:
        return self.values[index]

    def true_set(self) -> Tuple[int, ...]:
        return tuple(i for i, value in enumerate(self.values) if value)

    def to_mapping(self, formula: MonotoneFormula) -> Dict[str, bool]:
        return dict(zip(formula.variables, self.values))

    def render(self) -> str:
        return "".join("T" if value else "F" for value in self.values)


class ClassDescriptor(BaseModel):
    """Required clause width and occurrence count of a formula class"""

    model_config = ConfigDict(frozen=True)

    require_beta: Optional[int] = Field(default=None, ge=1)
    require_alpha: Optional[int] = Field(default=None, ge=1)
    require_cubic: bool = False

    @model_validator(mode="after")
    def _check_consistency(self) -> "ClassDescriptor":
        if self.require_cubic and self.require_alpha not in (None, 3):
            raise ValueError("a cubic class has alpha = 3")
        return self

    @property
    def alpha(self) -> Optional[int]:
        return 3 if self.require_cubic else self.require_alpha


class ClassViolation(BaseModel):
    """One clause of the wrong width or one variable with the wrong occurrence count"""

    model_config = ConfigDict(frozen=True)

    kind: Literal["clause_width", "occurrence"]
    index: int
    subject: str
    observed: int
    expected: int
