"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                      Reduction Trace Models                                      │
│                                                                                                  │
│  Description: Provenance of every variable and clause (or variable node and check node) produced │
│               by a reduction step, plus the gadget instances placed along the way.               │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

from enum import Enum
from typing import Any, Dict, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Provenance(BaseModel):
    """Where one output object came from.

    origin "source" keeps an input object unchanged, "copy" renames or
    replicates one, "gadget" is a fresh object with a role inside a gadget.
    source_index points into the step's input (variables for variables,
    clauses for clauses).
    """

    model_config = ConfigDict(frozen=True)

    origin: Literal["source", "copy", "gadget"]
    source_index: Optional[int] = None
    source: Optional[str] = None
    role: Optional[str] = None
    indices: Tuple[int, ...] = ()
    gadget: Optional[int] = None

    @model_validator(mode="after")
    def _check_origin(self) -> "Provenance":
        if self.origin in ("source", "copy") and self.source_index is None:
            raise ValueError(f"{self.origin} provenance needs a source index")
        if self.origin == "gadget" and self.role is None:
            raise ValueError("gadget provenance needs a role")
        return self

    def describe(self) -> str:
        if self.origin == "gadget":
            suffix = "".join(f"[{i}]" for i in self.indices)
            owner = f" of {self.source}" if self.source else ""
            return f"{self.role}{suffix}{owner}"
        return f"{self.origin} {self.source or self.source_index}"


class GadgetKind(str, Enum):
    EQUALIZER = "equalizer"
    FORCING_BLOCK = "forcing_block"
    OCCURRENCE_BLOCK = "occurrence_block"
    LETS_CLAUSE = "lets_clause"
    EABS_CLAUSE = "eabs_clause"


# Role cardinalities as functions of the gadget parameters
_ROLE_SIZES = {
    GadgetKind.EQUALIZER: lambda p: {
        "black": 3 * p["t"],
        "grey": 2 * p["t"],
        "white": 2 * p["t"] * (p["k"] - 2),
    },
    GadgetKind.FORCING_BLOCK: lambda p: {"x": p["beta"] - 1, "y": p["beta"] - 2},
    GadgetKind.OCCURRENCE_BLOCK: lambda p: {
        "x": p["alpha"],
        "y": (p["alpha"] - 3) * (p["beta"] - 1),
    },
    GadgetKind.LETS_CLAUSE: lambda p: {"g": 3, "y": p["z"], "w1": 1, "w2": 1},
    GadgetKind.EABS_CLAUSE: lambda p: {"g": 5, "y": p["z"], "s": p["z"], "w1": 1, "w2": 1},
}


class GadgetInstance(BaseModel):
    """One placed gadget: its parameters and the output ids playing each role"""

    model_config = ConfigDict(frozen=True)

    kind: GadgetKind
    params: Dict[str, int]
    variable_roles: Dict[str, Tuple[int, ...]]
    constraint_roles: Dict[str, Tuple[int, ...]] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_cardinalities(self) -> "GadgetInstance":
        roles = {**self.variable_roles, **self.constraint_roles}
        for role, size in _ROLE_SIZES[self.kind](self.params).items():
            if len(roles.get(role, ())) != size:
                raise ValueError(
                    f"{self.kind.value} gadget role {role!r} has {len(roles.get(role, ()))} "
                    f"members, expected {size}"
                )
        return self


class ReductionTrace(BaseModel):
    """Per-step provenance; a composite chain keeps its steps in `parts`"""

    model_config = ConfigDict(frozen=True)

    step: str
    params: Dict[str, Any] = Field(default_factory=dict)
    variables: Tuple[Provenance, ...]
    constraints: Tuple[Provenance, ...]
    gadgets: Tuple[GadgetInstance, ...] = ()
    parts: Tuple["ReductionTrace", ...] = ()

    def covers(self, n_variables: int, n_constraints: int) -> bool:
        """Exactly one provenance entry per output variable and constraint"""
        return len(self.variables) == n_variables and len(self.constraints) == n_constraints

    def gadgets_of(self, kind: GadgetKind) -> Tuple[GadgetInstance, ...]:
        return tuple(g for g in self.gadgets if g.kind == kind)


ReductionTrace.model_rebuild()
