"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                       Tanner Graph Models                                        │
│                                                                                                  │
│  Description: Bipartite Tanner graph, induced-subgraph profile and regularity report.            │
│               Graphs are immutable once validated and safe to share between searchers.           │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class TrappingSetKind(str, Enum):
    """Trapping-set categories, from the plain TS down to the elementary ones"""

    TS = "TS"
    ETS = "ETS"
    LETS = "LETS"
    ABS = "ABS"
    EABS = "EABS"

    @property
    def is_elementary(self) -> bool:
        return self in (TrappingSetKind.ETS, TrappingSetKind.LETS, TrappingSetKind.EABS)


class TannerGraph(BaseModel):
    """Variable nodes U, check nodes W and the edges between them (0-based)"""

    model_config = ConfigDict(frozen=True)

    n_var: int = Field(..., ge=0)
    n_chk: int = Field(..., ge=0)
    var_adj: Tuple[Tuple[int, ...], ...]
    chk_adj: Tuple[Tuple[int, ...], ...]
    var_labels: Optional[Tuple[str, ...]] = None
    chk_labels: Optional[Tuple[str, ...]] = None

    @model_validator(mode="after")
    def _check_adjacency(self) -> "TannerGraph":
        if len(self.var_adj) != self.n_var or len(self.chk_adj) != self.n_chk:
            raise ValueError("adjacency length does not match node counts")
        if self.var_labels is not None and len(self.var_labels) != self.n_var:
            raise ValueError("variable label count does not match n_var")
        if self.chk_labels is not None and len(self.chk_labels) != self.n_chk:
            raise ValueError("check label count does not match n_chk")

        forward = set()
        for v, checks in enumerate(self.var_adj):
            if len(set(checks)) != len(checks):
                raise ValueError(f"variable {v} has a repeated check (graph must be simple)")
            for c in checks:
                if not 0 <= c < self.n_chk:
                    raise ValueError(f"variable {v} lists check {c} out of range")
                forward.add((v, c))
        backward = set()
        for c, variables in enumerate(self.chk_adj):
            if len(set(variables)) != len(variables):
                raise ValueError(f"check {c} has a repeated variable (graph must be simple)")
            for v in variables:
                if not 0 <= v < self.n_var:
                    raise ValueError(f"check {c} lists variable {v} out of range")
                backward.add((v, c))
        if forward != backward:
            raise ValueError("variable and check adjacency lists disagree")
        return self

    @property
    def n_edges(self) -> int:
        return sum(len(checks) for checks in self.var_adj)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as (variable, check) pairs in variable-major order"""
        return [(v, c) for v, checks in enumerate(self.var_adj) for c in checks]

    def var_degree(self, v: int) -> int:
        return len(self.var_adj[v])

    def chk_degree(self, c: int) -> int:
        return len(self.chk_adj[c])

    def var_label(self, v: int) -> str:
        return self.var_labels[v] if self.var_labels else f"v{v}"

    def chk_label(self, c: int) -> str:
        return self.chk_labels[c] if self.chk_labels else f"c{c}"

    def same_structure(self, other: "TannerGraph") -> bool:
        """Equality up to neighbor ordering, ignoring labels"""
        return (
            self.n_var == other.n_var
            and self.n_chk == other.n_chk
            and [sorted(a) for a in self.var_adj] == [sorted(a) for a in other.var_adj]
        )


class ClassFlags(BaseModel):
    """Trapping-set category membership of one variable subset"""

    model_config = ConfigDict(frozen=True)

    is_ets: bool
    is_lets: bool
    is_abs: bool
    is_eabs: bool

    @model_validator(mode="after")
    def _check_implications(self) -> "ClassFlags":
        if self.is_lets and not self.is_ets:
            raise ValueError("a LETS is always an ETS")
        if self.is_eabs and not (self.is_abs and self.is_ets):
            raise ValueError("an EABS is always an ABS and an ETS")
        return self

    @property
    def is_ts(self) -> bool:
        # every nonempty subset is an (a, b) trapping set
        return True

    def has(self, kind: TrappingSetKind) -> bool:
        return {
            TrappingSetKind.TS: self.is_ts,
            TrappingSetKind.ETS: self.is_ets,
            TrappingSetKind.LETS: self.is_lets,
            TrappingSetKind.ABS: self.is_abs,
            TrappingSetKind.EABS: self.is_eabs,
        }[kind]


class SubsetProfile(BaseModel):
    """Induced subgraph G(S) summary: sizes, odd/even check split and flags"""

    model_config = ConfigDict(frozen=True)

    subset: Tuple[int, ...]
    a: int
    odd_checks: Tuple[int, ...]
    even_checks: Tuple[int, ...]
    check_degrees: Dict[int, int]
    flags: Optional[ClassFlags] = None

    @model_validator(mode="after")
    def _check_split(self) -> "SubsetProfile":
        if self.a != len(self.subset):
            raise ValueError("a must equal |S|")
        if set(self.odd_checks) & set(self.even_checks):
            raise ValueError("a check cannot be both odd and even")
        if set(self.odd_checks) | set(self.even_checks) != set(self.check_degrees):
            raise ValueError("odd and even checks must cover N(S)")
        for c, degree in self.check_degrees.items():
            if degree < 1:
                raise ValueError(f"check {c} in N(S) has degree {degree}")
            if (degree % 2 == 1) != (c in self.odd_checks):
                raise ValueError(f"check {c} parity does not match its class")
        return self

    @property
    def b(self) -> int:
        return len(self.odd_checks)

    @property
    def class_label(self) -> str:
        return f"({self.a},{self.b})"


class RegularityReport(BaseModel):
    """Whether every variable (check) node shares one degree"""

    model_config = ConfigDict(frozen=True)

    is_var_regular: bool
    d_v: Optional[int] = None
    is_chk_regular: bool
    d_c: Optional[int] = None

    @property
    def is_regular(self) -> bool:
        return self.is_var_regular and self.is_chk_regular
