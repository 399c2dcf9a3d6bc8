"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                    Verification Report Models                                    │
│                                                                                                  │
│  Description: Versioned JSON reports produced by the verification pipelines.                     │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

from enum import Enum
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field

REPORT_SCHEMA_VERSION = "1.0"

# Never part of golden-file comparisons
TIMING_FIELDS = {"stats": {"elapsed_seconds"}}


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


class VerificationCheck(BaseModel):
    """One observed/expected comparison.

    provenance names where the two sides come from: construction counts,
    the SAT oracle, the exact search, witness transport or a gadget sweep.
    """

    model_config = ConfigDict(frozen=True)

    name: str
    status: CheckStatus
    observed: Any = None
    expected: Any = None
    provenance: str = Field(..., min_length=1)
    reason: Optional[str] = None


class InstanceDescriptor(BaseModel):
    model_config = ConfigDict(frozen=True)

    source: str
    seed: Optional[int] = None
    params: Dict[str, Any] = Field(default_factory=dict)
    digest: Optional[str] = None


class RuntimeStats(BaseModel):
    model_config = ConfigDict(frozen=True)

    elapsed_seconds: float = 0.0
    nodes_expanded: int = 0
    oracle_calls: int = 0


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    schema_version: str = REPORT_SCHEMA_VERSION
    pipeline: str
    instance: InstanceDescriptor
    checks: Tuple[VerificationCheck, ...]
    stats: RuntimeStats = Field(default_factory=RuntimeStats)

    @computed_field
    @property
    def passed(self) -> bool:
        """Skips do not fail a pipeline; only contradictions do"""
        return all(check.status != CheckStatus.FAIL for check in self.checks)

    def failures(self) -> Tuple[VerificationCheck, ...]:
        return tuple(c for c in self.checks if c.status == CheckStatus.FAIL)

    def skipped(self) -> Tuple[VerificationCheck, ...]:
        return tuple(c for c in self.checks if c.status == CheckStatus.SKIP)

    def deterministic_dump(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", exclude=TIMING_FIELDS)


class SuiteReport(BaseModel):
    """Several pipeline reports run as one schedule"""

    model_config = ConfigDict(frozen=True)

    schema_version: str = REPORT_SCHEMA_VERSION
    seed: int
    reports: Tuple[VerificationReport, ...]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    def deterministic_dump(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", exclude={"reports": {"__all__": TIMING_FIELDS}})
