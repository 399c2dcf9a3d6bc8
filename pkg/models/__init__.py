"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                          Models Package                                          │
│                                                                                                  │
│  Description: Domain models of the toolkit and the archive table.                                │
│               Importing the package registers every table with SQLAlchemy.                       │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

from .tanner_graph import ClassFlags, RegularityReport, SubsetProfile, TannerGraph, TrappingSetKind
from .formula import Assignment, ClassDescriptor, ClassViolation, MonotoneFormula
from .trace import GadgetInstance, GadgetKind, Provenance, ReductionTrace
from .search import (
    ClassEntry,
    EnumerationResult,
    SearchBudget,
    SearchProblem,
    SearchResult,
    SearchStatus,
)
from .report import (
    CheckStatus,
    InstanceDescriptor,
    RuntimeStats,
    SuiteReport,
    VerificationCheck,
    VerificationReport,
)
from .verification_run import VerificationRun

__all__ = [
    "TannerGraph",
    "TrappingSetKind",
    "ClassFlags",
    "SubsetProfile",
    "RegularityReport",
    "MonotoneFormula",
    "Assignment",
    "ClassDescriptor",
    "ClassViolation",
    "Provenance",
    "GadgetKind",
    "GadgetInstance",
    "ReductionTrace",
    "SearchProblem",
    "SearchStatus",
    "SearchBudget",
    "SearchResult",
    "ClassEntry",
    "EnumerationResult",
    "CheckStatus",
    "VerificationCheck",
    "InstanceDescriptor",
    "RuntimeStats",
    "VerificationReport",
    "SuiteReport",
    "VerificationRun",
]
