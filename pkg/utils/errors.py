"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                           Error Types                                            │
│                                                                                                  │
│  Description: Exception hierarchy shared by graph, formula, reduction and search layers.         │
│               The CLI maps these to exit codes; services never exit the process.                 │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

from typing import Optional


class ToolkitError(Exception):
    """Base class for every error raised by the toolkit"""

    exit_code = 2


class GraphError(ToolkitError):
    """Simple-graph violation or out-of-range node index"""


class ParseError(ToolkitError):
    """Malformed input text; carries the 1-based line number when known"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class AlistParseError(ParseError):
    """Inconsistent or truncated alist document"""


class FormulaParseError(ParseError):
    """Malformed monotone formula document"""


class FormulaError(ToolkitError):
    """Invalid formula structure (repeated variable, unknown id, ...)"""


class AssignmentError(ToolkitError):
    """Assignment is partial or does not match the formula"""


class OracleLimitError(ToolkitError):
    """Instance too large for an exhaustive oracle"""

    exit_code = 3


class InstanceError(ToolkitError):
    """Generator parameters admit no instance of the requested class"""


class ReductionError(ToolkitError):
    """Reduction input violates its class or precondition"""


class SearchError(ToolkitError):
    """Invalid search arguments"""
