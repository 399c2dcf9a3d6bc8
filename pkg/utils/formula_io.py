"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                   Monotone Formula Text Format                                   │
│                                                                                                  │
│  Description: DIMACS-style reader and writer for negation-free formulas: a 'p monotone' header,  │
│               an optional 'v' name line and one clause of variable names per line.               │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import hashlib
import logging
from typing import Dict, List, Optional

from models.formula import MonotoneFormula
from utils.errors import FormulaError, FormulaParseError

logger = logging.getLogger(__name__)

HEADER_TAG = "monotone"
# Opens the names line, so never a variable name
NAMES_TAG = "v"


def parse_formula(text: str) -> MonotoneFormula:
    """Parse a monotone formula document.

    Comment lines start with '#' anywhere, or with 'c' before the header.
    Without a 'v' line, variables are numbered in order of first appearance and
    the header count must equal the number of distinct names.
    """
    header_line: Optional[int] = None
    declared_vars = declared_clauses = 0
    names: List[str] = []
    index: Dict[str, int] = {}
    names_fixed = False
    clauses: List[List[int]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()

        if header_line is None:
            if tokens[0] == "c":
                continue
            if tokens[0] != "p":
                raise FormulaParseError("expected header 'p monotone <n_vars> <n_clauses>'", number)
            if len(tokens) != 4 or tokens[1] != HEADER_TAG:
                raise FormulaParseError(f"invalid problem line {line!r}", number)
            try:
                declared_vars, declared_clauses = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise FormulaParseError("header counts must be integers", number)
            if declared_vars < 0 or declared_clauses < 0:
                raise FormulaParseError("header counts must be non-negative", number)
            header_line = number
            continue

        if tokens[0] == NAMES_TAG and not names_fixed and not clauses:
            names = tokens[1:]
            if NAMES_TAG in names:
                raise FormulaParseError(f"{NAMES_TAG!r} is reserved for the names line", number)
            if len(names) != declared_vars:
                raise FormulaParseError(
                    f"header declares {declared_vars} variables, 'v' line names {len(names)}", number
                )
            if len(set(names)) != len(names):
                raise FormulaParseError("'v' line repeats a variable name", number)
            index = {name: i for i, name in enumerate(names)}
            names_fixed = True
            continue

        if NAMES_TAG in tokens:
            if names_fixed or clauses:
                raise FormulaParseError(f"{NAMES_TAG!r} line must follow the header", number)
            raise FormulaParseError(f"{NAMES_TAG!r} is reserved for the names line", number)

        clause = []
        for token in tokens:
            if token not in index:
                if names_fixed:
                    raise FormulaParseError(f"unknown variable {token!r}", number)
                index[token] = len(names)
                names.append(token)
            clause.append(index[token])
        if len(set(clause)) != len(clause):
            raise FormulaParseError("a clause may not repeat a variable", number)
        clauses.append(clause)

    if header_line is None:
        raise FormulaParseError("missing header 'p monotone <n_vars> <n_clauses>'")
    if len(clauses) != declared_clauses:
        raise FormulaParseError(
            f"header declares {declared_clauses} clauses, found {len(clauses)}", header_line
        )
    if len(names) != declared_vars:
        raise FormulaParseError(
            f"header declares {declared_vars} variables, found {len(names)}", header_line
        )

    try:
        return MonotoneFormula.build(names, clauses)
    except ValueError as e:
        raise FormulaParseError(str(e))


def write_formula(formula: MonotoneFormula) -> str:
    """Canonical text; always carries the 'v' line so parsing restores the order"""
    if NAMES_TAG in formula.variables:
        raise FormulaError(f"variable name {NAMES_TAG!r} is reserved by the text format")
    lines = [f"p {HEADER_TAG} {formula.n_vars} {formula.n_clauses}"]
    lines.append(" ".join([NAMES_TAG, *formula.variables]))
    for i in range(formula.n_clauses):
        lines.append(" ".join(formula.clause_names(i)))
    return "\n".join(lines) + "\n"


def formula_digest(formula: MonotoneFormula) -> str:
    """SHA-256 of the canonical text"""
    return hashlib.sha256(write_formula(formula).encode("utf-8")).hexdigest()
