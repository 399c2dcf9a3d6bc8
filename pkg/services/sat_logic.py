"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                        Monotone SAT Logic                                        │
│                                                                                                  │
│  Description: gamma-IN-beta assignment checking, exhaustive satisfiability oracles, formula      │
│               class validation and seeded generators for the monotone SAT variants.              │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import logging
import random
from typing import Iterator, List, Optional, Sequence

from config.settings import get_settings
from models.formula import Assignment, ClassDescriptor, ClassViolation, MonotoneFormula
from utils.errors import AssignmentError, InstanceError, OracleLimitError

logger = logging.getLogger(__name__)

CONFIGURATION_ATTEMPTS = 2000


def check_gamma_in_beta(formula: MonotoneFormula, assignment: Assignment, gamma: int) -> bool:
    """True iff every clause has exactly gamma true variables"""
    if len(assignment) != formula.n_vars:
        raise AssignmentError(
            f"assignment covers {len(assignment)} of {formula.n_vars} variables (must be total)"
        )
    values = assignment.values
    return all(sum(values[x] for x in clause) == gamma for clause in formula.clauses)


def complement(assignment: Assignment) -> Assignment:
    return Assignment(values=tuple(not value for value in assignment.values))


def iter_gamma_in_beta(formula: MonotoneFormula, gamma: int) -> Iterator[Assignment]:
    """All gamma-IN-beta assignments in lexicographic order (F < T, variable 0 first).

    Depth-first with per-clause bounds: a branch dies as soon as a clause has more
    than gamma true variables or can no longer reach gamma.
    """
    n = formula.n_vars
    touching: List[List[int]] = [[] for _ in range(n)]
    for index, clause in enumerate(formula.clauses):
        for x in clause:
            touching[x].append(index)
    true_count = [0] * formula.n_clauses
    open_count = [len(clause) for clause in formula.clauses]
    if any(gamma > width for width in open_count):
        return
    values = [False] * n

    def assign(x: int, value: bool) -> bool:
        ok = True
        for c in touching[x]:
            open_count[c] -= 1
            if value:
                true_count[c] += 1
            if true_count[c] > gamma or true_count[c] + open_count[c] < gamma:
                ok = False
        return ok

    def undo(x: int, value: bool) -> None:
        for c in touching[x]:
            open_count[c] += 1
            if value:
                true_count[c] -= 1

    def descend(x: int) -> Iterator[Assignment]:
        if x == n:
            yield Assignment(values=tuple(values))
            return
        for value in (False, True):
            values[x] = value
            if assign(x, value):
                yield from descend(x + 1)
            undo(x, value)
        values[x] = False

    yield from descend(0)


def _ensure_within(formula: MonotoneFormula, max_vars: int, what: str) -> None:
    if formula.n_vars > max_vars:
        raise OracleLimitError(
            f"{formula.n_vars} variables is too large for {what} (cap {max_vars})"
        )


def brute_force_gamma_in_beta(
    formula: MonotoneFormula, gamma: int, max_vars: Optional[int] = None
) -> Optional[Assignment]:
    """Lexicographically first gamma-IN-beta assignment, or None"""
    if max_vars is None:
        max_vars = get_settings().oracle_max_vars
    _ensure_within(formula, max_vars, "the oracle")
    return next(iter_gamma_in_beta(formula, gamma), None)


def scan_gamma_in_beta(
    formula: MonotoneFormula, gamma: int, max_vars: Optional[int] = None
) -> Iterator[Assignment]:
    """Plain 2^n enumeration of every assignment, filtered clause by clause.

    Shares nothing with the depth-first oracle and cross-checks it. Output is in
    the same lexicographic order.
    """
    if max_vars is None:
        max_vars = get_settings().scan_max_vars
    _ensure_within(formula, max_vars, "a full assignment scan")
    n = formula.n_vars
    masks = [sum(1 << (n - 1 - x) for x in clause) for clause in formula.clauses]
    for word in range(1 << n):
        if all(bin(word & mask).count("1") == gamma for mask in masks):
            yield Assignment(values=tuple(bool(word >> (n - 1 - x) & 1) for x in range(n)))


def validate_class(formula: MonotoneFormula, descriptor: ClassDescriptor) -> List[ClassViolation]:
    """Every clause of the wrong width and every variable with the wrong count"""
    violations = []
    if descriptor.require_beta is not None:
        for index, clause in enumerate(formula.clauses):
            if len(clause) != descriptor.require_beta:
                violations.append(
                    ClassViolation(
                        kind="clause_width",
                        index=index,
                        subject=" ".join(formula.clause_names(index)),
                        observed=len(clause),
                        expected=descriptor.require_beta,
                    )
                )
    alpha = descriptor.alpha
    if alpha is not None:
        for x, count in enumerate(formula.occurrences()):
            if count != alpha:
                violations.append(
                    ClassViolation(
                        kind="occurrence",
                        index=x,
                        subject=formula.variables[x],
                        observed=count,
                        expected=alpha,
                    )
                )
    return violations


def _configuration_clauses(
    rng: random.Random, n_vars: int, alpha: int, beta: int
) -> Optional[List[List[int]]]:
    slots = [x for x in range(n_vars) for _ in range(alpha)]
    for _ in range(CONFIGURATION_ATTEMPTS):
        rng.shuffle(slots)
        clauses = [slots[i : i + beta] for i in range(0, len(slots), beta)]
        if all(len(set(c)) == beta for c in clauses):
            return clauses
    return None


def _greedy_clauses(rng: random.Random, n_vars: int, alpha: int, beta: int) -> List[List[int]]:
    # Taking the beta variables with the most remaining occurrences keeps the
    # counts within one of each other, so beta distinct candidates always exist.
    remaining = [alpha] * n_vars
    clauses = []
    for _ in range(alpha * n_vars // beta):
        order = list(range(n_vars))
        rng.shuffle(order)
        order.sort(key=lambda x: -remaining[x])
        clause = order[:beta]
        for x in clause:
            remaining[x] -= 1
        clauses.append(clause)
    return clauses


def random_instance(
    descriptor: ClassDescriptor,
    n_vars: int,
    seed: int,
    n_clauses: Optional[int] = None,
) -> MonotoneFormula:
    """Seeded monotone formula of the requested class"""
    beta = descriptor.require_beta
    if beta is None:
        raise InstanceError("a clause width (beta) is required to generate formulas")
    if n_vars < beta:
        raise InstanceError(
            f"n_vars = {n_vars} < beta = {beta}: clauses cannot avoid repeated variables"
        )
    rng = random.Random(seed)
    alpha = descriptor.alpha

    if alpha is not None:
        if (alpha * n_vars) % beta != 0:
            raise InstanceError(
                f"alpha * n_vars = {alpha} * {n_vars} = {alpha * n_vars} "
                f"is not divisible by beta = {beta}"
            )
        clauses = _configuration_clauses(rng, n_vars, alpha, beta)
        if clauses is None:
            logger.info(f"Configuration sampling failed for n={n_vars}; using greedy layout")
            clauses = _greedy_clauses(rng, n_vars, alpha, beta)
    else:
        count = n_clauses if n_clauses is not None else n_vars
        clauses = [rng.sample(range(n_vars), beta) for _ in range(count)]

    formula = MonotoneFormula.build([f"x{i + 1}" for i in range(n_vars)], clauses)
    if validate_class(formula, descriptor):
        raise InstanceError("generated formula failed class validation")
    return formula


def find_unsatisfiable_cubic(
    n_vars: int, seed: int, attempts: int = 500, max_vars: Optional[int] = None
) -> MonotoneFormula:
    """First seeded cubic 3-uniform formula without a 1-IN-3 assignment"""
    descriptor = ClassDescriptor(require_beta=3, require_cubic=True)
    for offset in range(attempts):
        formula = random_instance(descriptor, n_vars, seed + offset)
        if brute_force_gamma_in_beta(formula, 1, max_vars=max_vars) is None:
            logger.info(f"Unsatisfiable cubic instance found at seed {seed + offset}")
            return formula
    raise InstanceError(f"no unsatisfiable cubic instance with {n_vars} variables in {attempts} seeds")


def repeated_clause_formula(
    names: Sequence[str] = ("x", "x'", "x''"), copies: int = 3
) -> MonotoneFormula:
    """One clause over `names` repeated `copies` times; the default is cubic"""
    return MonotoneFormula.build(names, [range(len(names))] * copies)
