"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                      Min-b Reduction Chain                                       │
│                                                                                                  │
│  Description: Four-step reduction from Monotone 1-IN-3 SAT to the Min-b LETS/EABS problems on an │
│               (alpha, beta)-regular Tanner graph, with witness transport in both directions.     │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import logging
from typing import List, Optional, Sequence, Tuple

from models.formula import Assignment, ClassDescriptor, MonotoneFormula
from models.tanner_graph import TannerGraph
from models.trace import GadgetKind, Provenance, ReductionTrace
from services.gadgets import (
    FormulaBuilder,
    build_equalizer_formula,
    build_forcing_block,
    build_occurrence_block,
    equalizer_values,
    forcing_values,
    fresh_name,
    occurrence_values,
)
from services.sat_logic import complement, validate_class
from services.tanner_core import build_graph
from utils.errors import AssignmentError, ReductionError

logger = logging.getLogger(__name__)

CLAUSE_COPIES = 9


def _identity_trace(step: str, formula: MonotoneFormula, **params) -> ReductionTrace:
    return ReductionTrace(
        step=step,
        params=params,
        variables=tuple(
            Provenance(origin="source", source_index=i, source=name)
            for i, name in enumerate(formula.variables)
        ),
        constraints=tuple(
            Provenance(origin="source", source_index=c) for c in range(formula.n_clauses)
        ),
    )


def _trace_from(builder: FormulaBuilder, step: str, **params) -> ReductionTrace:
    return ReductionTrace(
        step=step,
        params=params,
        variables=tuple(builder.variable_provenance),
        constraints=tuple(builder.clause_provenance),
        gadgets=tuple(builder.gadgets),
    )


def _require_width(formula: MonotoneFormula, width: int, what: str) -> None:
    violations = validate_class(formula, ClassDescriptor(require_beta=width))
    if violations:
        first = violations[0]
        raise ReductionError(
            f"{what} needs every clause of width {width}; clause {first.index} "
            f"({first.subject}) has {first.observed}"
        )


def _check_length(assignment: Assignment, expected: int, what: str) -> None:
    if len(assignment) != expected:
        raise AssignmentError(f"{what} expects {expected} values, got {len(assignment)}")


# Step 1: 1-IN-3 -> 2-IN-beta


def step1_expand(phi: MonotoneFormula, beta: int) -> Tuple[MonotoneFormula, ReductionTrace]:
    """Widen a 3-uniform formula to width beta, preserving satisfiability
    (1-IN-3 for the input, 2-IN-beta for the output)"""
    if beta < 3:
        raise ReductionError(f"beta must be at least 3, got {beta}")
    _require_width(phi, 3, "step 1")

    if beta == 3:
        return phi, _identity_trace("step1", phi, beta=beta, n_source=phi.n_vars)

    builder = FormulaBuilder()
    for i, name in enumerate(phi.variables):
        builder.variable(name, Provenance(origin="source", source_index=i, source=name))

    if beta == 4:
        extra = builder.variable(fresh_name("xp"), Provenance(origin="gadget", role="x_prime"))
        for c, clause in enumerate(phi.clauses):
            builder.clause((*clause, extra), Provenance(origin="copy", source_index=c))
    else:
        blocks = [build_forcing_block(beta, i) for i in range(1, beta - 2)]
        pads = []
        # Padding variables must exist before the padded source clauses reference them
        offsets = []
        for i, (block, gadget) in enumerate(blocks, start=1):
            offsets.append(len(builder.names))
            for local, name in enumerate(block.variables):
                role = "x" if local in gadget.variable_roles["x"] else "y"
                position = gadget.variable_roles[role].index(local)
                builder.variable(
                    name,
                    Provenance(origin="gadget", role=role, indices=(position + 1, i), gadget=i),
                )
            pads.append(offsets[-1] + gadget.variable_roles["x"][2])
        for c, clause in enumerate(phi.clauses):
            builder.clause((*clause, *pads), Provenance(origin="copy", source_index=c))
        for i, ((block, gadget), offset) in enumerate(zip(blocks, offsets), start=1):
            first = len(builder.clauses)
            for m, clause in enumerate(block.clauses):
                builder.clause(
                    (offset + x for x in clause),
                    Provenance(origin="gadget", role="block_clause", indices=(m + 1, i), gadget=i),
                )
            builder.gadgets.append(
                gadget.model_copy(
                    update={
                        "variable_roles": {
                            r: tuple(offset + x for x in ids)
                            for r, ids in gadget.variable_roles.items()
                        },
                        "constraint_roles": {
                            "clauses": tuple(range(first, first + block.n_clauses))
                        },
                    }
                )
            )

    upsilon = builder.build()
    logger.info(
        f"Step 1 (beta={beta}): {phi.n_vars} vars / {phi.n_clauses} clauses -> "
        f"{upsilon.n_vars} vars / {upsilon.n_clauses} clauses"
    )
    return upsilon, _trace_from(builder, "step1", beta=beta, n_source=phi.n_vars)


def step1_forward(trace: ReductionTrace, assignment: Assignment) -> Assignment:
    """1-IN-3 assignment of the input -> 2-IN-beta assignment of the output"""
    beta, n = trace.params["beta"], trace.params["n_source"]
    _check_length(assignment, n, "step 1 forward transport")
    if beta == 3:
        return complement(assignment)
    if beta == 4:
        return Assignment(values=assignment.values + (True,))
    values = list(complement(assignment).values) + [False] * (len(trace.variables) - n)
    for gadget in trace.gadgets_of(GadgetKind.FORCING_BLOCK):
        for v, value in forcing_values(gadget).items():
            values[v] = value
    return Assignment(values=tuple(values))


def step1_backward(trace: ReductionTrace, assignment: Assignment) -> Assignment:
    """2-IN-beta assignment of the output -> 1-IN-3 assignment of the input"""
    beta, n = trace.params["beta"], trace.params["n_source"]
    _check_length(assignment, len(trace.variables), "step 1 backward transport")
    restricted = Assignment(values=assignment.values[:n])
    if beta == 4 and assignment[n]:
        return restricted
    return complement(restricted)


# Step 2: 2-IN-beta -> cubic 2-IN-beta


def step2_make_cubic(upsilon: MonotoneFormula) -> Tuple[MonotoneFormula, ReductionTrace]:
    """Replace every occurrence by a private black variable tied to its siblings
    through an equalizer, after copying each clause nine times"""
    beta = upsilon.beta
    if beta is None or upsilon.n_clauses == 0:
        raise ReductionError("step 2 needs a nonempty formula with a single clause width")
    occurrences = upsilon.occurrences()
    unused = [upsilon.variables[x] for x, count in enumerate(occurrences) if count == 0]
    if unused:
        raise ReductionError(f"step 2 needs every variable to occur; unused: {', '.join(unused[:5])}")

    builder = FormulaBuilder()
    blacks: List[List[int]] = []
    h = {}
    for j, name in enumerate(upsilon.variables):
        t = 3 * occurrences[j]
        h[name] = t
        omega, gadget = build_equalizer_formula(t, beta, j + 1)
        mapping = builder.extend(omega, gadget, tag=j, source=name)
        blacks.append([mapping[b] for b in gadget.variable_roles["black"]])

    cursor = [0] * upsilon.n_vars
    for copy in range(CLAUSE_COPIES):
        for c, clause in enumerate(upsilon.clauses):
            ids = []
            for x in clause:
                ids.append(blacks[x][cursor[x]])
                cursor[x] += 1
            builder.clause(ids, Provenance(origin="copy", source_index=c, indices=(copy,)))

    psi = builder.build()
    logger.info(
        f"Step 2: {upsilon.n_vars} vars / {upsilon.n_clauses} clauses -> "
        f"{psi.n_vars} vars / {psi.n_clauses} clauses (cubic)"
    )
    return psi, _trace_from(builder, "step2", beta=beta, h=h, copies=CLAUSE_COPIES)


def step2_forward(trace: ReductionTrace, assignment: Assignment) -> Assignment:
    gadgets = trace.gadgets_of(GadgetKind.EQUALIZER)
    _check_length(assignment, len(gadgets), "step 2 forward transport")
    values: List[Optional[bool]] = [None] * len(trace.variables)
    for j, gadget in enumerate(gadgets):
        for v, value in equalizer_values(gadget, assignment[j]).items():
            values[v] = value
    return Assignment(values=tuple(bool(v) for v in values))


def step2_backward(trace: ReductionTrace, assignment: Assignment) -> Assignment:
    """Each source variable takes the value of its first black variable"""
    _check_length(assignment, len(trace.variables), "step 2 backward transport")
    gadgets = trace.gadgets_of(GadgetKind.EQUALIZER)
    return Assignment(values=tuple(assignment[g.variable_roles["black"][0]] for g in gadgets))


# Step 3: cubic -> alpha-regular


def step3_make_alpha_regular(
    psi: MonotoneFormula, alpha: int, strict: bool = True
) -> Tuple[MonotoneFormula, ReductionTrace]:
    """alpha renamed copies of a cubic formula plus one occurrence block per variable.

    The chain needs alpha <= beta; `strict=False` lifts that bound, which the
    construction itself does not rely on.
    """
    beta = psi.beta
    if beta is None:
        raise ReductionError("step 3 needs a formula with a single clause width")
    if not psi.is_cubic:
        raise ReductionError("step 3 needs a cubic formula (every variable in exactly 3 clauses)")
    if alpha < 3 or (strict and alpha > beta):
        raise ReductionError(f"step 3 needs 3 <= alpha <= beta, got alpha={alpha}, beta={beta}")
    if alpha == 3:
        return psi, _identity_trace("step3", psi, alpha=alpha, beta=beta)

    builder = FormulaBuilder()
    blocks = []
    for v, name in enumerate(psi.variables):
        block, gadget = build_occurrence_block(alpha, beta, name)
        offset = len(builder.names)
        for local, fresh in enumerate(block.variables):
            if local < alpha:
                provenance = Provenance(
                    origin="copy", source_index=v, source=name, indices=(local + 1,)
                )
            else:
                position = local - alpha
                provenance = Provenance(
                    origin="gadget",
                    role="y",
                    indices=(position // (beta - 1) + 1, position % (beta - 1) + 1),
                    source=name,
                    gadget=v,
                )
            builder.variable(fresh, provenance)
        blocks.append((block, gadget, offset))

    for i in range(alpha):
        for c, clause in enumerate(psi.clauses):
            builder.clause(
                (blocks[x][2] + i for x in clause),
                Provenance(origin="copy", source_index=c, indices=(i + 1,)),
            )
    for v, (block, gadget, offset) in enumerate(blocks):
        first = len(builder.clauses)
        for m, clause in enumerate(block.clauses):
            builder.clause(
                (offset + x for x in clause),
                Provenance(
                    origin="gadget",
                    role="occurrence_clause",
                    indices=(m + 1,),
                    source=psi.variables[v],
                    gadget=v,
                ),
            )
        builder.gadgets.append(
            gadget.model_copy(
                update={
                    "variable_roles": {
                        r: tuple(offset + x for x in ids) for r, ids in gadget.variable_roles.items()
                    },
                    "constraint_roles": {"clauses": tuple(range(first, first + block.n_clauses))},
                }
            )
        )

    phi = builder.build()
    logger.info(
        f"Step 3 (alpha={alpha}): {psi.n_vars} vars / {psi.n_clauses} clauses -> "
        f"{phi.n_vars} vars / {phi.n_clauses} clauses"
    )
    return phi, _trace_from(builder, "step3", alpha=alpha, beta=beta)


def step3_forward(trace: ReductionTrace, assignment: Assignment) -> Assignment:
    if trace.params["alpha"] == 3:
        return assignment
    gadgets = trace.gadgets_of(GadgetKind.OCCURRENCE_BLOCK)
    _check_length(assignment, len(gadgets), "step 3 forward transport")
    values = [False] * len(trace.variables)
    for v, gadget in enumerate(gadgets):
        for node, value in occurrence_values(gadget, assignment[v]).items():
            values[node] = value
    return Assignment(values=tuple(values))


def step3_backward(trace: ReductionTrace, assignment: Assignment) -> Assignment:
    """Each variable takes the value of its first copy"""
    _check_length(assignment, len(trace.variables), "step 3 backward transport")
    if trace.params["alpha"] == 3:
        return assignment
    gadgets = trace.gadgets_of(GadgetKind.OCCURRENCE_BLOCK)
    return Assignment(values=tuple(assignment[g.variable_roles["x"][0]] for g in gadgets))


# Step 4: formula -> Tanner graph


def step4_formula_to_tanner(phi: MonotoneFormula) -> Tuple[TannerGraph, int, ReductionTrace]:
    """Incidence graph of an alpha-regular beta-uniform formula and the LETS size a = 2|W|/alpha"""
    alpha, beta = phi.alpha, phi.beta
    if alpha is None or beta is None or phi.n_clauses == 0:
        raise ReductionError("step 4 needs a nonempty alpha-regular beta-uniform formula")
    if (2 * phi.n_clauses) % alpha != 0:
        raise ReductionError(
            f"2|W| = {2 * phi.n_clauses} is not divisible by alpha = {alpha}; a = 2|W|/alpha undefined"
        )
    a = 2 * phi.n_clauses // alpha
    graph = build_graph(
        phi.n_vars,
        phi.n_clauses,
        ((x, c) for c, clause in enumerate(phi.clauses) for x in clause),
        var_labels=phi.variables,
        chk_labels=[f"C{c + 1}" for c in range(phi.n_clauses)],
    )
    logger.info(f"Step 4: ({alpha},{beta})-regular graph, |U|={graph.n_var}, |W|={graph.n_chk}, a={a}")
    return graph, a, _identity_trace("step4", phi, alpha=alpha, beta=beta, a=a)


def step4_forward(assignment: Assignment) -> Tuple[int, ...]:
    """2-IN-beta assignment -> the LETS of its true variables"""
    return assignment.true_set()


def step4_backward(trace: ReductionTrace, subset: Sequence[int]) -> Assignment:
    return Assignment.from_true_set(len(trace.variables), subset)


# Composite chain


def _compose(provenance: Provenance, earlier: Sequence[ReductionTrace], field: str) -> Provenance:
    for trace in reversed(earlier):
        if provenance.origin == "gadget":
            break
        inner = getattr(trace, field)[provenance.source_index]
        if provenance.origin == "copy" and inner.origin == "source":
            provenance = provenance.model_copy(
                update={"source_index": inner.source_index, "source": inner.source}
            )
        else:
            provenance = inner
    return provenance


def full_min_b_chain(
    phi: MonotoneFormula, alpha: int, beta: int
) -> Tuple[TannerGraph, int, ReductionTrace]:
    """Steps 1-4 composed; the graph has an (a, 0) LETS iff phi is 1-IN-3 satisfiable"""
    if not 3 <= alpha <= beta:
        raise ReductionError(f"the chain needs 3 <= alpha <= beta, got alpha={alpha}, beta={beta}")

    upsilon, t1 = step1_expand(phi, beta)
    psi, t2 = step2_make_cubic(upsilon)
    phi_regular, t3 = step3_make_alpha_regular(psi, alpha)
    graph, a, t4 = step4_formula_to_tanner(phi_regular)

    parts = (t1, t2, t3, t4)
    trace = ReductionTrace(
        step="min_b_chain",
        params={"alpha": alpha, "beta": beta, "a": a, "eta": phi.n_vars},
        variables=tuple(_compose(p, parts[:-1], "variables") for p in t4.variables),
        constraints=tuple(_compose(p, parts[:-1], "constraints") for p in t4.constraints),
        parts=parts,
    )
    return graph, a, trace


def chain_forward(trace: ReductionTrace, assignment: Assignment) -> Tuple[int, ...]:
    """1-IN-3 assignment of the source -> size-a LETS of the final graph"""
    t1, t2, t3, _ = trace.parts
    return step4_forward(step3_forward(t3, step2_forward(t2, step1_forward(t1, assignment))))


def chain_backward(trace: ReductionTrace, subset: Sequence[int]) -> Assignment:
    """Size-a LETS of the final graph -> 1-IN-3 assignment of the source"""
    t1, t2, t3, t4 = trace.parts
    return step1_backward(t1, step2_backward(t2, step3_backward(t3, step4_backward(t4, subset))))
