"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                         Min-a Reductions                                         │
│                                                                                                  │
│  Description: Clause-gadget constructions from Cubic Monotone 1-IN-3 SAT to the Min-a LETS and   │
│               Min-a EABS problems, their witness maps and the structural checks on their solutions.│
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import logging
from typing import Dict, List, Optional, Sequence, Set, Tuple

from pydantic import BaseModel, ConfigDict

from models.formula import Assignment, ClassDescriptor, MonotoneFormula
from models.tanner_graph import TannerGraph, TrappingSetKind
from models.trace import GadgetInstance, GadgetKind, Provenance, ReductionTrace
from services.gadgets import fresh_name
from services.sat_logic import validate_class
from services.tanner_core import build_graph, check_degrees
from utils.errors import AssignmentError, ReductionError

logger = logging.getLogger(__name__)


class MinAInstance(BaseModel):
    """A Min-a instance: find the least a with an (a, b) set of `kind` in `graph`"""

    model_config = ConfigDict(frozen=True)

    graph: TannerGraph
    kind: TrappingSetKind
    b: int
    a_expected: Optional[int] = None
    trace: ReductionTrace

    @property
    def eta(self) -> int:
        return self.trace.params["eta"]


def _require_cubic(phi: MonotoneFormula) -> None:
    violations = validate_class(phi, ClassDescriptor(require_beta=3, require_cubic=True))
    if violations:
        first = violations[0]
        raise ReductionError(
            f"input must be cubic and 3-uniform ({len(violations)} violations, first: "
            f"{first.kind} {first.subject} observed {first.observed}, expected {first.expected})"
        )


def _build(phi: MonotoneFormula, kind: TrappingSetKind) -> MinAInstance:
    _require_cubic(phi)
    eabs = kind == TrappingSetKind.EABS
    eta = phi.n_vars
    z = 2 * eta + 1
    g_count = 5 if eabs else 3

    var_labels: List[str] = []
    var_prov: List[Provenance] = []
    g_ids: List[List[int]] = []
    for c in range(phi.n_clauses):
        row = []
        for r in range(1, g_count + 1):
            row.append(len(var_labels))
            var_labels.append(fresh_name(f"g{r}", c + 1))
            var_prov.append(Provenance(origin="gadget", role=f"g{r}", indices=(c + 1,), gadget=c))
        g_ids.append(row)
    x_offset = len(var_labels)
    for x, name in enumerate(phi.variables):
        for copy in (1, 2):
            var_labels.append(f"{name}_{copy}")
            var_prov.append(
                Provenance(origin="copy", source_index=x, source=name, role=f"x{copy}", indices=(copy,))
            )

    def x_node(x: int, copy: int) -> int:
        return x_offset + 2 * x + copy - 1

    chk_labels: List[str] = []
    chk_prov: List[Provenance] = []
    edges: List[Tuple[int, int]] = []
    gadgets = []

    def check(role: str, c: int, index: Optional[int], neighbors: Sequence[int]) -> int:
        node = len(chk_labels)
        parts = (index, c + 1) if index is not None else (c + 1,)
        chk_labels.append(fresh_name(role, *parts))
        chk_prov.append(Provenance(origin="gadget", role=role, indices=parts, gadget=c))
        edges.extend((v, node) for v in neighbors)
        return node

    for c, clause in enumerate(phi.clauses):
        g = g_ids[c]
        ones = [x_node(x, 1) for x in clause]
        twos = [x_node(x, 2) for x in clause]
        roles: Dict[str, Tuple[int, ...]] = {
            "y": tuple(check("y", c, i, g[0:3]) for i in range(1, z + 1))
        }
        if eabs:
            roles["s"] = tuple(check("s", c, i, (g[0], g[3], g[4])) for i in range(1, z + 1))
            roles["w1"] = (check("w1", c, None, [g[0], *ones]),)
            roles["w2"] = (check("w2", c, None, [*g[1:5], *twos]),)
        else:
            roles["w1"] = (check("w1", c, None, [g[0], g[1], *ones]),)
            roles["w2"] = (check("w2", c, None, [g[0], g[2], *twos]),)
        gadgets.append(
            GadgetInstance(
                kind=GadgetKind.EABS_CLAUSE if eabs else GadgetKind.LETS_CLAUSE,
                params={"z": z, "clause": c},
                variable_roles={"g": tuple(g), "x1": tuple(ones), "x2": tuple(twos)},
                constraint_roles=roles,
            )
        )

    graph = build_graph(len(var_labels), len(chk_labels), edges, var_labels, chk_labels)
    b = eta * z
    if eta % 3 == 0:
        a_expected = (2 if eabs else 1) * eta + 2 * eta // 3
    else:
        a_expected = None
    trace = ReductionTrace(
        step=f"min_a_{kind.value.lower()}",
        params={"eta": eta, "z": z, "b": b, "a_expected": a_expected, "x_offset": x_offset},
        variables=tuple(var_prov),
        constraints=tuple(chk_prov),
        gadgets=tuple(gadgets),
    )
    logger.info(
        f"Min-a {kind.value} instance: eta={eta}, |U|={graph.n_var}, |W|={graph.n_chk}, "
        f"b={b}, a_expected={a_expected}"
    )
    return MinAInstance(graph=graph, kind=kind, b=b, a_expected=a_expected, trace=trace)


def build_min_a_lets_instance(phi: MonotoneFormula) -> MinAInstance:
    """5*eta variable nodes, eta*(2*eta+3) checks; (eta + 2*eta/3, eta*(2*eta+1)) LETS
    exists iff phi is 1-IN-3 satisfiable"""
    return _build(phi, TrappingSetKind.LETS)


def build_min_a_eabs_instance(phi: MonotoneFormula) -> MinAInstance:
    """7*eta variable nodes, eta*(4*eta+4) checks; (2*eta + 2*eta/3, eta*(2*eta+1)) EABS
    exists iff phi is 1-IN-3 satisfiable"""
    return _build(phi, TrappingSetKind.EABS)


def _x_node(instance: MinAInstance, x: int, copy: int) -> int:
    return instance.trace.params["x_offset"] + 2 * x + copy - 1


def min_a_forward(instance: MinAInstance, assignment: Assignment) -> Tuple[int, ...]:
    """Both copies of every true variable plus g1 (and g2 for EABS) of every clause"""
    if len(assignment) != instance.eta:
        raise AssignmentError(f"expected {instance.eta} values, got {len(assignment)}")
    chosen = set()
    for x in assignment.true_set():
        chosen.update((_x_node(instance, x, 1), _x_node(instance, x, 2)))
    take = 2 if instance.kind == TrappingSetKind.EABS else 1
    for gadget in instance.trace.gadgets:
        chosen.update(gadget.variable_roles["g"][:take])
    return tuple(sorted(chosen))


def min_a_backward(instance: MinAInstance, subset: Sequence[int]) -> Assignment:
    """x is T iff its first copy is in the set"""
    members = set(subset)
    return Assignment.from_true_set(
        instance.eta, (x for x in range(instance.eta) if _x_node(instance, x, 1) in members)
    )


def _block_state(degrees: Dict[int, int], checks: Sequence[int]) -> str:
    parities = {degrees.get(c, 0) % 2 if degrees.get(c, 0) else None for c in checks}
    if parities == {1}:
        return "odd"
    if parities == {0}:
        return "even"
    if parities == {None}:
        return "absent"
    return "mixed"


def gadget_property_violations(instance: MinAInstance, subset: Sequence[int]) -> List[str]:
    """Structural properties every set of the instance's kind must satisfy.

    The caller passes a set already known to be of `instance.kind`. Properties
    that only hold at the target b are checked when the set's b equals it.
    """
    members: Set[int] = set(subset)
    degrees = check_degrees(instance.graph, members)
    b = sum(1 for d in degrees.values() if d % 2 == 1)
    at_target = b == instance.b
    eabs = instance.kind == TrappingSetKind.EABS
    violations = []

    for gadget in instance.trace.gadgets:
        c = gadget.params["clause"] + 1
        g = gadget.variable_roles["g"]
        inside = [v in members for v in g]
        y_state = _block_state(degrees, gadget.constraint_roles["y"])
        if y_state == "mixed":
            violations.append(f"clause {c}: y checks split between odd and even")
        if y_state == "odd" and inside[:3] != [True, False, False]:
            violations.append(f"clause {c}: odd y checks without exactly g1 of g1..g3")
        if eabs:
            s_state = _block_state(degrees, gadget.constraint_roles["s"])
            if s_state == "mixed":
                violations.append(f"clause {c}: s checks split between odd and even")
            if y_state == "odd" and s_state != "even":
                violations.append(f"clause {c}: odd y checks but s checks not all satisfied")

        if not at_target:
            continue
        if eabs:
            if "odd" not in (y_state, s_state):
                violations.append(f"clause {c}: neither y nor s checks are odd at the target b")
            if not inside[0] or sum(inside[1:]) != 1:
                violations.append(f"clause {c}: expected g1 and exactly one of g2..g5")
        else:
            if y_state != "odd":
                violations.append(f"clause {c}: y checks not all odd at the target b")
            if inside != [True, False, False]:
                violations.append(f"clause {c}: expected g1 in, g2 and g3 out")
        for role, copies in (("w1", "x1"), ("w2", "x2")):
            w = gadget.constraint_roles[role][0]
            if degrees.get(w, 0) % 2 != 0 or not degrees.get(w):
                violations.append(f"clause {c}: {role} is not a satisfied check")
            if sum(v in members for v in gadget.variable_roles[copies]) != 1:
                violations.append(f"clause {c}: {role} does not see exactly one {copies} node")

    if at_target:
        if instance.a_expected is None:
            violations.append(f"set with b={b} exists although 3 does not divide eta")
        elif len(members) != instance.a_expected:
            violations.append(f"size {len(members)} differs from the forced size {instance.a_expected}")
    return violations
