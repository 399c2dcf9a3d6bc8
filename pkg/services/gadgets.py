"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                         Formula Gadgets                                          │
│                                                                                                  │
│  Description: Equalizer formulas, padding (forcing) blocks and occurrence blocks used by the     │
│               Monotone 2-IN-beta reductions, with a builder that records provenance as it goes.  │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import logging
from typing import Dict, Iterable, List, Optional, Tuple

from models.formula import MonotoneFormula
from models.trace import GadgetInstance, GadgetKind, Provenance
from utils.errors import ReductionError

logger = logging.getLogger(__name__)

# Fresh names start with this prefix so they cannot be mistaken for source names
RESERVED_PREFIX = "@"


def fresh_name(role: str, *parts: object) -> str:
    return RESERVED_PREFIX + ".".join([role, *(str(p) for p in parts)])


class FormulaBuilder:
    """Accumulates named variables and clauses together with their provenance"""

    def __init__(self):
        self.names: List[str] = []
        self.index: Dict[str, int] = {}
        self.variable_provenance: List[Provenance] = []
        self.clauses: List[Tuple[int, ...]] = []
        self.clause_provenance: List[Provenance] = []
        self.gadgets: List[GadgetInstance] = []

    def variable(self, name: str, provenance: Provenance) -> int:
        if name in self.index:
            raise ReductionError(f"variable name collision on {name!r}")
        self.index[name] = len(self.names)
        self.names.append(name)
        self.variable_provenance.append(provenance)
        return self.index[name]

    def clause(self, ids: Iterable[int], provenance: Provenance) -> int:
        self.clauses.append(tuple(ids))
        self.clause_provenance.append(provenance)
        return len(self.clauses) - 1

    def extend(
        self,
        formula: MonotoneFormula,
        gadget: GadgetInstance,
        tag: int,
        source: Optional[str] = None,
    ) -> List[int]:
        """Append a standalone gadget formula; returns the new id of each of its variables.

        Variables become members of gadget number `tag` (owned by `source` when
        given); role ids in the gadget instance are shifted to the combined numbering.
        """
        offset_vars = len(self.names)
        offset_clauses = len(self.clauses)
        mapping = []
        for i, name in enumerate(formula.variables):
            role, position = _role_of(gadget, i)
            provenance = Provenance(
                origin="gadget", role=role, indices=(position,), source=source, gadget=tag
            )
            mapping.append(self.variable(name, provenance))
        for c, clause in enumerate(formula.clauses):
            self.clause(
                (mapping[x] for x in clause),
                Provenance(origin="gadget", role="clause", indices=(c,), source=source, gadget=tag),
            )
        self.gadgets.append(
            gadget.model_copy(
                update={
                    "variable_roles": {
                        r: tuple(i + offset_vars for i in ids)
                        for r, ids in gadget.variable_roles.items()
                    },
                    "constraint_roles": {
                        r: tuple(i + offset_clauses for i in ids)
                        for r, ids in gadget.constraint_roles.items()
                    },
                }
            )
        )
        return mapping

    def build(self) -> MonotoneFormula:
        return MonotoneFormula.build(self.names, self.clauses)


def _role_of(gadget: GadgetInstance, index: int) -> Tuple[str, int]:
    for role, ids in gadget.variable_roles.items():
        if index in ids:
            return role, ids.index(index)
    return "fresh", index


def build_equalizer_formula(t: int, k: int, j: int = 1) -> Tuple[MonotoneFormula, GadgetInstance]:
    """Equalizer formula over 3t black variables.

    2t blocks, each a grey variable, k-2 white variables and three width-k
    clauses {black, grey, whites...}, one per black variable of the block.
    Black i (i < 2t) links block i to block i+1 mod 2t; black 2t+i links
    blocks 2i and 2i+1. Blacks occur twice, greys and whites three times, and
    the block graph is connected, so every 2-IN-k assignment gives all blacks
    one value.

    Black variables are the first 3t ids, named @z.<i>.<j> (1-based i).
    """
    if t < 1:
        raise ReductionError(f"equalizer needs t >= 1, got {t}")
    if k < 3:
        raise ReductionError(f"equalizer needs clause width k >= 3, got {k}")

    names = [fresh_name("z", i + 1, j) for i in range(3 * t)]
    greys, whites = [], []
    for block in range(2 * t):
        greys.append(len(names))
        names.append(fresh_name("grey", block + 1, j))
        row = []
        for w in range(k - 2):
            row.append(len(names))
            names.append(fresh_name("white", block + 1, w + 1, j))
        whites.append(row)

    blocks = 2 * t
    members: List[List[int]] = [[] for _ in range(blocks)]
    for i in range(blocks):
        members[i].append(i)
        members[(i + 1) % blocks].append(i)
    for i in range(t):
        members[2 * i].append(blocks + i)
        members[2 * i + 1].append(blocks + i)

    clauses = []
    for block in range(blocks):
        tail = [greys[block], *whites[block]]
        for black in members[block]:
            clauses.append([black, *tail])

    formula = MonotoneFormula.build(names, clauses)
    gadget = GadgetInstance(
        kind=GadgetKind.EQUALIZER,
        params={"t": t, "k": k, "j": j},
        variable_roles={
            "black": tuple(range(3 * t)),
            "grey": tuple(greys),
            "white": tuple(w for row in whites for w in row),
        },
        constraint_roles={"clauses": tuple(range(len(clauses)))},
    )
    return formula, gadget


def equalizer_values(gadget: GadgetInstance, polarity: bool) -> Dict[int, bool]:
    """A 2-IN-k fill of an equalizer: blacks at `polarity`, greys T, and
    exactly one white per block T when the blacks are F"""
    k = gadget.params["k"]
    values = {b: polarity for b in gadget.variable_roles["black"]}
    values.update({g: True for g in gadget.variable_roles["grey"]})
    whites = gadget.variable_roles["white"]
    for start in range(0, len(whites), k - 2):
        for offset, w in enumerate(whites[start : start + k - 2]):
            values[w] = not polarity and offset == 0
    return values


def build_forcing_block(beta: int, i: int = 1) -> Tuple[MonotoneFormula, GadgetInstance]:
    """The beta-1 clauses that pin x1 = x2 = T and every other block variable F.

    Clauses: (x1 .. x_{beta-1} y_m) for m = 1..beta-2, then (y1 .. y_{beta-2} x1 x2).
    """
    if beta < 5:
        raise ReductionError(f"forcing blocks need beta >= 5, got {beta}")
    xs = [fresh_name("px", m, i) for m in range(1, beta)]
    ys = [fresh_name("py", m, i) for m in range(1, beta - 1)]
    names = xs + ys
    x_ids = list(range(len(xs)))
    y_ids = list(range(len(xs), len(names)))
    clauses = [[*x_ids, y] for y in y_ids]
    clauses.append([*y_ids, x_ids[0], x_ids[1]])
    formula = MonotoneFormula.build(names, clauses)
    gadget = GadgetInstance(
        kind=GadgetKind.FORCING_BLOCK,
        params={"beta": beta, "i": i},
        variable_roles={"x": tuple(x_ids), "y": tuple(y_ids)},
        constraint_roles={"clauses": tuple(range(len(clauses)))},
    )
    return formula, gadget


def forcing_values(gadget: GadgetInstance) -> Dict[int, bool]:
    xs = gadget.variable_roles["x"]
    values = {v: False for v in (*xs, *gadget.variable_roles["y"])}
    values[xs[0]] = values[xs[1]] = True
    return values


def build_occurrence_block(
    alpha: int, beta: int, name: str = "x"
) -> Tuple[MonotoneFormula, GadgetInstance]:
    """Clauses (x_i y^j_1 .. y^j_{beta-1}) for i = 1..alpha, j = 1..alpha-3.

    The y variables of one j are shared by all copies x_i, so in any 2-IN-beta
    assignment every copy of `name` takes the same value. Copies come first.
    """
    if alpha < 3 or beta < 3:
        raise ReductionError(
            f"occurrence blocks need alpha >= 3 and beta >= 3, got alpha={alpha}, beta={beta}"
        )
    copies = [fresh_name("copy", i, name) for i in range(1, alpha + 1)]
    ys = [
        fresh_name("y", j, m, name) for j in range(1, alpha - 2) for m in range(1, beta)
    ]
    names = copies + ys
    width = beta - 1
    clauses = []
    for i in range(alpha):
        for j in range(alpha - 3):
            group = range(alpha + j * width, alpha + (j + 1) * width)
            clauses.append([i, *group])
    formula = MonotoneFormula.build(names, clauses)
    gadget = GadgetInstance(
        kind=GadgetKind.OCCURRENCE_BLOCK,
        params={"alpha": alpha, "beta": beta},
        variable_roles={"x": tuple(range(alpha)), "y": tuple(range(alpha, len(names)))},
        constraint_roles={"clauses": tuple(range(len(clauses)))},
    )
    return formula, gadget


def occurrence_values(gadget: GadgetInstance, value: bool) -> Dict[int, bool]:
    """Copies at `value`; per group the first y is T and the second is T iff `value` is F"""
    beta = gadget.params["beta"]
    values = {x: value for x in gadget.variable_roles["x"]}
    ys = gadget.variable_roles["y"]
    for start in range(0, len(ys), beta - 1):
        group = ys[start : start + beta - 1]
        for offset, y in enumerate(group):
            values[y] = offset == 0 or (offset == 1 and not value)
    return values

