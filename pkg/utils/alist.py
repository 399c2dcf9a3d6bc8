"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                     Alist Reader and Writer                                      │
│                                                                                                  │
│  Description: MacKay alist exchange format for sparse parity-check matrices (1-based on disk,    │
│               0-based in memory). Zero entries are padding.                                      │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import logging
from typing import Iterator, List, Tuple

from models.tanner_graph import TannerGraph
from services.tanner_core import build_graph
from utils.errors import AlistParseError, GraphError

logger = logging.getLogger(__name__)


def _numbered_lines(text: str) -> Iterator[Tuple[int, List[int]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        try:
            yield number, [int(token) for token in raw.split()]
        except ValueError:
            raise AlistParseError(f"non-integer token in {raw.strip()!r}", number)


def parse_alist(text: str) -> TannerGraph:
    """Parse an alist document; degrees must match the neighbor lists"""
    lines = _numbered_lines(text)

    def take(what: str) -> Tuple[int, List[int]]:
        try:
            return next(lines)
        except StopIteration:
            raise AlistParseError(f"unexpected end of document while reading {what}")

    number, header = take("header")
    if len(header) != 2 or min(header) < 0:
        raise AlistParseError("header must be 'n_var n_chk'", number)
    n_var, n_chk = header

    number, maxima = take("maximum degrees")
    if len(maxima) != 2:
        raise AlistParseError("second line must be 'max_dv max_dc'", number)

    def degree_line(count: int, what: str) -> List[int]:
        if count == 0:
            return []
        number, degrees = take(what)
        if len(degrees) != count:
            raise AlistParseError(f"expected {count} {what}, found {len(degrees)}", number)
        return degrees

    var_degrees = degree_line(n_var, "variable degrees")
    chk_degrees = degree_line(n_chk, "check degrees")
    if max(var_degrees, default=0) != maxima[0] or max(chk_degrees, default=0) != maxima[1]:
        raise AlistParseError("declared maximum degrees do not match the degree lists", 2)

    def neighbor_block(degrees: List[int], bound: int, side: str) -> List[Tuple[int, List[int]]]:
        block = []
        for index, degree in enumerate(degrees):
            number, entries = take(f"{side} {index + 1} neighbors")
            neighbors = [e for e in entries if e != 0]
            if len(neighbors) != degree:
                raise AlistParseError(
                    f"{side} {index + 1} declares degree {degree} but lists "
                    f"{len(neighbors)} neighbors",
                    number,
                )
            for e in neighbors:
                if not 1 <= e <= bound:
                    raise AlistParseError(f"neighbor {e} out of range [1, {bound}]", number)
            block.append((number, [e - 1 for e in neighbors]))
        return block

    var_block = neighbor_block(var_degrees, n_chk, "variable")
    chk_block = neighbor_block(chk_degrees, n_var, "check")

    edges = [(v, c) for v, (_, checks) in enumerate(var_block) for c in checks]
    mirrored = sorted((v, c) for c, (_, variables) in enumerate(chk_block) for v in variables)
    if sorted(edges) != mirrored:
        line = chk_block[0][0] if chk_block else None
        raise AlistParseError("check neighbor lists disagree with variable neighbor lists", line)

    try:
        graph = build_graph(n_var, n_chk, edges)
    except GraphError as e:
        raise AlistParseError(str(e))
    logger.debug(f"Parsed alist: {n_var} variables, {n_chk} checks, {len(edges)} edges")
    return graph


def write_alist(graph: TannerGraph) -> str:
    """Render a graph as alist text, zero-padding rows to the maximum degree"""
    var_degrees = [len(a) for a in graph.var_adj]
    chk_degrees = [len(a) for a in graph.chk_adj]
    max_dv = max(var_degrees, default=0)
    max_dc = max(chk_degrees, default=0)

    def row(neighbors, width: int) -> str:
        padded = [n + 1 for n in neighbors] + [0] * (width - len(neighbors))
        return " ".join(str(n) for n in padded) or "0"

    lines = [f"{graph.n_var} {graph.n_chk}", f"{max_dv} {max_dc}"]
    if graph.n_var:
        lines.append(" ".join(map(str, var_degrees)))
    if graph.n_chk:
        lines.append(" ".join(map(str, chk_degrees)))
    lines.extend(row(a, max_dv) for a in graph.var_adj)
    lines.extend(row(a, max_dc) for a in graph.chk_adj)
    return "\n".join(lines) + "\n"
