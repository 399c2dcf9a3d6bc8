"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                           Alist Tests                                            │
│                                                                                                  │
│  Description: Parsing, writing and diagnostics of alist documents.                               │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import pytest

from utils.alist import parse_alist, write_alist
from utils.errors import AlistParseError

SIX_CYCLE_ALIST = """3 3
2 2
2 2 2
2 2 2
1 3
1 2
2 3
1 2
2 3
1 3
"""


def test_write_six_cycle(six_cycle):
    assert write_alist(six_cycle) == SIX_CYCLE_ALIST


def test_parse_six_cycle(six_cycle):
    assert parse_alist(SIX_CYCLE_ALIST).same_structure(six_cycle)


def test_zero_padding_is_ignored():
    text = "2 1\n1 2\n1 1\n2\n1\n1\n1 2\n"
    graph = parse_alist(text)
    assert graph.var_adj == ((0,), (0,))
    padded = write_alist(parse_alist("3 2\n2 2\n2 1 1\n2 2\n1 2\n1 0\n2 0\n1 2\n1 3\n"))
    assert "1 0" in padded


def test_round_trip_random_graphs(random_graphs):
    for graph in random_graphs(20):
        text = write_alist(graph)
        assert write_alist(parse_alist(text)) == text
        assert parse_alist(text).same_structure(graph)


def test_round_trip_reduction_output(k33):
    assert parse_alist(write_alist(k33)).same_structure(k33)


def test_degree_mismatch_reports_line():
    text = SIX_CYCLE_ALIST.replace("1 3\n1 2\n2 3\n1 2", "1 3\n1 2\n2 3\n1 0", 1)
    with pytest.raises(AlistParseError) as info:
        parse_alist(text)
    assert info.value.line == 8


def test_non_integer_token():
    with pytest.raises(AlistParseError, match="line 2"):
        parse_alist("3 3\n2 x\n")


def test_truncated_document():
    with pytest.raises(AlistParseError, match="unexpected end"):
        parse_alist("3 3\n2 2\n2 2 2\n")


def test_inconsistent_sides():
    text = "2 2\n1 1\n1 1\n1 1\n1\n2\n2\n1\n"
    with pytest.raises(AlistParseError, match="disagree"):
        parse_alist(text)


def test_declared_maximum_must_match():
    with pytest.raises(AlistParseError, match="maximum"):
        parse_alist("1 1\n2 1\n1\n1\n1\n1\n")
