"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                         Command Helpers                                          │
│                                                                                                  │
│  Description: Shared option sets, input loading and JSON output for the CLI commands.            │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import hashlib
import json
from pathlib import Path
from typing import Any, Callable, Optional

import click

from config.settings import get_settings
from models.formula import MonotoneFormula
from models.search import SearchBudget
from models.tanner_graph import TannerGraph
from utils.alist import parse_alist
from utils.formula_io import parse_formula

KINDS = ("TS", "ETS", "LETS", "ABS", "EABS")


def read_text(path: str) -> str:
    if path == "-":
        return click.get_text_stream("stdin").read()
    return Path(path).read_text(encoding="utf-8")


def load_formula(path: str) -> MonotoneFormula:
    return parse_formula(read_text(path))


def load_graph(path: str) -> TannerGraph:
    return parse_alist(read_text(path))


def text_digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def emit_json(data: Any, out: Optional[str]) -> None:
    """Pretty JSON to stdout, or to `out` when given"""
    text = json.dumps(data, indent=2, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        click.echo(text)


def json_option(func: Callable) -> Callable:
    return click.option(
        "--json",
        "json_out",
        type=click.Path(dir_okay=False),
        default=None,
        help="Write the JSON result to this file instead of stdout",
    )(func)


def budget_options(func: Callable) -> Callable:
    """--max-nodes, --max-seconds, --max-size and --threads"""
    settings = get_settings()
    func = click.option(
        "--threads", type=click.IntRange(min=1), default=settings.threads, show_default=True
    )(func)
    func = click.option(
        "--max-size", type=click.IntRange(min=1), default=None, help="Largest subset size searched"
    )(func)
    func = click.option(
        "--max-seconds", type=click.FloatRange(min=0, min_open=True), default=settings.max_seconds
    )(func)
    func = click.option(
        "--max-nodes", type=click.IntRange(min=1), default=settings.max_nodes, show_default=True
    )(func)
    return func


def make_budget(
    max_nodes: Optional[int], max_seconds: Optional[float], max_size: Optional[int]
) -> SearchBudget:
    return SearchBudget(max_nodes=max_nodes, max_seconds=max_seconds, max_subset_size=max_size)
