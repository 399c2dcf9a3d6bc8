"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                           Runs Command                                           │
│                                                                                                  │
│  Description: Lists archived verification runs and prints stored reports.                        │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import click

from commands.common import emit_json
from config.settings import get_settings
from database.connection import configure
from services.archive import ArchiveService
from utils.errors import ToolkitError


@click.command("runs")
@click.option("--pipeline", default=None, help="Only runs of this pipeline")
@click.option("--failed", "failed_only", is_flag=True, help="Only failed runs")
@click.option("--limit", type=click.IntRange(min=1), default=50, show_default=True)
@click.option("--show", "run_id", type=int, default=None, help="Print the stored report of one run")
@click.option("--archive-url", default=None, help="SQLAlchemy URL of the archive database")
def runs_command(pipeline, failed_only, limit, run_id, archive_url):
    """Archived verification runs, newest first"""
    if archive_url:
        configure(archive_url, get_settings().archive_echo)
    if run_id is not None:
        report = ArchiveService.load_report(run_id)
        if report is None:
            raise ToolkitError(f"no archived run #{run_id}")
        emit_json(report.model_dump(mode="json"), None)
        return
    emit_json(ArchiveService.list_runs(pipeline=pipeline, failed_only=failed_only, limit=limit), None)
