"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                          Archive Tests                                           │
│                                                                                                  │
│  Description: Storing, listing and reloading verification reports in SQLite.                     │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import pytest

from database.connection import configure
from services.archive import ArchiveService
from services.verification import VerificationCaps, verify_step


@pytest.fixture
def archive_db(tmp_path):
    configure(f"sqlite:///{tmp_path}/runs.db")
    yield tmp_path / "runs.db"


@pytest.fixture
def step4_report(repeated_clause):
    return verify_step("4", repeated_clause)


def test_archive_and_list(archive_db, step4_report):
    run_id = ArchiveService.archive_report(step4_report)
    assert run_id == 1
    assert archive_db.exists()

    runs = ArchiveService.list_runs()
    assert len(runs) == 1
    entry = runs[0]
    assert entry["id"] == run_id
    assert entry["pipeline"] == "step4"
    assert entry["passed"] is True
    assert entry["check_count"] == len(step4_report.checks)
    assert entry["failed_count"] == 0
    assert "report" not in entry
    assert isinstance(entry["created_at"], str)


def test_list_filters(archive_db, step4_report, repeated_clause):
    skipped = verify_step("1", repeated_clause, caps=VerificationCaps(oracle_max_vars=2), beta=3)
    ArchiveService.archive_report(step4_report)
    ArchiveService.archive_report(skipped)

    assert [r["pipeline"] for r in ArchiveService.list_runs()] == ["step1", "step4"]
    assert [r["pipeline"] for r in ArchiveService.list_runs(pipeline="step4")] == ["step4"]
    assert ArchiveService.list_runs(failed_only=True) == []
    assert len(ArchiveService.list_runs(limit=1)) == 1
    assert ArchiveService.list_runs()[0]["skipped_count"] == len(skipped.skipped())


def test_load_report_returns_the_stored_report(archive_db, step4_report):
    run_id = ArchiveService.archive_report(step4_report)
    loaded = ArchiveService.load_report(run_id)
    assert loaded is not None
    assert loaded.deterministic_dump() == step4_report.deterministic_dump()
    assert loaded.passed


def test_load_unknown_run(archive_db):
    assert ArchiveService.load_report(42) is None
