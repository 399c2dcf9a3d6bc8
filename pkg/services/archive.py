"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                       Run Archive Service                                        │
│                                                                                                  │
│  Description: Stores verification reports in the archive database and lists them back.           │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import logging
from typing import List, Optional

from sqlalchemy.orm import Session

from database.connection import SessionLocal, init_database
from models.report import VerificationReport
from models.verification_run import VerificationRun

logger = logging.getLogger(__name__)


class ArchiveService:
    """Service class for archived verification runs"""

    @staticmethod
    def archive_report(report: VerificationReport, db: Optional[Session] = None) -> int:
        """Persist a report unchanged; returns the new row id"""
        owns_session = db is None
        if owns_session:
            init_database()
            db = SessionLocal()
        try:
            run = VerificationRun(
                pipeline=report.pipeline,
                schema_version=report.schema_version,
                passed=report.passed,
                instance_source=report.instance.source,
                instance_seed=report.instance.seed,
                instance_digest=report.instance.digest,
                check_count=len(report.checks),
                failed_count=len(report.failures()),
                skipped_count=len(report.skipped()),
                report=report.model_dump(mode="json"),
            )
            db.add(run)
            db.commit()
            db.refresh(run)
            logger.info(f"Archived {report.pipeline} run as #{run.id}")
            return run.id
        except Exception:
            db.rollback()
            raise
        finally:
            if owns_session:
                db.close()

    @staticmethod
    def list_runs(
        pipeline: Optional[str] = None,
        failed_only: bool = False,
        limit: int = 50,
        db: Optional[Session] = None,
    ) -> List[dict]:
        """Newest first; each entry is the row without the stored report body"""
        owns_session = db is None
        if owns_session:
            init_database()
            db = SessionLocal()
        try:
            query = db.query(VerificationRun)
            if pipeline:
                query = query.filter(VerificationRun.pipeline == pipeline)
            if failed_only:
                query = query.filter(VerificationRun.passed.is_(False))
            runs = query.order_by(VerificationRun.id.desc()).limit(limit).all()
            return [
                {
                    **{k: v for k, v in run.to_dict().items() if k != "report"},
                    "created_at": run.created_at.isoformat() if run.created_at else None,
                }
                for run in runs
            ]
        finally:
            if owns_session:
                db.close()

    @staticmethod
    def load_report(run_id: int, db: Optional[Session] = None) -> Optional[VerificationReport]:
        owns_session = db is None
        if owns_session:
            init_database()
            db = SessionLocal()
        try:
            run = db.get(VerificationRun, run_id)
            return VerificationReport.model_validate(run.report) if run else None
        finally:
            if owns_session:
                db.close()


archive_report = ArchiveService.archive_report
list_runs = ArchiveService.list_runs
