"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                      Verification Run Model                                      │
│                                                                                                  │
│  Description: Archived verification reports, one row per pipeline run.                           │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

from sqlalchemy import JSON, Boolean, Column, Integer, String

from database.base import BaseModel


class VerificationRun(BaseModel):
    """One pipeline report as produced by the verify command"""

    __tablename__ = "verification_runs"

    pipeline = Column(String(20), nullable=False, index=True)
    schema_version = Column(String(10), nullable=False)
    passed = Column(Boolean, nullable=False, index=True)
    instance_source = Column(String(200), nullable=False)
    instance_seed = Column(Integer, nullable=True)
    instance_digest = Column(String(64), nullable=True, index=True)  # sha256 of canonical text
    check_count = Column(Integer, nullable=False)
    failed_count = Column(Integer, nullable=False, default=0)
    skipped_count = Column(Integer, nullable=False, default=0)
    report = Column(JSON, nullable=False)

    def __repr__(self):
        return f"<VerificationRun(pipeline='{self.pipeline}', passed={self.passed})>"
