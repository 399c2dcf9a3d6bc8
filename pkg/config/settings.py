"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                         Toolkit Settings                                         │
│                                                                                                  │
│  Description: Environment-driven defaults for oracle caps, search budgets, threads and logging.  │
│               Values come from the process environment or a local .env file.                     │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import os
from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

load_dotenv()

# Exhaustive oracle caps
ORACLE_MAX_VARS = int(os.getenv("TRAPSET_ORACLE_MAX_VARS", "24"))
SCAN_MAX_VARS = int(os.getenv("TRAPSET_SCAN_MAX_VARS", "22"))

# Search defaults
MAX_NODES = int(os.getenv("TRAPSET_MAX_NODES", str(10**8)))
_max_seconds = os.getenv("TRAPSET_MAX_SECONDS")
MAX_SECONDS = float(_max_seconds) if _max_seconds else None
THREADS = int(os.getenv("TRAPSET_THREADS", "1"))

LOG_LEVEL = os.getenv("TRAPSET_LOG_LEVEL", "WARNING").upper()

# Report archive (SQLite by default)
ARCHIVE_URL = os.getenv("TRAPSET_ARCHIVE_URL", "sqlite:///./trapset_runs.db")
ARCHIVE_ECHO = os.getenv("TRAPSET_ARCHIVE_ECHO", "false").lower() == "true"


class Settings(BaseModel):
    """Snapshot of the environment defaults; CLI flags override per call"""

    model_config = ConfigDict(frozen=True)

    oracle_max_vars: int = Field(default=ORACLE_MAX_VARS, ge=1)
    scan_max_vars: int = Field(default=SCAN_MAX_VARS, ge=1)
    max_nodes: int = Field(default=MAX_NODES, ge=1)
    max_seconds: Optional[float] = Field(default=MAX_SECONDS, gt=0)
    threads: int = Field(default=THREADS, ge=1)
    log_level: str = LOG_LEVEL
    archive_url: str = ARCHIVE_URL
    archive_echo: bool = ARCHIVE_ECHO


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Settings built once per process"""
    return Settings()
