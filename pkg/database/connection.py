"""
┌──────────────────────────────────────────────────────────────────────────────────────────────────┐
│                                         TRAPSET TOOLKIT                                          │
│                                                                                                  │
│                                   Database Connection Manager                                    │
│                                                                                                  │
│  Description: Engine and session factory for the verification-run archive.                       │
│               SQLite by default; the URL comes from TRAPSET_ARCHIVE_URL.                         │
│                                                                                                  │
│  Author: Ceybyte Development Team                                                                │
│  Copyright: 2025 Ceybyte.com - LDPC Trapping Set Toolkit                                         │
│  License: MIT License                                                                            │
└──────────────────────────────────────────────────────────────────────────────────────────────────┘
"""

import logging
import sqlite3

from sqlalchemy import create_engine, event
from sqlalchemy.engine import Engine
from sqlalchemy.orm import sessionmaker

from config.settings import ARCHIVE_ECHO, ARCHIVE_URL

logger = logging.getLogger(__name__)


def _create_engine(url: str, echo: bool = False) -> Engine:
    connect_args = {"check_same_thread": False, "timeout": 30} if url.startswith("sqlite") else {}
    return create_engine(url, echo=echo, connect_args=connect_args, pool_pre_ping=True)


engine = _create_engine(ARCHIVE_URL, ARCHIVE_ECHO)

SessionLocal = sessionmaker(autocommit=False, autoflush=False, bind=engine)


@event.listens_for(Engine, "connect")
def set_sqlite_pragma(dbapi_connection, connection_record):
    """WAL journal so a reader can list runs while a pipeline archives one"""
    if isinstance(dbapi_connection, sqlite3.Connection):
        cursor = dbapi_connection.cursor()
        cursor.execute("PRAGMA journal_mode=WAL")
        cursor.execute("PRAGMA synchronous=NORMAL")
        cursor.execute("PRAGMA busy_timeout=30000")
        cursor.close()


def configure(url: str, echo: bool = False) -> Engine:
    """Point the archive at another database (CLI --archive-url, tests)"""
    global engine
    engine = _create_engine(url, echo)
    SessionLocal.configure(bind=engine)
    logger.info(f"Archive database set to {url}")
    return engine


def get_db():
    """Yield a session and always close it"""
    db = SessionLocal()
    try:
        yield db
    finally:
        db.close()


def init_database():
    """Create the archive tables if they do not exist"""
    from database.base import Base
    import models  # noqa: F401  registers every table

    Base.metadata.create_all(bind=engine)
