"""
Database connection and session management
"""
import os
from contextlib import contextmanager
from functools import lru_cache
from sqlalchemy import create_engine
from sqlalchemy.engine import Engine
from sqlalchemy.orm import sessionmaker, Session

from src.database.models import Base


@lru_cache(maxsize=None)
def get_engine(db_path: str) -> Engine:
    """
    Get (and create on first use) the SQLite engine for a database file

    Tables are created if missing.
    """
    directory = os.path.dirname(db_path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    engine = create_engine(
        f"sqlite:///{db_path}",
        echo=False,
        connect_args={"check_same_thread": False}  # Needed for SQLite
    )
    Base.metadata.create_all(bind=engine)
    return engine


@lru_cache(maxsize=None)
def _session_factory(db_path: str) -> sessionmaker:
    return sessionmaker(autocommit=False, autoflush=False, bind=get_engine(db_path))


@contextmanager
def get_session(db_path: str) -> Session:
    """
    Context manager for database sessions

    Usage:
        with get_session(path) as session:
            # do database operations
            session.commit()
    """
    session = _session_factory(db_path)()
    try:
        yield session
    finally:
        session.close()
