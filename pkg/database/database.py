"""Database configuration and session management for the claim-run archive."""
import logging

from sqlalchemy import create_engine
from sqlalchemy.orm import declarative_base, sessionmaker

from config.settings import settings

logger = logging.getLogger(__name__)

engine = create_engine(settings.RESULTS_DATABASE_URL)
SessionLocal = sessionmaker(autocommit=False, autoflush=False, bind=engine)

Base = declarative_base()


def get_db():
    """Yield a session and close it afterwards."""
    db = SessionLocal()
    try:
        yield db
    finally:
        db.close()


def init_db(bind=None) -> None:
    """
    Create the archive tables if they are missing.

    Alembic owns the schema for long-lived databases; this covers fresh
    SQLite files created by `verify --archive`.
    """
    from database import models  # noqa: F401  registers the tables on Base

    Base.metadata.create_all(bind=bind or engine)
    logger.debug(f"Archive tables ready on {(bind or engine).url}")
