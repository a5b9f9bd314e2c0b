"""SQLAlchemy models for archived verification runs."""
from sqlalchemy import Column, DateTime, Float, ForeignKey, Integer, String, Text
from sqlalchemy.orm import relationship
from sqlalchemy.sql import func

from database.database import Base


class VerifyRun(Base):
    """One `verify` invocation."""
    __tablename__ = "verify_runs"

    id = Column(Integer, primary_key=True, index=True)
    started_at = Column(DateTime(timezone=True), server_default=func.now())
    finished_at = Column(DateTime(timezone=True), nullable=True)
    claim_filter = Column(String, nullable=True)  # glob passed to --claim
    budget = Column(Integer, nullable=False)
    threads = Column(Integer, nullable=False, default=1)
    exit_code = Column(Integer, nullable=False)

    results = relationship("ClaimResult", back_populates="run", cascade="all, delete-orphan",
                           order_by="ClaimResult.position")


class ClaimResult(Base):
    """A single ClaimReport inside a run."""
    __tablename__ = "claim_results"

    id = Column(Integer, primary_key=True, index=True)
    run_id = Column(Integer, ForeignKey("verify_runs.id", ondelete="CASCADE"), nullable=False, index=True)
    position = Column(Integer, nullable=False)  # registry order within the run
    claim_id = Column(String, nullable=False, index=True)
    status = Column(String, nullable=False)
    reason = Column(String, nullable=True)
    nodes_visited = Column(Integer, nullable=False, default=0)
    wall_time = Column(Float, nullable=False, default=0.0)
    payload = Column(Text, nullable=False)  # report JSON without wall_time

    run = relationship("VerifyRun", back_populates="results")
