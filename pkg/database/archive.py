"""Store and list verification runs."""
import json
import logging
from datetime import datetime, timezone

from sqlalchemy.orm import Session

from database.database import get_db, init_db
from database.models import ClaimResult, VerifyRun
from verify.reports import ClaimReport

logger = logging.getLogger(__name__)


def save_run(reports: list[ClaimReport], claim_filter: str | None, budget: int, threads: int,
             exit_code: int, db: Session | None = None) -> int:
    """
    Persist a verify run with its reports.

    Args:
        reports: Reports in the order they were produced
        claim_filter: Glob given to --claim, if any
        budget: Node budget per search
        threads: Worker processes
        exit_code: Exit code computed for the run
        db: Session to use; a new one is opened when omitted

    Returns:
        Id of the stored run
    """
    owned = db is None
    if owned:
        init_db()
        db = next(get_db())
    try:
        run = VerifyRun(
            claim_filter=claim_filter,
            budget=budget,
            threads=threads,
            exit_code=exit_code,
            finished_at=datetime.now(timezone.utc),
        )
        for position, report in enumerate(reports):
            run.results.append(ClaimResult(
                position=position,
                claim_id=report.claim_id,
                status=report.status.value,
                reason=report.reason.value if report.reason else None,
                nodes_visited=report.nodes_visited,
                wall_time=report.wall_time,
                payload=json.dumps(report.to_json(include_time=False), sort_keys=False),
            ))
        db.add(run)
        db.commit()
        db.refresh(run)
        logger.info(f"Archived run {run.id} with {len(reports)} claim reports")
        return run.id
    except Exception as e:
        logger.error(f"Failed to archive verify run: {e}", exc_info=True)
        db.rollback()
        raise
    finally:
        if owned:
            db.close()


def list_runs(limit: int = 10, db: Session | None = None) -> list[dict]:
    """Most recent runs first, each with a per-status tally."""
    owned = db is None
    if owned:
        init_db()
        db = next(get_db())
    try:
        runs = db.query(VerifyRun).order_by(VerifyRun.id.desc()).limit(limit).all()
        summaries = []
        for run in runs:
            tally: dict[str, int] = {}
            for result in run.results:
                tally[result.status] = tally.get(result.status, 0) + 1
            summaries.append({
                "run_id": run.id,
                "started_at": run.started_at.isoformat() if run.started_at else None,
                "finished_at": run.finished_at.isoformat() if run.finished_at else None,
                "claim_filter": run.claim_filter,
                "budget": run.budget,
                "threads": run.threads,
                "exit_code": run.exit_code,
                "claims": len(run.results),
                "statuses": dict(sorted(tally.items())),
            })
        return summaries
    finally:
        if owned:
            db.close()


def load_reports(run_id: int, db: Session) -> list[dict]:
    """Stored report payloads of one run, in their original order."""
    results = (db.query(ClaimResult)
               .filter(ClaimResult.run_id == run_id)
               .order_by(ClaimResult.position)
               .all())
    return [json.loads(result.payload) for result in results]
