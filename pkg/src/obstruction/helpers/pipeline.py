#!/usr/bin/env python3
"""
Reusable run wrapper for the obstruction jobs:
- standardizes run_id/start/end/status/notes handling
- appends one row per run to a JSONL ledger in a finally block (when configured)
"""

from __future__ import annotations

import datetime as dt
import uuid
from pathlib import Path
from typing import Callable

import pandas as pd

from src.obstruction.helpers.syslogging import LogFn

RUN_COLUMNS = ["run_id", "job_name", "start_ts", "end_ts", "status", "rows_written", "notes"]


def log_run(path: str, row: dict) -> None:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    df = pd.DataFrame([row], columns=RUN_COLUMNS)
    df.to_json(p, orient="records", lines=True, date_format="iso", mode="a")


def run_tracked(
    *,
    job_name: str,
    log: LogFn,
    fn: Callable[[], tuple[int, str]],
    runs_log: str = "",
) -> tuple[int, str]:
    """
    Run a job function and record its outcome.

    fn() must return: (rows_written, notes). Exceptions are re-raised after the
    ledger row is written; ledger failures are logged, never raised.
    """
    run_id = str(uuid.uuid4())
    start_ts = dt.datetime.now(dt.timezone.utc)

    status = "FAILED"
    rows_written = 0
    notes = ""

    log(f"run_started run_id={run_id} job={job_name}", level="INFO")
    try:
        rows_written, notes = fn()
        status = "SUCCESS"
        return rows_written, notes
    except Exception as e:
        err_msg = f"{type(e).__name__}: {e}"
        base = f"job={job_name} run_id={run_id}"
        notes = f"{base} {notes} err={err_msg[:500]}" if notes else f"{base} err={err_msg[:500]}"
        raise
    finally:
        end_ts = dt.datetime.now(dt.timezone.utc)
        secs = (end_ts - start_ts).total_seconds()
        log(f"run_finished run_id={run_id} status={status} rows={rows_written} secs={secs:.2f}", level="INFO")

        if runs_log:
            try:
                log_run(
                    runs_log,
                    {
                        "run_id": run_id,
                        "job_name": job_name,
                        "start_ts": start_ts.isoformat(),
                        "end_ts": end_ts.isoformat(),
                        "status": status,
                        "rows_written": rows_written,
                        "notes": notes,
                    },
                )
            except Exception as e:
                log(f"runs_log_failed path={runs_log} err={type(e).__name__}: {e}", level="ERROR")
