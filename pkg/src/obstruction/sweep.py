#!/usr/bin/env python3
"""
Sweep the obstruction over k = k_min..k_max, one worker process per k.

Each row: degree, witness prime, discriminant digit count, square-free status,
Galois group, verdict. A failure for one k is recorded in that row's `error`
column and the sweep continues. Rows are printed in k order.
"""

from __future__ import annotations

import argparse
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor

import pandas as pd

from src.obstruction.core.errors import UsageError
from src.obstruction.core.graphs import HaagerupIndex
from src.obstruction.core.obstruct import ObstructOptions, obstruct
from src.obstruction.helpers.cli_defaults import (
    add_common_args,
    add_fixture_args,
    non_negative_int,
    resolve_settings,
)
from src.obstruction.helpers.df_validate import require_allowed, require_columns, require_non_nulls, require_unique
from src.obstruction.helpers.exit_codes import EXIT_OK, guarded
from src.obstruction.helpers.fixtures import load_published_tables
from src.obstruction.helpers.pipeline import run_tracked
from src.obstruction.helpers.syslogging import LogFn, make_logger
from src.obstruction.helpers.table_casting import coerce_df_to_schema, df_to_records, required_cols, table_cols

DRIVER_NAME = "sweep"
JOB_NAME = "obstruction_sweep"

SWEEP_SCHEMA = [
    ("k", "INT64", "REQUIRED"),
    ("n_paper", "INT64", "REQUIRED"),
    ("degree", "INT64", "NULLABLE"),
    ("irreducibility", "STRING", "NULLABLE"),
    ("witness_prime", "INT64", "NULLABLE"),
    ("disc_digits", "INT64", "NULLABLE"),
    ("disc", "BIGINT", "NULLABLE"),
    ("disc_source", "STRING", "NULLABLE"),
    ("disc_squarefree", "STRING", "NULLABLE"),
    ("group", "STRING", "NULLABLE"),
    ("cyclotomic", "STRING", "NULLABLE"),
    ("verdict", "STRING", "REQUIRED"),
    ("d", "FLOAT64", "NULLABLE"),
    ("secs", "FLOAT64", "REQUIRED"),
    ("error", "STRING", "NULLABLE"),
]

SWEEP_COLS = table_cols(SWEEP_SCHEMA)
VERDICTS = {"ruled_out", "possible", "inconclusive", "error"}

def add_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k-max", type=non_negative_int, required=True)
    p.add_argument("--k-min", type=non_negative_int, default=0)
    p.add_argument("--trust-table", action="store_true", help="use checked published factor tables")
    p.add_argument("--workers", type=non_negative_int, default=None, help="0 = one per CPU, 1 = inline")
    add_fixture_args(p)
    add_common_args(p)

def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    p = argparse.ArgumentParser(
        description="Cyclotomic obstruction sweep over the Haagerup series.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    add_arguments(p)
    return p.parse_args(argv)

def sweep_row(k: int, options: ObstructOptions) -> dict:
    """One table row for k; exceptions become an `error` entry. Top-level so it pickles."""
    t0 = time.perf_counter()
    row: dict = {col: None for col in SWEEP_COLS}
    row.update(k=k, n_paper=HaagerupIndex(k).n_paper)
    try:
        rep = obstruct(k, options)
        row.update(
            degree=rep.r.degree,
            irreducibility=rep.irreducibility.status,
            witness_prime=rep.irreducibility.witness_prime,
            disc_digits=len(str(abs(rep.disc))),
            disc=str(rep.disc),
            disc_source=rep.disc_source,
            disc_squarefree=rep.disc_squarefree.value,
            group=rep.galois.group,
            cyclotomic=rep.cyclotomic.value,
            verdict=rep.verdict.value,
            d=rep.pf.d if rep.pf else None,
        )
    except Exception as e:
        row.update(verdict="error", error=f"{type(e).__name__}: {e}"[:500])
    row["secs"] = round(time.perf_counter() - t0, 3)
    return row

def run_sweep(ks: list[int], options: ObstructOptions, *, workers: int, log: LogFn) -> pd.DataFrame:
    if workers == 0:
        workers = os.cpu_count() or 1
    workers = min(workers, len(ks)) or 1
    log(f"sweep_start ks={ks[0]}..{ks[-1]} workers={workers}", level="INFO")

    if workers == 1:
        rows = []
        for k in ks:
            rows.append(sweep_row(k, options))
            log(f"row k={k} verdict={rows[-1]['verdict']} secs={rows[-1]['secs']}", level="DEBUG")
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(sweep_row, ks, [options] * len(ks)))

    df = pd.DataFrame(rows, columns=SWEEP_COLS)
    df = coerce_df_to_schema(df, SWEEP_SCHEMA).sort_values("k").reset_index(drop=True)
    validate_sweep_table(df)
    return df

def validate_sweep_table(df: pd.DataFrame) -> None:
    require_columns(df, SWEEP_COLS, label="sweep table")
    require_non_nulls(df, required_cols(SWEEP_SCHEMA), label="sweep table")
    require_unique(df, "k", label="sweep table")
    require_allowed(df, "verdict", VERDICTS, label="sweep table")

def log_verdict_counts(df: pd.DataFrame, log: LogFn) -> None:
    counts = df["verdict"].value_counts().to_dict()
    log("verdict_counts " + " ".join(f"{v}={counts.get(v, 0)}" for v in sorted(VERDICTS)), level="INFO")

def run(args: argparse.Namespace) -> int:
    log = make_logger(args.log_level, DRIVER_NAME)
    settings = resolve_settings(args)
    if args.k_min > args.k_max:
        raise UsageError(f"--k-min {args.k_min} exceeds --k-max {args.k_max}")

    table = load_published_tables(args.fixtures).claims_by_k() if args.trust_table else None
    options = settings.options(trust_table=args.trust_table, table=table)
    ks = list(range(args.k_min, args.k_max + 1))

    def _job() -> tuple[int, str]:
        df = run_sweep(ks, options, workers=settings.workers, log=log)
        log_verdict_counts(df, log)
        if args.json:
            print(json.dumps(df_to_records(df, SWEEP_SCHEMA), indent=2))
        else:
            hidden = ["disc"] + (["error"] if df["error"].isna().all() else [])
            print(df.drop(columns=hidden).to_string(index=False))
        errors = int(df["error"].notna().sum())
        notes = f"k={ks[0]}..{ks[-1]} trust_table={args.trust_table} errors={errors}"
        return len(df), notes

    run_tracked(job_name=JOB_NAME, log=log, fn=_job, runs_log=settings.runs_log)
    return EXIT_OK

def main(argv: list[str] | None = None) -> int:
    return guarded(run, parse_args(argv), DRIVER_NAME)

if __name__ == "__main__":
    raise SystemExit(main())
