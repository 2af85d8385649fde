#!/usr/bin/env python3
"""
Run the obstruction pipeline on one Haagerup series graph Gamma_k.

Output:
- human-readable report on stdout (default), or the report JSON with --json
- stage logs on stderr
- optional --dump-graph writes build_A(k) as a graph file for the `graph` job
"""

from __future__ import annotations

import argparse
import json
import time

from src.obstruction.core.graphs import HaagerupIndex, build_A, dump_graph_spec
from src.obstruction.core.obstruct import obstruct
from src.obstruction.core.report import ObstructionReport, render_text, report_to_dict
from src.obstruction.helpers.cli_defaults import (
    add_common_args,
    add_fixture_args,
    non_negative_int,
    resolve_settings,
)
from src.obstruction.helpers.exit_codes import EXIT_OK, guarded
from src.obstruction.helpers.fixtures import load_published_tables
from src.obstruction.helpers.pipeline import run_tracked
from src.obstruction.helpers.report_validate import require_report_shape
from src.obstruction.helpers.syslogging import LogFn, make_logger

DRIVER_NAME = "analyze"
JOB_NAME = "obstruction_analyze"

def add_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=non_negative_int, required=True, help="series index k >= 0")
    p.add_argument("--trust-table", action="store_true", help="use checked published factor tables")
    p.add_argument("--dump-graph", default=None, help="also write build_A(k) as a graph JSON file")
    add_fixture_args(p)
    add_common_args(p)

def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    p = argparse.ArgumentParser(
        description="Cyclotomic obstruction for one Haagerup series graph.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    add_arguments(p)
    return p.parse_args(argv)

def stage_logger(log: LogFn, prefix: str):
    def _trace(stage: str, fields: dict) -> None:
        kv = " ".join(f"{k}={v}" for k, v in fields.items())
        log(f"{prefix} stage={stage} {kv}", level="DEBUG" if stage != "verdict" else "INFO")
    return _trace

def emit_report(rep: ObstructionReport, *, as_json: bool) -> None:
    if as_json:
        data = report_to_dict(rep)
        require_report_shape(data)
        print(json.dumps(data, indent=2))
    else:
        print(render_text(rep))

def run(args: argparse.Namespace) -> int:
    log = make_logger(args.log_level, DRIVER_NAME)
    settings = resolve_settings(args)
    idx = HaagerupIndex(args.k)

    table = load_published_tables(args.fixtures).claims_by_k() if args.trust_table else None
    options = settings.options(trust_table=args.trust_table, table=table)

    log(
        f"start k={idx.k} n_paper={idx.n_paper} witness_bound={settings.witness_bound} "
        f"rho_budget={settings.rho_budget} trust_table={args.trust_table} seed={settings.seed}",
        level="INFO",
    )

    def _job() -> tuple[int, str]:
        if args.dump_graph:
            path = dump_graph_spec(build_A(idx), args.dump_graph)
            log(f"dump_graph path={path}", level="INFO")
        t0 = time.perf_counter()
        rep = obstruct(idx, options, trace=stage_logger(log, f"k={idx.k}"))
        log(f"done k={idx.k} verdict={rep.verdict.value} secs={time.perf_counter() - t0:.2f}", level="INFO")
        emit_report(rep, as_json=args.json)
        notes = (
            f"k={idx.k} verdict={rep.verdict.value} group={rep.galois.group} "
            f"disc_source={rep.disc_source} trust_table={args.trust_table}"
        )
        return 1, notes

    run_tracked(job_name=JOB_NAME, log=log, fn=_job, runs_log=settings.runs_log)
    return EXIT_OK

def main(argv: list[str] | None = None) -> int:
    return guarded(run, parse_args(argv), DRIVER_NAME)

if __name__ == "__main__":
    raise SystemExit(main())
