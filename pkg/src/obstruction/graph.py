#!/usr/bin/env python3
"""
Run the generic obstruction pipeline on a bipartite graph file.

File format (JSON):
    {"rows": 6, "cols": 4, "adjacency": [[1,0,0,0], ...], "labels": {...}}

When the minimal polynomial cannot be certified the report says so (verdict
inconclusive) and still carries charpoly, squarefree part and PF estimate.
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from src.obstruction.analyze import emit_report, stage_logger
from src.obstruction.core.graphs import load_graph_spec
from src.obstruction.core.obstruct import obstruct
from src.obstruction.helpers.cli_defaults import add_common_args, resolve_settings
from src.obstruction.helpers.exit_codes import EXIT_OK, guarded
from src.obstruction.helpers.pipeline import run_tracked
from src.obstruction.helpers.syslogging import make_logger

DRIVER_NAME = "graph"
JOB_NAME = "obstruction_graph"

def add_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", help="BipartiteGraphSpec JSON file")
    add_common_args(p)

def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    p = argparse.ArgumentParser(
        description="Cyclotomic obstruction for a bipartite graph file.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    add_arguments(p)
    return p.parse_args(argv)

def run(args: argparse.Namespace) -> int:
    log = make_logger(args.log_level, DRIVER_NAME)
    settings = resolve_settings(args)

    spec = load_graph_spec(args.file)
    name = Path(args.file).name
    log(f"start file={name} rows={spec.rows} cols={spec.cols} witness_bound={settings.witness_bound}", level="INFO")

    def _job() -> tuple[int, str]:
        t0 = time.perf_counter()
        rep = obstruct(spec, settings.options(), name=name, trace=stage_logger(log, f"file={name}"))
        if not rep.irreducibility.certified:
            log(
                f"minimal_poly_uncertified file={name} candidate_degree={rep.r.degree} "
                f"bound={settings.witness_bound}",
                level="INFO",
            )
        log(f"done file={name} verdict={rep.verdict.value} secs={time.perf_counter() - t0:.2f}", level="INFO")
        emit_report(rep, as_json=args.json)
        return 1, f"file={name} verdict={rep.verdict.value} group={rep.galois.group}"

    run_tracked(job_name=JOB_NAME, log=log, fn=_job, runs_log=settings.runs_log)
    return EXIT_OK

def main(argv: list[str] | None = None) -> int:
    return guarded(run, parse_args(argv), DRIVER_NAME)

if __name__ == "__main__":
    raise SystemExit(main())
