#!/usr/bin/env python3
"""
python -m src.obstruction <subcommand> [flags]

Subcommands: analyze, sweep, graph, verify-paper. Each one is also runnable on
its own (python -m src.obstruction.analyze ...).
"""

from __future__ import annotations

import argparse

from src.obstruction import analyze, graph, sweep, verify_paper
from src.obstruction.helpers.exit_codes import guarded

JOBS = {
    "analyze": analyze,
    "sweep": sweep,
    "graph": graph,
    "verify-paper": verify_paper,
}

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="python -m src.obstruction",
        description="Cyclotomic-integer obstruction for subfactor principal graphs.",
    )
    sub = p.add_subparsers(dest="command", required=True)
    for name, module in JOBS.items():
        sp = sub.add_parser(
            name,
            help=(module.__doc__ or "").strip().splitlines()[0],
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        module.add_arguments(sp)
    return p

def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    module = JOBS[args.command]
    return guarded(module.run, args, module.DRIVER_NAME)

if __name__ == "__main__":
    raise SystemExit(main())
