#!/usr/bin/env python3
"""
Stable exit-code contract for every subcommand:
0 completed (any verdict, including inconclusive), 1 verification mismatch,
2 usage or input error, 3 unexpected internal error.
"""
from __future__ import annotations

import argparse
from typing import Callable

from src.obstruction.core.errors import FixtureError, GraphSpecError, SettingsError, UsageError
from src.obstruction.helpers.syslogging import make_logger

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

INPUT_ERRORS = (GraphSpecError, FixtureError, SettingsError, UsageError, OSError)

def guarded(run: Callable[[argparse.Namespace], int], args: argparse.Namespace, driver: str) -> int:
    log = make_logger(getattr(args, "log_level", "INFO"), driver)
    try:
        return run(args)
    except INPUT_ERRORS as e:
        log(f"input_error {type(e).__name__}: {e}", level="ERROR")
        return EXIT_USAGE
    except Exception as e:
        log(f"internal_error {type(e).__name__}: {e}", level="ERROR")
        return EXIT_INTERNAL
