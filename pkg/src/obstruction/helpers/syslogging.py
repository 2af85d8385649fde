#!/usr/bin/env python3

import sys
from typing import Literal, Protocol

LogLevel = Literal['ERROR', 'INFO', 'DEBUG']

LEVELS: dict[str, int] = {'ERROR': 0, 'INFO': 1, 'DEBUG': 2}

class LogFn(Protocol):
    def __call__(self, msg: str, level: LogLevel = 'INFO') -> None: ...

def make_logger(
    min_level: str,
    driver: str
) -> LogFn:
    """
    Line logger: `[driver] LEVEL msg` on stderr, so stdout stays clean for --json.
    Unknown levels fall back to INFO.
    """
    min_level = (min_level or 'INFO').upper()
    if min_level not in LEVELS:
        min_level = 'INFO'

    def _log(msg: str, level: LogLevel = 'INFO') -> None:
        lvl = level.upper()
        if lvl not in LEVELS:
            lvl = 'INFO'
        if LEVELS[lvl] <= LEVELS[min_level]:
            print(f"[{driver}] {lvl} {msg}", file=sys.stderr, flush=True)

    return _log
