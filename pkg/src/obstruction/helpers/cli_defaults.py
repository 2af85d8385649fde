#!/usr/bin/env python3
from __future__ import annotations

import argparse
import os

from src.obstruction.helpers.settings import Settings, load_settings

SETTINGS_ENV = "OBSTRUCTION_SETTINGS"
FIXTURES_ENV = "OBSTRUCTION_FIXTURES"
LOG_LEVEL_ENV = "OBSTRUCTION_LOG_LEVEL"
RUNS_LOG_ENV = "OBSTRUCTION_RUNS_LOG"

DEFAULT_SETTINGS_PATH = "src/config/settings.yaml"
DEFAULT_FIXTURES_PATH = "src/config/published_tables.yaml"

def env_default(name: str, default: str) -> str:
    return os.getenv(name, default)

def non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value

def resolve_settings(args: argparse.Namespace) -> Settings:
    return apply_overrides(load_settings(args.settings), args)

def add_common_args(p: argparse.ArgumentParser) -> None:
    """Flags shared by every subcommand. Effort flags default to None = take settings.yaml."""
    p.add_argument("--settings", default=env_default(SETTINGS_ENV, DEFAULT_SETTINGS_PATH))
    p.add_argument("--log-level", default=env_default(LOG_LEVEL_ENV, "INFO"), choices=["ERROR", "INFO", "DEBUG"])
    p.add_argument("--json", action="store_true", help="machine-readable output on stdout")
    p.add_argument("--witness-bound", type=int, default=None)
    p.add_argument("--rho-budget", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--no-degree-patterns", action="store_true")

def add_fixture_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--fixtures", default=env_default(FIXTURES_ENV, DEFAULT_FIXTURES_PATH))

def apply_overrides(settings: Settings, args: argparse.Namespace) -> Settings:
    """CLI flags win over settings.yaml; the runs ledger can also come from env."""
    overrides: dict = {}
    for flag, key in (
        ("witness_bound", "witness_bound"),
        ("rho_budget", "rho_budget"),
        ("seed", "seed"),
        ("tol", "tol"),
        ("workers", "workers"),
    ):
        value = getattr(args, flag, None)
        if value is not None:
            overrides[key] = value
    if getattr(args, "no_degree_patterns", False):
        overrides["degree_patterns"] = False
    runs_log = os.getenv(RUNS_LOG_ENV)
    if runs_log is not None:
        overrides["runs_log"] = runs_log
    return settings.replace(**overrides)
