#!/usr/bin/env python3
from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import yaml

from src.obstruction.core.errors import SettingsError
from src.obstruction.core.numthy import FactorBudget
from src.obstruction.core.obstruct import ObstructOptions

@dataclass(frozen=True)
class Settings:
    witness_bound: int = 200
    rho_budget: int = 1 << 26
    trial_bound: int = 1 << 16
    mr_rounds: int = 40
    seed: int = 20240611
    tol: float = 1e-12
    max_iters: int = 1_000_000
    workers: int = 0
    degree_patterns: bool = True
    runs_log: str = ""

    def __post_init__(self) -> None:
        for name in ("witness_bound", "rho_budget", "trial_bound", "mr_rounds", "max_iters"):
            if getattr(self, name) < 1:
                raise SettingsError(f"settings {name} must be >= 1, got {getattr(self, name)}")
        if not (0 < self.tol < 1):
            raise SettingsError(f"settings tol must be in (0, 1), got {self.tol}")
        if self.workers < 0:
            raise SettingsError(f"settings workers must be >= 0, got {self.workers}")

    def replace(self, **changes) -> "Settings":
        return dataclasses.replace(self, **changes)

    def budget(self) -> FactorBudget:
        return FactorBudget(
            trial_bound=self.trial_bound,
            rho_iterations=self.rho_budget,
            mr_rounds=self.mr_rounds,
            seed=self.seed,
        )

    def options(self, *, trust_table: bool = False, table=None) -> ObstructOptions:
        return ObstructOptions(
            witness_bound=self.witness_bound,
            budget=self.budget(),
            tol=self.tol,
            max_iters=self.max_iters,
            degree_patterns=self.degree_patterns,
            trust_table=trust_table,
            table=table,
        )

_CASTS = {
    "witness_bound": int,
    "rho_budget": int,
    "trial_bound": int,
    "mr_rounds": int,
    "seed": int,
    "tol": float,
    "max_iters": int,
    "workers": int,
    "degree_patterns": bool,
    "runs_log": str,
}

def load_settings(
    path: str
) -> Settings:
    """
    Load effort budgets from YAML (`settings:` mapping). Missing keys keep
    their defaults; unknown keys are an error.
    """
    with open(path, 'r', encoding='utf-8') as f:
        try:
            cfg = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise SettingsError(f"{path} invalid YAML ({e})") from e

    raw = cfg.get('settings', {}) or {}
    unknown = set(raw) - set(_CASTS)
    if unknown:
        raise SettingsError(f"{path} unknown settings keys: {sorted(unknown)}")
    values = {key: _CASTS[key](val) for key, val in raw.items() if val is not None}
    return Settings(**values)
