#!/usr/bin/env python3

from __future__ import annotations

from typing import Iterable
import pandas as pd

def require_columns(
    df: pd.DataFrame,
    required: Iterable[str],
    *,
    label: str
) -> None:
    cols = set(df.columns)
    missing = set(required) - cols
    if missing:
        raise ValueError(
            f'{label} missing columns: {sorted(missing)}. '
            f'Got: {sorted(cols)}'
        )

def require_non_nulls(
    df: pd.DataFrame,
    required_cols: Iterable[str],
    *,
    label: str
) -> None:
    required_cols = list(required_cols)
    nulls = df[required_cols].isna()
    if nulls.any().any():
        bad = df[nulls.any(axis=1)].head(10)
        raise ValueError(f'{label} nulls in required columns:\n{bad}')

def require_unique(
    df: pd.DataFrame,
    key: str,
    *,
    label: str
) -> None:
    dup = df[df[key].duplicated(keep=False)]
    if len(dup):
        raise ValueError(f'{label} duplicate {key} values: {sorted(dup[key].unique().tolist())}')

def require_allowed(
    df: pd.DataFrame,
    col: str,
    allowed: Iterable[str],
    *,
    label: str
) -> None:
    allowed = set(allowed)
    present = df[col].dropna()
    bad = present[~present.isin(allowed)]
    if len(bad):
        raise ValueError(f'{label} column {col} has values outside {sorted(allowed)}: {sorted(set(bad))}')
