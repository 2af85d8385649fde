#!/usr/bin/env python3
from __future__ import annotations

from typing import Iterable

import pandas as pd

def coerce_df_to_schema(df: pd.DataFrame, schema: Iterable[tuple[str, str, str]]) -> pd.DataFrame:
    """
    Coerce result-table columns to their declared types.

    Notes:
    - This is NOT validation (required/null checks happen in df_validate).
    - BIGINT columns (discriminants, primes) stay as decimal strings: they exceed
      int64 and must print without loss.

    schema: iterable of (name, type, mode) with type in INT64 | FLOAT64 | STRING | BIGINT
    """
    df = df.copy()

    for name, col_type, _mode in schema:
        if name not in df.columns:
            continue

        t = col_type.upper()

        if t == "INT64":
            df[name] = pd.to_numeric(df[name], errors="coerce").astype("Int64")

        elif t == "FLOAT64":
            df[name] = pd.to_numeric(df[name], errors="coerce")

        elif t in ("STRING", "BIGINT"):
            df[name] = df[name].map(lambda v: pd.NA if pd.isna(v) else str(v)).astype("string")

    return df

def required_cols(schema: Iterable[tuple[str, str, str]]) -> list[str]:
    return [name for name, _, mode in schema if mode == "REQUIRED"]

def table_cols(schema: Iterable[tuple[str, str, str]]) -> list[str]:
    return [name for name, _, _ in schema]

def df_to_records(df: pd.DataFrame, schema: Iterable[tuple[str, str, str]]) -> list[dict]:
    """
    JSON-ready rows: INT64 -> int, FLOAT64 -> repr string (round-trips the
    double exactly), STRING/BIGINT -> str, missing -> None.
    """
    types = {name: col_type.upper() for name, col_type, _ in schema}
    records: list[dict] = []
    for rec in df.to_dict(orient="records"):
        row: dict = {}
        for name, v in rec.items():
            t = types.get(name, "STRING")
            if pd.isna(v):
                row[name] = None
            elif t == "INT64":
                row[name] = int(v)
            elif t == "FLOAT64":
                row[name] = repr(float(v))
            else:
                row[name] = str(v)
        records.append(row)
    return records
