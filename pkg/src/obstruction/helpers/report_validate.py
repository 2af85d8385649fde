#!/usr/bin/env python3
"""
Shape checks for report JSON before it is emitted: required keys, decimal-string
big integers, enum values. Raises ReportError with the JSON path of the problem.
"""
from __future__ import annotations

import re

from src.obstruction.core.errors import ReportError

DECIMAL = re.compile(r"^-?\d+$")
FLOAT_TEXT = re.compile(r"^-?(\d+(\.\d*)?|\.\d+)([eE][-+]?\d+)?$|^(inf|nan)$")

REQUIRED_KEYS = (
    "source", "n_paper", "degree", "r_coeffs", "charpoly", "squarefree_part",
    "irreducibility", "disc", "disc_factors", "disc_cofactor", "disc_complete",
    "disc_source", "disc_squarefree", "galois", "cyclotomic", "verdict", "pf",
)
VERDICTS = {"ruled_out", "possible", "inconclusive"}
TRISTATE = {"yes", "no", "unknown"}
CERTAINTY = {"proven", "probable"}

def _decimal(value, where: str) -> None:
    if not isinstance(value, str) or not DECIMAL.match(value):
        raise ReportError(f"{where} must be a decimal string, got {value!r}")

def _decimal_list(values, where: str) -> None:
    if not isinstance(values, list):
        raise ReportError(f"{where} must be a list")
    for i, v in enumerate(values):
        _decimal(v, f"{where}[{i}]")

def require_report_shape(data: dict, *, label: str = "report") -> None:
    missing = [k for k in REQUIRED_KEYS if k not in data]
    if missing:
        raise ReportError(f"{label} missing keys: {missing}")

    src = data["source"]
    if not isinstance(src, dict) or not (set(src) == {"series_k"} or set(src) == {"file"}):
        raise ReportError(f"{label}.source must be {{'series_k': k}} or {{'file': name}}, got {src!r}")

    _decimal_list(data["r_coeffs"], f"{label}.r_coeffs")
    _decimal_list(data["charpoly"], f"{label}.charpoly")
    _decimal_list(data["squarefree_part"], f"{label}.squarefree_part")
    _decimal(data["disc"], f"{label}.disc")
    _decimal(data["disc_cofactor"], f"{label}.disc_cofactor")

    for i, f in enumerate(data["disc_factors"]):
        _decimal(f.get("p"), f"{label}.disc_factors[{i}].p")
        if not isinstance(f.get("e"), int) or f["e"] < 1:
            raise ReportError(f"{label}.disc_factors[{i}].e must be a positive integer")
        if f.get("certainty") not in CERTAINTY:
            raise ReportError(f"{label}.disc_factors[{i}].certainty must be one of {sorted(CERTAINTY)}")

    irr = data["irreducibility"]
    if irr.get("status") not in ("certified", "unresolved"):
        raise ReportError(f"{label}.irreducibility.status invalid: {irr.get('status')!r}")
    if irr.get("witness_prime") is not None and not isinstance(irr["witness_prime"], int):
        raise ReportError(f"{label}.irreducibility.witness_prime must be an integer")

    gal = data["galois"]
    if gal.get("abelian") not in (True, False, None):
        raise ReportError(f"{label}.galois.abelian must be true/false/null")

    if data["cyclotomic"] not in TRISTATE:
        raise ReportError(f"{label}.cyclotomic invalid: {data['cyclotomic']!r}")
    if data["disc_squarefree"] not in TRISTATE:
        raise ReportError(f"{label}.disc_squarefree invalid: {data['disc_squarefree']!r}")
    if data["verdict"] not in VERDICTS:
        raise ReportError(f"{label}.verdict invalid: {data['verdict']!r}")

    # verdict chain: ruled_out iff cyclotomic = no
    if (data["verdict"] == "ruled_out") != (data["cyclotomic"] == "no"):
        raise ReportError(f"{label} verdict={data['verdict']} inconsistent with cyclotomic={data['cyclotomic']}")

    pf = data["pf"]
    if pf is not None:
        for key in ("d", "beta", "residual"):
            if not isinstance(pf.get(key), str) or not FLOAT_TEXT.match(pf[key]):
                raise ReportError(f"{label}.pf.{key} must be a decimal string, got {pf.get(key)!r}")
