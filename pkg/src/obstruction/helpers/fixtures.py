#!/usr/bin/env python3
"""
Published discriminant tables (fd[3..20]) and the witness list, loaded from
src/config/published_tables.yaml.

fd[j] is the factorization of |disc(r_(j-1))|; `claims_by_k` applies the shift
so callers index by k.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from pathlib import Path

import yaml

from src.obstruction.core.errors import FixtureError

FD_INDICES = range(3, 21)
WITNESS_KS = range(7, 14)

@dataclass(frozen=True)
class PublishedTables:
    path: str
    checksum: str
    discriminant_factors: dict[int, tuple[tuple[int, int], ...]]
    witnesses: dict[int, int]

    def claims_by_k(self) -> dict[int, tuple[tuple[int, int], ...]]:
        return {j - 1: claims for j, claims in self.discriminant_factors.items()}

def _parse_claims(path: str, j: int, entry) -> tuple[tuple[int, int], ...]:
    if not isinstance(entry, list) or not entry:
        raise FixtureError(f"{path}: fd[{j}] must be a nonempty list of [prime, exponent]")
    out: list[tuple[int, int]] = []
    for i, pair in enumerate(entry):
        if not isinstance(pair, list) or len(pair) != 2:
            raise FixtureError(f"{path}: fd[{j}][{i}] must be [prime, exponent], got {pair!r}")
        try:
            p, e = int(str(pair[0])), int(pair[1])
        except ValueError as exc:
            raise FixtureError(f"{path}: fd[{j}][{i}] is not an integer pair ({exc})") from exc
        if e != 1:
            raise FixtureError(f"{path}: fd[{j}][{i}] exponent={e}, published tables only carry exponent 1")
        out.append((p, e))
    return tuple(out)

def load_published_tables(
    path: str
) -> PublishedTables:
    """
    Load and validate the fixture: indices exactly 3..20, every exponent 1,
    witnesses for k=7..13. Raises FixtureError naming the offending entry.
    """
    p = Path(path)
    try:
        blob = p.read_bytes()
    except OSError as e:
        raise FixtureError(f"{path}: cannot read fixture ({e.strerror})") from e
    try:
        cfg = yaml.safe_load(blob)
    except yaml.YAMLError as e:
        raise FixtureError(f"{path}: invalid YAML ({e})") from e
    if not isinstance(cfg, dict):
        raise FixtureError(f"{path}: top level must be a mapping")

    fd_raw = cfg.get('discriminant_factors')
    if not isinstance(fd_raw, dict):
        raise FixtureError(f"{path}: missing discriminant_factors mapping")
    indices = sorted(int(j) for j in fd_raw)
    if indices != list(FD_INDICES):
        raise FixtureError(f"{path}: fd indices must be exactly 3..20, got {indices}")
    fd = {int(j): _parse_claims(path, int(j), entry) for j, entry in fd_raw.items()}

    wit_raw = cfg.get('witnesses') or {}
    witnesses = {int(k): int(v) for k, v in wit_raw.items()}
    if sorted(witnesses) != list(WITNESS_KS):
        raise FixtureError(f"{path}: witness list must cover k=7..13, got {sorted(witnesses)}")
    bad = {k: v for k, v in witnesses.items() if v < 2}
    if bad:
        raise FixtureError(f"{path}: witness primes must be >= 2, got {bad}")

    return PublishedTables(
        path=str(p),
        checksum=hashlib.sha256(blob).hexdigest(),
        discriminant_factors=dict(sorted(fd.items())),
        witnesses=dict(sorted(witnesses.items())),
    )
