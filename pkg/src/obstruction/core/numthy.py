#!/usr/bin/env python3
"""
Integer primality and factorization under an explicit effort budget.

Randomness is confined to per-call random.Random instances seeded from the
budget, so every run is reproducible and safe to fan out across processes.
Polynomials over prime fields live in core/modpoly.py.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Sequence

DEFAULT_SEED = 20240611
DEFAULT_MR_ROUNDS = 40
DEFAULT_TRIAL_BOUND = 1 << 16
DEFAULT_RHO_BUDGET = 1 << 26

# Miller-Rabin with these bases is exact below 3.3e24, which covers 2^64.
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_DETERMINISTIC_LIMIT = 1 << 64

_RHO_BATCH = 128


class Primality(str, Enum):
    PROVEN = "proven"
    PROBABLE = "probable"
    COMPOSITE = "composite"


class Tristate(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class TableStatus(str, Enum):
    VERIFIED = "verified"
    MISMATCH = "mismatch"
    PRIMALITY_UNVERIFIED = "primality-unverified"


@dataclass(frozen=True)
class FactorBudget:
    trial_bound: int = DEFAULT_TRIAL_BOUND
    rho_iterations: int = DEFAULT_RHO_BUDGET
    mr_rounds: int = DEFAULT_MR_ROUNDS
    seed: int = DEFAULT_SEED


@dataclass(frozen=True)
class PrimeFactor:
    p: int
    e: int
    certainty: Primality


@dataclass(frozen=True)
class FactorizationCertificate:
    """
    n = prod(p^e) * cofactor. `source` tells whether the factors were found
    here ("computed") or taken from a checked table ("table").
    """
    n: int
    factors: tuple[PrimeFactor, ...] = ()
    cofactor: int = 1
    source: str = "computed"

    def __post_init__(self) -> None:
        prod = self.cofactor
        for f in self.factors:
            prod *= f.p**f.e
        if prod != self.n:
            raise ValueError(f"certificate does not multiply back n={self.n} product={prod}")

    @property
    def complete(self) -> bool:
        return self.cofactor == 1


@dataclass(frozen=True)
class TableCheck:
    status: TableStatus
    n: int
    claimed: tuple[tuple[int, int], ...]
    certainty: tuple[Primality, ...] = field(default=())

    def certificate(self) -> FactorizationCertificate:
        if self.status is not TableStatus.VERIFIED:
            raise ValueError(f"table claims not verified status={self.status.value}")
        factors = tuple(
            PrimeFactor(p, e, c) for (p, e), c in sorted(zip(self.claimed, self.certainty))
        )
        return FactorizationCertificate(n=self.n, factors=factors, cofactor=1, source="table")


@lru_cache(maxsize=8)
def small_primes(bound: int) -> tuple[int, ...]:
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, bound + 1, i)))
    return tuple(i for i, v in enumerate(sieve) if v)


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int, *, rounds: int = DEFAULT_MR_ROUNDS, seed: int = DEFAULT_SEED) -> Primality:
    """
    Deterministic below 2^64, `rounds` random Miller-Rabin bases above.
    A composite answer is always proven.
    """
    if n < 0:
        raise ValueError(f"is_prime needs n >= 0, got {n}")
    if n < 2:
        return Primality.COMPOSITE
    for p in _DETERMINISTIC_BASES:
        if n % p == 0:
            return Primality.PROVEN if n == p else Primality.COMPOSITE
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _DETERMINISTIC_LIMIT:
        for a in _DETERMINISTIC_BASES:
            if not _strong_probable_prime(n, a, d, s):
                return Primality.COMPOSITE
        return Primality.PROVEN
    rng = random.Random(seed ^ n.bit_length())
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        if not _strong_probable_prime(n, a, d, s):
            return Primality.COMPOSITE
    return Primality.PROBABLE


def _rho_brent(n: int, budget: int, rng: random.Random) -> tuple[int | None, int]:
    """
    Brent's variant of Pollard rho with batched gcds.

    Returns (factor or None, iterations spent). Restarts with a fresh
    polynomial x^2 + c when the cycle collapses onto n itself.
    """
    spent = 0
    while spent < budget:
        y, c = rng.randrange(1, n), rng.randrange(1, n)
        g = r = q = 1
        x = ys = y
        while g == 1 and spent < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            spent += r
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(_RHO_BATCH, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += _RHO_BATCH
            spent += min(k, r)
            r *= 2
        if g == n:
            # batch overshot the collision; step back one at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g, spent
    return None, spent


def factor_integer(n: int, budget: FactorBudget = FactorBudget()) -> FactorizationCertificate:
    """
    Trial division up to budget.trial_bound, then Brent rho with
    budget.rho_iterations per composite. Whatever cannot be split inside the
    budget is returned as the cofactor and the certificate is incomplete.
    """
    if n < 1:
        raise ValueError(f"factor_integer needs n >= 1, got {n}")
    found: Counter[int] = Counter()
    m = n
    for p in small_primes(budget.trial_bound):
        if p * p > m:
            break
        while m % p == 0:
            found[p] += 1
            m //= p
    # no prime <= trial_bound divides m, so below (trial_bound+1)^2 it is prime
    if 1 < m < (budget.trial_bound + 1) ** 2:
        found[m] += 1
        m = 1

    rng = random.Random(budget.seed)
    stack = [m] if m > 1 else []
    leftover = 1
    while stack:
        c = stack.pop()
        if c == 1:
            continue
        if is_prime(c, rounds=budget.mr_rounds, seed=budget.seed) is not Primality.COMPOSITE:
            found[c] += 1
            continue
        root = math.isqrt(c)
        if root * root == c:
            stack.extend((root, root))
            continue
        d, _ = _rho_brent(c, budget.rho_iterations, rng)
        if d is None:
            leftover *= c
        else:
            stack.extend((d, c // d))

    # known primes may still divide the unsplit part
    for p in list(found):
        while leftover > 1 and leftover % p == 0:
            found[p] += 1
            leftover //= p

    factors = tuple(
        PrimeFactor(p, e, is_prime(p, rounds=budget.mr_rounds, seed=budget.seed))
        for p, e in sorted(found.items())
    )
    return FactorizationCertificate(n=n, factors=factors, cofactor=leftover)


def is_squarefree(cert: FactorizationCertificate) -> Tristate:
    if any(f.e >= 2 for f in cert.factors):
        return Tristate.NO
    if cert.complete:
        return Tristate.YES
    root = math.isqrt(cert.cofactor)
    if root > 1 and root * root == cert.cofactor:
        return Tristate.NO
    return Tristate.UNKNOWN


def verify_factor_table(
    n: int,
    claimed: Sequence[tuple[int, int]],
    *,
    rounds: int = DEFAULT_MR_ROUNDS,
    seed: int = DEFAULT_SEED,
) -> TableCheck:
    """
    Trust-but-verify a published factorization: the product must equal n and
    every claimed prime must pass is_prime. No factoring is attempted.
    """
    if not claimed:
        raise ValueError("verify_factor_table needs a nonempty claim list")
    claims = tuple((int(p), int(e)) for p, e in claimed)
    prod = 1
    for p, e in claims:
        prod *= p**e
    if prod != n:
        return TableCheck(TableStatus.MISMATCH, n, claims)
    certainty = tuple(is_prime(p, rounds=rounds, seed=seed) for p, _ in claims)
    if any(c is Primality.COMPOSITE for c in certainty):
        return TableCheck(TableStatus.PRIMALITY_UNVERIFIED, n, claims, certainty)
    return TableCheck(TableStatus.VERIFIED, n, claims, certainty)


def certificate_to_json(cert: FactorizationCertificate) -> dict:
    return {
        "n": str(cert.n),
        "factors": [{"p": str(f.p), "e": f.e, "certainty": f.certainty.value} for f in cert.factors],
        "cofactor": str(cert.cofactor),
        "complete": cert.complete,
        "source": cert.source,
    }


def certificate_from_json(data: dict) -> FactorizationCertificate:
    return FactorizationCertificate(
        n=int(data["n"]),
        factors=tuple(
            PrimeFactor(int(f["p"]), int(f["e"]), Primality(f["certainty"])) for f in data["factors"]
        ),
        cofactor=int(data["cofactor"]),
        source=data.get("source", "computed"),
    )
