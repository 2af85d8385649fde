#!/usr/bin/env python3
"""
Polynomials over GF(p): factorization and irreducibility certificates.

Internally a polynomial is a list of residues, constant term first, with no
trailing zeros (the empty list is zero). Factorization is the classical
squarefree decomposition -> distinct-degree -> equal-degree pipeline; the
equal-degree step is Cantor-Zassenhaus for odd p and trace-map splitting for
p = 2. Frobenius powers x^(p^i) mod f go through a precomputed monomial base,
so an irreducibility test costs O(n^2) per degree step.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from src.obstruction.core.errors import WitnessNotFound, ZeroPolynomial
from src.obstruction.core.numthy import DEFAULT_SEED, small_primes
from src.obstruction.core.polyring import IntPoly

Dense = list[int]


@dataclass(frozen=True)
class ModPoly:
    p: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(_strip([c % self.p for c in self.coeffs])))

    @classmethod
    def from_intpoly(cls, f: IntPoly, p: int) -> "ModPoly":
        return cls(p, f.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __mul__(self, other: "ModPoly") -> "ModPoly":
        _same_field(self, other)
        return ModPoly(self.p, tuple(_mul(list(self.coeffs), list(other.coeffs), self.p)))


def _same_field(a: ModPoly, b: ModPoly) -> None:
    if a.p != b.p:
        raise ValueError(f"moduli differ p={a.p} q={b.p}")


def _strip(f: Dense) -> Dense:
    while f and f[-1] == 0:
        f.pop()
    return f


def _add(f: Dense, g: Dense, p: int) -> Dense:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return _strip(out)


def _sub(f: Dense, g: Dense, p: int) -> Dense:
    return _add(f, [(-c) % p for c in g], p)


def _mul(f: Dense, g: Dense, p: int) -> Dense:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _strip([c % p for c in out])


def _divmod(f: Dense, g: Dense, p: int) -> tuple[Dense, Dense]:
    if not g:
        raise ZeroPolynomial("division by the zero polynomial mod p")
    r = list(f)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [], r
    inv = pow(g[-1], -1, p)
    q = [0] * (len(r) - dg)
    for i in range(len(r) - 1 - dg, -1, -1):
        c = r[i + dg] * inv % p
        q[i] = c
        if c:
            for j, b in enumerate(g):
                r[i + j] = (r[i + j] - c * b) % p
    return _strip(q), _strip(r[:dg])


def _rem(f: Dense, g: Dense, p: int) -> Dense:
    return _divmod(f, g, p)[1]


def _quo(f: Dense, g: Dense, p: int) -> Dense:
    return _divmod(f, g, p)[0]


def _monic(f: Dense, p: int) -> Dense:
    if not f or f[-1] == 1:
        return list(f)
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def _gcd(f: Dense, g: Dense, p: int) -> Dense:
    while g:
        f, g = g, _rem(f, g, p)
    return _monic(f, p)


def _deriv(f: Dense, p: int) -> Dense:
    return _strip([i * c % p for i, c in enumerate(f)][1:])


def _powmod(f: Dense, e: int, g: Dense, p: int) -> Dense:
    out: Dense = [1]
    base = _rem(f, g, p)
    while e:
        if e & 1:
            out = _rem(_mul(out, base, p), g, p)
        e >>= 1
        if e:
            base = _rem(_mul(base, base, p), g, p)
    return out


def _frobenius_base(g: Dense, p: int) -> list[Dense]:
    """x^(i*p) mod g for i < deg g."""
    n = len(g) - 1
    if n < 1:
        return []
    base: list[Dense] = [[1]]
    xp = _powmod([0, 1], p, g, p)
    for _ in range(1, n):
        base.append(_rem(_mul(base[-1], xp, p), g, p))
    return base


def _frobenius_map(f: Dense, g: Dense, base: list[Dense], p: int) -> Dense:
    """f^p mod g, as sum of f_i * x^(i*p) (coefficients are fixed by Frobenius)."""
    f = _rem(f, g, p)
    acc = [0] * max(len(g) - 1, 1)
    for i, c in enumerate(f):
        if c:
            for j, b in enumerate(base[i]):
                acc[j] += c * b
    return _strip([v % p for v in acc])


def _sqf_list(f: Dense, p: int) -> list[tuple[Dense, int]]:
    """Squarefree decomposition of monic f over GF(p); handles p-th power parts."""
    out: list[tuple[Dense, int]] = []
    n = 1
    f = _monic(f, p)
    while len(f) > 1:
        df = _deriv(f, p)
        if df:
            g = _gcd(f, df, p)
            h = _quo(f, g, p)
            i = 1
            while len(h) > 1:
                G = _gcd(g, h, p)
                H = _quo(h, G, p)
                if len(H) > 1:
                    out.append((H, i * n))
                g, h, i = _quo(g, G, p), G, i + 1
            if len(g) <= 1:
                break
            f = g
        # f is now a polynomial in x^p: take its p-th root
        f = f[::p]
        n *= p
    return out


def _ddf(f: Dense, p: int) -> list[tuple[Dense, int]]:
    """Distinct-degree factorization of a monic squarefree f: (product of degree-d irreducibles, d)."""
    out: list[tuple[Dense, int]] = []
    base = _frobenius_base(f, p)
    h: Dense = [0, 1]
    d = 0
    while 2 * (d + 1) <= len(f) - 1:
        d += 1
        h = _frobenius_map(h, f, base, p)
        g = _gcd(f, _sub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            f = _quo(f, g, p)
            base = _frobenius_base(f, p)
            h = _rem(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _edf(f: Dense, d: int, p: int, rng: random.Random) -> list[Dense]:
    """Split f, a product of distinct monic irreducibles of degree d."""
    n = len(f) - 1
    if n <= d:
        return [f]
    while True:
        a = _strip([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            # absolute trace from GF(2^d) down to GF(2)
            t, b = list(a), list(a)
            for _ in range(d - 1):
                b = _rem(_mul(b, b, p), f, p)
                t = _add(t, b, p)
            g = _gcd(f, t, p)
        else:
            b = _powmod(a, (p**d - 1) // 2, f, p)
            g = _gcd(f, _sub(b, [1], p), p)
        if 1 < len(g) < len(f):
            return _edf(g, d, p, rng) + _edf(_quo(f, g, p), d, p, rng)


def modpoly_factor(f: ModPoly, *, seed: int = DEFAULT_SEED) -> list[tuple[ModPoly, int]]:
    """
    Complete factorization into monic irreducibles with multiplicities.

    The product of the factors, times the leading coefficient f.lc, is f.
    Factors come back sorted by (degree, coefficients).
    """
    if f.is_zero:
        raise ZeroPolynomial("modpoly_factor of the zero polynomial")
    p = f.p
    rng = random.Random(seed ^ p)
    out: list[tuple[Dense, int]] = []
    for g, e in _sqf_list(list(f.coeffs), p):
        for h, d in _ddf(g, p):
            for irr in _edf(h, d, p, rng):
                out.append((irr, e))
    out.sort(key=lambda t: (len(t[0]), t[0], t[1]))
    return [(ModPoly(p, tuple(g)), e) for g, e in out]


def modpoly_is_irreducible(f: ModPoly) -> bool:
    """Ben-Or: f of degree n is irreducible iff gcd(f, x^(p^i) - x) = 1 for every i <= n/2."""
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    p = f.p
    g = _monic(list(f.coeffs), p)
    base = _frobenius_base(g, p)
    h: Dense = [0, 1]
    for _ in range(n // 2):
        h = _frobenius_map(h, g, base, p)
        if len(_gcd(g, _sub(h, [0, 1], p), p)) > 1:
            return False
    return True


def degree_pattern(f: ModPoly) -> list[int] | None:
    """
    Degrees of the irreducible factors of f, or None when f is not squarefree mod p.
    """
    p = f.p
    g = _monic(list(f.coeffs), p)
    if len(_gcd(g, _deriv(g, p), p)) > 1:
        return None
    degrees: list[int] = []
    for h, d in _ddf(g, p):
        degrees.extend([d] * ((len(h) - 1) // d))
    return sorted(degrees)


def _subset_sums(degrees: Iterable[int]) -> int:
    """Bitmask of all achievable subset sums."""
    mask = 1
    for d in degrees:
        mask |= mask << d
    return mask


def _require_monic(f: IntPoly) -> None:
    if not f.is_monic or f.degree < 1:
        raise ValueError(f"irreducibility tests need a monic polynomial of degree >= 1, got deg={f.degree} lc={f.lc}")


def smallest_irreducibility_witness(f: IntPoly, bound: int) -> int:
    """
    Smallest prime p <= bound with f mod p irreducible; such a prime proves f
    irreducible over Q. Raises WitnessNotFound otherwise (unresolved, not disproven).
    """
    _require_monic(f)
    for p in small_primes(bound):
        if modpoly_is_irreducible(ModPoly.from_intpoly(f, p)):
            return p
    raise WitnessNotFound(bound)


@dataclass(frozen=True)
class DegreePatternCertificate:
    irreducible: bool
    primes: tuple[int, ...]
    possible_degrees: tuple[int, ...]


def degree_pattern_certificate(f: IntPoly, bound: int, *, max_primes: int | None = None) -> DegreePatternCertificate:
    """
    Intersect the possible rational factor degrees implied by f mod p over
    primes p <= bound where f stays squarefree. An intersection of {0, n}
    proves f irreducible over Q.
    """
    _require_monic(f)
    n = f.degree
    full = (1 << (n + 1)) - 1
    allowed = full
    used: list[int] = []
    for p in small_primes(bound):
        pattern = degree_pattern(ModPoly.from_intpoly(f, p))
        if pattern is None:
            continue
        allowed &= _subset_sums(pattern)
        used.append(p)
        if allowed == (1 | (1 << n)):
            break
        if max_primes is not None and len(used) >= max_primes:
            break
    possible = tuple(d for d in range(n + 1) if allowed >> d & 1)
    return DegreePatternCertificate(
        irreducible=possible == (0, n),
        primes=tuple(used),
        possible_degrees=possible,
    )


def modpoly_product(factors: Sequence[tuple[ModPoly, int]], p: int, unit: int = 1) -> ModPoly:
    out: Dense = [unit % p]
    for g, e in factors:
        for _ in range(e):
            out = _mul(out, list(g.coeffs), p)
    return ModPoly(p, tuple(out))
