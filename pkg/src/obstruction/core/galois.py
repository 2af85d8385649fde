#!/usr/bin/env python3
"""
Galois-group facts from discriminants and irreducibility certificates, and
the cyclotomicity / principal-graph verdicts they imply.

The chain is: an algebraic integer is cyclotomic iff its minimal polynomial
has an abelian Galois group. An irreducible polynomial of degree n >= 3 with
square-free discriminant has group S_n, which is not abelian, so the graph
cannot be a principal graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from src.obstruction.core.errors import IrreducibilityRequired, NotMonic, WitnessNotFound
from src.obstruction.core.modpoly import degree_pattern_certificate, smallest_irreducibility_witness
from src.obstruction.core.numthy import Tristate
from src.obstruction.core.polyring import IntPoly

UNKNOWN_GROUP = "unknown"


class Verdict(str, Enum):
    RULED_OUT = "ruled_out"
    POSSIBLE = "possible"
    INCONCLUSIVE = "inconclusive"


class GaloisMethod(str, Enum):
    DEGREE_1 = "degree-1"
    DEGREE_2 = "degree-2"
    DISCRIMINANT_SQUARE = "discriminant-square"
    SQUARE_FREE_DISCRIMINANT = "square-free-discriminant"
    NONE = "none"


class IrreducibilityMethod(str, Enum):
    DEGREE_1 = "degree-1"
    WITNESS = "witness"
    DEGREE_PATTERNS = "degree-patterns"


@dataclass(frozen=True)
class IrreducibilityCertificate:
    """
    certified: f is irreducible over Q, proven by `method`.
    witness: f mod witness_prime is irreducible.
    degree-patterns: factor-degree patterns mod `primes` leave only {0, deg f}.
    """
    certified: bool
    method: IrreducibilityMethod | None = None
    witness_prime: int | None = None
    primes: tuple[int, ...] = ()
    bound: int | None = None

    @property
    def status(self) -> str:
        return "certified" if self.certified else "unresolved"


@dataclass(frozen=True)
class GaloisConclusion:
    group: str
    degree: int
    method: GaloisMethod
    abelian: bool | None

    def __post_init__(self) -> None:
        if self.group.startswith("S") and self.group != "S2" and self.abelian is not False:
            raise ValueError(f"{self.group} is not abelian")
        if self.group in ("trivial", "Z2", "Z3") and self.abelian is not True:
            raise ValueError(f"{self.group} is abelian")

    @classmethod
    def unknown(cls, degree: int) -> "GaloisConclusion":
        return cls(UNKNOWN_GROUP, degree, GaloisMethod.NONE, None)


def is_perfect_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def certify_irreducible(f: IntPoly, bound: int, *, degree_patterns: bool = True) -> IrreducibilityCertificate:
    """Single witness prime first; combined degree patterns only if that fails."""
    if f.degree == 1:
        return IrreducibilityCertificate(True, IrreducibilityMethod.DEGREE_1, bound=bound)
    try:
        p = smallest_irreducibility_witness(f, bound)
        return IrreducibilityCertificate(True, IrreducibilityMethod.WITNESS, witness_prime=p, primes=(p,), bound=bound)
    except WitnessNotFound:
        pass
    if degree_patterns:
        cert = degree_pattern_certificate(f, bound)
        if cert.irreducible:
            return IrreducibilityCertificate(True, IrreducibilityMethod.DEGREE_PATTERNS, primes=cert.primes, bound=bound)
    return IrreducibilityCertificate(False, None, bound=bound)


def classify_galois(r: IntPoly, irreducible: bool, disc: int, squarefree: Tristate) -> GaloisConclusion:
    """
    deg 1 -> trivial; deg 2 -> Z2; deg 3 -> Z3 if disc is a square else S3;
    deg >= 4 with square-free disc -> S_n; anything else -> unknown.
    Every group claim above degree 1 requires certified irreducibility.
    """
    if not r.is_monic:
        raise NotMonic(f"classify_galois needs a monic polynomial lc={r.lc}")
    n = r.degree
    if n < 1:
        raise ValueError(f"classify_galois needs degree >= 1, got {n}")
    if n == 1:
        return GaloisConclusion("trivial", 1, GaloisMethod.DEGREE_1, True)
    if not irreducible:
        raise IrreducibilityRequired(f"group claim for deg={n} without an irreducibility certificate")
    if n == 2:
        return GaloisConclusion("Z2", 2, GaloisMethod.DEGREE_2, True)
    if n == 3:
        if is_perfect_square(disc):
            return GaloisConclusion("Z3", 3, GaloisMethod.DISCRIMINANT_SQUARE, True)
        return GaloisConclusion("S3", 3, GaloisMethod.DISCRIMINANT_SQUARE, False)
    if squarefree is Tristate.YES:
        return GaloisConclusion(f"S{n}", n, GaloisMethod.SQUARE_FREE_DISCRIMINANT, False)
    return GaloisConclusion.unknown(n)


def group_order(g: GaloisConclusion) -> int | None:
    fixed = {"trivial": 1, "Z2": 2, "Z3": 3}
    if g.group in fixed:
        return fixed[g.group]
    if g.group.startswith("S") and g.group[1:].isdigit():
        return math.factorial(int(g.group[1:]))
    return None


def check_transitive_order(g: GaloisConclusion) -> None:
    """The group of an irreducible polynomial is transitive, so deg divides its order."""
    order = group_order(g)
    if order is not None and order % g.degree:
        raise ArithmeticError(f"group {g.group} order={order} not divisible by degree={g.degree}")


def cyclotomic_verdict(g: GaloisConclusion) -> Tristate:
    if g.abelian is None:
        return Tristate.UNKNOWN
    return Tristate.YES if g.abelian else Tristate.NO


def principal_graph_verdict(cyclotomic: Tristate) -> Verdict:
    """ruled_out iff not cyclotomic; possible only means the obstruction did not fire."""
    return {
        Tristate.NO: Verdict.RULED_OUT,
        Tristate.YES: Verdict.POSSIBLE,
        Tristate.UNKNOWN: Verdict.INCONCLUSIVE,
    }[cyclotomic]
