#!/usr/bin/env python3
"""
Dense univariate polynomials over Z, exact resultants and signed discriminants.

Coefficients are stored constant term first (index i is the coefficient of x^i)
and every value is an immutable IntPoly in canonical form: no trailing zeros,
the zero polynomial is the empty tuple. Python ints are the arbitrary-precision
integers throughout; nothing here touches floating point.

Text format used downstream: a JSON array of decimal coefficient strings,
constant term first, e.g. ["3", "-5", "1"] for x^2 - 5x + 3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from src.obstruction.core.errors import NotDivisible, NotMonic, RepeatedRoot, ZeroPolynomial

BigIntVal = int


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = [int(v) for v in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_high(cls, coeffs: Iterable[int]) -> "IntPoly":
        """Build from coefficients listed leading term first, as polynomials are usually written."""
        return cls(tuple(reversed(list(coeffs))))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """len(coeffs) - 1; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return self.lc == 1

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return poly_add(self, other)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return poly_sub(self, other)

    def __neg__(self) -> "IntPoly":
        return poly_neg(self)

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return poly_scale(self, other)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_poly(self)


@dataclass(frozen=True)
class SquareMatrixZ:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"SquareMatrixZ row={i} len={len(row)} expected={n}")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SquareMatrixZ":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.entries)


ZERO = IntPoly()
ONE = IntPoly.const(1)
X = IntPoly.x()


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a.coeffs), len(b.coeffs))
    ac = a.coeffs + (0,) * (n - len(a.coeffs))
    bc = b.coeffs + (0,) * (n - len(b.coeffs))
    return IntPoly(tuple(x + y for x, y in zip(ac, bc)))


def poly_neg(a: IntPoly) -> IntPoly:
    return IntPoly(tuple(-c for c in a.coeffs))


def poly_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    return poly_add(a, poly_neg(b))


def poly_scale(a: IntPoly, c: int) -> IntPoly:
    return IntPoly(tuple(c * v for v in a.coeffs))


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if a.is_zero or b.is_zero:
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j, bj in enumerate(b.coeffs):
            out[i + j] += ai * bj
    return IntPoly(tuple(out))


def poly_pow(a: IntPoly, e: int) -> IntPoly:
    if e < 0:
        raise ValueError(f"poly_pow exponent={e} must be >= 0")
    out = ONE
    for _ in range(e):
        out = poly_mul(out, a)
    return out


def poly_divexact(a: IntPoly, b: IntPoly) -> IntPoly:
    """
    Return q with a = b*q, failing loudly instead of truncating.

    Raises NotDivisible when long division leaves a remainder or would need a
    non-integer quotient coefficient.
    """
    if b.is_zero:
        raise ZeroPolynomial("poly_divexact divisor is the zero polynomial")
    if a.is_zero:
        return ZERO
    db, lb = b.degree, b.lc
    if a.degree < db:
        raise NotDivisible(f"deg_a={a.degree} < deg_b={db}")

    rem = list(a.coeffs)
    q = [0] * (a.degree - db + 1)
    for i in range(a.degree - db, -1, -1):
        c = rem[i + db]
        if c == 0:
            continue
        qi, r = divmod(c, lb)
        if r:
            raise NotDivisible(f"non-integer quotient coefficient at x^{i} deg_a={a.degree} deg_b={db}")
        q[i] = qi
        for j, bj in enumerate(b.coeffs):
            rem[i + j] -= qi * bj
    if any(rem):
        r = IntPoly(tuple(rem))
        raise NotDivisible(f"deg_a={a.degree} deg_b={db} remainder_deg={r.degree}")
    return IntPoly(tuple(q))


def poly_prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, computed over Z."""
    if b.is_zero:
        raise ZeroPolynomial("poly_prem divisor is the zero polynomial")
    db, lb = b.degree, b.lc
    if a.degree < db:
        return a
    r = list(a.coeffs)
    e = a.degree - db + 1
    while len(r) - 1 >= db and any(r):
        c = r[-1]
        shift = len(r) - 1 - db
        r = [lb * v for v in r]
        for j, bj in enumerate(b.coeffs):
            r[shift + j] -= c * bj
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    return poly_scale(IntPoly(tuple(r)), lb**e)


def content(f: IntPoly) -> int:
    return reduce(math.gcd, f.coeffs, 0)


def primitive_part(f: IntPoly) -> IntPoly:
    """f divided by its (positive) content; signs are kept."""
    c = content(f)
    if c in (0, 1):
        return f
    return IntPoly(tuple(v // c for v in f.coeffs))


def _normalize(f: IntPoly) -> IntPoly:
    f = primitive_part(f)
    return poly_neg(f) if f.lc < 0 else f


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Gcd in Z[x] by the primitive remainder sequence, leading coefficient positive."""
    if a.is_zero:
        return _normalize(b)
    if b.is_zero:
        return _normalize(a)
    c = math.gcd(content(a), content(b))
    u, v = primitive_part(a), primitive_part(b)
    if u.degree < v.degree:
        u, v = v, u
    while not v.is_zero:
        u, v = v, primitive_part(poly_prem(u, v))
    return poly_scale(_normalize(u), c)


def squarefree_part(f: IntPoly) -> IntPoly:
    """Primitive squarefree part of f with positive leading coefficient."""
    if f.degree < 1:
        return _normalize(f) if not f.is_zero else f
    g = poly_gcd(f, poly_derivative(f))
    return _normalize(poly_divexact(primitive_part(f), primitive_part(g)))


def poly_eval(f: IntPoly, x: int | Fraction) -> int | Fraction:
    acc: int | Fraction = 0
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def poly_derivative(f: IntPoly) -> IntPoly:
    return IntPoly(tuple(i * c for i, c in enumerate(f.coeffs))[1:])


def sylvester_matrix(p: IntPoly, q: IntPoly) -> SquareMatrixZ:
    """
    Sylvester matrix of dimension deg p + deg q.

    The first deg q rows carry the coefficients of p (leading first), shifted
    one column per row; the last deg p rows do the same for q.
    """
    if p.is_zero or q.is_zero:
        raise ZeroPolynomial("sylvester_matrix needs nonzero polynomials")
    m, n = p.degree, q.degree
    size = m + n
    ph = p.coeffs[::-1]
    qh = q.coeffs[::-1]
    rows: list[list[int]] = []
    for i in range(n):
        row = [0] * size
        row[i:i + m + 1] = ph
        rows.append(row)
    for i in range(m):
        row = [0] * size
        row[i:i + n + 1] = qh
        rows.append(row)
    return SquareMatrixZ.from_rows(rows)


def det_fraction_free(m: SquareMatrixZ) -> int:
    """
    Exact determinant by Bareiss elimination; every division is exact.

    Row swaps are used when a pivot vanishes; a column with no usable pivot
    means the matrix is singular and 0 is returned.
    """
    n = m.n
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            for j in range(k + 1, n):
                ai[j] = (akk * ai[j] - aik * rowk[j]) // prev
            ai[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def resultant(p: IntPoly, q: IntPoly) -> int:
    return det_fraction_free(sylvester_matrix(p, q))


def discriminant(p: IntPoly) -> int:
    """
    D_p = (-1)^(n(n-1)/2) * Res(p, p') for monic p of degree n.

    The sign of the result is (-1)^c with c half the number of non-real roots.
    """
    if p.is_zero:
        raise ZeroPolynomial("discriminant of the zero polynomial")
    if not p.is_monic:
        raise NotMonic(f"discriminant needs a monic polynomial lc={p.lc}")
    if p.degree < 1:
        raise ValueError("discriminant needs degree >= 1")
    res = resultant(p, poly_derivative(p))
    if res == 0:
        raise RepeatedRoot(f"Res(p, p')=0 deg={p.degree}")
    n = p.degree
    return -res if (n * (n - 1) // 2) % 2 else res


def count_real_roots(f: IntPoly) -> int:
    """Number of distinct real roots of f, by a Sturm chain over Z."""
    f = squarefree_part(f)
    if f.degree < 1:
        return 0
    chain = [f, poly_derivative(f)]
    while chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        r = poly_prem(a, b)
        # prem carries lc(b)^(deg a - deg b + 1); undo its sign, then negate for Sturm
        if b.lc < 0 and (a.degree - b.degree + 1) % 2:
            r = poly_neg(r)
        r = poly_neg(r)
        if r.is_zero:
            break
        chain.append(primitive_part(r))

    def variations(signs: list[int]) -> int:
        s = [v for v in signs if v != 0]
        return sum(1 for u, v in zip(s, s[1:]) if u != v)

    at_pos = [1 if g.lc > 0 else -1 for g in chain]
    at_neg = [(1 if g.lc > 0 else -1) * (-1 if g.degree % 2 else 1) for g in chain]
    return variations(at_neg) - variations(at_pos)


def poly_to_json(f: IntPoly) -> list[str]:
    return [str(c) for c in f.coeffs]


def poly_from_json(data: Sequence[str | int]) -> IntPoly:
    if not isinstance(data, (list, tuple)):
        raise ValueError(f"polynomial must be a JSON array, got {type(data).__name__}")
    try:
        return IntPoly(tuple(int(v) for v in data))
    except (TypeError, ValueError) as e:
        raise ValueError(f"polynomial coefficients must be decimal strings: {e}") from e


def format_poly(f: IntPoly, var: str = "x") -> str:
    if f.is_zero:
        return "0"
    terms: list[str] = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not terms:
            terms.append(f"-{body}" if c < 0 else body)
        else:
            terms.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(terms)
