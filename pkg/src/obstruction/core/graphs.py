#!/usr/bin/env python3
"""
Haagerup series graphs Gamma_k and generic bipartite graphs.

Gamma_k has 6+2k even vertices (rows r_i) and 4+2k odd vertices (columns c_j).
The squared Perron-Frobenius eigenvalue d_k is the PF eigenvalue of the Gram
matrix N_k = A_k^T A_k; p_k is its characteristic polynomial det(xI - N_k).

Row rule for A_k (1-based):
    r1 = e1, r2 = e1 + e3, r3 = e2, r4 = e2 + e3,
    r_j = e_(j-2) + e_(j-1) for 5 <= j <= 5+2k,
    r_(6+2k) = e_(4+2k)
The last row carries a single edge; with it N_k and p_0, p_1 come out as
published.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Sequence

import numpy as np
from scipy.sparse import bmat, csr_matrix
from scipy.sparse.csgraph import connected_components

from src.obstruction.core.errors import DomainError, GraphSpecError, NotConverged
from src.obstruction.core.numthy import factor_integer
from src.obstruction.core.polyring import (
    IntPoly,
    SquareMatrixZ,
    det_fraction_free,
    poly_derivative,
    poly_divexact,
    poly_eval,
    poly_mul,
    poly_neg,
    poly_pow,
    poly_sub,
    squarefree_part,
)

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITERS = 1_000_000
_POLISH_BITS = 256
_INTEGER_ROOT_TOL = 1e-6

_X_MINUS_1 = IntPoly((-1, 1))
_X_MINUS_2 = IntPoly((-2, 1))
_STEP = IntPoly.from_high([1, -4, 2])          # x^2 - 4x + 2
_Q0 = IntPoly.from_high([1, -5, 3])            # x^2 - 5x + 3
_R1 = IntPoly.from_high([1, -8, 17, -5])       # x^3 - 8x^2 + 17x - 5


@dataclass(frozen=True)
class HaagerupIndex:
    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 0:
            raise ValueError(f"HaagerupIndex needs an integer k >= 0, got {self.k!r}")

    @property
    def n_paper(self) -> int:
        """The n = 4k + 3 labelling of the same graph."""
        return 4 * self.k + 3

    @property
    def vertex_count(self) -> int:
        return 10 + 4 * self.k

    @property
    def r_degree(self) -> int:
        return 2 + 2 * self.k - (1 if self.k % 3 == 1 else 0)


@dataclass(frozen=True)
class BipartiteGraphSpec:
    rows: int
    cols: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: dict | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        adj = tuple(tuple(int(v) for v in row) for row in self.adjacency)
        object.__setattr__(self, "adjacency", adj)
        if self.rows < 1 or self.cols < 1:
            raise GraphSpecError(f"rows={self.rows} cols={self.cols} must both be >= 1")
        if len(adj) != self.rows:
            raise GraphSpecError(f"adjacency has {len(adj)} rows, expected rows={self.rows}")
        for i, row in enumerate(adj):
            if len(row) != self.cols:
                raise GraphSpecError(f"adjacency[{i}] has {len(row)} entries, expected cols={self.cols}")
            for j, v in enumerate(row):
                if v < 0:
                    raise GraphSpecError(f"adjacency[{i}][{j}]={v} is negative")
        if not _is_connected(adj):
            raise GraphSpecError("graph is not connected")


@dataclass(frozen=True)
class GramMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        m = SquareMatrixZ(self.entries)
        for i in range(m.n):
            for j in range(i):
                if m.entries[i][j] != m.entries[j][i]:
                    raise ValueError(f"GramMatrix not symmetric at ({i},{j})")
        object.__setattr__(self, "entries", m.entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    def leading(self, size: int) -> "GramMatrix":
        return GramMatrix(tuple(row[:size] for row in self.entries[:size]))


@dataclass(frozen=True)
class PFEstimate:
    d: float
    beta: float
    residual: float
    iterations: int


def _is_connected(adj: tuple[tuple[int, ...], ...]) -> bool:
    a = csr_matrix(np.array(adj, dtype=np.int64))
    full = bmat([[None, a], [a.T, None]])
    n_components, _ = connected_components(full, directed=False)
    return n_components == 1


def build_A(k: HaagerupIndex | int) -> BipartiteGraphSpec:
    idx = k if isinstance(k, HaagerupIndex) else HaagerupIndex(k)
    n_rows, n_cols = 6 + 2 * idx.k, 4 + 2 * idx.k

    def row(*cols_1based: int) -> tuple[int, ...]:
        out = [0] * n_cols
        for c in cols_1based:
            out[c - 1] = 1
        return tuple(out)

    rows = [row(1), row(1, 3), row(2), row(2, 3)]
    rows += [row(j - 2, j - 1) for j in range(5, 6 + 2 * idx.k)]
    rows.append(row(n_cols))
    labels = {
        "rows": [f"r{i}" for i in range(1, n_rows + 1)],
        "cols": [f"c{j}" for j in range(1, n_cols + 1)],
    }
    return BipartiteGraphSpec(rows=n_rows, cols=n_cols, adjacency=tuple(rows), labels=labels)


def gram(g: BipartiteGraphSpec) -> GramMatrix:
    a = g.adjacency
    n = g.cols
    out = [[0] * n for _ in range(n)]
    for row in a:
        nz = [(j, v) for j, v in enumerate(row) if v]
        for i, u in nz:
            for j, v in nz:
                out[i][j] += u * v
    return GramMatrix(tuple(tuple(r) for r in out))


def charpoly_exact(m: GramMatrix | SquareMatrixZ) -> IntPoly:
    """
    det(xI - M) by evaluating the fraction-free determinant at x = 0..n and
    interpolating with Newton forward differences over Q. The interpolated
    coefficients must come out integral; anything else is an arithmetic bug.
    """
    entries = m.entries
    n = len(entries)
    values = []
    for t in range(n + 1):
        shifted = [[(t if i == j else 0) - entries[i][j] for j in range(n)] for i in range(n)]
        values.append(det_fraction_free(SquareMatrixZ.from_rows(shifted)))

    acc = [Fraction(0)] * (n + 1)
    basis = [Fraction(1)]
    diffs = values
    for j in range(n + 1):
        c = Fraction(diffs[0], math.factorial(j))
        for i, b in enumerate(basis):
            acc[i] += c * b
        # basis *= (x - j)
        basis = [(basis[i - 1] if i else 0) - j * (basis[i] if i < len(basis) else 0) for i in range(len(basis) + 1)]
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]

    if any(c.denominator != 1 for c in acc):
        raise ArithmeticError(f"charpoly interpolation produced non-integer coefficients n={n}")
    return IntPoly(tuple(int(c) for c in acc))


@lru_cache(maxsize=None)
def p_recurrence(k: int) -> IntPoly:
    """p_k = (x^2 - 4x + 2) p_(k-1) - p_(k-2), seeded with p_0 and p_1."""
    k = HaagerupIndex(k).k
    square = poly_pow(_X_MINUS_2, 2)
    p0 = poly_mul(_Q0, square)
    p1 = poly_mul(poly_mul(_R1, square), _X_MINUS_1)
    if k == 0:
        return p0
    prev, cur = p0, p1
    for _ in range(k - 1):
        prev, cur = cur, poly_sub(poly_mul(_STEP, cur), prev)
    return cur


def halfstep_charpoly(k: int) -> IntPoly:
    """
    det(N_(k-1/2) - xI) for the leading (3+2k)x(3+2k) block of N_k.

    This is the sign convention under which p_k = (2-x) * halfstep(k) - p_(k-1)
    holds with monic p_k; for the odd block size it is minus the monic
    characteristic polynomial.
    """
    if k < 1:
        raise ValueError(f"halfstep_charpoly needs k >= 1, got {k}")
    block = gram(build_A(k)).leading(3 + 2 * k)
    monic = charpoly_exact(block)
    return poly_neg(monic) if block.n % 2 else monic


def derive_q(k: int) -> IntPoly:
    return poly_divexact(p_recurrence(k), poly_pow(_X_MINUS_2, 2))


def derive_r(k: int) -> IntPoly:
    q = derive_q(k)
    if k % 3 == 1:
        return poly_divexact(q, _X_MINUS_1)
    return q


def eigenvalue_bound(m: GramMatrix) -> int:
    """Max row sum; every eigenvalue of the PSD matrix m lies in [0, bound]."""
    return max(sum(row) for row in m.entries)


def _divisors_upto(n: int, bound: int) -> list[int]:
    """Positive divisors of n that are <= bound, from a budgeted factorization of n."""
    cert = factor_integer(n)
    parts = [(f.p, f.e) for f in cert.factors]
    if cert.cofactor != 1:
        # unsplit cofactor kept whole
        parts.append((cert.cofactor, 1))
    divs = [1]
    for p, e in parts:
        divs = [q * p**i for q in divs for i in range(e + 1) if q * p**i <= bound]
    return sorted(divs)


def minimal_candidate(f: IntPoly, bound: int, d: float | None = None) -> IntPoly:
    """
    Candidate minimal polynomial of d from a characteristic polynomial f.

    Takes the squarefree part and divides out every integer root in
    [0, bound] (tested by exact evaluation, no factoring over Q). Integer
    roots of the monic squarefree part divide its constant term, so only
    those divisors are tried. If d sits on one of the stripped integers,
    x - t is returned. Without d nothing is stripped, since d may be any of
    them. What remains still needs an irreducibility certificate.
    """
    g = squarefree_part(f)
    if d is None:
        return g
    stripped: list[int] = []
    if g.degree >= 1 and g.coeffs[0] == 0:
        g = poly_divexact(g, IntPoly((0, 1)))
        stripped.append(0)
    if g.degree >= 1:
        for t in _divisors_upto(abs(g.coeffs[0]), bound):
            if g.degree >= 1 and poly_eval(g, t) == 0:
                g = poly_divexact(g, IntPoly((-t, 1)))
                stripped.append(t)
    for t in stripped:
        if abs(d - t) < _INTEGER_ROOT_TOL:
            return IntPoly((-t, 1))
    if g.degree < 1:
        return squarefree_part(f)
    return g


def poly_residual(f: IntPoly, d: float | Fraction) -> float:
    """|f(d)| / ||f||_1, evaluated exactly at the rational value of d."""
    norm = sum(abs(c) for c in f.coeffs)
    if norm == 0:
        return 0.0
    return float(abs(poly_eval(f, Fraction(d))) / norm)


def pf_estimate(
    m: GramMatrix,
    tol: float = DEFAULT_TOL,
    max_iters: int = DEFAULT_MAX_ITERS,
    *,
    poly: IntPoly | None = None,
) -> PFEstimate:
    """
    Power iteration from the all-ones vector with a Rayleigh-quotient estimate.

    Iteration stops once ||Mv - dv||_inf < tol. With a polynomial (the r_k of
    a series graph, or a generic minimal candidate) d is polished against it
    and the reported residual is |poly(d)| / ||poly||_1; otherwise it is the
    vector residual.
    """
    a = np.array(m.entries, dtype=np.float64)
    v = np.ones(a.shape[0]) / np.sqrt(a.shape[0])
    d = 0.0
    res = math.inf
    for it in range(1, max_iters + 1):
        w = a @ v
        d = float(v @ w)
        res = float(np.max(np.abs(w - d * v)))
        if res < tol:
            break
        v = w / np.linalg.norm(w)
    else:
        raise NotConverged(max_iters, res)

    if poly is not None:
        root = polish_root(poly, d)
        res = poly_residual(poly, root)
        if res >= tol:
            raise NotConverged(it, res)
        d = float(root)
    return PFEstimate(d=d, beta=math.sqrt(d), residual=res, iterations=it)


def polish_root(f: IntPoly, d: float, *, bits: int = _POLISH_BITS, steps: int = 6) -> Fraction:
    """
    Newton refinement of a simple root of f near d on a fixed dyadic grid.

    Iterates are rounded to `bits` fractional bits so evaluation stays cheap.
    A float start is good to ~1e-16 relative, so a handful of steps reaches
    the grid resolution.
    """
    df = poly_derivative(f)
    scale = 1 << bits
    x = Fraction(d)
    for _ in range(steps):
        slope = poly_eval(df, x)
        if slope == 0:
            break
        nxt = x - Fraction(poly_eval(f, x)) / slope
        nxt = Fraction(round(nxt * scale), scale)
        if nxt == x:
            break
        x = nxt
    return x


def conjugate_pair(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """a(x), b(x) = (2 - x +- sqrt(x^2 - 4x)) / 2; their product is 1."""
    s = np.sqrt(x * x - 4 * x)
    return (2 - x + s) / 2, (2 - x - s) / 2


def closedform_check(k: int, sample_points: Sequence[float]) -> float:
    """
    Max relative deviation between q_k(x) = A(x) a(x)^(2k) + B(x) b(x)^(2k),
    evaluated in floating point, and the exact q_k at each sample.
    """
    xs = np.asarray(list(sample_points), dtype=np.float64)
    if xs.size == 0:
        raise DomainError("closedform_check needs at least one sample point")
    bad = xs[~(xs * xs - 4 * xs > 0)]
    if bad.size:
        raise DomainError(f"samples need x^2 - 4x > 0, got {bad.tolist()}")

    q0, q1, qk = derive_q(0), derive_q(1), derive_q(k)
    a, b = conjugate_pair(xs)
    q0x = np.array([float(poly_eval(q0, Fraction(x))) for x in xs])
    q1x = np.array([float(poly_eval(q1, Fraction(x))) for x in xs])
    denom = a * a - b * b
    big_a = -(q0x * b * b - q1x) / denom
    big_b = (q0x * a * a - q1x) / denom
    approx = big_a * a ** (2 * k) + big_b * b ** (2 * k)
    exact = np.array([float(poly_eval(qk, Fraction(x))) for x in xs])
    scale = np.maximum(np.abs(exact), np.finfo(np.float64).tiny)
    return float(np.max(np.abs(approx - exact) / scale))


def load_graph_spec(path: str | Path) -> BipartiteGraphSpec:
    """
    Read a BipartiteGraphSpec JSON file:
        {"rows": 6, "cols": 4, "adjacency": [[1,0,0,0], ...], "labels": {...}}
    Errors name the file and the offending location.
    """
    p = Path(path)
    try:
        raw = json.loads(p.read_text(encoding="utf-8"))
    except OSError as e:
        raise GraphSpecError(f"{p}: cannot read ({e.strerror})") from e
    except json.JSONDecodeError as e:
        raise GraphSpecError(f"{p}:{e.lineno}:{e.colno}: invalid JSON ({e.msg})") from e
    if not isinstance(raw, dict):
        raise GraphSpecError(f"{p}: top level must be an object")
    missing = {"rows", "cols", "adjacency"} - set(raw)
    if missing:
        raise GraphSpecError(f"{p}: missing keys {sorted(missing)}")
    adjacency = raw["adjacency"]
    if not isinstance(adjacency, list) or not all(isinstance(r, list) for r in adjacency):
        raise GraphSpecError(f"{p}: adjacency must be a list of lists")
    for i, row in enumerate(adjacency):
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool):
                raise GraphSpecError(f"{p}: adjacency[{i}][{j}]={v!r} is not an integer")
    labels = raw.get("labels")
    if labels is not None and not isinstance(labels, dict):
        raise GraphSpecError(f"{p}: labels must be an object")
    try:
        return BipartiteGraphSpec(
            rows=int(raw["rows"]),
            cols=int(raw["cols"]),
            adjacency=tuple(tuple(r) for r in adjacency),
            labels=labels,
        )
    except GraphSpecError as e:
        raise GraphSpecError(f"{p}: {e}") from e
    except (TypeError, ValueError) as e:
        raise GraphSpecError(f"{p}: rows/cols must be integers ({e})") from e


def dump_graph_spec(g: BipartiteGraphSpec, path: str | Path) -> Path:
    p = Path(path)
    payload: dict = {"rows": g.rows, "cols": g.cols, "adjacency": [list(r) for r in g.adjacency]}
    if g.labels is not None:
        payload["labels"] = g.labels
    p.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    return p
