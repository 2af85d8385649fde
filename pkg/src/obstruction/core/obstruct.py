#!/usr/bin/env python3
"""
End-to-end obstruction pipeline for one graph.

series (k):   derive_r(k)
generic:      charpoly -> squarefree part -> integer roots stripped
then, for both:
    irreducibility certificate -> discriminant -> factor (or checked table)
    -> Galois classification -> cyclotomic -> principal-graph verdict

Unresolved steps (no witness, budget exhausted, power iteration stalled) end up
as unknown/inconclusive fields, never as exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

from src.obstruction.core.errors import IrreducibilityRequired, NotConverged
from src.obstruction.core.galois import (
    GaloisConclusion,
    certify_irreducible,
    check_transitive_order,
    classify_galois,
    cyclotomic_verdict,
    principal_graph_verdict,
)
from src.obstruction.core.graphs import (
    DEFAULT_MAX_ITERS,
    DEFAULT_TOL,
    BipartiteGraphSpec,
    HaagerupIndex,
    PFEstimate,
    build_A,
    charpoly_exact,
    derive_r,
    eigenvalue_bound,
    gram,
    minimal_candidate,
    p_recurrence,
    pf_estimate,
)
from src.obstruction.core.numthy import (
    FactorBudget,
    FactorizationCertificate,
    TableStatus,
    factor_integer,
    is_squarefree,
    verify_factor_table,
)
from src.obstruction.core.polyring import IntPoly, count_real_roots, discriminant, squarefree_part
from src.obstruction.core.report import ObstructionReport

DEFAULT_WITNESS_BOUND = 200

Claims = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ObstructOptions:
    witness_bound: int = DEFAULT_WITNESS_BOUND
    budget: FactorBudget = field(default_factory=FactorBudget)
    tol: float = DEFAULT_TOL
    max_iters: int = DEFAULT_MAX_ITERS
    degree_patterns: bool = True
    trust_table: bool = False
    # |disc(r_k)| claims keyed by k (already shifted from the published fd[k+1])
    table: Mapping[int, Claims] | None = None


def _check_disc_sign(r: IntPoly, disc: int) -> None:
    """sign(D) = (-1)^c, c = half the number of non-real roots."""
    c = (r.degree - count_real_roots(r)) // 2
    expected = -1 if c % 2 else 1
    if (disc > 0) - (disc < 0) != expected:
        raise ArithmeticError(f"discriminant sign mismatch disc_sign={disc > 0} nonreal_pairs={c}")


def _disc_certificate(
    n: int, k: int | None, options: ObstructOptions
) -> tuple[FactorizationCertificate, str, TableStatus | None]:
    status: TableStatus | None = None
    if options.trust_table and k is not None and options.table and k in options.table:
        check = verify_factor_table(
            n, options.table[k], rounds=options.budget.mr_rounds, seed=options.budget.seed
        )
        status = check.status
        if check.status is TableStatus.VERIFIED:
            return check.certificate(), "table", status
    return factor_integer(n, options.budget), "computed", status


def _pf(m, options: ObstructOptions, poly: IntPoly | None) -> PFEstimate | None:
    try:
        return pf_estimate(m, options.tol, options.max_iters, poly=poly)
    except NotConverged:
        return None


Trace = Callable[[str, dict], None]


def _no_trace(stage: str, fields: dict) -> None:
    return None


def obstruct(
    source: int | HaagerupIndex | BipartiteGraphSpec,
    options: ObstructOptions = ObstructOptions(),
    *,
    name: str | None = None,
    trace: Trace = _no_trace,
) -> ObstructionReport:
    """
    Run the pipeline for a series index k or a generic graph. `trace` is
    called once per stage with a small dict of results (jobs log it).
    """
    if isinstance(source, BipartiteGraphSpec):
        k = None
        m = gram(source)
        charpoly = charpoly_exact(m)
        rough = _pf(m, options, None)
        r = minimal_candidate(charpoly, eigenvalue_bound(m), rough.d if rough else None)
        src = {"file": name or "<graph>"}
        n_paper = None
    else:
        idx = source if isinstance(source, HaagerupIndex) else HaagerupIndex(source)
        k = idx.k
        m = gram(build_A(idx))
        charpoly = p_recurrence(k)
        r = derive_r(k)
        src = {"series_k": k}
        n_paper = idx.n_paper
    trace("minimal_poly", {"degree": r.degree, "charpoly_degree": charpoly.degree})

    pf = _pf(m, options, r)
    trace("pf_estimate", {"d": pf.d if pf else None, "iterations": pf.iterations if pf else None})

    irr = certify_irreducible(r, options.witness_bound, degree_patterns=options.degree_patterns)
    trace("witness_search", {"status": irr.status, "method": irr.method.value if irr.method else None,
                             "witness_prime": irr.witness_prime})

    disc = discriminant(r)
    _check_disc_sign(r, disc)
    trace("discriminant", {"digits": len(str(abs(disc))), "sign": "+" if disc > 0 else "-"})

    cert, disc_source, table_status = _disc_certificate(abs(disc), k, options)
    sqf = is_squarefree(cert)
    trace("factor", {"source": disc_source, "complete": cert.complete, "factors": len(cert.factors),
                     "squarefree": sqf.value,
                     "table_status": table_status.value if table_status else None})

    try:
        galois = classify_galois(r, irr.certified, disc, sqf)
    except IrreducibilityRequired:
        galois = GaloisConclusion.unknown(r.degree)
    check_transitive_order(galois)
    cyclotomic = cyclotomic_verdict(galois)
    verdict = principal_graph_verdict(cyclotomic)
    trace("verdict", {"group": galois.group, "cyclotomic": cyclotomic.value, "verdict": verdict.value})

    return ObstructionReport(
        source=src,
        n_paper=n_paper,
        r=r,
        charpoly=charpoly,
        squarefree_part=squarefree_part(charpoly),
        irreducibility=irr,
        disc=disc,
        disc_cert=cert,
        disc_source=disc_source,
        disc_table_status=table_status,
        disc_squarefree=sqf,
        galois=galois,
        cyclotomic=cyclotomic,
        verdict=verdict,
        pf=pf,
    )
