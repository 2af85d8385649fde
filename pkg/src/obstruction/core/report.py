#!/usr/bin/env python3
"""
ObstructionReport: the verdict record for one graph, plus its JSON codec.

JSON conventions:
- big integers (coefficients, discriminant, primes) and floats are decimal strings
- small counters (n_paper, witness_prime, exponents, iterations) are integers
- galois.abelian is true / false / null
Keys are emitted in a fixed order so two equal reports serialize byte-identically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from src.obstruction.core.errors import ReportError
from src.obstruction.core.galois import (
    GaloisConclusion,
    GaloisMethod,
    IrreducibilityCertificate,
    IrreducibilityMethod,
    Verdict,
)
from src.obstruction.core.graphs import PFEstimate
from src.obstruction.core.numthy import (
    FactorizationCertificate,
    Primality,
    PrimeFactor,
    TableStatus,
    Tristate,
)
from src.obstruction.core.polyring import IntPoly, format_poly, poly_from_json, poly_to_json

SOURCE_KEYS = ("source", "n_paper")


@dataclass(frozen=True)
class ObstructionReport:
    source: dict
    n_paper: int | None
    r: IntPoly
    charpoly: IntPoly
    squarefree_part: IntPoly
    irreducibility: IrreducibilityCertificate
    disc: int
    disc_cert: FactorizationCertificate
    disc_source: str
    disc_table_status: TableStatus | None
    disc_squarefree: Tristate
    galois: GaloisConclusion
    cyclotomic: Tristate
    verdict: Verdict
    pf: PFEstimate | None

    @property
    def series_k(self) -> int | None:
        return self.source.get("series_k")


def _pf_to_json(pf: PFEstimate | None) -> dict | None:
    if pf is None:
        return None
    return {
        "d": repr(pf.d),
        "beta": repr(pf.beta),
        "residual": repr(pf.residual),
        "iterations": pf.iterations,
    }


def report_to_dict(rep: ObstructionReport) -> dict:
    irr = rep.irreducibility
    cert = rep.disc_cert
    return {
        "source": dict(rep.source),
        "n_paper": rep.n_paper,
        "degree": rep.r.degree,
        "r_coeffs": poly_to_json(rep.r),
        "charpoly": poly_to_json(rep.charpoly),
        "squarefree_part": poly_to_json(rep.squarefree_part),
        "irreducibility": {
            "status": irr.status,
            "method": irr.method.value if irr.method else None,
            "witness_prime": irr.witness_prime,
            "primes": list(irr.primes),
            "bound": irr.bound,
        },
        "disc": str(rep.disc),
        "disc_factors": [
            {"p": str(f.p), "e": f.e, "certainty": f.certainty.value} for f in cert.factors
        ],
        "disc_cofactor": str(cert.cofactor),
        "disc_complete": cert.complete,
        "disc_source": rep.disc_source,
        "disc_table_status": rep.disc_table_status.value if rep.disc_table_status else None,
        "disc_squarefree": rep.disc_squarefree.value,
        "galois": {
            "group": rep.galois.group,
            "degree": rep.galois.degree,
            "abelian": rep.galois.abelian,
            "method": rep.galois.method.value,
        },
        "cyclotomic": rep.cyclotomic.value,
        "verdict": rep.verdict.value,
        "pf": _pf_to_json(rep.pf),
    }


def report_from_dict(data: dict) -> ObstructionReport:
    try:
        irr = data["irreducibility"]
        gal = data["galois"]
        disc = int(data["disc"])
        cert = FactorizationCertificate(
            n=abs(disc),
            factors=tuple(
                PrimeFactor(int(f["p"]), int(f["e"]), Primality(f["certainty"]))
                for f in data["disc_factors"]
            ),
            cofactor=int(data["disc_cofactor"]),
            source=data["disc_source"],
        )
        pf = data.get("pf")
        return ObstructionReport(
            source=dict(data["source"]),
            n_paper=data["n_paper"],
            r=poly_from_json(data["r_coeffs"]),
            charpoly=poly_from_json(data["charpoly"]),
            squarefree_part=poly_from_json(data["squarefree_part"]),
            irreducibility=IrreducibilityCertificate(
                certified=irr["status"] == "certified",
                method=IrreducibilityMethod(irr["method"]) if irr.get("method") else None,
                witness_prime=irr.get("witness_prime"),
                primes=tuple(irr.get("primes", ())),
                bound=irr.get("bound"),
            ),
            disc=disc,
            disc_cert=cert,
            disc_source=data["disc_source"],
            disc_table_status=TableStatus(data["disc_table_status"]) if data.get("disc_table_status") else None,
            disc_squarefree=Tristate(data["disc_squarefree"]),
            galois=GaloisConclusion(
                group=gal["group"],
                degree=int(gal["degree"]),
                method=GaloisMethod(gal["method"]),
                abelian=gal["abelian"],
            ),
            cyclotomic=Tristate(data["cyclotomic"]),
            verdict=Verdict(data["verdict"]),
            pf=None if pf is None else PFEstimate(
                d=float(pf["d"]),
                beta=float(pf["beta"]),
                residual=float(pf["residual"]),
                iterations=int(pf["iterations"]),
            ),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise ReportError(f"malformed report: {type(e).__name__}: {e}") from e


def report_to_json(rep: ObstructionReport) -> str:
    return json.dumps(report_to_dict(rep), indent=2)


def report_from_json(text: str) -> ObstructionReport:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ReportError(f"report is not valid JSON: line={e.lineno} col={e.colno} {e.msg}") from e
    if not isinstance(data, dict):
        raise ReportError("report JSON must be an object")
    return report_from_dict(data)


def _source_label(rep: ObstructionReport) -> str:
    if rep.series_k is not None:
        return f"Gamma_{rep.series_k} (k={rep.series_k}, n={rep.n_paper})"
    return f"graph file {rep.source.get('file')}"


def render_text(rep: ObstructionReport) -> str:
    """Human-readable summary, one fact per line."""
    irr = rep.irreducibility
    if irr.certified:
        how = irr.method.value if irr.method else ""
        if irr.witness_prime is not None:
            how = f"{how}, p={irr.witness_prime}"
        elif irr.primes:
            how = f"{how}, primes={list(irr.primes)}"
        irr_line = f"certified ({how})"
    else:
        irr_line = f"unresolved (no certificate with primes <= {irr.bound})"

    factors = " * ".join(f"{f.p}^{f.e}" if f.e > 1 else str(f.p) for f in rep.disc_cert.factors) or "1"
    if not rep.disc_cert.complete:
        factors += f" * [unfactored {rep.disc_cert.cofactor}]"

    lines = [
        f"source:          {_source_label(rep)}",
        f"minimal poly:    {format_poly(rep.r)}  (degree {rep.r.degree})",
        f"irreducibility:  {irr_line}",
        f"discriminant:    {rep.disc}",
        f"  factors:       {factors}  [{rep.disc_source}"
        + (f", table {rep.disc_table_status.value}" if rep.disc_table_status else "")
        + "]",
        f"  square-free:   {rep.disc_squarefree.value}",
        f"galois group:    {rep.galois.group} (method {rep.galois.method.value})",
        f"cyclotomic:      {rep.cyclotomic.value}",
        f"verdict:         {rep.verdict.value}",
    ]
    if rep.pf is not None:
        lines.append(
            f"PF estimate:     d={rep.pf.d:.12f} beta={rep.pf.beta:.12f} "
            f"residual={rep.pf.residual:.3e} iterations={rep.pf.iterations}"
        )
    else:
        lines.append("PF estimate:     not converged")
    if rep.series_k is None and not irr.certified:
        lines.append(
            "note:            minimal polynomial not certified; "
            f"charpoly degree {rep.charpoly.degree}, squarefree part degree {rep.squarefree_part.degree}"
        )
    if rep.series_k == 0:
        lines.append("note:            Gamma_0 is realized as a principal graph of a subfactor")
    return "\n".join(lines)
