import json
import math

import pytest

from src.obstruction.core.errors import ReportError
from src.obstruction.core.galois import Verdict
from src.obstruction.core.graphs import BipartiteGraphSpec, build_A
from src.obstruction.core.numthy import FactorBudget, TableStatus, Tristate
from src.obstruction.core.obstruct import ObstructOptions, obstruct
from src.obstruction.core.polyring import IntPoly, poly_eval
from src.obstruction.core.report import (
    SOURCE_KEYS,
    render_text,
    report_from_dict,
    report_from_json,
    report_to_dict,
    report_to_json,
)
from src.obstruction.helpers.fixtures import load_published_tables
from src.obstruction.helpers.report_validate import require_report_shape


@pytest.fixture
def table_options(fixtures_path):
    return ObstructOptions(trust_table=True, table=load_published_tables(str(fixtures_path)).claims_by_k())


def test_k0_is_possible():
    rep = obstruct(0)
    assert rep.disc == 13
    assert rep.galois.group == "Z2"
    assert rep.cyclotomic is Tristate.YES
    assert rep.verdict is Verdict.POSSIBLE
    assert rep.n_paper == 3
    assert abs(rep.pf.d - (5 + math.sqrt(13)) / 2) < 1e-9
    assert "realized as a principal graph" in render_text(rep)


def test_k1_is_possible_with_cyclic_cubic():
    rep = obstruct(1)
    assert rep.r.degree == 3
    assert rep.disc == 169
    assert rep.disc_squarefree is Tristate.NO
    assert rep.galois.group == "Z3"
    assert rep.verdict is Verdict.POSSIBLE


def test_k2_is_ruled_out():
    rep = obstruct(2)
    assert rep.disc == 7606541
    assert [(f.p, f.e) for f in rep.disc_cert.factors] == [(1471, 1), (5171, 1)]
    assert rep.galois.group == "S6"
    assert rep.cyclotomic is Tristate.NO
    assert rep.verdict is Verdict.RULED_OUT
    assert rep.disc_source == "computed"
    assert rep.disc_table_status is None


@pytest.mark.parametrize("k", range(2, 10))
def test_ruled_out_without_tables(k):
    rep = obstruct(k)
    assert rep.irreducibility.certified
    assert rep.disc > 0
    assert rep.disc_cert.complete
    assert rep.galois.group == f"S{rep.r.degree}"
    assert rep.verdict is Verdict.RULED_OUT


def test_exhausted_budget_is_inconclusive():
    rep = obstruct(11, ObstructOptions(budget=FactorBudget(rho_iterations=1000)))
    assert not rep.disc_cert.complete
    assert rep.disc_squarefree is Tristate.UNKNOWN
    assert rep.galois.group == "unknown"
    assert rep.cyclotomic is Tristate.UNKNOWN
    assert rep.verdict is Verdict.INCONCLUSIVE



@pytest.mark.parametrize("k", [5, 9, 11])
def test_more_effort_only_resolves_unknowns(k, table_options):
    runs = [
        obstruct(k, ObstructOptions(budget=FactorBudget(trial_bound=100, rho_iterations=1))),
        obstruct(k, ObstructOptions(budget=FactorBudget(trial_bound=100, rho_iterations=1000))),
        obstruct(k),
        obstruct(k, table_options),
    ]
    sqf = [rep.disc_squarefree for rep in runs]
    verdicts = [rep.verdict for rep in runs]
    assert Tristate.NO not in sqf
    assert sqf[-1] is Tristate.YES
    # once settled, a field never moves again
    first = sqf.index(Tristate.YES)
    assert all(s is Tristate.YES for s in sqf[first:])
    assert all(v is Verdict.RULED_OUT for v in verdicts[first:])
    assert all(v is Verdict.INCONCLUSIVE for v in verdicts[:first])


@pytest.mark.parametrize("k", range(0, 14))
def test_series_with_checked_tables(k, table_options):
    rep = obstruct(k, table_options)
    if k < 2:
        assert rep.verdict is Verdict.POSSIBLE
        assert rep.disc_source == "computed"
    else:
        assert rep.disc_source == "table"
        assert rep.disc_table_status is TableStatus.VERIFIED
        assert rep.verdict is Verdict.RULED_OUT
    if k >= 7:
        assert rep.irreducibility.witness_prime == {7: 3, 8: 2, 9: 5, 10: 3, 11: 3, 12: 2, 13: 11}[k]


@pytest.mark.slow
@pytest.mark.parametrize("k", range(14, 20))
def test_large_k_with_checked_tables(k, table_options):
    rep = obstruct(k, table_options)
    assert rep.irreducibility.certified
    assert rep.verdict is Verdict.RULED_OUT


def test_bad_table_entry_falls_back_to_factoring():
    options = ObstructOptions(trust_table=True, table={2: ((1471, 1), (5173, 1))})
    rep = obstruct(2, options)
    assert rep.disc_table_status is TableStatus.MISMATCH
    assert rep.disc_source == "computed"
    assert rep.verdict is Verdict.RULED_OUT


def test_tables_ignored_without_trust_flag(table_options):
    rep = obstruct(3, ObstructOptions(table=table_options.table))
    assert rep.disc_source == "computed"
    assert rep.disc_table_status is None


def test_trace_sees_every_stage():
    stages = []
    obstruct(1, trace=lambda stage, fields: stages.append(stage))
    assert stages == ["minimal_poly", "pf_estimate", "witness_search", "discriminant", "factor", "verdict"]


def test_generic_path_graph(a11_adjacency):
    g = BipartiteGraphSpec(rows=6, cols=5, adjacency=tuple(map(tuple, a11_adjacency)))
    rep = obstruct(g, name="a11.json")
    assert rep.source == {"file": "a11.json"}
    assert rep.n_paper is None
    assert rep.r.degree == 2
    assert rep.galois.group == "Z2"
    assert rep.verdict is Verdict.POSSIBLE
    assert abs(rep.pf.d - (2 + math.sqrt(3))) < 1e-9


def test_generic_uncertified_is_inconclusive():
    # no primes to try and no degree patterns: r_2 stays unresolved
    rep = obstruct(build_A(2), ObstructOptions(witness_bound=1, degree_patterns=False), name="a2.json")
    assert not rep.irreducibility.certified
    assert rep.verdict is Verdict.INCONCLUSIVE
    assert "not certified" in render_text(rep)



def test_integer_index_survives_unconverged_power_iteration():
    # d = 4; charpoly x(x - 4)(x^2 - 3x + 1)
    g = BipartiteGraphSpec(rows=4, cols=4, adjacency=((0, 0, 0, 1), (0, 0, 0, 1), (0, 0, 1, 1), (1, 1, 1, 0)))
    rep = obstruct(g, ObstructOptions(max_iters=3), name="d4.json")
    assert rep.pf is None
    assert rep.r == rep.squarefree_part
    assert poly_eval(rep.r, 4) == 0
    assert not rep.irreducibility.certified
    assert rep.verdict is Verdict.INCONCLUSIVE

    rep = obstruct(g, name="d4.json")
    assert abs(rep.pf.d - 4) < 1e-9
    assert rep.r == IntPoly((-4, 1))
    assert rep.verdict is Verdict.POSSIBLE


@pytest.mark.parametrize("k", [1, 3])
def test_graph_file_matches_series(k):
    series = report_to_dict(obstruct(k))
    generic = report_to_dict(obstruct(build_A(k), name=f"gamma{k}.json"))
    for key in SOURCE_KEYS:
        series.pop(key)
        generic.pop(key)
    assert json.dumps(series) == json.dumps(generic)


def test_report_json_round_trip(table_options):
    for rep in (obstruct(2), obstruct(12, table_options)):
        data = report_to_dict(rep)
        require_report_shape(data)
        assert report_from_json(report_to_json(rep)) == rep
        assert report_from_dict(json.loads(report_to_json(rep))) == rep


def test_report_json_conventions():
    data = report_to_dict(obstruct(2))
    assert data["disc"] == "7606541"
    assert data["disc_factors"][0] == {"p": "1471", "e": 1, "certainty": "proven"}
    assert data["galois"] == {"group": "S6", "degree": 6, "abelian": False, "method": "square-free-discriminant"}
    assert data["irreducibility"]["status"] == "certified"
    assert isinstance(data["pf"]["d"], str)
    assert list(data)[:3] == ["source", "n_paper", "degree"]


def test_report_from_bad_json():
    with pytest.raises(ReportError):
        report_from_json("{not json")
    with pytest.raises(ReportError):
        report_from_json("[]")
    data = report_to_dict(obstruct(0))
    del data["galois"]
    with pytest.raises(ReportError):
        report_from_dict(data)
