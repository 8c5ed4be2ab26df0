import json

import networkx as nx
import pytest

from conftest import to_nx
from distbal import balance as bal
from distbal import constructions as con
from distbal.enumeration import canonical_form
from distbal.errors import BoundExceeded
from distbal.formats import parse_graph6, to_graph6
from distbal.graph import all_pairs_distances, build_graph
from distbal.verification import (
    ClaimId,
    CounterexampleReport,
    check_all,
    check_claim,
    lexicographic_membership_rule,
    named_graph,
    product_formula_crosscheck,
    reverify,
)

CONNECTED = [1, 1, 2, 6, 21, 112]


def g6(G):
    return to_graph6(canonical_form(G))


@pytest.fixture(scope="module")
def reports():
    return {c: check_claim(c) for c in ClaimId}


@pytest.mark.parametrize("n", range(1, 7))
def test_examined_counts(n):
    assert check_claim(ClaimId.T1i, max_n=n, min_n=n).examined == CONNECTED[n - 1]
    assert check_claim(ClaimId.C41, max_n=n).examined == sum(CONNECTED[:n])


def test_reports_are_deterministic(reports):
    for c in ClaimId:
        again = check_claim(c)
        assert json.dumps(again.to_dict(), sort_keys=True) == json.dumps(reports[c].to_dict(), sort_keys=True)
        assert "elapsed_seconds" not in again.to_dict()
        assert "elapsed_seconds" in again.to_dict(timing=True)


def test_holds_iff_no_counterexamples(reports):
    for rep in reports.values():
        assert rep.holds == (not rep.counterexamples)
        assert rep.summary().startswith(rep.claim.value)


def test_every_counterexample_reverifies(reports):
    for c, rep in reports.items():
        for cx in rep.counterexamples:
            assert reverify(cx, c), (c, cx)


def test_reverify_rejects_tampered_counterexample(reports):
    cx = reports[ClaimId.C25].counterexamples[0]
    fake = type(cx)(g6(con.cycle(4)), cx.witness, cx.expected, cx.actual)
    assert not reverify(fake, ClaimId.C25)


def test_counterexamples_sorted(reports):
    for rep in reports.values():
        keys = [cx.sort_key() for cx in rep.counterexamples]
        assert keys == sorted(keys)


# ---- outcomes on the default corpora, each cross-checked directly


def test_t1i_holds(reports):
    rep = reports[ClaimId.T1i]
    assert rep.holds and rep.examined == 996 and rep.filtered["bipartite"] == 72


def test_t1ii_filter_sizes(reports):
    rep = reports[ClaimId.T1ii]
    assert rep.holds
    assert rep.filtered == {"even_cycle_free": 79, "delta_2": 17}


def test_t2_fails_with_two_graphs(reports):
    rep = reports[ClaimId.T2]
    assert [cx.graph6 for cx in rep.counterexamples] == ["F?C^G", "F@GUW"]
    for cx in rep.counterexamples:
        G = parse_graph6(cx.graph6)
        o = all_pairs_distances(G)
        assert bal.is_k_edge_distance_balanced(G, 3, o)
        assert not bal.is_total_distance_balanced(G, 3, o)
        assert bal.has_delta_property(G, 3, o)
        # the stricter reading of the path condition excludes them
        assert not bal.has_delta_property(G, 3, o, reading="every")


def test_t1ii_t2_hold_under_strict_reading():
    for c in (ClaimId.T1ii, ClaimId.T2):
        rep = check_claim(c, delta_reading="every")
        assert rep.holds and rep.corpus["delta_reading"] == "every"


def test_c25_counterexamples_include_k23(reports):
    found = {cx.graph6 for cx in reports[ClaimId.C25].counterexamples}
    assert g6(con.path(3)) in found
    assert g6(con.complete_bipartite(2, 3)) in found
    assert g6(con.complete_bipartite(3, 4)) in found
    assert len(found) == 9
    K23 = con.complete_bipartite(2, 3)
    assert bal.is_k_edge_distance_balanced(K23, 2) and not bal.is_edge_distance_balanced(K23)


def test_t3_fails_on_diagonal_pairs(reports):
    rep = reports[ClaimId.T3]
    assert rep.examined == 36 and len(rep.counterexamples) == 27
    P, vm = con.cartesian_product(con.path(3), con.path(3))
    cls = bal.classify_edges_for_pair(P, None, vm.id(0, 0), vm.id(1, 1))
    assert (cls.m_gh, cls.m_hg) == (2, 8)


def test_t3_counts_hold(reports):
    rep = reports[ClaimId.T3_EQS]
    assert rep.holds and rep.filtered["compared_pairs"] == 720
    assert len(rep.anomalies) == 1  # K3 x K3 has no distance-2 pair of either shape


def test_t4_equivalence_holds(reports):
    assert reports[ClaimId.T4].holds and reports[ClaimId.T4].examined == 16


def test_t4_membership_rule_counterexample():
    # the projected rule calls the cross edge (0,1)-(1,0) of P3[K2] closer to
    # (0,0) than to (2,0); both endpoints are at distance 1 from each end
    A, B = con.path(3), con.complete(2)
    P, vm = con.lexicographic_product(A, B)
    o = all_pairs_distances(P)
    g, h = vm.id(0, 0), vm.id(2, 0)
    e = P.edge_id(vm.id(0, 1), vm.id(1, 0))
    assert e in bal.classify_edges_for_pair(P, o, g, h).equidistant
    rule = lexicographic_membership_rule(A, B, all_pairs_distances(A), (0, 0), (2, 0), ((0, 1), (1, 0)))
    assert rule == (True, False)


def test_c41_prism(reports):
    (cx,) = reports[ClaimId.C41].counterexamples
    prism = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    assert cx.graph6 == g6(prism)
    assert bal.is_edge_distance_balanced(prism)
    S, _ = con.subdivision(prism)
    assert not bal.is_k_edge_distance_balanced(S, 2)


def test_t5_stars(reports):
    rep = reports[ClaimId.T5]
    assert [cx.graph6 for cx in rep.counterexamples] == sorted(g6(con.star(k)) for k in (3, 4, 5))
    # R(star) is a friendship graph, which is 2-EDB
    R, _ = con.triangle_extension(con.star(3))
    assert nx.is_isomorphic(to_nx(R), to_nx(con.friendship(3)))
    assert bal.is_k_edge_distance_balanced(R, 2)
    assert {a.graph6 for a in rep.anomalies} == {"@", "A_"}


def test_t5_path_direction():
    R, _ = con.triangle_extension(con.path(3))
    assert bal.is_k_edge_distance_balanced(R, 2)
    R, _ = con.triangle_extension(con.path(4))
    assert not bal.is_k_edge_distance_balanced(R, 2)


def test_t6(reports):
    rep = reports[ClaimId.T6]
    assert rep.holds and rep.filtered["with_pendant"] == 412
    assert [a.graph6 for a in rep.anomalies] == ["A_"]


def test_ex22(reports):
    assert reports[ClaimId.EX22].holds and reports[ClaimId.EX22].examined == 18


# ---- product cross-check


def test_crosscheck_p3_k2():
    res = product_formula_crosscheck(con.path(3), con.complete(2))
    row = next(r for r in res.rows if r.shape == "A")
    assert row.formula == row.brute == (3, 3)
    assert res.ok


def test_crosscheck_c4_c4_and_vacuous():
    res = product_formula_crosscheck(con.cycle(4), con.cycle(4))
    assert res.ok and len(res.rows) == 2 * 4 * 2  # 2 antipodal pairs, 4 fibres, 2 shapes
    assert product_formula_crosscheck(con.complete(2), con.complete(2)).vacuous


def test_named_graphs():
    assert named_graph("K23") == con.complete_bipartite(2, 3)
    with pytest.raises(KeyError):
        named_graph("Q3")


# ---- corpus plumbing


def test_external_corpus():
    gs = [con.path(3), build_graph(4, [(0, 1), (2, 3)]), con.cycle(4)]
    rep = check_claim(ClaimId.C25, graphs=gs)
    assert rep.examined == 2
    assert rep.filtered["skipped_disconnected"] == 1
    assert [cx.graph6 for cx in rep.counterexamples] == [to_graph6(con.path(3))]
    assert rep.corpus == {"source": "external", "graphs": 3}


def test_external_product_corpus():
    rep = check_claim(ClaimId.T3, graphs=[con.path(3), con.cycle(4)])
    assert rep.examined == 4


def test_bound_exceeded():
    with pytest.raises(BoundExceeded):
        check_claim(ClaimId.T1i, max_n=9)


def test_check_all_covers_every_claim():
    out = check_all(max_n=4)
    assert [r.claim for r in out] == list(ClaimId)
    assert all(isinstance(r, CounterexampleReport) for r in out)


def test_claim_ids_parse():
    assert ClaimId("T3_EQS") is ClaimId.T3_EQS
    assert str(ClaimId.T1ii) == "T1ii"
    with pytest.raises(ValueError):
        ClaimId("T7")
