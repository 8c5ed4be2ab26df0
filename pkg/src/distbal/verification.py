"""Exhaustive checks of the balance claims over small-graph corpora.

Each checker evaluates one claim over a corpus and returns a
:class:`CounterexampleReport`. Reports are deterministic: counterexamples
and anomalies are sorted by graph6 string, and timing is kept out of
``to_dict()`` unless asked for.
"""

from __future__ import annotations

import time
from functools import partial
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Sequence

from distbal import balance as bal
from distbal import constructions as con
from distbal.enumeration import MAX_N, canonical_key, corpus as enumerate_corpus
from distbal.errors import BoundExceeded
from distbal.formats import parse_graph6, to_graph6
from distbal.graph import (
    Graph,
    all_pairs_distances,
    has_even_cycle,
    is_bipartite,
    pendant_vertices,
    require_connected,
)


class ClaimId(str, Enum):
    T1i = "T1i"
    T1ii = "T1ii"
    T2 = "T2"
    C25 = "C25"
    T3 = "T3"
    T3_EQS = "T3_EQS"
    T4 = "T4"
    T4_EQS = "T4_EQS"
    C41 = "C41"
    T5 = "T5"
    T6 = "T6"
    EX22 = "EX22"

    def __str__(self):
        return self.value


CLAIM_TITLES = {
    ClaimId.T1i: "bipartite: 2-EDB iff equal total distance on distance-2 pairs",
    ClaimId.T1ii: "no even cycle + Delta_2: 2-EDB iff equal total distance on distance-2 pairs",
    ClaimId.T2: "no even cycle + Delta_3: 3-EDB iff equal total distance on distance-3 pairs",
    ClaimId.C25: "bipartite and 2-EDB implies EDB",
    ClaimId.T3: "cartesian product 2-EDB iff both factors 2-EDB and 2-DB",
    ClaimId.T3_EQS: "cartesian product closed-form counts and membership rule",
    ClaimId.T4: "lexicographic product A[B] 2-EDB iff A 2-EDB and B 2-locally regular",
    ClaimId.T4_EQS: "lexicographic product membership characterizations",
    ClaimId.C41: "A EDB iff S(A) 2-EDB",
    ClaimId.T5: "R(A) 2-EDB iff A is the path with two edges",
    ClaimId.T6: "A with a pendant vertex: S(A) not 2-EDB",
    ClaimId.EX22: "stars, wheels, friendship graphs, K_{m,n} are 2-EDB; K_{2,3}, K_{3,4} not EDB",
}

# default vertex bound per corpus claim
DEFAULT_MAX_N = {
    ClaimId.T1i: 7,
    ClaimId.T1ii: 7,
    ClaimId.T2: 7,
    ClaimId.C25: 7,
    ClaimId.C41: 6,
    ClaimId.T5: 6,
    ClaimId.T6: 7,
}

PRODUCT_CLAIMS = {ClaimId.T3, ClaimId.T3_EQS, ClaimId.T4, ClaimId.T4_EQS}


@dataclass(frozen=True)
class Counterexample:
    graph6: str
    witness: dict
    expected: object
    actual: object
    factors: tuple[str, ...] | None = None

    def sort_key(self):
        return (self.graph6, self.factors or (), repr(self.witness))

    def to_dict(self) -> dict:
        out = {
            "graph6": self.graph6,
            "witness": self.witness,
            "expected": self.expected,
            "actual": self.actual,
        }
        if self.factors is not None:
            out["factors"] = list(self.factors)
        return out


@dataclass(frozen=True)
class Anomaly:
    graph6: str
    explanation: str

    def to_dict(self) -> dict:
        return {"graph6": self.graph6, "explanation": self.explanation}


@dataclass
class CounterexampleReport:
    claim: ClaimId
    corpus: dict
    examined: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    anomalies: list[Anomaly] = field(default_factory=list)
    filtered: dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def normalize(self) -> "CounterexampleReport":
        self.counterexamples.sort(key=Counterexample.sort_key)
        self.anomalies.sort(key=lambda a: (a.graph6, a.explanation))
        return self

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "claim": self.claim.value,
            "title": CLAIM_TITLES[self.claim],
            "corpus": self.corpus,
            "examined": self.examined,
            "filtered": self.filtered,
            "holds": self.holds,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "anomalies": [a.to_dict() for a in self.anomalies],
        }
        if timing:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out

    def summary(self) -> str:
        extra = "".join(f", {k}={v}" for k, v in self.filtered.items())
        status = "holds" if self.holds else f"FAILS ({len(self.counterexamples)} counterexamples)"
        return (
            f"{self.claim.value}: {status}; examined={self.examined}{extra}, "
            f"anomalies={len(self.anomalies)}"
        )


# ---------------------------------------------------------------- corpus claims


def _bump(report: CounterexampleReport, key: str) -> None:
    report.filtered[key] = report.filtered.get(key, 0) + 1


def _check_t1i(G, oracle, report):
    if not is_bipartite(G):
        return
    _bump(report, "bipartite")
    _equivalence(G, oracle, 2, report)


def _check_t1ii(G, oracle, report, reading="exists"):
    _delta_claim(G, oracle, 2, report, reading)


def _check_t2(G, oracle, report, reading="exists"):
    _delta_claim(G, oracle, 3, report, reading)


def _delta_claim(G, oracle, k, report, reading):
    if has_even_cycle(G):
        return
    _bump(report, "even_cycle_free")
    if not bal.has_delta_property(G, k, oracle, reading):
        return
    _bump(report, f"delta_{k}")
    _equivalence(G, oracle, k, report)


def _equivalence(G, oracle, k, report):
    """k-EDB iff total distances agree on every distance-k pair."""
    edb = bal.is_k_edge_distance_balanced(G, k, oracle)
    td = bal.is_total_distance_balanced(G, k, oracle)
    if bool(edb) != bool(td):
        w = (edb.witness or td.witness).to_dict()
        report.counterexamples.append(
            Counterexample(
                to_graph6(G),
                w,
                expected=f"{k}-EDB == total-distance-balanced at distance {k}",
                actual={f"{k}_edb": bool(edb), "total_distance_balanced": bool(td)},
            )
        )


def _check_c25(G, oracle, report):
    if not is_bipartite(G):
        return
    _bump(report, "bipartite")
    if not bal.is_k_edge_distance_balanced(G, 2, oracle):
        return
    _bump(report, "bipartite_2_edb")
    edb = bal.is_edge_distance_balanced(G, oracle)
    if not edb:
        report.counterexamples.append(
            Counterexample(to_graph6(G), edb.witness.to_dict(), expected={"edb": True}, actual={"edb": False})
        )


def _check_c41(G, oracle, report):
    S, _ = con.subdivision(G)
    edb = bal.is_edge_distance_balanced(G, oracle)
    s2 = bal.is_k_edge_distance_balanced(S, 2)
    if edb:
        _bump(report, "edb")
    if bool(edb) != bool(s2):
        w = (edb.witness if not edb else s2.witness).to_dict()
        w["in"] = "A" if not edb else "S(A)"
        report.counterexamples.append(
            Counterexample(to_graph6(G), w, expected={"s_2_edb": bool(edb)}, actual={"s_2_edb": bool(s2)})
        )


def _is_two_edge_path(G: Graph) -> bool:
    return G.n == 3 and G.m == 2


def _check_t5(G, oracle, report):
    R, _ = con.triangle_extension(G)
    r2 = bal.is_k_edge_distance_balanced(R, 2)
    want = _is_two_edge_path(G)
    if r2:
        _bump(report, "r_2_edb")
    if bool(r2) == want:
        return
    g6 = to_graph6(G)
    if oracle.diameter < 2:
        report.anomalies.append(
            Anomaly(
                g6,
                f"diameter {oracle.diameter}: R(A) on {R.n} vertices has no pair at distance 2, "
                "so it is vacuously 2-EDB although A is not a two-edge path",
            )
        )
        return
    w = r2.witness.to_dict() if r2.witness else {}
    w["r_graph6"] = to_graph6(R)
    report.counterexamples.append(
        Counterexample(g6, w, expected={"r_2_edb": want}, actual={"r_2_edb": bool(r2)})
    )


def _check_t6(G, oracle, report):
    if not pendant_vertices(G):
        return
    _bump(report, "with_pendant")
    S, _ = con.subdivision(G)
    s2 = bal.is_k_edge_distance_balanced(S, 2)
    if not s2:
        return
    g6 = to_graph6(G)
    if oracle.diameter < 2:
        report.anomalies.append(
            Anomaly(g6, f"diameter {oracle.diameter}: S(A) = {to_graph6(S)} is 2-EDB")
        )
        return
    report.counterexamples.append(
        Counterexample(g6, {"s_graph6": to_graph6(S)}, expected={"s_2_edb": False}, actual={"s_2_edb": True})
    )


_CORPUS_CHECKERS: dict[ClaimId, Callable] = {
    ClaimId.T1i: _check_t1i,
    ClaimId.T1ii: _check_t1ii,
    ClaimId.T2: _check_t2,
    ClaimId.C25: _check_c25,
    ClaimId.C41: _check_c41,
    ClaimId.T5: _check_t5,
    ClaimId.T6: _check_t6,
}


# --------------------------------------------------------------- product claims

# factor sets used by the product claims when no external corpus is given
T3_FACTORS = ("P3", "C4", "C5", "K3", "S3", "K23")
T4_LEFT = ("P3", "C4", "C5", "S3")
T4_RIGHT = ("K2", "K3", "C4", "P3")
MAX_PRODUCT_VERTICES = 36


def named_graph(name: str) -> Graph:
    table = {
        "K2": lambda: con.complete(2),
        "K3": lambda: con.complete(3),
        "P3": lambda: con.path(3),
        "C4": lambda: con.cycle(4),
        "C5": lambda: con.cycle(5),
        "S3": lambda: con.star(3),
        "K23": lambda: con.complete_bipartite(2, 3),
    }
    return table[name]()


def _two_edb_two_db(G: Graph) -> bool:
    oracle = all_pairs_distances(G)
    return bool(bal.is_k_edge_distance_balanced(G, 2, oracle)) and bool(
        bal.is_k_distance_balanced(G, 2, oracle)
    )


def _check_t3_pair(A, B, names, report):
    P, _ = con.cartesian_product(A, B)
    lhs = bal.is_k_edge_distance_balanced(P, 2)
    rhs = _two_edb_two_db(A) and _two_edb_two_db(B)
    if bool(lhs) != rhs:
        w = lhs.witness.to_dict() if lhs.witness else {}
        report.counterexamples.append(
            Counterexample(to_graph6(P), w, expected={"product_2_edb": rhs}, actual={"product_2_edb": bool(lhs)}, factors=names)
        )


@dataclass
class CrosscheckRow:
    shape: str
    g: tuple[int, int]
    h: tuple[int, int]
    brute: tuple[int, int]
    formula: tuple[int, int]
    membership_mismatches: int

    @property
    def ok(self) -> bool:
        return self.brute == self.formula and self.membership_mismatches == 0


@dataclass
class CrosscheckReport:
    rows: list[CrosscheckRow]

    @property
    def vacuous(self) -> bool:
        return not self.rows

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def failures(self) -> list[CrosscheckRow]:
        return [r for r in self.rows if not r.ok]


def product_formula_crosscheck(A: Graph, B: Graph) -> CrosscheckReport:
    """Compare brute-force counts in ``A x B`` with the closed forms

        m((a1,b),(a2,b)) = m_A(a1,a2) |V(B)| + n_A(a1,a2) |E(B)|

    (and the mirror shape along ``B``) for every pair with the two
    coordinates at distance 2 in one factor and equal in the other.
    Membership of each product edge is also checked against the
    projected rule: the edge's projection onto the varying factor
    (an edge, or a single vertex) is strictly closer to ``a1`` than to ``a2``.
    """
    oa = require_connected(A)
    ob = require_connected(B)
    P, vmap = con.cartesian_product(A, B)
    op = all_pairs_distances(P)
    rows = []
    for shape, F, of, other in (("A", A, oa, B), ("B", B, ob, A)):
        pairs = of.pairs_at_distance(2)
        if len(pairs) == 0:
            continue
        mf = bal.pair_edge_counts(F, of, pairs)
        nf = bal.pair_vertex_counts(of, pairs)
        for (x1, x2), mrow, nrow in zip(pairs.tolist(), mf, nf):
            fwd = int(mrow[0]) * other.n + int(nrow[0]) * other.m
            bwd = int(mrow[1]) * other.n + int(nrow[1]) * other.m
            for y in range(other.n):
                if shape == "A":
                    g, h = (x1, y), (x2, y)
                else:
                    g, h = (y, x1), (y, x2)
                gi, hi = vmap.id(*g), vmap.id(*h)
                cls = bal.classify_edges_for_pair(P, op, gi, hi)
                bad = 0
                for e, (u, v) in enumerate(P.edges):
                    pu, pv = vmap.pair(u), vmap.pair(v)
                    i = 0 if shape == "A" else 1
                    ends = (pu[i], pv[i])
                    to1 = min(of(z, x1) for z in ends)
                    to2 = min(of(z, x2) for z in ends)
                    if (to1 < to2) != (e in cls.closer_to_g) or (to2 < to1) != (e in cls.closer_to_h):
                        bad += 1
                rows.append(CrosscheckRow(shape, g, h, (cls.m_gh, cls.m_hg), (fwd, bwd), bad))
    return CrosscheckReport(rows)


def _check_t3_eqs_pair(A, B, names, report):
    res = product_formula_crosscheck(A, B)
    if res.vacuous:
        report.anomalies.append(Anomaly(to_graph6(A) + "," + to_graph6(B), "no distance-2 pair in either factor; nothing to compare"))
        return
    report.filtered["compared_pairs"] = report.filtered.get("compared_pairs", 0) + len(res.rows)
    for row in res.failures:
        P, _ = con.cartesian_product(A, B)
        report.counterexamples.append(
            Counterexample(
                to_graph6(P),
                {"shape": row.shape, "g": list(row.g), "h": list(row.h), "membership_mismatches": row.membership_mismatches},
                expected=list(row.formula),
                actual=list(row.brute),
                factors=names,
            )
        )


def _check_t4_pair(A, B, names, report):
    P, _ = con.lexicographic_product(A, B)
    lhs = bal.is_k_edge_distance_balanced(P, 2)
    rhs = bool(bal.is_k_edge_distance_balanced(A, 2)) and bool(bal.is_locally_regular(B, 2))
    if bool(lhs) != rhs:
        w = lhs.witness.to_dict() if lhs.witness else {}
        report.counterexamples.append(
            Counterexample(to_graph6(P), w, expected={"product_2_edb": rhs}, actual={"product_2_edb": bool(lhs)}, factors=names)
        )


def lexicographic_membership_rule(A, B, oa, g, h, edge):
    """Predicted ``(closer_to_g, closer_to_h)`` for a product edge of ``A[B]``.

    For ``g = (a1, b1)``, ``h = (a2, b2)`` with ``a1 != a2``: the edge is
    closer to ``g`` iff its projection onto ``A`` (an edge or a single
    vertex) is strictly closer to ``a1`` than to ``a2``.
    For ``a1 = a2``: the edge is closer to ``g`` iff one endpoint ``(a1, y)``
    has ``y`` adjacent to ``b1`` and not to ``b2``.
    """
    (a1, b1), (a2, b2) = g, h
    (x, y), (x2, y2) = edge
    if a1 != a2:
        to1 = min(oa(x, a1), oa(x2, a1))
        to2 = min(oa(x, a2), oa(x2, a2))
        return to1 < to2, to2 < to1

    def side(p, q):
        return any(
            xa == a1 and B.has_edge(yb, p) and not B.has_edge(yb, q)
            for xa, yb in ((x, y), (x2, y2))
        )

    return side(b1, b2), side(b2, b1)


def _check_t4_eqs_pair(A, B, names, report):
    oa = require_connected(A)
    P, vmap = con.lexicographic_product(A, B)
    op = all_pairs_distances(P)
    first: dict[str, Counterexample] = {}
    mismatches: dict[str, int] = {}
    compared = 0
    for gi, hi in op.pairs_at_distance(2).tolist():
        for gi2, hi2 in ((gi, hi), (hi, gi)):
            g, h = vmap.pair(gi2), vmap.pair(hi2)
            case = "a1 != a2" if g[0] != h[0] else "a1 == a2"
            cls = bal.classify_edges_for_pair(P, op, gi2, hi2)
            compared += 1
            for e, (u, v) in enumerate(P.edges):
                edge = (vmap.pair(u), vmap.pair(v))
                want = lexicographic_membership_rule(A, B, oa, g, h, edge)
                got = (e in cls.closer_to_g, e in cls.closer_to_h)
                if want == got:
                    continue
                mismatches[case] = mismatches.get(case, 0) + 1
                if case not in first:
                    first[case] = Counterexample(
                        to_graph6(P),
                        {"case": case, "g": list(g), "h": list(h), "edge": [list(edge[0]), list(edge[1])]},
                        expected={"closer_to_g": want[0], "closer_to_h": want[1]},
                        actual={"closer_to_g": got[0], "closer_to_h": got[1]},
                        factors=names,
                    )
    for case, cx in first.items():
        cx.witness["mismatching_edges"] = mismatches[case]
        report.counterexamples.append(cx)
    report.filtered["compared_pairs"] = report.filtered.get("compared_pairs", 0) + compared


_PRODUCT_CHECKERS = {
    ClaimId.T3: _check_t3_pair,
    ClaimId.T3_EQS: _check_t3_eqs_pair,
    ClaimId.T4: _check_t4_pair,
    ClaimId.T4_EQS: _check_t4_eqs_pair,
}


def _factor_pairs(claim: ClaimId, graphs: Sequence[Graph] | None, max_vertices: int):
    if graphs is None:
        if claim in (ClaimId.T4, ClaimId.T4_EQS):
            left = [(n, named_graph(n)) for n in T4_LEFT]
            right = [(n, named_graph(n)) for n in T4_RIGHT]
        else:
            left = right = [(n, named_graph(n)) for n in T3_FACTORS]
    else:
        left = right = [(to_graph6(G), G) for G in graphs if G.n >= 1 and all_pairs_distances(G).connected]
    for na, A in left:
        for nb, B in right:
            if claim in (ClaimId.T4, ClaimId.T4_EQS) and A.n < 2:
                continue
            if A.n * B.n <= max_vertices:
                yield (na, nb), A, B


# ------------------------------------------------------------------ EX22


def example_graphs() -> list[tuple[str, Graph, bool | None]]:
    """``(name, graph, expected EDB or None)``; every one should be 2-EDB."""
    out: list[tuple[str, Graph, bool | None]] = []
    out += [(f"star:{k}", con.star(k), None) for k in range(2, 9)]
    out += [(f"wheel:{r}", con.wheel(r), None) for r in range(5, 9)]
    out += [(f"friendship:{n}", con.friendship(n), None) for n in range(1, 5)]
    out += [
        ("complete_bipartite:2,2", con.complete_bipartite(2, 2), None),
        ("complete_bipartite:2,3", con.complete_bipartite(2, 3), False),
        ("complete_bipartite:3,4", con.complete_bipartite(3, 4), False),
    ]
    return out


def _check_ex22(report: CounterexampleReport) -> None:
    for name, G, want_edb in example_graphs():
        report.examined += 1
        oracle = all_pairs_distances(G)
        two = bal.is_k_edge_distance_balanced(G, 2, oracle)
        if not two:
            report.counterexamples.append(
                Counterexample(to_graph6(G), {"family": name, **two.witness.to_dict()}, {"2_edb": True}, {"2_edb": False})
            )
        if want_edb is not None:
            edb = bal.is_edge_distance_balanced(G, oracle)
            if bool(edb) != want_edb:
                report.counterexamples.append(
                    Counterexample(to_graph6(G), {"family": name}, {"edb": want_edb}, {"edb": bool(edb)})
                )


# ------------------------------------------------------------------ driver


def check_claim(
    claim: ClaimId | str,
    max_n: int | None = None,
    min_n: int = 1,
    graphs: Iterable[Graph] | None = None,
    limit: int = MAX_N,
    max_product_vertices: int = MAX_PRODUCT_VERTICES,
    delta_reading: str = "exists",
) -> CounterexampleReport:
    """Run one claim.

    Corpus claims scan connected isomorphism classes on ``min_n..max_n``
    vertices (or the supplied ``graphs``; disconnected ones are skipped).
    Product claims use built-in factor sets, or all pairs drawn from
    ``graphs`` with at most ``max_product_vertices`` product vertices.
    ``delta_reading`` selects the Delta_n variant used by T1ii and T2.
    """
    claim = ClaimId(claim)
    start = time.perf_counter()
    graphs = None if graphs is None else list(graphs)
    if claim in _CORPUS_CHECKERS:
        n_hi = DEFAULT_MAX_N[claim] if max_n is None else max_n
        if graphs is None and n_hi > limit:
            raise BoundExceeded(f"max_n = {n_hi} exceeds the enumeration limit {limit}")
        desc = (
            {"source": "enumerated", "min_n": min_n, "max_n": n_hi, "connected": True, "dedup": True}
            if graphs is None
            else {"source": "external", "graphs": len(graphs)}
        )
        if claim in (ClaimId.T1ii, ClaimId.T2):
            desc["delta_reading"] = delta_reading
            check = partial(_CORPUS_CHECKERS[claim], reading=delta_reading)
        else:
            check = _CORPUS_CHECKERS[claim]
        report = CounterexampleReport(claim, desc)
        stream = enumerate_corpus(n_hi, min_n, True, limit) if graphs is None else graphs
        for G in stream:
            oracle = all_pairs_distances(G)
            if not oracle.connected:
                _bump(report, "skipped_disconnected")
                continue
            report.examined += 1
            check(G, oracle, report)
    elif claim in _PRODUCT_CHECKERS:
        report = CounterexampleReport(
            claim,
            {
                "source": "named factors" if graphs is None else "external",
                "max_product_vertices": max_product_vertices,
            },
        )
        for names, A, B in _factor_pairs(claim, graphs, max_product_vertices):
            report.examined += 1
            _PRODUCT_CHECKERS[claim](A, B, names, report)
    else:
        report = CounterexampleReport(claim, {"source": "named families"})
        _check_ex22(report)
    report.elapsed = time.perf_counter() - start
    return report.normalize()


def check_all(
    max_n: int | None = None, graphs: Iterable[Graph] | None = None, delta_reading: str = "exists"
) -> list[CounterexampleReport]:
    graphs = None if graphs is None else list(graphs)
    return [check_claim(c, max_n=max_n, graphs=graphs, delta_reading=delta_reading) for c in ClaimId]


def reverify(counterexample: Counterexample, claim: ClaimId | str, delta_reading: str = "exists") -> bool:
    """Re-run the failing predicate on the decoded graph6 string.

    True when the recorded violation reproduces.
    """
    claim = ClaimId(claim)
    G = parse_graph6(counterexample.graph6)
    if claim in _CORPUS_CHECKERS or claim is ClaimId.EX22:
        scratch = CounterexampleReport(claim, {})
        if claim is ClaimId.EX22:
            _check_ex22(scratch)
            return any(c == counterexample for c in scratch.counterexamples)
        check = _CORPUS_CHECKERS[claim]
        if claim in (ClaimId.T1ii, ClaimId.T2):
            check = partial(check, reading=delta_reading)
        check(G, all_pairs_distances(G), scratch)
        return counterexample in scratch.counterexamples
    # product claims record the product itself; recompute its 2-EDB flag
    if claim in (ClaimId.T3, ClaimId.T4):
        return bool(bal.is_k_edge_distance_balanced(G, 2)) == counterexample.actual["product_2_edb"]
    if claim is ClaimId.T3_EQS:
        return _reverify_counts(G, counterexample)
    return _reverify_membership(G, counterexample, counterexample.witness)


def _factor_graphs(names: Sequence[str]) -> tuple[Graph, Graph]:
    def load(name):
        try:
            return named_graph(name)
        except KeyError:
            return parse_graph6(name)

    return load(names[0]), load(names[1])


def _reverify_counts(P: Graph, cx: Counterexample) -> bool:
    A, B = _factor_graphs(cx.factors)
    P2, vmap = con.cartesian_product(A, B)
    if canonical_key(P) != canonical_key(P2):
        return False
    cls = bal.classify_edges_for_pair(P2, None, vmap.id(*cx.witness["g"]), vmap.id(*cx.witness["h"]))
    return [cls.m_gh, cls.m_hg] == cx.actual and cx.actual != cx.expected


def _reverify_membership(P: Graph, cx: Counterexample, w: dict) -> bool:
    A, B = _factor_graphs(cx.factors)
    P2, vmap = con.lexicographic_product(A, B)
    if not P.same_as(P2):
        return False
    g, h = tuple(w["g"]), tuple(w["h"])
    cls = bal.classify_edges_for_pair(P2, None, vmap.id(*g), vmap.id(*h))
    e = P2.edge_id(vmap.id(*w["edge"][0]), vmap.id(*w["edge"][1]))
    got = {"closer_to_g": e in cls.closer_to_g, "closer_to_h": e in cls.closer_to_h}
    return got == cx.actual and got != cx.expected
