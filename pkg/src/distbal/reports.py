"""JSON analysis reports (schema in ``schemas/analysis_report.schema.json``)."""

from __future__ import annotations

import json
from importlib import resources

from distbal import balance as bal
from distbal.formats import to_graph6
from distbal.graph import Graph, all_pairs_distances, has_even_cycle, is_bipartite

SCHEMA_VERSION = "1.0"


def load_schema() -> dict:
    text = resources.files("distbal").joinpath("schemas/analysis_report.schema.json").read_text()
    return json.loads(text)


def _pair_rows(G: Graph, oracle, ks) -> list[dict]:
    rows = []
    for k in ks:
        pairs = oracle.pairs_at_distance(k)
        if len(pairs) == 0:
            continue
        me = bal.pair_edge_counts(G, oracle, pairs)
        mv = bal.pair_vertex_counts(oracle, pairs)
        for (g, h), e, v in zip(pairs.tolist(), me.tolist(), mv.tolist()):
            rows.append(
                {"g": g, "h": h, "k": k, "m_gh": e[0], "m_hg": e[1], "m_0": e[2], "n_gh": v[0], "n_hg": v[1]}
            )
    return rows


def analysis_dict(G: Graph, ks=(2, 3), with_pairs: bool = False, delta_reading: str = "exists") -> dict:
    """One graph's report; balance fields are ``None`` for disconnected input."""
    oracle = all_pairs_distances(G)
    connected = oracle.connected
    out = {
        "graph6": to_graph6(G),
        "n": G.n,
        "m": G.m,
        "connected": connected,
        "bipartite": is_bipartite(G),
        "has_even_cycle": has_even_cycle(G),
        "diameter": oracle.diameter if connected else None,
        "balance": None,
        "gammas": None,
        "total_distances": None,
    }
    if not connected:
        return out
    rep = bal.full_balance_report(G, ks, oracle, delta_reading=delta_reading)
    out["balance"] = {
        "edb": rep.edb.to_dict(),
        "db": rep.db.to_dict(),
        "by_distance": {
            str(k): {
                "edb": rep.k_edb[k].to_dict(),
                "db": rep.k_db[k].to_dict(),
                "locally_regular": rep.locally_regular[k].to_dict(),
                "delta": rep.delta[k].to_dict(),
            }
            for k in sorted(rep.k_edb)
        },
    }
    out["gammas"] = rep.gammas
    out["total_distances"] = rep.total_distances
    if with_pairs:
        out["pairs"] = _pair_rows(G, oracle, sorted(rep.k_edb))
    return out


def analysis_document(reports: list[dict]) -> dict:
    return {"schema_version": SCHEMA_VERSION, "reports": reports}
