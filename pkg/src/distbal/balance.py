"""Balance predicates on vertex pairs and edges.

Every predicate that quantifies over pairs at distance ``k`` is
vacuously true when no such pair exists. Predicates return a
:class:`Verdict`, which is truthy iff the property holds and carries
the first violation (pairs in lexicographic order, edges in id order)
otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from distbal._backend import kernels
from distbal.errors import SameVertex, UnreachablePair
from distbal.graph import (
    DistanceOracle,
    Graph,
    all_pairs_distances,
    require_connected,
    vertex_edge_distance,
)


@dataclass(frozen=True)
class Witness:
    """A violation: the pair ``(g, h)``, the two values that should have
    been equal, and for edge-based checks the offending edge id."""

    g: int
    h: int
    left: int
    right: int
    edge: int | None = None

    def to_dict(self) -> dict:
        out = {"g": self.g, "h": self.h, "left": self.left, "right": self.right}
        if self.edge is not None:
            out["edge"] = self.edge
        return out


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Witness | None = None

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("a failed verdict needs a witness and a passing one none")

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


_OK = Verdict(True)


@dataclass(frozen=True)
class PairEdgeClassification:
    """Edges closer to ``g``, closer to ``h``, and equidistant."""

    g: int
    h: int
    k: int
    closer_to_g: frozenset[int]
    closer_to_h: frozenset[int]
    equidistant: frozenset[int]

    @property
    def m_gh(self) -> int:
        return len(self.closer_to_g)

    @property
    def m_hg(self) -> int:
        return len(self.closer_to_h)

    @property
    def m_0(self) -> int:
        return len(self.equidistant)

    @property
    def counts(self) -> tuple[int, int, int]:
        return self.m_gh, self.m_hg, self.m_0

    def swapped(self) -> "PairEdgeClassification":
        return PairEdgeClassification(
            self.h, self.g, self.k, self.closer_to_h, self.closer_to_g, self.equidistant
        )


@dataclass(frozen=True)
class PairVertexClassification:
    g: int
    h: int
    k: int
    closer_to_g: frozenset[int]
    closer_to_h: frozenset[int]
    equidistant: frozenset[int]

    @property
    def n_gh(self) -> int:
        return len(self.closer_to_g)

    @property
    def n_hg(self) -> int:
        return len(self.closer_to_h)

    @property
    def counts(self) -> tuple[int, int]:
        return self.n_gh, self.n_hg


@dataclass(frozen=True)
class EdgeDistancePartition:
    """Cells of ``E \\ {f}`` keyed by ``(d(e, g), d(e, h))`` for ``f = gh``."""

    base_edge: int
    cells: dict[tuple[int, int], frozenset[int]] = field(hash=False)

    def cell(self, i: int, j: int) -> frozenset[int]:
        return self.cells.get((i, j), frozenset())


def _check_pair(G: Graph, oracle: DistanceOracle, g: int, h: int) -> int:
    G.check_vertex(g)
    G.check_vertex(h)
    if g == h:
        raise SameVertex(f"pair ({g}, {h}) uses the same vertex twice")
    k = oracle(g, h)
    if not isinstance(k, int):
        raise UnreachablePair(f"vertices {g} and {h} lie in different components")
    return k


def classify_edges_for_pair(
    G: Graph, oracle: DistanceOracle | None, g: int, h: int
) -> PairEdgeClassification:
    oracle = oracle or all_pairs_distances(G)
    k = _check_pair(G, oracle, g, h)
    sides: tuple[list[int], list[int], list[int]] = ([], [], [])
    for f in range(G.m):
        dg = vertex_edge_distance(G, oracle, g, f)
        dh = vertex_edge_distance(G, oracle, h, f)
        # an unreachable edge is equidistant (both infinite)
        if not isinstance(dg, int):
            side = 1 if isinstance(dh, int) else 2
        elif not isinstance(dh, int):
            side = 0
        else:
            side = 0 if dg < dh else 1 if dh < dg else 2
        sides[side].append(f)
    return PairEdgeClassification(g, h, k, *(frozenset(s) for s in sides))


def classify_vertices_for_pair(
    G: Graph, oracle: DistanceOracle | None, g: int, h: int
) -> PairVertexClassification:
    oracle = oracle or all_pairs_distances(G)
    k = _check_pair(G, oracle, g, h)
    big = G.n + 1
    dg = np.where(oracle.matrix[g] < 0, big, oracle.matrix[g])
    dh = np.where(oracle.matrix[h] < 0, big, oracle.matrix[h])
    return PairVertexClassification(
        g,
        h,
        k,
        frozenset(np.flatnonzero(dg < dh).tolist()),
        frozenset(np.flatnonzero(dh < dg).tolist()),
        frozenset(np.flatnonzero(dg == dh).tolist()),
    )


def _first_mismatch(pairs: np.ndarray, counts: np.ndarray, edge_ids=None) -> Verdict:
    bad = np.flatnonzero(counts[:, 0] != counts[:, 1])
    if len(bad) == 0:
        return _OK
    i = int(bad[0])
    edge = None if edge_ids is None else int(edge_ids[i])
    return Verdict(
        False,
        Witness(int(pairs[i, 0]), int(pairs[i, 1]), int(counts[i, 0]), int(counts[i, 1]), edge),
    )


def pair_edge_counts(G: Graph, oracle: DistanceOracle, pairs: np.ndarray) -> np.ndarray:
    """``(m_gh, m_hg, m_0)`` rows for each ``(g, h)`` row of ``pairs``."""
    eu, ev = G.edge_arrays
    pairs = np.asarray(pairs, dtype=np.int32).reshape(-1, 2)
    return kernels.pair_edge_counts(
        oracle.matrix,
        eu,
        ev,
        np.ascontiguousarray(pairs[:, 0]),
        np.ascontiguousarray(pairs[:, 1]),
    )


def pair_vertex_counts(oracle: DistanceOracle, pairs: np.ndarray) -> np.ndarray:
    pairs = np.asarray(pairs, dtype=np.int32).reshape(-1, 2)
    return kernels.pair_vertex_counts(
        oracle.matrix, np.ascontiguousarray(pairs[:, 0]), np.ascontiguousarray(pairs[:, 1])
    )


def is_k_edge_distance_balanced(G: Graph, k: int, oracle: DistanceOracle | None = None) -> Verdict:
    """Every pair at distance exactly ``k`` has as many edges closer to
    one end as to the other. ``k = 1`` is plain edge distance-balance."""
    if k < 1:
        raise ValueError("k must be positive")
    oracle = require_connected(G, oracle)
    pairs = oracle.pairs_at_distance(k)
    return _first_mismatch(pairs, pair_edge_counts(G, oracle, pairs))


def is_k_distance_balanced(G: Graph, k: int, oracle: DistanceOracle | None = None) -> Verdict:
    if k < 1:
        raise ValueError("k must be positive")
    oracle = require_connected(G, oracle)
    pairs = oracle.pairs_at_distance(k)
    return _first_mismatch(pairs, pair_vertex_counts(oracle, pairs))


def _edge_pairs(G: Graph) -> np.ndarray:
    eu, ev = G.edge_arrays
    return np.stack([eu, ev], axis=1)


def is_edge_distance_balanced(G: Graph, oracle: DistanceOracle | None = None) -> Verdict:
    """Per-edge equality ``m_g(f) = m_h(f)`` for every edge ``f = gh``.

    The witness names the edge id; its own edge counts as equidistant.
    """
    oracle = require_connected(G, oracle)
    pairs = _edge_pairs(G)
    return _first_mismatch(pairs, pair_edge_counts(G, oracle, pairs), range(G.m))


def is_distance_balanced(G: Graph, oracle: DistanceOracle | None = None) -> Verdict:
    oracle = require_connected(G, oracle)
    pairs = _edge_pairs(G)
    return _first_mismatch(pairs, pair_vertex_counts(oracle, pairs), range(G.m))


def edge_gammas(G: Graph, oracle: DistanceOracle | None = None) -> list[int] | None:
    """The common value ``m_g(f) = m_h(f)`` per edge, or ``None`` if not EDB."""
    oracle = require_connected(G, oracle)
    counts = pair_edge_counts(G, oracle, _edge_pairs(G))
    if (counts[:, 0] != counts[:, 1]).any():
        return None
    return counts[:, 0].tolist()


def total_distances(G: Graph, oracle: DistanceOracle | None = None) -> np.ndarray:
    """Vector of ``D(g) = sum_f d(g, f)`` over all vertices."""
    oracle = require_connected(G, oracle)
    eu, ev = G.edge_arrays
    return kernels.total_distances(oracle.matrix, eu, ev)


def total_distance(G: Graph, oracle: DistanceOracle | None, g: int) -> int:
    G.check_vertex(g)
    oracle = require_connected(G, oracle)
    eu, ev = G.edge_arrays
    row = oracle.matrix[g]
    return int(np.minimum(row[eu], row[ev]).sum())


def is_total_distance_balanced(
    G: Graph, k: int, oracle: DistanceOracle | None = None, totals=None
) -> Verdict:
    """``D(g) = D(h)`` for every pair at distance ``k``."""
    oracle = require_connected(G, oracle)
    if totals is None:
        totals = total_distances(G, oracle)
    pairs = oracle.pairs_at_distance(k)
    counts = np.stack([totals[pairs[:, 0]], totals[pairs[:, 1]]], axis=1).reshape(-1, 2)
    return _first_mismatch(pairs, counts)


def edge_distance_partition(G: Graph, oracle: DistanceOracle | None, f: int) -> EdgeDistancePartition:
    G.check_edge(f)
    oracle = oracle or all_pairs_distances(G)
    g, h = G.edges[f]
    cells: dict[tuple[int, int], set[int]] = {}
    for e in range(G.m):
        if e == f:
            continue
        i = vertex_edge_distance(G, oracle, g, e)
        j = vertex_edge_distance(G, oracle, h, e)
        if isinstance(i, int):
            assert abs(i - j) <= 1 and (i, j) != (0, 0), (e, i, j)
        cells.setdefault((i, j), set()).add(e)
    return EdgeDistancePartition(f, {key: frozenset(v) for key, v in sorted(cells.items(), key=str)})


def _avoiding_reach(G: Graph, dist_h: np.ndarray, h: int, g: int) -> list[bool]:
    """``ok[u]``: some shortest ``u``-``h`` path misses ``g``.

    Dynamic program over the BFS-parent DAG rooted at ``h``.
    """
    order = sorted(range(G.n), key=lambda u: dist_h[u])
    ok = [False] * G.n
    for u in order:
        if u == g:
            continue
        du = dist_h[u]
        if du == 0:
            ok[u] = True
            continue
        ok[u] = any(ok[p] for p in G.neighbors[u] if dist_h[p] == du - 1)
    return ok


DELTA_READINGS = ("exists", "every")


def has_delta_property(
    G: Graph, n: int, oracle: DistanceOracle | None = None, reading: str = "exists"
) -> Verdict:
    """For every ordered pair ``(g, h)`` at distance ``n`` and every edge
    ``f`` closer to ``g``: a shortest path from ``f`` to ``h`` does not
    contain a shortest ``g``-``h`` path.

    ``reading="exists"`` asks for at least one such path per ``(g, h, f)``;
    ``reading="every"`` demands that no shortest ``f``-``h`` path contains one.
    A shortest path ending at ``h`` contains a ``g``-``h`` geodesic iff it
    passes through ``g``, so both reduce to questions about the geodesic
    DAG of ``h``. The witness carries ``(d(f, g), d(f, h))``.
    """
    if reading not in DELTA_READINGS:
        raise ValueError(f"reading must be one of {DELTA_READINGS}")
    oracle = require_connected(G, oracle)
    D = oracle.matrix
    eu, ev = G.edge_arrays
    for g in range(G.n):
        dg = np.minimum(D[g, eu], D[g, ev])
        for h in np.flatnonzero(D[g] == n).tolist():
            dh = np.minimum(D[h, eu], D[h, ev])
            closer = np.flatnonzero(dg < dh)
            if len(closer) == 0:
                continue
            if reading == "exists":
                ok = _avoiding_reach(G, D[h], h, g)
            else:
                # no realizing endpoint may have a geodesic to h through g
                ok = (D[:, g] + n != D[:, h]).tolist()
            for f in closer.tolist():
                a, b = G.edges[f]
                target = dh[f]
                ends = [x for x in (a, b) if D[h, x] == target]
                good = any(ok[x] for x in ends) if reading == "exists" else all(ok[x] for x in ends)
                if not good:
                    return Verdict(False, Witness(g, h, int(dg[f]), int(target), f))
    return _OK


def is_locally_regular(G: Graph, n: int, oracle: DistanceOracle | None = None) -> Verdict:
    """All pairs at distance ``n`` have equal degrees."""
    oracle = require_connected(G, oracle)
    pairs = oracle.pairs_at_distance(n)
    deg = np.array(G.degrees(), dtype=np.int64)
    counts = np.stack([deg[pairs[:, 0]], deg[pairs[:, 1]]], axis=1).reshape(-1, 2)
    return _first_mismatch(pairs, counts)


@dataclass
class BalanceReport:
    """All balance flags for one connected graph.

    ``k_edb``, ``k_db``, ``locally_regular`` and ``delta`` are keyed by the
    pair distance. ``gammas`` holds the per-edge common value when the
    graph is edge distance-balanced.
    """

    n: int
    m: int
    k_edb: dict[int, Verdict]
    k_db: dict[int, Verdict]
    edb: Verdict
    db: Verdict
    locally_regular: dict[int, Verdict]
    delta: dict[int, Verdict]
    total_distances: list[int]
    gammas: list[int] | None = None
    graph_id: str | None = None

    @property
    def is_2_edb(self) -> bool:
        return bool(self.k_edb[2])

    @property
    def is_3_edb(self) -> bool:
        return bool(self.k_edb[3])

    @property
    def is_2_db(self) -> bool:
        return bool(self.k_db[2])

    @property
    def is_edb(self) -> bool:
        return bool(self.edb)

    @property
    def is_db(self) -> bool:
        return bool(self.db)

    def flags(self) -> dict[str, Verdict]:
        out = {"edb": self.edb, "db": self.db}
        for k in sorted(self.k_edb):
            out[f"{k}_edb"] = self.k_edb[k]
            out[f"{k}_db"] = self.k_db[k]
            out[f"locally_regular_{k}"] = self.locally_regular[k]
            out[f"delta_{k}"] = self.delta[k]
        return out


def full_balance_report(
    G: Graph,
    ks=(2, 3),
    oracle: DistanceOracle | None = None,
    graph_id: str | None = None,
    delta_reading: str = "exists",
) -> BalanceReport:
    oracle = require_connected(G, oracle)
    ks = sorted(set(ks) | {2, 3})
    edb = is_edge_distance_balanced(G, oracle)
    return BalanceReport(
        n=G.n,
        m=G.m,
        k_edb={k: is_k_edge_distance_balanced(G, k, oracle) for k in ks},
        k_db={k: is_k_distance_balanced(G, k, oracle) for k in ks},
        edb=edb,
        db=is_distance_balanced(G, oracle),
        locally_regular={k: is_locally_regular(G, k, oracle) for k in ks},
        delta={k: has_delta_property(G, k, oracle, delta_reading) for k in ks},
        total_distances=total_distances(G, oracle).tolist(),
        gammas=edge_gammas(G, oracle) if edb else None,
        graph_id=graph_id,
    )
