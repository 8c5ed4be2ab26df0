"""Small-graph corpora: labeled enumeration and isomorphism-deduplicated classes.

Canonical labeling is colour refinement plus individualization with
exhaustive branching over the first non-singleton cell. Twin vertices
(same neighbourhood apart from each other) are interchangeable, so only
one per twin class is branched on. Exact, and fast enough for ``n <= 8``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

from distbal.errors import BoundExceeded
from distbal.graph import Graph, build_graph, is_connected

MAX_N = 8


def _refine(adj: list[int], colors: list[int]) -> list[int]:
    """Stable colour refinement; colours are ranks of invariant signatures."""
    n = len(adj)
    while True:
        sigs = []
        for v in range(n):
            nb = adj[v]
            sigs.append((colors[v], tuple(sorted(colors[u] for u in range(n) if nb >> u & 1))))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _code(adj: list[int], order: list[int]) -> int:
    """graph6-order bit string of the graph relabeled so ``order[i]`` gets label ``i``."""
    n = len(order)
    code = 0
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def canonical_order(G: Graph) -> list[int]:
    """Vertices listed in canonical order (canonical label ``i`` is ``order[i]``)."""
    n = G.n
    adj = [0] * n
    for u, v in G.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    best: list = [None, None]

    def search(colors: list[int]) -> None:
        colors = _refine(adj, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            order = sorted(range(n), key=colors.__getitem__)
            code = _code(adj, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        tried: list[int] = []
        for v in target:
            if any((adj[v] & ~(1 << w)) == (adj[w] & ~(1 << v)) for w in tried):
                continue
            tried.append(v)
            c = colors[v]
            search([2 * x + (x >= c) - (u == v) for u, x in enumerate(colors)])

    search([0] * n)
    return best[1] if n else []


def canonical_form(G: Graph) -> Graph:
    """Isomorphic copy of ``G`` that is identical for all isomorphic inputs."""
    order = canonical_order(G)
    label = {v: i for i, v in enumerate(order)}
    return build_graph(G.n, sorted(tuple(sorted((label[u], label[v]))) for u, v in G.edges))


def canonical_key(G: Graph) -> tuple[int, int]:
    if G.n == 0:
        return (0, 0)
    n = G.n
    adj = [0] * n
    for u, v in G.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return (n, _code(adj, canonical_order(G)))


def _check_bound(n: int, limit: int) -> None:
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > limit:
        raise BoundExceeded(f"n = {n} exceeds the enumeration limit {limit}")


def labeled_graphs(n: int, connected_only: bool = False, limit: int = MAX_N) -> Iterator[Graph]:
    """Every graph on vertex set ``0..n-1``, in bitmask order."""
    _check_bound(n, limit)
    slots = list(combinations(range(n), 2))
    for mask in range(1 << len(slots)):
        G = build_graph(n, [slots[i] for i in range(len(slots)) if mask >> i & 1])
        if not connected_only or is_connected(G):
            yield G


@lru_cache(maxsize=None)
def _classes(n: int, connected_only: bool) -> tuple[Graph, ...]:
    if n == 1:
        return (build_graph(1, []),)
    # every connected graph has a non-cut vertex, so connected classes on n
    # vertices all extend a connected class on n - 1
    seen: dict[tuple[int, int], Graph] = {}
    for H in _classes(n - 1, connected_only):
        old = n - 1
        for mask in range(1 if connected_only else 0, 1 << old):
            edges = list(H.edges) + [(u, old) for u in range(old) if mask >> u & 1]
            G = build_graph(n, edges)
            key = canonical_key(G)
            if key not in seen:
                seen[key] = G
    return tuple(canonical_form(seen[k]) for k in sorted(seen))


def enumerate_graphs(
    n: int, connected_only: bool = True, dedup_isomorphic: bool = True, limit: int = MAX_N
) -> Iterator[Graph]:
    """Graphs on exactly ``n`` vertices.

    With ``dedup_isomorphic`` one canonical representative per
    isomorphism class is produced, in canonical-key order; otherwise all
    ``2^(n choose 2)`` labeled graphs are streamed.
    """
    _check_bound(n, limit)
    if not dedup_isomorphic:
        yield from labeled_graphs(n, connected_only, limit)
        return
    yield from _classes(n, connected_only)


def corpus(max_n: int, min_n: int = 1, connected_only: bool = True, limit: int = MAX_N) -> Iterator[Graph]:
    """Deduplicated graphs for ``n = min_n..max_n`` in order."""
    for n in range(min_n, max_n + 1):
        yield from enumerate_graphs(n, connected_only, True, limit)
