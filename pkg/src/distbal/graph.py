"""Immutable simple graphs, BFS distance tables and structural analyses."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from distbal._backend import kernels
from distbal.errors import (
    Disconnected,
    DuplicateEdge,
    EdgeOutOfRange,
    LoopEdge,
    VertexOutOfRange,
)


class _Unreachable:
    """Distance between vertices in different components."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()


@dataclass(frozen=True, eq=False)
class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    ``edges[i]`` is the edge with id ``i``, stored as ``(u, v)`` with
    ``u < v``. Edge ids follow insertion order. Use :func:`build_graph`
    rather than the constructor; it validates the edge list.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    _index: dict = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the ``(neighbor, edge_id)`` pairs in edge-id order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(v for v, _ in a) for a in self.adjacency)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` arrays (int32) for the compiled kernels."""
        deg = np.array([len(a) for a in self.adjacency], dtype=np.int64)
        indptr = np.zeros(self.n + 1, dtype=np.int32)
        np.cumsum(deg, out=indptr[1:])
        indices = np.fromiter(
            (v for a in self.adjacency for v, _ in a), dtype=np.int32, count=int(deg.sum())
        )
        return indptr, indices

    @cached_property
    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        if not self.edges:
            empty = np.zeros(0, dtype=np.int32)
            return empty, empty
        arr = np.array(self.edges, dtype=np.int32)
        return np.ascontiguousarray(arr[:, 0]), np.ascontiguousarray(arr[:, 1])

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def edge_id(self, u: int, v: int) -> int:
        """Id of edge ``uv``; raises ``KeyError`` if absent."""
        return self._index[(min(u, v), max(u, v))]

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{self.n - 1}")

    def check_edge(self, f: int) -> None:
        if not 0 <= f < self.m:
            raise EdgeOutOfRange(f"edge id {f} not in 0..{self.m - 1}")

    def same_as(self, other: "Graph") -> bool:
        """Same vertex count and same edge set (ignoring edge ids)."""
        return self.n == other.n and set(self.edges) == set(other.edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(vertex_count: int, edge_pairs: Iterable[Sequence[int]]) -> Graph:
    """Validate ``edge_pairs`` and return the graph; edge ids follow input order."""
    if vertex_count < 0:
        raise ValueError("vertex_count must be non-negative")
    edges = []
    index = {}
    for pair in edge_pairs:
        u, v = (int(x) for x in pair)
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise VertexOutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}: ({u}, {v})")
        key = (u, v) if u < v else (v, u)
        if key in index:
            raise DuplicateEdge(f"edge ({u}, {v}) repeated")
        index[key] = len(edges)
        edges.append(key)
    return Graph(vertex_count, tuple(edges), index)


class DistanceOracle:
    """All-pairs vertex distances of a graph, one BFS per source.

    ``oracle(u, v)`` returns an ``int`` or :data:`UNREACHABLE`. The raw
    table (``-1`` for unreachable) is exposed read-only as ``matrix``.
    """

    __slots__ = ("matrix",)

    def __init__(self, matrix: np.ndarray):
        matrix = np.ascontiguousarray(matrix, dtype=np.int32)
        matrix.setflags(write=False)
        self.matrix = matrix

    def __call__(self, u: int, v: int):
        d = int(self.matrix[u, v])
        return UNREACHABLE if d < 0 else d

    distance = __call__

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def connected(self) -> bool:
        return bool((self.matrix >= 0).all())

    @property
    def diameter(self):
        """Largest distance; :data:`UNREACHABLE` for disconnected graphs."""
        if self.n == 0:
            return 0
        if not self.connected:
            return UNREACHABLE
        return int(self.matrix.max())

    def pairs_at_distance(self, k: int) -> np.ndarray:
        """Unordered pairs ``(g, h)``, ``g < h``, at distance exactly ``k``, sorted."""
        g, h = np.nonzero(np.triu(self.matrix == k, 1))
        return np.stack([g, h], axis=1).astype(np.int32)


def all_pairs_distances(G: Graph) -> DistanceOracle:
    indptr, indices = G.csr
    return DistanceOracle(kernels.bfs_all_pairs(G.n, indptr, indices))


def _oracle(G: Graph, oracle: DistanceOracle | None) -> DistanceOracle:
    return all_pairs_distances(G) if oracle is None else oracle


def require_connected(G: Graph, oracle: DistanceOracle | None = None) -> DistanceOracle:
    """Return the oracle, raising :class:`Disconnected` if ``G`` has 2+ components."""
    oracle = _oracle(G, oracle)
    if not oracle.connected:
        raise Disconnected(f"{G!r} is not connected")
    return oracle


def vertex_edge_distance(G: Graph, oracle: DistanceOracle | None, g: int, f: int):
    G.check_vertex(g)
    G.check_edge(f)
    oracle = _oracle(G, oracle)
    u, v = G.edges[f]
    ds = [d for d in (oracle(g, u), oracle(g, v)) if d is not UNREACHABLE]
    return min(ds) if ds else UNREACHABLE


def edge_edge_distance(G: Graph, oracle: DistanceOracle | None, f: int, f2: int):
    """Minimum vertex distance over the four endpoint combinations."""
    G.check_edge(f)
    G.check_edge(f2)
    oracle = _oracle(G, oracle)
    ds = [
        d
        for a in G.edges[f]
        for b in G.edges[f2]
        if (d := oracle(a, b)) is not UNREACHABLE
    ]
    return min(ds) if ds else UNREACHABLE


def components(G: Graph) -> list[list[int]]:
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in G.neighbors[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def is_connected(G: Graph) -> bool:
    # the empty graph counts as connected
    return len(components(G)) <= 1


def two_coloring(G: Graph) -> list[int] | None:
    """BFS 2-coloring, or ``None`` if an odd cycle exists."""
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in G.neighbors[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    return color


def is_bipartite(G: Graph) -> bool:
    return two_coloring(G) is not None


def biconnected_blocks(G: Graph) -> list[list[int]]:
    """Edge-id lists of the blocks (biconnected components), iterative Tarjan."""
    disc = [-1] * G.n
    low = [0] * G.n
    timer = 0
    blocks = []
    edge_stack: list[int] = []
    for root in range(G.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, parent edge id, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            u, pe, i = stack[-1]
            adj = G.adjacency[u]
            if i < len(adj):
                stack[-1] = (u, pe, i + 1)
                v, eid = adj[i]
                if eid == pe:
                    continue
                if disc[v] < 0:
                    edge_stack.append(eid)
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, eid, 0))
                elif disc[v] < disc[u]:
                    edge_stack.append(eid)
                    low[u] = min(low[u], disc[v])
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[u])
            if low[u] >= disc[p]:
                block = []
                while True:
                    eid = edge_stack.pop()
                    block.append(eid)
                    if eid == pe:
                        break
                blocks.append(sorted(block))
    return blocks


def has_even_cycle(G: Graph) -> bool:
    """True iff some block is neither a bridge nor an odd cycle.

    A 2-connected graph that is not a cycle contains a theta subgraph,
    and two of a theta's three paths have equal parity.
    """
    for block in biconnected_blocks(G):
        if len(block) == 1:
            continue
        verts = {x for eid in block for x in G.edges[eid]}
        if len(verts) != len(block) or len(block) % 2 == 0:
            return True
    return False


def pendant_vertices(G: Graph) -> set[int]:
    return {v for v in range(G.n) if G.degree(v) == 1}
