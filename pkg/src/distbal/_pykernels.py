"""Pure-Python (numpy) versions of the compiled kernels.

Same signatures and return values as ``_ckernels``; used when the
extension is not built or when ``DISTBAL_BACKEND=python`` is set.
"""

import numpy as np

# rows of pairs processed per vectorized step; bounds peak memory
_CHUNK = 256


def bfs_all_pairs(n, indptr, indices):
    """Level-synchronous BFS from every source at once."""
    dist = np.full((n, n), -1, dtype=np.int32)
    if n == 0:
        return dist
    indptr = np.asarray(indptr, dtype=np.int64)
    indices = np.asarray(indices, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    frontier = np.eye(n, dtype=bool)
    visited = frontier.copy()
    has_nbrs = indptr[1:] > indptr[:-1]
    starts = indptr[:-1][has_nbrs]
    level = 0
    while frontier.any():
        level += 1
        reached = np.zeros((n, n), dtype=bool)
        if len(indices):
            # column v of the result is OR over frontier[:, N(v)]
            reached[:, has_nbrs] = np.logical_or.reduceat(frontier[:, indices], starts, axis=1)
        frontier = reached & ~visited
        visited |= frontier
        dist[frontier] = level
    return dist


def _vertex_edge_table(dist, eu, ev, compact=False):
    table = np.minimum(dist[:, eu], dist[:, ev])
    if compact and table.size and table.min() >= 0 and table.max() < 255:
        return table.astype(np.uint8)
    return table


def _count(a, b):
    cg = (a < b).sum(axis=1)
    ch = (b < a).sum(axis=1)
    return np.stack([cg, ch, a.shape[1] - cg - ch], axis=1)


def pair_edge_counts(dist, eu, ev, gs, hs):
    gs = np.asarray(gs)
    hs = np.asarray(hs)
    out = np.zeros((len(gs), 3), dtype=np.int64)
    if len(gs) == 0:
        return out
    table = _vertex_edge_table(np.asarray(dist), np.asarray(eu), np.asarray(ev), compact=True)
    for lo in range(0, len(gs), _CHUNK):
        hi = lo + _CHUNK
        out[lo:hi] = _count(table[gs[lo:hi]], table[hs[lo:hi]])
    return out


def pair_vertex_counts(dist, gs, hs):
    dist = np.asarray(dist)
    gs = np.asarray(gs)
    hs = np.asarray(hs)
    out = np.zeros((len(gs), 3), dtype=np.int64)
    for lo in range(0, len(gs), _CHUNK):
        hi = lo + _CHUNK
        out[lo:hi] = _count(dist[gs[lo:hi]], dist[hs[lo:hi]])
    return out


def total_distances(dist, eu, ev):
    dist = np.asarray(dist)
    if len(eu) == 0:
        return np.zeros(dist.shape[0], dtype=np.int64)
    return _vertex_edge_table(dist, np.asarray(eu), np.asarray(ev)).sum(axis=1, dtype=np.int64)
