# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: all-pairs BFS and per-pair edge/vertex counting.

Distances use -1 for unreachable. The counting kernels assume every
vertex involved is reachable from both members of each pair.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def bfs_all_pairs(int n, const int[::1] indptr, const int[::1] indices):
    cdef cnp.ndarray[cnp.int32_t, ndim=2] out = np.full((n, n), -1, dtype=np.int32)
    cdef int[:, ::1] dist = out
    cdef int[::1] queue = np.empty(max(n, 1), dtype=np.int32)
    cdef int s, head, tail, u, v, j, du
    for s in range(n):
        dist[s, s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[s, u] + 1
            for j in range(indptr[u], indptr[u + 1]):
                v = indices[j]
                if dist[s, v] < 0:
                    dist[s, v] = du
                    queue[tail] = v
                    tail += 1
    return out


cdef cnp.ndarray _edge_table_u8(const int[:, ::1] dist, const int[::1] eu, const int[::1] ev):
    """``table[x, e] = d(x, e)`` as bytes; caller checks all distances fit."""
    cdef Py_ssize_t n = dist.shape[0], m = eu.shape[0], x, e
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] out = np.empty((n, m), dtype=np.uint8)
    cdef unsigned char[:, ::1] t = out
    cdef int a, b
    for x in range(n):
        for e in range(m):
            a = dist[x, eu[e]]
            b = dist[x, ev[e]]
            t[x, e] = a if a < b else b
    return out


def pair_edge_counts(const int[:, ::1] dist, const int[::1] eu, const int[::1] ev,
                     const int[::1] gs, const int[::1] hs):
    cdef Py_ssize_t p = gs.shape[0], m = eu.shape[0], i, e
    cdef cnp.ndarray[cnp.int64_t, ndim=2] out = np.zeros((p, 3), dtype=np.int64)
    cdef long long[:, ::1] res = out
    cdef const int[::1] dg
    cdef const int[::1] dh
    cdef const unsigned char[:, ::1] t
    cdef const unsigned char[::1] tg
    cdef const unsigned char[::1] th
    cdef int a, b, x, y
    cdef long long cg, ch
    if p == 0 or m == 0:
        for i in range(p):
            res[i, 2] = m
        return out
    arr = np.asarray(dist)
    if arr.min() >= 0 and arr.max() < 255:
        # contiguous byte rows: the inner loop vectorizes
        t = _edge_table_u8(dist, eu, ev)
        for i in range(p):
            tg = t[gs[i]]
            th = t[hs[i]]
            cg = 0
            ch = 0
            for e in range(m):
                cg += tg[e] < th[e]
                ch += th[e] < tg[e]
            res[i, 0] = cg
            res[i, 1] = ch
            res[i, 2] = m - cg - ch
        return out
    for i in range(p):
        dg = dist[gs[i]]
        dh = dist[hs[i]]
        cg = 0
        ch = 0
        for e in range(m):
            x = dg[eu[e]]
            y = dg[ev[e]]
            a = x if x < y else y
            x = dh[eu[e]]
            y = dh[ev[e]]
            b = x if x < y else y
            cg += a < b
            ch += b < a
        res[i, 0] = cg
        res[i, 1] = ch
        res[i, 2] = m - cg - ch
    return out


def pair_vertex_counts(const int[:, ::1] dist, const int[::1] gs, const int[::1] hs):
    cdef Py_ssize_t p = gs.shape[0], n = dist.shape[0], i, v
    cdef cnp.ndarray[cnp.int64_t, ndim=2] out = np.zeros((p, 3), dtype=np.int64)
    cdef long long[:, ::1] res = out
    cdef const int[::1] dg
    cdef const int[::1] dh
    cdef long long cg, ch
    for i in range(p):
        dg = dist[gs[i]]
        dh = dist[hs[i]]
        cg = 0
        ch = 0
        for v in range(n):
            cg += dg[v] < dh[v]
            ch += dh[v] < dg[v]
        res[i, 0] = cg
        res[i, 1] = ch
        res[i, 2] = n - cg - ch
    return out


def total_distances(const int[:, ::1] dist, const int[::1] eu, const int[::1] ev):
    cdef Py_ssize_t n = dist.shape[0], m = eu.shape[0], g, e
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out = np.zeros(n, dtype=np.int64)
    cdef long long[::1] res = out
    cdef const int[::1] dg
    cdef int x, y
    cdef long long acc
    for g in range(n):
        dg = dist[g]
        acc = 0
        for e in range(m):
            x = dg[eu[e]]
            y = dg[ev[e]]
            acc += x if x < y else y
        res[g] = acc
    return out
