"""Compare the compiled and numpy kernels on random connected graphs.

    python benchmarks/bench_kernels.py --sizes 250:1000 1000:4000 2000:8000
"""

import argparse
import random
import time

import numpy as np

from distbal import _pykernels
from distbal.graph import build_graph

try:
    from distbal import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def random_connected(n, m, seed):
    rng = random.Random(seed)
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    while len(edges) < m:
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v)))
    return build_graph(n, sorted(edges))


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def bench(G, mod, repeat):
    indptr, indices = G.csr
    eu, ev = G.edge_arrays
    t_bfs, dist = best_of(lambda: mod.bfs_all_pairs(G.n, indptr, indices), repeat)
    gs, hs = np.nonzero(np.triu(dist == 2))
    gs, hs = gs.astype(np.int32), hs.astype(np.int32)
    t_edges, counts = best_of(lambda: mod.pair_edge_counts(dist, eu, ev, gs, hs), repeat)
    t_verts, _ = best_of(lambda: mod.pair_vertex_counts(dist, gs, hs), repeat)
    t_tot, _ = best_of(lambda: mod.total_distances(dist, eu, ev), repeat)
    return {"bfs": t_bfs, "edge_counts": t_edges, "vertex_counts": t_verts, "totals": t_tot}, len(gs), counts


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", nargs="+", default=["250:1000", "1000:4000", "2000:8000"], help="n:m pairs")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    backends = [("numpy", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    if _ckernels is None:
        print("compiled kernels not built; timing the numpy fallback only")
    header = f"{'n':>6} {'m':>6} {'pairs':>8} {'backend':>7} {'bfs':>8} {'edges':>8} {'verts':>8} {'totals':>8}"
    print(header)
    for spec in args.sizes:
        n, m = (int(x) for x in spec.split(":"))
        G = random_connected(n, m, args.seed)
        ref = None
        for name, mod in backends:
            t, p, counts = bench(G, mod, args.repeat)
            if ref is None:
                ref = counts
            elif not np.array_equal(ref, counts):
                raise SystemExit(f"backends disagree on n={n} m={m}")
            print(
                f"{n:>6} {m:>6} {p:>8} {name:>7} "
                + " ".join(f"{t[k]:>8.3f}" for k in ("bfs", "edge_counts", "vertex_counts", "totals"))
            )


if __name__ == "__main__":
    main()
