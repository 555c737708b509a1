"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 5]

Each row reports the best-of-N wall time per backend and the speedup. The
outputs of both backends are compared first; a mismatch aborts the run.
"""

import argparse
import itertools
import sys
import time

import numpy as np

from gridweave._kernels import available_backends, load_backend
from gridweave.counting import grid_points
from gridweave.drawing import random_embedding
from gridweave.graph import generate_family


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    rng = np.random.default_rng(0)
    g = generate_family("random-regular", 400, seed=0, d=3)
    pts = random_embedding(g.n, 12, rng).as_array()  # dense enough to produce conflicts
    edges = np.array(g.edges, dtype=np.int64)
    yield "find_conflicts n=400 m=12", lambda k: k.find_conflicts(pts, edges)

    sub = edges[:200]
    ea, eb = pts[sub[:, 0]], pts[sub[:, 1]]
    cands = random_embedding(300, 40, rng).as_array()
    nbrs = pts[:3]

    def scan(k):
        return [bool(k.candidate_ok(c, nbrs, pts, ea, eb)) for c in cands]
    yield "candidate_ok x300", scan

    seg = [tuple(int(x) for x in p) for p in rng.integers(0, 50, size=(4000, 3))]
    quads = [seg[i:i + 4] for i in range(0, len(seg), 4)]

    def segs(k):
        return [k.segment_conflict(*q) for q in quads if q[0] != q[1] and q[2] != q[3]]
    yield "segment_conflict x1000", segs

    P3 = grid_points(3, 6)
    yield "collinear histogram [6]^3", lambda k: list(np.asarray(k.collinear_extension_histogram(P3)))
    P4 = grid_points(3, 5)
    yield "coplanar origin triples [5]^3", lambda k: k.coplanar_origin_triples(P4)
    P5 = grid_points(3, 4)
    yield "coplanar 4-sets [4]^3", lambda k: k.coplanar_4sets(P5)


def normalize(x):
    if isinstance(x, (list, tuple)):
        return [normalize(v) for v in x]
    if isinstance(x, np.ndarray):
        return normalize(x.tolist())
    if isinstance(x, (np.integer,)):
        return int(x)
    return x


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    names = available_backends()
    if "cython" not in names:
        print("compiled backend not built; only timing the pure-Python kernels", file=sys.stderr)
    backends = {n: load_backend(n) for n in names}
    header = f"{'workload':32s}" + "".join(f"{n:>12s}" for n in names) + ("   speedup" if len(names) > 1 else "")
    print(header)
    for label, fn in workloads():
        results = [normalize(fn(k)) for k in backends.values()]
        for a, b in itertools.combinations(results, 2):
            if sorted(map(repr, a)) != sorted(map(repr, b)) if isinstance(a, list) else a != b:
                sys.exit(f"{label}: backends disagree")
        times = {n: best_of(lambda k=k: fn(k), args.repeat) for n, k in backends.items()}
        row = f"{label:32s}" + "".join(f"{times[n] * 1e3:10.2f}ms" for n in names)
        if len(names) > 1:
            row += f"{times['python'] / times['cython']:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
