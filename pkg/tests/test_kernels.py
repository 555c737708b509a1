"""Both kernel backends against the oracles and against each other."""

import itertools
import random

import numpy as np
import pytest

from gridweave._kernels import available_backends, load_backend
from gridweave.counting import grid_points

from oracles import naive_conflicts, segment_contact_oracle


def random_segment_pairs(rng, count, lo=0, hi=10):
    out = []
    while len(out) < count:
        pts = [tuple(rng.randrange(lo, hi) for _ in range(3)) for _ in range(4)]
        if pts[0] != pts[1] and pts[2] != pts[3]:
            out.append(pts)
    return out


def test_segment_kernel_matches_oracle(kernels):
    rng = random.Random(11)
    # small coordinates make degenerate contacts common
    for pts in random_segment_pairs(rng, 5000, 0, 4):
        assert bool(kernels.segment_conflict(*pts)) == segment_contact_oracle(*pts), pts


def test_segment_kernel_near_coordinate_cap(kernels):
    rng = random.Random(3)
    lim = 2**20
    for _ in range(3000):
        a = [rng.randint(-lim, lim) for _ in range(3)]
        b = [rng.randint(-lim, lim) for _ in range(3)]
        g = rng.choice([2, 4, 6])
        # c is a lattice point on line ab when (b - a) is divisible by g
        b = [x + ((y - x) // g) * g for x, y in zip(a, b)]
        c = [x + (y - x) // g * rng.randint(-1, g + 1) for x, y in zip(a, b)]
        c = [max(-lim, min(lim, v)) for v in c]
        d = [rng.randint(-lim, lim) for _ in range(3)]
        if a == b or c == d:
            continue
        assert bool(kernels.segment_conflict(a, b, c, d)) == segment_contact_oracle(a, b, c, d)


def test_kernel_rejects_oversized_coordinates():
    if "cython" not in available_backends():
        pytest.skip("compiled backend not built")
    ck = load_backend("cython")
    with pytest.raises(ValueError):
        ck.segment_conflict((0, 0, 0), (2**20 + 1, 0, 0), (1, 1, 1), (2, 2, 2))


def test_find_conflicts_matches_naive(kernels):
    rng = random.Random(7)
    for _ in range(150):
        m = rng.randint(2, 4)
        n = rng.randint(2, min(9, m**3))
        pts = [tuple(p) for p in rng.sample(list(itertools.product(range(m), repeat=3)), n)]
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.4]
        got = kernels.find_conflicts(np.array(pts), np.array(edges, dtype=np.int64).reshape(-1, 2))
        assert sorted(tuple(int(x) for x in c) for c in got) == naive_conflicts(pts, edges)


def test_candidate_ok_agrees_with_full_scan(kernels):
    rng = random.Random(21)
    for _ in range(300):
        n = rng.randint(2, 8)
        pts = [tuple(p) for p in rng.sample(list(itertools.product(range(4), repeat=3)), n)]
        edges = [e for e in itertools.combinations(range(n - 1), 2) if rng.random() < 0.4]
        if naive_conflicts(pts, edges):
            continue
        # new vertex n-1 connects to a random subset of the earlier ones
        nbrs = [v for v in range(n - 1) if rng.random() < 0.5]
        all_edges = edges + [(v, n - 1) for v in nbrs]
        expected = not naive_conflicts(pts, all_edges)
        got = kernels.candidate_ok(
            np.array(pts[n - 1]),
            np.array([pts[v] for v in nbrs], dtype=np.int64).reshape(-1, 3),
            np.array(pts[: n - 1], dtype=np.int64).reshape(-1, 3),
            np.array([pts[a] for a, _ in edges], dtype=np.int64).reshape(-1, 3),
            np.array([pts[b] for _, b in edges], dtype=np.int64).reshape(-1, 3),
        )
        assert bool(got) == expected


@pytest.mark.parametrize("d,m", [(2, 1), (2, 2), (2, 4), (3, 3), (4, 2)])
def test_collinear_histogram_backends_agree(d, m):
    ref = None
    for name in available_backends():
        hist = np.trim_zeros(np.asarray(load_backend(name).collinear_extension_histogram(grid_points(d, m))), "b")
        if ref is None:
            ref = hist
        assert list(hist) == list(ref)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_coplanar_kernels_backends_agree(m):
    P = grid_points(3, m)
    vals = {(load_backend(b).coplanar_origin_triples(P), load_backend(b).coplanar_4sets(P))
            for b in available_backends()}
    assert len(vals) == 1
