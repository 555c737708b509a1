import itertools
import math
import random

import numpy as np
import pytest

from gridweave.drawing import DrawingParams, Embedding, draw_blowup_greedy, find_conflicts
from gridweave.geometry import ConflictKind
from gridweave.graph import Graph, generate_family
from gridweave.verify import MalformedDrawing, drawing_stats, verify_drawing


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_greedy_drawing_of_c6_is_valid():
    g = cycle(6)
    verdict = verify_drawing(g, draw_blowup_greedy(g, DrawingParams(seed=0)).embedding)
    assert verdict.valid and verdict.violations == []


def test_planted_vertex_on_edge():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    emb = Embedding.from_points(5, [(0, 0, 0), (4, 0, 0), (0, 3, 3)])
    assert verify_drawing(g, emb).valid
    g2 = Graph.from_edges(4, [(0, 1), (2, 3)])
    emb2 = Embedding.from_points(5, [(0, 0, 0), (4, 0, 0), (2, 0, 0), (0, 4, 4)])
    verdict = verify_drawing(g2, emb2)
    assert not verdict.valid
    kinds = [(r.kind, r.entities) for r in verdict.violations]
    assert (ConflictKind.VERTEX_IN_EDGE_INTERIOR, (2, (0, 1))) in kinds


def test_duplicate_point_is_malformed():
    g = Graph.from_edges(2, [])
    with pytest.raises(MalformedDrawing):
        verify_drawing(g, Embedding.from_points(3, [(1, 1, 1), (1, 1, 1)]))


@pytest.mark.parametrize("pts", [[(0, 0, 3)], [(-1, 0, 0)]])
def test_out_of_range_is_malformed(pts):
    with pytest.raises(MalformedDrawing):
        verify_drawing(Graph.from_edges(1, []), Embedding.from_points(3, pts))


def test_missing_vertex_is_malformed():
    with pytest.raises(MalformedDrawing):
        verify_drawing(Graph.from_edges(3, [(0, 1)]), Embedding.from_points(3, [(0, 0, 0), (1, 1, 1)]))


def test_stats_full_cube():
    emb = Embedding.from_points(2, list(itertools.product(range(2), repeat=3)))
    st = drawing_stats(emb, Graph.from_edges(8, []))
    assert st.volume == 8 and st.aspect_ratio == 1.0 and st.edge_bound_ok


def test_stats_long_box():
    emb = Embedding.from_points(4, [(0, 0, 0), (3, 1, 1)])
    assert drawing_stats(emb, Graph.from_edges(2, [(0, 1)])).aspect_ratio == 3.0


def test_stats_flat_and_single():
    flat = Embedding.from_points(4, [(0, 0, 0), (3, 1, 0)])
    assert math.isinf(drawing_stats(flat, Graph.from_edges(2, [])).aspect_ratio)
    one = Embedding.from_points(4, [(2, 2, 2)])
    st = drawing_stats(one, Graph.from_edges(1, []))
    assert st.aspect_ratio == 1.0 and st.max_abs_coordinate == 2


def test_verdict_dict_shape():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    emb = Embedding.from_points(3, [(0, 0, 0), (2, 2, 0), (0, 2, 0), (2, 0, 0)])
    d = verify_drawing(g, emb).to_dict()
    assert d["valid"] is False
    assert d["violations"] == [{"kind": ConflictKind.EDGE_INTERIOR_INTERSECTION.value,
                                "edges": [[0, 1], [2, 3]]}]
    assert d["stats"]["volume"] == 27


def fuzz_cases(seed, count):
    rng = random.Random(seed)
    for _ in range(count):
        m = rng.randint(2, 5)
        n = rng.randint(1, min(12, m**3))
        pairs = list(itertools.combinations(range(n), 2))
        g = Graph.from_edges(n, [e for e in pairs if rng.random() < rng.choice([0.15, 0.4])])
        pts = rng.sample(list(itertools.product(range(m), repeat=3)), n)
        yield g, Embedding.from_points(m, pts), rng


def test_verifier_agrees_with_engine():
    for g, emb, _ in fuzz_cases(8, 400):
        verdict = verify_drawing(g, emb)
        engine = find_conflicts(g, emb)
        assert verdict.valid == (engine == [])
        assert sorted(map(repr, verdict.violations)) == sorted(map(repr, engine))


def test_verdict_invariant_under_relabeling():
    for g, emb, rng in fuzz_cases(9, 150):
        perm = list(range(g.n))
        rng.shuffle(perm)
        g2 = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])
        pts = [None] * g.n
        for v in range(g.n):
            pts[perm[v]] = emb.points[v]
        v1, v2 = verify_drawing(g, emb), verify_drawing(g2, Embedding.from_points(emb.m, pts))
        assert v1.valid == v2.valid and len(v1.violations) == len(v2.violations)


def test_edge_bound_holds_on_native_output():
    g = generate_family("random-regular", 60, seed=4)
    res = draw_blowup_greedy(g, DrawingParams(seed=4))
    st = drawing_stats(res.embedding, g)
    assert st.edge_bound_ok and st.edge_count == 90 and st.volume == res.m**3


def test_points_accept_numpy_rows():
    emb = Embedding.from_points(3, np.array([[0, 0, 0], [1, 2, 0]]))
    assert verify_drawing(Graph.from_edges(2, [(0, 1)]), emb).valid
