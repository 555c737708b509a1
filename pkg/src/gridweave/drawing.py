"""Randomized grid drawings: plain first-moment sampling and blowup-greedy selection."""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from . import _kernels
from .geometry import COORD_LIMIT, ConflictKind, GridPoint
from .graph import DegeneracyOrdering, Graph, degeneracy_ordering

MODES = ("first-moment", "blowup-greedy")


class InfeasibleParameters(ValueError):
    pass


class BudgetExhausted(RuntimeError):
    def __init__(self, message: str, stats: list):
        super().__init__(message)
        self.stats = stats


@dataclass(frozen=True)
class Embedding:
    """Vertex ``i`` sits at ``points[i]`` inside the grid ``[m]^3``.

    Construction does not validate; :meth:`validate` (and the verifier) do.
    """

    m: int
    points: tuple[GridPoint, ...]

    @classmethod
    def from_points(cls, m: int, points) -> "Embedding":
        return cls(int(m), tuple(GridPoint(*(int(c) for c in p)) for p in points))

    @property
    def n(self) -> int:
        return len(self.points)

    def validate(self) -> None:
        for v, p in enumerate(self.points):
            if len(p) != 3:
                raise ValueError(f"vertex {v}: expected 3 coordinates")
            if not all(0 <= c < self.m for c in p):
                raise ValueError(f"vertex {v} at {tuple(p)} lies outside [0, {self.m})^3")
        if len(set(self.points)) != len(self.points):
            seen = {}
            for v, p in enumerate(self.points):
                if p in seen:
                    raise ValueError(f"vertices {seen[p]} and {v} share the point {tuple(p)}")
                seen[p] = v

    def as_array(self) -> np.ndarray:
        return np.array(self.points, dtype=np.int64).reshape(-1, 3)


@dataclass(frozen=True)
class ConflictReport:
    """``entities`` is ``(vertex, edge)`` or ``(edge, edge)``; edges are (u, v) pairs."""

    kind: ConflictKind
    entities: tuple

    def to_dict(self) -> dict:
        if self.kind is ConflictKind.VERTEX_IN_EDGE_INTERIOR:
            v, e = self.entities
            return {"kind": self.kind.value, "vertex": v, "edge": list(e)}
        e1, e2 = self.entities
        return {"kind": self.kind.value, "edges": [list(e1), list(e2)]}


@dataclass(frozen=True)
class DrawingParams:
    m: int = 0
    t: int = 0
    volume_constant: float = 10.0
    attempt_budget: int = 20
    growth_factor: float = 2 ** (1 / 3)
    seed: int = 0
    max_escalations: int = 8

    def __post_init__(self):
        if self.m < 0 or self.t < 0:
            raise InfeasibleParameters("m and t must be nonnegative (0 selects automatically)")
        if not self.volume_constant > 0:
            raise InfeasibleParameters("volume_constant must be positive")
        if self.attempt_budget < 1:
            raise InfeasibleParameters("attempt_budget must be >= 1")
        if not self.growth_factor >= 1:
            raise InfeasibleParameters("growth_factor must be >= 1")
        if self.max_escalations < 0:
            raise InfeasibleParameters("max_escalations must be >= 0")


@dataclass
class TrialStats:
    m: int
    t: int
    attempts: int = 0
    conflicts_seen: int = 0
    elapsed_ms: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class DrawResult:
    embedding: Embedding
    stats: list[TrialStats]
    t: int = 1
    parts: list | None = field(default=None, repr=False)  # blowup points per base vertex

    @property
    def m(self) -> int:
        return self.embedding.m

    @property
    def escalated(self) -> bool:
        return len(self.stats) > 1

    @property
    def attempts(self) -> int:
        return sum(s.attempts for s in self.stats)


def random_embedding(vertex_count: int, m: int, rng: np.random.Generator) -> Embedding:
    """Uniform injective placement of ``vertex_count`` vertices into ``[m]^3``."""
    total = m**3
    if vertex_count > total:
        raise InfeasibleParameters(f"{vertex_count} vertices do not fit in [{m}]^3")
    if 2 * vertex_count > total:
        idx = rng.permutation(total)[:vertex_count]
    else:
        used: set[int] = set()
        idx = []
        while len(idx) < vertex_count:
            for x in rng.integers(0, total, size=vertex_count - len(idx)).tolist():
                if x not in used:
                    used.add(x)
                    idx.append(x)
        idx = np.array(idx, dtype=np.int64)
    idx = np.asarray(idx, dtype=np.int64)
    pts = np.stack([idx // (m * m), (idx // m) % m, idx % m], axis=1)
    return Embedding.from_points(m, pts)


def _kernel_conflicts(edges: Sequence[tuple[int, int]], points: np.ndarray):
    return _kernels.find_conflicts(points, np.array(edges, dtype=np.int64).reshape(-1, 2))


def find_conflicts(g: Graph, emb: Embedding) -> list[ConflictReport]:
    """Every vertex strictly inside a non-incident edge and every edge pair sharing an interior point."""
    if emb.n != g.n:
        raise ValueError(f"embedding places {emb.n} vertices, graph has {g.n}")
    out = []
    for kind, x, y in _kernel_conflicts(g.edges, emb.as_array()):
        if kind == 0:
            out.append(ConflictReport(ConflictKind.VERTEX_IN_EDGE_INTERIOR, (x, g.edges[y])))
        else:
            out.append(ConflictReport(ConflictKind.EDGE_INTERIOR_INTERSECTION, (g.edges[x], g.edges[y])))
    return out


def _smallest_cube_side(volume: float) -> int:
    m = max(1, math.ceil(volume ** (1 / 3)))
    while m**3 < volume:
        m += 1
    while m > 1 and (m - 1) ** 3 >= volume:
        m -= 1
    return m


def _ceil(x: float) -> int:
    r = round(x)
    return int(r) if abs(x - r) < 1e-9 else math.ceil(x)


def choose_parameters(g: Graph, params: DrawingParams, mode: str,
                      ordering: DegeneracyOrdering | None = None) -> tuple[int, int]:
    """Resolve grid side ``m`` and blowup size ``t`` (always 1 for first-moment)."""
    n, k = g.n, g.k
    if n == 0:
        raise InfeasibleParameters("cannot draw the empty graph")
    c = params.volume_constant
    if mode == "first-moment":
        t = 1
        if params.m:
            m = params.m
        else:
            lk = math.log(k) if k > 1 else 0.0
            m = max(1, _ceil(c * ((n * k) ** (1 / 3) + k ** (2 / 3) * lk ** (1 / 3))))
            m = max(m, _smallest_cube_side(n))
    elif mode == "blowup-greedy":
        D = (ordering or degeneracy_ordering(g)).D
        K = max(k, n)
        ln_n = math.log(n)
        if params.t:
            t = params.t
        else:
            t = max(_ceil(ln_n), _ceil(D * math.log(D)) if D > 1 else 0, 1)
        if params.m:
            m = params.m
        else:
            m = _smallest_cube_side(max(c * D * K * ln_n, n * t))
    else:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if n * t > m**3:
        raise InfeasibleParameters(f"{n * t} points do not fit in [{m}]^3")
    if m - 1 > COORD_LIMIT:
        raise InfeasibleParameters(f"grid side {m} exceeds the coordinate cap")
    return m, t


def _escalate(m: int, params: DrawingParams) -> int:
    return math.ceil(m * params.growth_factor - 1e-12)


def draw_first_moment(g: Graph, params: DrawingParams = DrawingParams()) -> DrawResult:
    """Sample uniform embeddings until one has no conflicts, growing m after each failed budget."""
    rng = np.random.default_rng(params.seed)
    m, _ = choose_parameters(g, params, "first-moment")
    edges = np.array(g.edges, dtype=np.int64).reshape(-1, 2)
    stats: list[TrialStats] = []
    for _level in range(params.max_escalations + 1):
        if m - 1 > COORD_LIMIT:
            break
        st = TrialStats(m=m, t=1)
        stats.append(st)
        t0 = time.perf_counter()
        for _ in range(params.attempt_budget):
            emb = random_embedding(g.n, m, rng)
            st.attempts += 1
            conflicts = _kernels.find_conflicts(emb.as_array(), edges)
            if not conflicts:
                st.elapsed_ms = (time.perf_counter() - t0) * 1e3
                return DrawResult(emb, stats)
            st.conflicts_seen += len(conflicts)
        st.elapsed_ms = (time.perf_counter() - t0) * 1e3
        m = _escalate(m, params)
    raise BudgetExhausted(f"no conflict-free embedding after {len(stats)} grid sizes", stats)


def greedy_select(g: Graph, ordering: DegeneracyOrdering, parts: Sequence[np.ndarray],
                  rng: np.random.Generator) -> tuple[list | None, int]:
    """Pick one point per part, last part first, keeping the partial drawing conflict-free.

    ``parts[i]`` holds the candidate points for ``ordering.order[i]``.
    Returns (points indexed by base vertex, rejected candidates); the
    points are ``None`` when some part has no viable candidate.
    """
    n = g.n
    pos = ordering.positions()
    chosen: list = [None] * n
    verts = np.zeros((n, 3), dtype=np.int64)
    ea = np.zeros((g.k, 3), dtype=np.int64)
    eb = np.zeros((g.k, 3), dtype=np.int64)
    h = e = 0
    rejected = 0
    for i in range(n - 1, -1, -1):
        v = ordering.order[i]
        later = sorted(w for w in g.adjacency[v] if pos[w] > i)
        nbrs = np.array([chosen[w] for w in later], dtype=np.int64).reshape(-1, 3)
        cand = parts[i]
        pick = None
        for c in rng.permutation(len(cand)).tolist():
            p = cand[c]
            if _kernels.candidate_ok(p, nbrs, verts[:h], ea[:e], eb[:e]):
                pick = p
                break
            rejected += 1
        if pick is None:
            return None, rejected
        chosen[v] = pick
        verts[h] = pick
        h += 1
        for q in nbrs:
            ea[e] = pick
            eb[e] = q
            e += 1
    return chosen, rejected


def draw_blowup_greedy(g: Graph, params: DrawingParams = DrawingParams()) -> DrawResult:
    """Embed the t-blowup at random, then greedily keep one copy of every vertex."""
    rng = np.random.default_rng(params.seed)
    ordering = degeneracy_ordering(g)
    m, t = choose_parameters(g, params, "blowup-greedy", ordering)
    stats: list[TrialStats] = []
    for _level in range(params.max_escalations + 1):
        if m - 1 > COORD_LIMIT:
            break
        st = TrialStats(m=m, t=t)
        stats.append(st)
        t0 = time.perf_counter()
        for _ in range(params.attempt_budget):
            pts = random_embedding(g.n * t, m, rng).as_array()
            parts = [pts[i * t:(i + 1) * t] for i in range(g.n)]
            st.attempts += 1
            chosen, rejected = greedy_select(g, ordering, parts, rng)
            st.conflicts_seen += rejected
            if chosen is not None:
                st.elapsed_ms = (time.perf_counter() - t0) * 1e3
                by_vertex = [None] * g.n
                for i, v in enumerate(ordering.order):
                    by_vertex[v] = parts[i]
                return DrawResult(Embedding.from_points(m, chosen), stats, t, by_vertex)
        st.elapsed_ms = (time.perf_counter() - t0) * 1e3
        m = _escalate(m, params)
    raise BudgetExhausted(f"greedy selection failed after {len(stats)} grid sizes", stats)


def draw(g: Graph, params: DrawingParams = DrawingParams(), mode: str = "blowup-greedy") -> DrawResult:
    if mode == "first-moment":
        return draw_first_moment(g, params)
    if mode == "blowup-greedy":
        return draw_blowup_greedy(g, params)
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
