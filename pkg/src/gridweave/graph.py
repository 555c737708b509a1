"""Simple undirected graphs, degeneracy ordering, blowups and generators."""

from __future__ import annotations

import hashlib
import heapq
import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Malformed edge-list document; ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Graph:
    """Graph on vertices ``0..n-1`` with canonical (sorted, u < v) edges."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        canon = tuple(sorted(seen))
        adj = [set() for _ in range(n)]
        for u, v in canon:
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, canon, tuple(frozenset(s) for s in adj))

    @property
    def k(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degeneracy(self) -> int:
        return degeneracy_ordering(self).D

    def content_hash(self) -> str:
        return hashlib.sha256(serialize_graph(self).encode()).hexdigest()


def parse_graph(text: str) -> Graph:
    """Parse the ``n k`` header plus ``k`` lines of ``u v``."""
    lines = text.splitlines()
    rows = [(i + 1, ln.split()) for i, ln in enumerate(lines) if ln.strip()]
    if not rows:
        raise GraphFormatError("empty document", 1)
    lineno, head = rows[0]
    if len(head) != 2:
        raise GraphFormatError("header must be 'n k'", lineno)
    try:
        n, k = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError("header must contain two integers", lineno) from None
    if n < 0 or k < 0:
        raise GraphFormatError("negative count in header", lineno)
    body = rows[1:]
    if len(body) > k:
        raise GraphFormatError(f"more than the {k} edges announced", body[k][0])
    if len(body) < k:
        raise GraphFormatError(f"header announces {k} edges, found {len(body)}",
                               len(lines) + 1)
    seen = set()
    for lineno, parts in body:
        if len(parts) != 2:
            raise GraphFormatError("edge line must be 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("edge endpoints must be integers", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex id out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
        seen.add(e)
    return Graph.from_edges(n, seen)


def serialize_graph(g: Graph) -> str:
    out = [f"{g.n} {g.k}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class DegeneracyOrdering:
    order: tuple[int, ...]
    D: int

    def positions(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos


def degeneracy_ordering(g: Graph) -> DegeneracyOrdering:
    """Min-degree peeling with ties broken by smallest vertex id."""
    deg = [len(a) for a in g.adjacency]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order = []
    D = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        D = max(D, d)
        for w in g.adjacency[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return DegeneracyOrdering(tuple(order), D)


@dataclass(frozen=True)
class BlowupGraph:
    """t-blowup of ``base``.

    ``parts[i]`` holds the ids of the copies of ``ordering.order[i]``: part
    ``i`` is vertices ``i*t .. i*t + t - 1``.
    """

    base: Graph
    t: int
    ordering: DegeneracyOrdering
    parts: tuple[tuple[int, ...], ...]
    graph: Graph

    def owner(self, vertex: int) -> int:
        """Base vertex represented by a blowup vertex."""
        return self.ordering.order[vertex // self.t]


def blowup(g: Graph, t: int, ordering: DegeneracyOrdering | None = None) -> BlowupGraph:
    if t < 1:
        raise ValueError("blowup size t must be >= 1")
    ordering = ordering or degeneracy_ordering(g)
    pos = ordering.positions()
    parts = tuple(tuple(range(i * t, (i + 1) * t)) for i in range(g.n))
    edges = []
    for u, v in g.edges:
        for a in parts[pos[u]]:
            for b in parts[pos[v]]:
                edges.append((a, b))
    return BlowupGraph(g, t, ordering, parts, Graph.from_edges(g.n * t, edges))


FAMILIES = ("random-regular", "random-degenerate", "grid-2d", "complete-bipartite")


def generate_family(kind: str, n: int, seed: int = 0, *, d: int = 3, D: int = 2,
                    a: int | None = None, b: int | None = None) -> Graph:
    """Seeded generator for the benchmark graph families.

    ``grid-2d`` builds the most nearly square ``r x c`` grid with ``r*c == n``;
    ``complete-bipartite`` uses ``a`` and ``b`` when given, else splits ``n``.
    """
    rng = random.Random(seed)
    if kind == "random-regular":
        return _random_regular(n, d, rng)
    if kind == "random-degenerate":
        if D < 0:
            raise ValueError("D must be nonnegative")
        edges = []
        for v in range(1, n):
            for w in rng.sample(range(v), min(D, v)):
                edges.append((w, v))
        return Graph.from_edges(n, edges)
    if kind == "grid-2d":
        if n < 1:
            raise ValueError("grid-2d needs n >= 1")
        r = max(i for i in range(1, math.isqrt(n) + 1) if n % i == 0)
        c = n // r
        edges = []
        for i in range(r):
            for j in range(c):
                v = i * c + j
                if j + 1 < c:
                    edges.append((v, v + 1))
                if i + 1 < r:
                    edges.append((v, v + c))
        return Graph.from_edges(n, edges)
    if kind == "complete-bipartite":
        if a is None or b is None:
            a, b = n // 2, n - n // 2
        if a < 0 or b < 0:
            raise ValueError("part sizes must be nonnegative")
        return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    raise ValueError(f"unknown family {kind!r}; expected one of {FAMILIES}")


def check_family(kind: str, n: int, *, d: int = 3, D: int = 2) -> None:
    """Raise ValueError for parameters no seed could satisfy."""
    if kind not in FAMILIES:
        raise ValueError(f"unknown family {kind!r}")
    if n < 1:
        raise ValueError("family size must be >= 1")
    if kind == "random-regular":
        if d < 0 or d >= n:
            raise ValueError(f"random-regular needs 0 <= d < n (d={d}, n={n})")
        if (d * n) % 2:
            raise ValueError(f"random-regular needs d*n even (d={d}, n={n})")
    if kind == "random-degenerate" and D < 0:
        raise ValueError("D must be nonnegative")


def _random_regular(n: int, d: int, rng: random.Random, max_tries: int = 1000) -> Graph:
    check_family("random-regular", n, d=d)
    # pairing model with restarts; fine for the small d used here
    for _ in range(max_tries):
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            e = (min(u, v), max(u, v))
            if u == v or e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return Graph.from_edges(n, edges)
    raise RuntimeError(f"no simple {d}-regular graph found in {max_tries} pairings")
