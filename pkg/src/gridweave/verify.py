"""Standalone auditor for (graph, embedding) pairs.

Deliberately naive: every vertex/edge and edge/edge pair goes through the
pure-Python predicates, sharing no loop code with the drawing engine.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

from .drawing import ConflictReport, Embedding
from .geometry import ConflictKind, Segment, segments_conflict, vertex_edge_conflict
from .graph import Graph


class MalformedDrawing(ValueError):
    """The embedding itself is broken (missing, duplicate or out-of-range points)."""


@dataclass(frozen=True)
class DrawingStats:
    volume: int
    aspect_ratio: float
    max_abs_coordinate: int
    edge_count: int
    edge_bound_ok: bool

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class VerificationVerdict:
    valid: bool
    violations: list[ConflictReport]
    stats: DrawingStats | None = field(default=None)

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [c.to_dict() for c in self.violations],
            "stats": self.stats.to_dict() if self.stats else None,
        }


def drawing_stats(emb: Embedding, g: Graph) -> DrawingStats:
    """Grid volume ``m^3`` plus the shape of the tight bounding box.

    Side lengths are ``max - min`` per axis. A single point has aspect 1;
    a flat box (some side 0, another not) has infinite aspect.
    """
    volume = emb.m**3
    if emb.n == 0:
        return DrawingStats(volume, 1.0, 0, g.k, g.k <= 8 * volume)
    sides = [max(p[i] for p in emb.points) - min(p[i] for p in emb.points) for i in range(3)]
    if max(sides) == 0:
        aspect = 1.0
    elif min(sides) == 0:
        aspect = math.inf
    else:
        aspect = max(sides) / min(sides)
    max_abs = max(abs(c) for p in emb.points for c in p)
    return DrawingStats(volume, aspect, max_abs, g.k, g.k <= 8 * volume)


def _check_well_formed(g: Graph, emb: Embedding) -> None:
    if emb.n != g.n:
        raise MalformedDrawing(f"embedding places {emb.n} vertices, graph has {g.n}")
    try:
        emb.validate()
    except ValueError as exc:
        raise MalformedDrawing(str(exc)) from None


def verify_drawing(g: Graph, emb: Embedding) -> VerificationVerdict:
    _check_well_formed(g, emb)
    pts = emb.points
    segs = [Segment(pts[u], pts[v]) for u, v in g.edges]
    violations = []
    for v in range(g.n):
        for (a, b), seg in zip(g.edges, segs):
            if v != a and v != b and vertex_edge_conflict(pts[v], seg):
                violations.append(ConflictReport(ConflictKind.VERTEX_IN_EDGE_INTERIOR, (v, (a, b))))
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            kind = segments_conflict(segs[i], segs[j])
            if kind is not None:
                violations.append(ConflictReport(kind, (g.edges[i], g.edges[j])))
    return VerificationVerdict(not violations, violations, drawing_stats(emb, g))
