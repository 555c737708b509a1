"""Exact integer predicates for points and segments in Z^3.

Everything here works on plain Python ints, so there is no overflow to worry
about; the coordinate cap only documents the range the compiled kernels are
guaranteed to handle with 128-bit intermediates.
"""

from __future__ import annotations

import enum
from typing import NamedTuple, Optional

COORD_LIMIT = 1 << 20


class GridPoint(NamedTuple):
    x: int
    y: int
    z: int


class Segment(NamedTuple):
    a: GridPoint
    b: GridPoint


class ConflictKind(enum.Enum):
    VERTEX_IN_EDGE_INTERIOR = "vertex-in-edge-interior"
    EDGE_INTERIOR_INTERSECTION = "edge-interior-intersection"


def check_range(*points) -> None:
    for p in points:
        for c in p:
            if c > COORD_LIMIT or c < -COORD_LIMIT:
                raise ValueError(f"coordinate {c} outside [-2^20, 2^20]")


def _sub(p, q):
    return (p[0] - q[0], p[1] - q[1], p[2] - q[2])


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def collinear(p, q, r) -> bool:
    """True iff p, q, r lie on one line (coincident points count)."""
    check_range(p, q, r)
    return _cross(_sub(q, p), _sub(r, p)) == (0, 0, 0)


def strictly_between(q, p, r) -> bool:
    """True iff q lies on segment pr but is neither p nor r."""
    check_range(q, p, r)
    if tuple(p) == tuple(r):
        raise ValueError("degenerate segment: p == r")
    if _cross(_sub(q, p), _sub(r, p)) != (0, 0, 0):
        return False
    return _dot(_sub(q, p), _sub(r, p)) > 0 and _dot(_sub(q, r), _sub(p, r)) > 0


def coplanar(p, q, r, s) -> bool:
    check_range(p, q, r, s)
    return _dot(_cross(_sub(q, p), _sub(r, p)), _sub(s, p)) == 0


def segments_conflict(e1, e2) -> Optional[ConflictKind]:
    """Classify the contact between two closed segments.

    Returns ``EDGE_INTERIOR_INTERSECTION`` when the segments share a point
    that is interior to at least one of them (proper crossing, collinear
    overlap, or T-contact). A single shared endpoint is not a conflict.
    """
    a, b = e1
    c, d = e2
    if tuple(a) == tuple(b) or tuple(c) == tuple(d):
        raise ValueError("degenerate segment")
    if not coplanar(a, b, c, d):
        return None
    u = _sub(b, a)
    v = _sub(d, c)
    w = _sub(c, a)
    n = _cross(u, v)
    if n == (0, 0, 0):
        # parallel: only a common line can produce contact
        if _cross(w, u) != (0, 0, 0):
            return None
        length = _dot(u, u)
        tc = _dot(w, u)
        td = _dot(_sub(d, a), u)
        lo = max(0, min(tc, td))
        hi = min(length, max(tc, td))
        return ConflictKind.EDGE_INTERIOR_INTERSECTION if lo < hi else None
    # a + s*u = c + r*v with s = s_num/nn, r = r_num/nn
    nn = _dot(n, n)
    s_num = _dot(_cross(w, v), n)
    r_num = _dot(_cross(w, u), n)
    if not (0 <= s_num <= nn and 0 <= r_num <= nn):
        return None
    if s_num in (0, nn) and r_num in (0, nn):
        return None
    return ConflictKind.EDGE_INTERIOR_INTERSECTION


def vertex_edge_conflict(v, e) -> bool:
    a, b = e
    if tuple(v) == tuple(a) or tuple(v) == tuple(b):
        raise ValueError("vertex coincides with an endpoint of the edge")
    return strictly_between(v, a, b)
