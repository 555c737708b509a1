"""Pure-Python/numpy implementations of the hot kernels.

Same contracts as the compiled module; used when the extension is not built
or ``GRIDWEAVE_PURE_PYTHON=1`` is set.
"""

import numpy as np

BACKEND = "python"


def _seg_conflict(a, b, c, d):
    ux, uy, uz = b[0] - a[0], b[1] - a[1], b[2] - a[2]
    vx, vy, vz = d[0] - c[0], d[1] - c[1], d[2] - c[2]
    wx, wy, wz = c[0] - a[0], c[1] - a[1], c[2] - a[2]
    nx = uy * vz - uz * vy
    ny = uz * vx - ux * vz
    nz = ux * vy - uy * vx
    if nx * wx + ny * wy + nz * wz != 0:
        return False
    if nx == 0 and ny == 0 and nz == 0:
        if wy * uz - wz * uy or wz * ux - wx * uz or wx * uy - wy * ux:
            return False
        length = ux * ux + uy * uy + uz * uz
        tc = wx * ux + wy * uy + wz * uz
        td = (d[0] - a[0]) * ux + (d[1] - a[1]) * uy + (d[2] - a[2]) * uz
        lo = max(0, min(tc, td))
        hi = min(length, max(tc, td))
        return lo < hi
    nn = nx * nx + ny * ny + nz * nz
    # (w x v) . n and (w x u) . n
    s_num = (wy * vz - wz * vy) * nx + (wz * vx - wx * vz) * ny + (wx * vy - wy * vx) * nz
    if s_num < 0 or s_num > nn:
        return False
    r_num = (wy * uz - wz * uy) * nx + (wz * ux - wx * uz) * ny + (wx * uy - wy * ux) * nz
    if r_num < 0 or r_num > nn:
        return False
    return not ((s_num == 0 or s_num == nn) and (r_num == 0 or r_num == nn))


def _between(q, p, r):
    ux, uy, uz = r[0] - p[0], r[1] - p[1], r[2] - p[2]
    wx, wy, wz = q[0] - p[0], q[1] - p[1], q[2] - p[2]
    if wy * uz - wz * uy or wz * ux - wx * uz or wx * uy - wy * ux:
        return False
    t = wx * ux + wy * uy + wz * uz
    return 0 < t < ux * ux + uy * uy + uz * uz


def find_conflicts(points, edges):
    """All (0, vertex, edge) and (1, edge_i, edge_j) violations, sorted."""
    points = np.asarray(points, dtype=np.int64).reshape(-1, 3)
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    pts = [tuple(int(c) for c in p) for p in points]
    ed = [(int(u), int(v)) for u, v in edges]
    out = []
    if not ed:
        return out
    a = points[edges[:, 0]]
    b = points[edges[:, 1]]
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    # bounding-box prefilter; exact tests run only on overlapping candidates
    inside = np.all((points[:, None, :] >= lo[None]) & (points[:, None, :] <= hi[None]), axis=2)
    for v, e in zip(*np.nonzero(inside)):
        u, w = ed[e]
        if v != u and v != w and _between(pts[v], pts[u], pts[w]):
            out.append((0, int(v), int(e)))
    overlap = np.all((lo[:, None, :] <= hi[None]) & (lo[None] <= hi[:, None, :]), axis=2)
    for i, j in zip(*np.nonzero(np.triu(overlap, 1))):
        (p, q), (r, s) = ed[i], ed[j]
        if _seg_conflict(pts[p], pts[q], pts[r], pts[s]):
            out.append((1, int(i), int(j)))
    out.sort()
    return out


def candidate_ok(p, nbrs, verts, ea, eb):
    """Can vertex ``p`` join a partial drawing with edges to ``nbrs``?

    ``verts`` are the placed vertices, ``ea``/``eb`` the endpoints of the
    placed edges. ``p`` must not already be in ``verts``.
    """
    p = tuple(int(c) for c in p)
    nbrs = [tuple(int(c) for c in q) for q in np.asarray(nbrs).reshape(-1, 3)]
    verts = [tuple(int(c) for c in q) for q in np.asarray(verts).reshape(-1, 3)]
    ea = [tuple(int(c) for c in q) for q in np.asarray(ea).reshape(-1, 3)]
    eb = [tuple(int(c) for c in q) for q in np.asarray(eb).reshape(-1, 3)]
    for a, b in zip(ea, eb):
        if _between(p, a, b):
            return False
    for i, q in enumerate(nbrs):
        for v in verts:
            if v != q and _between(v, p, q):
                return False
        for a, b in zip(ea, eb):
            if _seg_conflict(p, q, a, b):
                return False
        for q2 in nbrs[i + 1:]:
            if _seg_conflict(p, q, p, q2):
                return False
    return True


def collinear_extension_histogram(points):
    """``hist[c]`` = number of pairs i < j with exactly c points l > j on line ij."""
    P = np.asarray(points, dtype=np.int64)
    N, d = P.shape
    counts = []
    for i in range(N - 1):
        D = P[i + 1:] - P[i]
        M = np.ones((len(D), len(D)), dtype=bool)
        for x in range(d):
            for y in range(x + 1, d):
                M &= np.outer(D[:, x], D[:, y]) == np.outer(D[:, y], D[:, x])
        counts.append(np.triu(M, 1).sum(axis=1))
    if not counts:
        return np.zeros(1, dtype=np.int64)
    return np.bincount(np.concatenate(counts)).astype(np.int64)


def coplanar_origin_triples(points):
    """Unordered triples i < j < l with det(p_i, p_j, p_l) == 0."""
    P = np.asarray(points, dtype=np.int64)
    total = 0
    for i in range(len(P) - 2):
        rest = P[i + 1:]
        C = np.cross(P[i], rest)
        total += int(np.count_nonzero(np.triu(C @ rest.T == 0, 1)))
    return total


def coplanar_4sets(points):
    P = np.asarray(points, dtype=np.int64)
    N = len(P)
    total = 0
    for i in range(N - 3):
        D = P[i + 1:] - P[i]
        for j in range(len(D) - 2):
            rest = D[j + 1:]
            C = np.cross(D[j], rest)
            total += int(np.count_nonzero(np.triu(C @ rest.T == 0, 1)))
    return total


def segment_conflict(a, b, c, d):
    return _seg_conflict(tuple(a), tuple(b), tuple(c), tuple(d))
