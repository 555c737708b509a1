# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels. Contracts match ``_pykernels``.

Coordinates must satisfy |c| <= 2^20; the segment test then needs at most
~90 bits, so everything past the first cross products runs in __int128.
"""

import numpy as np
from libc.stdint cimport int64_t

cdef extern from *:
    ctypedef long long i128 "__int128"

BACKEND = "cython"

LIMIT = 1 << 20


cdef inline bint _between(int64_t qx, int64_t qy, int64_t qz,
                          int64_t px, int64_t py, int64_t pz,
                          int64_t rx, int64_t ry, int64_t rz) nogil:
    cdef int64_t ux = rx - px, uy = ry - py, uz = rz - pz
    cdef int64_t wx = qx - px, wy = qy - py, wz = qz - pz
    if wy * uz - wz * uy != 0 or wz * ux - wx * uz != 0 or wx * uy - wy * ux != 0:
        return False
    cdef int64_t t = wx * ux + wy * uy + wz * uz
    return 0 < t < ux * ux + uy * uy + uz * uz


cdef inline bint _seg_conflict(int64_t ax, int64_t ay, int64_t az,
                               int64_t bx, int64_t by, int64_t bz,
                               int64_t cx, int64_t cy, int64_t cz,
                               int64_t dx, int64_t dy, int64_t dz) nogil:
    # bounding boxes first: cheap and exact
    if max(ax, bx) < min(cx, dx) or max(cx, dx) < min(ax, bx):
        return False
    if max(ay, by) < min(cy, dy) or max(cy, dy) < min(ay, by):
        return False
    if max(az, bz) < min(cz, dz) or max(cz, dz) < min(az, bz):
        return False
    cdef int64_t ux = bx - ax, uy = by - ay, uz = bz - az
    cdef int64_t vx = dx - cx, vy = dy - cy, vz = dz - cz
    cdef int64_t wx = cx - ax, wy = cy - ay, wz = cz - az
    cdef int64_t nx = uy * vz - uz * vy
    cdef int64_t ny = uz * vx - ux * vz
    cdef int64_t nz = ux * vy - uy * vx
    cdef i128 det = <i128>nx * wx + <i128>ny * wy + <i128>nz * wz
    if det != 0:
        return False
    cdef int64_t length, tc, td, lo, hi
    if nx == 0 and ny == 0 and nz == 0:
        if wy * uz - wz * uy != 0 or wz * ux - wx * uz != 0 or wx * uy - wy * ux != 0:
            return False
        length = ux * ux + uy * uy + uz * uz
        tc = wx * ux + wy * uy + wz * uz
        td = (dx - ax) * ux + (dy - ay) * uy + (dz - az) * uz
        lo = min(tc, td)
        hi = max(tc, td)
        if lo < 0:
            lo = 0
        if hi > length:
            hi = length
        return lo < hi
    cdef i128 nn = <i128>nx * nx + <i128>ny * ny + <i128>nz * nz
    cdef i128 s_num = (<i128>(wy * vz - wz * vy)) * nx + (<i128>(wz * vx - wx * vz)) * ny \
        + (<i128>(wx * vy - wy * vx)) * nz
    if s_num < 0 or s_num > nn:
        return False
    cdef i128 r_num = (<i128>(wy * uz - wz * uy)) * nx + (<i128>(wz * ux - wx * uz)) * ny \
        + (<i128>(wx * uy - wy * ux)) * nz
    if r_num < 0 or r_num > nn:
        return False
    return not ((s_num == 0 or s_num == nn) and (r_num == 0 or r_num == nn))


def _as_points(a, int dim=3):
    arr = np.ascontiguousarray(a, dtype=np.int64).reshape(-1, dim)
    if arr.size and np.abs(arr).max() > LIMIT:
        raise ValueError("coordinate outside [-2^20, 2^20]")
    return arr


def segment_conflict(a, b, c, d):
    """Single-pair entry point, mostly for testing."""
    cdef int64_t P[12]
    cdef int i = 0
    for pt in (a, b, c, d):
        if len(pt) != 3:
            raise ValueError("points must have 3 coordinates")
        for x in pt:
            if not -LIMIT <= x <= LIMIT:
                raise ValueError("coordinate outside [-2^20, 2^20]")
            P[i] = x
            i += 1
    return bool(_seg_conflict(P[0], P[1], P[2], P[3], P[4], P[5],
                              P[6], P[7], P[8], P[9], P[10], P[11]))


def find_conflicts(points, edges):
    cdef int64_t[:, ::1] P = _as_points(points)
    cdef int64_t[:, ::1] E = np.ascontiguousarray(edges, dtype=np.int64).reshape(-1, 2)
    cdef Py_ssize_t n = P.shape[0], k = E.shape[0], v, i, j
    cdef int64_t u, w, p, q, r, s
    out = []
    for v in range(n):
        for i in range(k):
            u = E[i, 0]
            w = E[i, 1]
            if v == u or v == w:
                continue
            if _between(P[v, 0], P[v, 1], P[v, 2], P[u, 0], P[u, 1], P[u, 2],
                        P[w, 0], P[w, 1], P[w, 2]):
                out.append((0, v, i))
    for i in range(k):
        p = E[i, 0]
        q = E[i, 1]
        for j in range(i + 1, k):
            r = E[j, 0]
            s = E[j, 1]
            if _seg_conflict(P[p, 0], P[p, 1], P[p, 2], P[q, 0], P[q, 1], P[q, 2],
                             P[r, 0], P[r, 1], P[r, 2], P[s, 0], P[s, 1], P[s, 2]):
                out.append((1, i, j))
    return out


def candidate_ok(p, nbrs, verts, ea, eb):
    cdef int64_t[:, ::1] X = _as_points(p)
    cdef int64_t[:, ::1] N = _as_points(nbrs)
    cdef int64_t[:, ::1] V = _as_points(verts)
    cdef int64_t[:, ::1] A = _as_points(ea)
    cdef int64_t[:, ::1] B = _as_points(eb)
    cdef int64_t px = X[0, 0], py = X[0, 1], pz = X[0, 2]
    cdef Py_ssize_t i, j, e
    for e in range(A.shape[0]):
        if _between(px, py, pz, A[e, 0], A[e, 1], A[e, 2], B[e, 0], B[e, 1], B[e, 2]):
            return False
    for i in range(N.shape[0]):
        for j in range(V.shape[0]):
            if V[j, 0] == N[i, 0] and V[j, 1] == N[i, 1] and V[j, 2] == N[i, 2]:
                continue
            if _between(V[j, 0], V[j, 1], V[j, 2], px, py, pz, N[i, 0], N[i, 1], N[i, 2]):
                return False
        for e in range(A.shape[0]):
            if _seg_conflict(px, py, pz, N[i, 0], N[i, 1], N[i, 2],
                             A[e, 0], A[e, 1], A[e, 2], B[e, 0], B[e, 1], B[e, 2]):
                return False
        for j in range(i + 1, N.shape[0]):
            if _seg_conflict(px, py, pz, N[i, 0], N[i, 1], N[i, 2],
                             px, py, pz, N[j, 0], N[j, 1], N[j, 2]):
                return False
    return True


def collinear_extension_histogram(points):
    P_arr = np.ascontiguousarray(points, dtype=np.int64)
    cdef int64_t[:, ::1] P = P_arr
    cdef Py_ssize_t N = P.shape[0], d = P.shape[1], i, j, l, x, y
    hist_arr = np.zeros(max(N, 1), dtype=np.int64)
    cdef int64_t[::1] hist = hist_arr
    cdef int64_t c, ux, uy, wx, wy
    cdef bint ok
    with nogil:
        for i in range(N):
            for j in range(i + 1, N):
                c = 0
                for l in range(j + 1, N):
                    ok = True
                    for x in range(d):
                        if not ok:
                            break
                        ux = P[j, x] - P[i, x]
                        wx = P[l, x] - P[i, x]
                        for y in range(x + 1, d):
                            uy = P[j, y] - P[i, y]
                            wy = P[l, y] - P[i, y]
                            if ux * wy != uy * wx:
                                ok = False
                                break
                    if ok:
                        c += 1
                hist[c] += 1
    last = np.flatnonzero(hist_arr)
    return hist_arr[: last[-1] + 1] if last.size else np.zeros(1, dtype=np.int64)


def coplanar_origin_triples(points):
    cdef int64_t[:, ::1] P = np.ascontiguousarray(points, dtype=np.int64).reshape(-1, 3)
    cdef Py_ssize_t N = P.shape[0], i, j, l
    cdef int64_t cx, cy, cz, total = 0
    with nogil:
        for i in range(N):
            for j in range(i + 1, N):
                cx = P[i, 1] * P[j, 2] - P[i, 2] * P[j, 1]
                cy = P[i, 2] * P[j, 0] - P[i, 0] * P[j, 2]
                cz = P[i, 0] * P[j, 1] - P[i, 1] * P[j, 0]
                for l in range(j + 1, N):
                    if cx * P[l, 0] + cy * P[l, 1] + cz * P[l, 2] == 0:
                        total += 1
    return int(total)


def coplanar_4sets(points):
    cdef int64_t[:, ::1] P = np.ascontiguousarray(points, dtype=np.int64).reshape(-1, 3)
    cdef Py_ssize_t N = P.shape[0], i, j, l, q
    cdef int64_t ux, uy, uz, vx, vy, vz, cx, cy, cz, total = 0
    with nogil:
        for i in range(N):
            for j in range(i + 1, N):
                ux = P[j, 0] - P[i, 0]
                uy = P[j, 1] - P[i, 1]
                uz = P[j, 2] - P[i, 2]
                for l in range(j + 1, N):
                    vx = P[l, 0] - P[i, 0]
                    vy = P[l, 1] - P[i, 1]
                    vz = P[l, 2] - P[i, 2]
                    cx = uy * vz - uz * vy
                    cy = uz * vx - ux * vz
                    cz = ux * vy - uy * vx
                    for q in range(l + 1, N):
                        if (cx * (P[q, 0] - P[i, 0]) + cy * (P[q, 1] - P[i, 1])
                                + cz * (P[q, 2] - P[i, 2])) == 0:
                            total += 1
    return int(total)
