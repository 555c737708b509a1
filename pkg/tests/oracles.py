"""Independent reference implementations used only by the tests.

Nothing here imports the package's geometry kernels: segment contact is
decided by solving the parametric system over exact rationals, censuses by
itertools enumeration.
"""

import itertools
import math
from fractions import Fraction


def segment_contact_oracle(a, b, c, d):
    """True iff [a,b] and [c,d] share a point interior to at least one of them."""
    u = [Fraction(b[i] - a[i]) for i in range(3)]
    v = [Fraction(d[i] - c[i]) for i in range(3)]
    w = [Fraction(c[i] - a[i]) for i in range(3)]
    # s*u - r*v = w; look for two rows with an invertible 2x2 system
    for i, j in itertools.combinations(range(3), 2):
        det = u[i] * (-v[j]) - (-v[i]) * u[j]
        if det != 0:
            s = (w[i] * (-v[j]) - (-v[i]) * w[j]) / det
            r = (u[i] * w[j] - w[i] * u[j]) / det
            k = 3 - i - j
            if s * u[k] - r * v[k] != w[k]:
                return False
            if not (0 <= s <= 1 and 0 <= r <= 1):
                return False
            return 0 < s < 1 or 0 < r < 1
    # parallel directions: is c on the line through a, b?
    i = next(i for i in range(3) if u[i] != 0)
    tc = w[i] / u[i]
    if any(a[j] + tc * u[j] != c[j] for j in range(3)):
        return False
    td = (d[i] - a[i]) / u[i]
    lo, hi = max(Fraction(0), min(tc, td)), min(Fraction(1), max(tc, td))
    return lo < hi


def between_oracle(q, p, r):
    """q = p + s (r - p) for some rational 0 < s < 1."""
    i = next(i for i in range(3) if r[i] != p[i])
    s = Fraction(q[i] - p[i], r[i] - p[i])
    return 0 < s < 1 and all(p[j] + s * (r[j] - p[j]) == q[j] for j in range(3))


def naive_conflicts(points, edges):
    """Sorted (0, vertex, edge_index) / (1, i, j) tuples, by plain double loops."""
    out = []
    for v, p in enumerate(points):
        for e, (a, b) in enumerate(edges):
            if v not in (a, b) and between_oracle(p, points[a], points[b]):
                out.append((0, v, e))
    for i, j in itertools.combinations(range(len(edges)), 2):
        (a, b), (c, d) = edges[i], edges[j]
        if segment_contact_oracle(points[a], points[b], points[c], points[d]):
            out.append((1, i, j))
    return sorted(out)


def _rank2_zero(vectors):
    """All 2x2 minors of the difference vectors vanish (collinear)."""
    p0 = vectors[0]
    diffs = [[x - y for x, y in zip(p, p0)] for p in vectors[1:]]
    d = len(p0)
    for u, v in itertools.combinations(diffs, 2):
        for i, j in itertools.combinations(range(d), 2):
            if u[i] * v[j] - u[j] * v[i]:
                return False
    return True


def brute_collinear_ksets(d, k, m):
    pts = list(itertools.product(range(m), repeat=d))
    return sum(1 for s in itertools.combinations(pts, k) if _rank2_zero(s))


def _det3(p, q, r):
    return (p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0])
            + p[2] * (q[0] * r[1] - q[1] * r[0]))


def brute_coplanar_origin_triples(m):
    pts = list(itertools.product(range(m), repeat=3))
    return sum(1 for p, q, r in itertools.combinations(pts, 3) if _det3(p, q, r) == 0)


def brute_coplanar_4sets(m):
    pts = list(itertools.product(range(m), repeat=3))
    total = 0
    for p, q, r, s in itertools.combinations(pts, 4):
        d = [[x - y for x, y in zip(t, p)] for t in (q, r, s)]
        total += _det3(*d) == 0
    return total


def brute_hyperplane(a, m):
    return sum(1 for x in itertools.product(range(m), repeat=len(a))
               if sum(ai * xi for ai, xi in zip(a, x)) == 0)


def naive_degeneracy(n, edges):
    """Smallest D such that every nonempty vertex subset induces a vertex of degree <= D."""
    best = 0
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for r in range(1, n + 1):
        for sub in itertools.combinations(range(n), r):
            s = set(sub)
            best = max(best, min(len(adj[v] & s) for v in sub))
    return best


def comb(n, k):
    return math.comb(n, k)
