"""Lattice censuses: collinear k-sets, coplanar triples/4-sets, hyperplane sections.

All counts are of unordered sets of distinct points of ``[m]^d``; multiply
by ``k!`` (see :attr:`CensusResult.ordered_count`) for ordered tuples.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels

# Rough upper limits on inner-loop work before a census refuses to start.
WORK_LIMITS = {
    "cython": 4e9,
    "python": 6e7,
}
PLANE_WORK_LIMIT = 2e9


class CensusTooLarge(ValueError):
    """Requested census would take too long with the chosen strategy."""

    def __init__(self, what: str, work: float, limit: float):
        self.work = work
        self.limit = limit
        super().__init__(f"{what}: estimated {work:.3g} inner steps exceeds limit {limit:.3g}")


@dataclass(frozen=True)
class CensusResult:
    kind: str
    d: int
    m: int
    count: int
    k: int | None = None

    @property
    def ordered_count(self) -> int:
        size = {"collinear": self.k, "coplanar-origin": 3, "coplanar4": 4}.get(self.kind)
        if size is None:
            raise ValueError(f"no tuple size for census kind {self.kind!r}")
        return self.count * math.factorial(size)


@dataclass(frozen=True)
class PrimitiveNormal:
    a: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        object.__setattr__(self, "a", a)
        if not any(a):
            raise ValueError("normal must not be the zero vector")
        if math.gcd(*a) != 1:
            raise ValueError(f"normal {a} is not primitive (gcd {math.gcd(*a)})")

    @property
    def s(self) -> int:
        return max(abs(x) for x in self.a)

    @property
    def d(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class HyperplaneCheck:
    bound: Fraction
    spans: bool
    holds: bool | None  # None when the section does not span a hyperplane


def grid_points(d: int, m: int) -> np.ndarray:
    if m < 1:
        return np.zeros((0, d), dtype=np.int64)
    return np.array(list(itertools.product(range(m), repeat=d)), dtype=np.int64).reshape(-1, d)


def _guard(what: str, work: float, limit: float | None = None) -> None:
    limit = WORK_LIMITS[_kernels.BACKEND] if limit is None else limit
    if work > limit:
        raise CensusTooLarge(what, work, limit)


def primitive_directions(d: int, bound: int) -> np.ndarray:
    """Primitive integer vectors with max-norm <= bound, one per +-v pair."""
    if bound < 1:
        return np.zeros((0, d), dtype=np.int64)
    r = np.arange(-bound, bound + 1)
    V = np.stack(np.meshgrid(*([r] * d), indexing="ij"), axis=-1).reshape(-1, d)
    nz = V != 0
    first = np.argmax(nz, axis=1)
    lead = V[np.arange(len(V)), first]
    keep = (lead > 0) & (np.gcd.reduce(np.abs(V), axis=1) == 1)
    return V[keep].astype(np.int64)


def line_lengths(d: int, m: int, v: Sequence[int]) -> np.ndarray:
    """Number of grid points on every maximal line of direction ``v`` in ``[m]^d``."""
    P = grid_points(d, m)
    v = np.asarray(v, dtype=np.int64)
    prev = P - v
    start = np.any((prev < 0) | (prev >= m), axis=1)
    S = P[start]
    steps = np.full(len(S), np.iinfo(np.int64).max)
    for i in range(d):
        if v[i] > 0:
            steps = np.minimum(steps, (m - 1 - S[:, i]) // v[i])
        elif v[i] < 0:
            steps = np.minimum(steps, S[:, i] // -v[i])
    return steps + 1


def _comb_sum(lengths: np.ndarray, k: int) -> int:
    return sum(math.comb(int(n), k) for n in lengths if n >= k)


def count_collinear_ksets(d: int, k: int, m: int, strategy: str = "lines") -> CensusResult:
    """Unordered k-subsets of ``[m]^d`` lying on one line.

    ``brute`` tests every point triple with exact minors; ``lines`` walks
    primitive directions and sums binomials over the maximal lines.
    """
    if d < 2 or k < 2 or m < 1:
        raise ValueError("need d >= 2, k >= 2, m >= 1")
    if strategy == "brute":
        N = m**d
        _guard("collinear brute force", N**3 / 6 * d)
        hist = _kernels.collinear_extension_histogram(grid_points(d, m))
        count = sum(int(h) * math.comb(c, k - 2) for c, h in enumerate(hist))
    elif strategy == "lines":
        if k > m:
            return CensusResult("collinear", d, m, 0, k)
        # a line with k points in direction v needs (k-1)*|v|_inf <= m-1
        dirs = primitive_directions(d, (m - 1) // (k - 1))
        _guard("collinear line enumeration", len(dirs) * m**d, PLANE_WORK_LIMIT)
        count = sum(_comb_sum(line_lengths(d, m, v), k) for v in dirs)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return CensusResult("collinear", d, m, count, k)


def count_coplanar_origin_triples(m: int) -> CensusResult:
    """Unordered triples {p, q, r} of distinct points of [m]^3 with det(p, q, r) == 0."""
    if m < 1:
        raise ValueError("m must be >= 1")
    N = m**3
    _guard("coplanar-origin brute force", math.comb(N, 3))
    return CensusResult("coplanar-origin", 3, m, int(_kernels.coplanar_origin_triples(grid_points(3, m))))


def count_coplanar_4sets(m: int, strategy: str = "brute") -> CensusResult:
    if m < 1:
        raise ValueError("m must be >= 1")
    if strategy == "brute":
        _guard("coplanar 4-set brute force", math.comb(m**3, 4))
        count = int(_kernels.coplanar_4sets(grid_points(3, m)))
    elif strategy == "planes":
        count = _coplanar_4sets_by_planes(m)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return CensusResult("coplanar4", 3, m, count, 4)


def _coplanar_4sets_by_planes(m: int, chunk: int = 4096) -> int:
    # Every non-collinear coplanar 4-set lies on exactly one lattice plane,
    # whose primitive normal is a reduced cross product of two differences,
    # so |normal|_inf <= 2(m-1)^2. A collinear 4-set with direction v is hit
    # once for every enumerated normal orthogonal to v; remove the surplus.
    if m < 2:
        return 0
    P = grid_points(3, m)
    B = 2 * (m - 1) ** 2
    A = primitive_directions(3, B)
    _guard("coplanar plane enumeration", len(A) * len(P), PLANE_WORK_LIMIT)
    total = 0
    for start in range(0, len(A), chunk):
        block = A[start:start + chunk]
        vals = block @ P.T
        lo = vals.min(axis=1, keepdims=True)
        width = int((vals - lo).max()) + 1
        keys = (vals - lo) + np.arange(len(block))[:, None] * width
        cnt = np.bincount(keys.ravel())
        cnt = cnt[cnt >= 4].astype(object)
        total += int(sum(c * (c - 1) * (c - 2) * (c - 3) // 24 for c in cnt))
    for v in primitive_directions(3, (m - 1) // 3):
        col = _comb_sum(line_lengths(3, m, v), 4)
        if col:
            perp = int(np.count_nonzero(A @ v == 0))
            total -= col * (perp - 1)
    return total


def rational_rank(vectors) -> int:
    """Rank over Q of integer vectors (exact Gaussian elimination)."""
    rows = [[Fraction(int(x)) for x in v] for v in vectors]
    if not rows:
        return 0
    rank, ncols = 0, len(rows[0])
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(rank + 1, len(rows)):
            f = rows[r][col] / rows[rank][col]
            if f:
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def hyperplane_count(a: PrimitiveNormal | Sequence[int], m: int) -> tuple[CensusResult, HyperplaneCheck]:
    """Points of ``[m]^d`` on the hyperplane a.x = 0, checked against 3^d m^(d-1) / s."""
    if not isinstance(a, PrimitiveNormal):
        a = PrimitiveNormal(tuple(a))
    if m < a.s:
        raise ValueError(f"need m >= s (m={m}, s={a.s})")
    d = a.d
    P = grid_points(d, m)
    on = P[P @ np.asarray(a.a, dtype=np.int64) == 0]
    count = len(on)
    # a basis of the section needs at most d points; pick them greedily
    basis: list = []
    for p in on:
        if rational_rank(basis + [p]) > len(basis):
            basis.append(p)
            if len(basis) == d - 1:
                break
    spans = len(basis) == d - 1
    bound = Fraction(3**d * m ** (d - 1), a.s)
    check = HyperplaneCheck(bound, spans, (count <= bound) if spans else None)
    return CensusResult("hyperplane", d, m, count), check


def fit_growth_exponent(series: Sequence[tuple[float, float]]) -> float:
    """Least-squares slope of log(count) against log(m)."""
    pts = [(m, c) for m, c in series if m > 0 and c > 0]
    if len(pts) < 3:
        raise ValueError(f"need at least 3 points with positive count, got {len(pts)}")
    x = np.log([m for m, _ in pts])
    y = np.log([c for _, c in pts])
    return float(np.polyfit(x, y, 1)[0])
