import itertools
import math
from fractions import Fraction

import pytest

from gridweave import counting
from gridweave.counting import (CensusTooLarge, PrimitiveNormal, count_collinear_ksets,
                                count_coplanar_4sets, count_coplanar_origin_triples,
                                fit_growth_exponent, hyperplane_count, rational_rank)

from oracles import (brute_collinear_ksets, brute_coplanar_4sets, brute_coplanar_origin_triples,
                     brute_hyperplane)

# Frozen from the itertools oracles in tests/oracles.py (see test_fixtures_match_oracles).
COPLANAR_ORIGIN_M2 = 27
COPLANAR4_M3 = 2918


def test_fixtures_match_oracles():
    assert brute_collinear_ksets(2, 3, 3) == 8
    assert brute_coplanar_4sets(2) == 12
    assert brute_coplanar_origin_triples(2) == COPLANAR_ORIGIN_M2
    assert brute_coplanar_4sets(3) == COPLANAR4_M3


@pytest.mark.parametrize("strategy", ["brute", "lines"])
@pytest.mark.parametrize("d,k,m,expected", [(3, 3, 2, 0), (2, 3, 3, 8), (2, 2, 2, 6)])
def test_collinear_examples(strategy, d, k, m, expected):
    assert count_collinear_ksets(d, k, m, strategy).count == expected


@pytest.mark.parametrize("d,k,m", [(2, 3, 4), (2, 4, 4), (3, 3, 3), (2, 2, 3), (4, 3, 2)])
def test_collinear_against_itertools(d, k, m):
    expected = brute_collinear_ksets(d, k, m)
    for strategy in ("brute", "lines"):
        assert count_collinear_ksets(d, k, m, strategy).count == expected


@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("m", range(1, 7))
def test_collinear_strategies_agree(d, m):
    for k in range(2, 6):
        assert (count_collinear_ksets(d, k, m, "brute").count
                == count_collinear_ksets(d, k, m, "lines").count)


def test_collinear_zero_beyond_line_capacity():
    for d, m in [(2, 3), (3, 4), (2, 6)]:
        assert count_collinear_ksets(d, m + 1, m).count == 0
        assert count_collinear_ksets(d, m + 1, m, "brute").count == 0


def test_census_bounded_by_binomial():
    for d, k, m in [(2, 3, 5), (3, 4, 3), (3, 2, 3)]:
        assert count_collinear_ksets(d, k, m).count <= math.comb(m**d, k)
    assert count_collinear_ksets(3, 2, 3).count == math.comb(27, 2)


def test_collinear_monotone_in_m():
    counts = [count_collinear_ksets(3, 3, m).count for m in range(1, 9)]
    assert counts == sorted(counts)


def test_ordered_conversion():
    res = count_collinear_ksets(2, 3, 3)
    assert res.ordered_count == 8 * 6


def test_coplanar_origin_examples():
    assert count_coplanar_origin_triples(1).count == 0
    assert count_coplanar_origin_triples(2).count == COPLANAR_ORIGIN_M2
    p, q, r = (1, 0, 0), (0, 1, 0), (1, 1, 0)
    assert p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) \
        + p[2] * (q[0] * r[1] - q[1] * r[0]) == 0


def test_coplanar_origin_against_itertools():
    assert count_coplanar_origin_triples(3).count == brute_coplanar_origin_triples(3)


def test_coplanar4_examples():
    assert count_coplanar_4sets(1).count == 0
    assert count_coplanar_4sets(2).count == 12
    assert count_coplanar_4sets(3).count == COPLANAR4_M3
    assert COPLANAR4_M3 >= math.comb(9, 4)  # the plane z = 0 alone


@pytest.mark.parametrize("m", range(1, 6))
def test_coplanar4_strategies_agree(m):
    assert count_coplanar_4sets(m, "brute").count == count_coplanar_4sets(m, "planes").count


@pytest.mark.slow
@pytest.mark.skipif(counting._kernels.BACKEND != "cython", reason="brute force at m=6 needs the compiled kernels")
def test_coplanar4_strategies_agree_m6():
    assert count_coplanar_4sets(6, "brute").count == count_coplanar_4sets(6, "planes").count


def test_coplanar_counts_monotone():
    a = [count_coplanar_origin_triples(m).count for m in range(1, 6)]
    b = [count_coplanar_4sets(m).count for m in range(1, 5)]
    assert a == sorted(a) and b == sorted(b)


@pytest.mark.parametrize("a,m,count,bound", [
    ((0, 0, 1), 4, 16, 432),
    ((1, -1, 0), 3, 9, 243),
    ((2, -1, 0), 3, 6, Fraction(243, 2)),
])
def test_hyperplane_examples(a, m, count, bound):
    res, check = hyperplane_count(PrimitiveNormal(a), m)
    assert res.count == count == brute_hyperplane(a, m)
    assert check.bound == bound
    assert check.spans and check.holds


def test_hyperplane_non_spanning_gives_no_verdict():
    res, check = hyperplane_count((1, 1, 1), 3)
    assert res.count == 1 and not check.spans and check.holds is None


@pytest.mark.parametrize("a", [(0, 0, 0), (2, 4, 0), (3, -6, 9)])
def test_hyperplane_rejects_non_primitive(a):
    with pytest.raises(ValueError):
        hyperplane_count(a, 10)


def test_hyperplane_requires_m_at_least_s():
    with pytest.raises(ValueError):
        hyperplane_count((5, 1, 0), 4)


def test_hyperplane_invariant_under_coordinate_permutation_and_negation():
    a = (3, -1, 2)
    ref = hyperplane_count(a, 6)[0].count
    for perm in itertools.permutations(a):
        for sign in (1, -1):
            b = tuple(sign * x for x in perm)
            assert hyperplane_count(b, 6)[0].count == ref


def test_single_sign_flip_is_not_a_grid_symmetry():
    # x -> -x does not map {0..m-1} to itself, so flipping one entry can change the count
    assert hyperplane_count((1, -1, 0), 3)[0].count == 9
    assert hyperplane_count((1, 1, 0), 3)[0].count == 3
    assert brute_hyperplane((1, 1, 0), 3) == 3


def test_rational_rank():
    assert rational_rank([]) == 0
    assert rational_rank([(1, 2, 3), (2, 4, 6)]) == 1
    assert rational_rank([(1, 0, 0), (0, 1, 0), (1, 1, 0)]) == 2
    assert rational_rank([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 3


@pytest.mark.parametrize("series,slope", [
    ([(2, 4), (4, 16), (8, 64)], 2.0),
    ([(2, 8), (4, 64), (8, 512)], 3.0),
])
def test_fit_growth_exponent(series, slope):
    assert fit_growth_exponent(series) == pytest.approx(slope, abs=1e-12)


def test_fit_needs_three_usable_points():
    with pytest.raises(ValueError):
        fit_growth_exponent([(2, 4), (4, 0), (8, 64)])


def test_guardrail_refuses_huge_census(monkeypatch):
    monkeypatch.setitem(counting.WORK_LIMITS, counting._kernels.BACKEND, 1e3)
    with pytest.raises(CensusTooLarge) as info:
        count_coplanar_origin_triples(5)
    assert "estimated" in str(info.value)
    with pytest.raises(CensusTooLarge):
        count_collinear_ksets(3, 3, 5, "brute")
