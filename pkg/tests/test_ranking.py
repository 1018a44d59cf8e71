import itertools
import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hypercent import intersection_similarity, kendall_tau, rank, similarity_curves, spearman


def isim_bruteforce(a, b, k):
    return 1 - sum(len(set(a[:t]) ^ set(b[:t])) / (2 * t) for t in range(1, k + 1)) / k


def tau_b_pairs(x, y):
    conc = disc = tx = ty = 0
    for i, j in itertools.combinations(range(len(x)), 2):
        dx, dy = np.sign(x[i] - x[j]), np.sign(y[i] - y[j])
        if dx == 0 and dy == 0:
            continue
        if dx == 0:
            tx += 1
        elif dy == 0:
            ty += 1
        elif dx == dy:
            conc += 1
        else:
            disc += 1
    return (conc - disc) / math.sqrt((conc + disc + tx) * (conc + disc + ty))


def midranks(v):
    v = list(v)
    ranks = [0.0] * len(v)
    for i, a in enumerate(v):
        below = sum(b < a for b in v)
        equal = sum(b == a for b in v)
        ranks[i] = below + (equal + 1) / 2
    return np.array(ranks)


def pearson(a, b):
    a = a - a.mean()
    b = b - b.mean()
    return float(a @ b / math.sqrt((a @ a) * (b @ b)))


class TestRank:
    def test_descending(self):
        assert rank([0.2, 0.9, 0.5]).order.tolist() == [1, 2, 0]

    def test_all_equal(self):
        assert rank([3.0] * 5).order.tolist() == [0, 1, 2, 3, 4]

    def test_ties_by_id(self):
        assert rank([1, 1, 2]).order.tolist() == [2, 0, 1]

    def test_nan(self):
        with pytest.raises(ValueError):
            rank([1.0, float("nan")])


class TestIntersectionSimilarity:
    @pytest.mark.parametrize("k", [1, 3, 6])
    def test_identical(self, k):
        a = [4, 2, 0, 1, 5, 3]
        assert intersection_similarity(a, a, k) == 1.0

    @pytest.mark.parametrize("k", [1, 2, 4])
    def test_disjoint(self, k):
        assert intersection_similarity([0, 1, 2, 3], [4, 5, 6, 7], k) == 0.0

    def test_swapped_pair(self):
        assert intersection_similarity(["a", "b"], ["b", "a"], 2) == 0.5

    def test_accepts_ranked_lists(self):
        assert intersection_similarity(rank([0.1, 0.5]), rank([0.5, 0.1]), 2) == 0.5

    def test_k_bounds(self):
        with pytest.raises(ValueError):
            intersection_similarity([0, 1], [1, 0], 3)
        with pytest.raises(ValueError):
            intersection_similarity([0, 1], [1, 0], 0)

    @settings(max_examples=200, deadline=None)
    @given(st.permutations(range(12)), st.permutations(range(12)), st.integers(1, 12))
    def test_matches_bruteforce_and_symmetric(self, a, b, k):
        value = intersection_similarity(a, b, k)
        assert value == pytest.approx(isim_bruteforce(a, b, k), abs=1e-14)
        assert value == pytest.approx(intersection_similarity(b, a, k), abs=1e-14)
        assert 0 <= value <= 1

    @settings(max_examples=100, deadline=None)
    @given(st.permutations(range(8)), st.permutations(range(8)), st.integers(1, 8))
    def test_one_iff_prefix_equal(self, a, b, k):
        assert (intersection_similarity(a, b, k) == 1.0) == (list(a[:k]) == list(b[:k]))


class TestCorrelations:
    def test_identical(self):
        x = [0.3, 0.1, 0.7, 0.2]
        assert kendall_tau(x, x) == pytest.approx(1)
        assert spearman(x, x) == pytest.approx(1)

    def test_reversed(self):
        x = np.array([0.3, 0.1, 0.7, 0.2])
        assert kendall_tau(x, -x) == pytest.approx(-1)
        assert spearman(x, -x) == pytest.approx(-1)

    def test_ties_against_pair_counting(self):
        assert kendall_tau([1, 1, 2], [1, 2, 2]) == pytest.approx(tau_b_pairs([1, 1, 2], [1, 2, 2]), abs=1e-12)
        assert tau_b_pairs([1, 1, 2], [1, 2, 2]) == pytest.approx(0.5)

    def test_ties_against_midrank_pearson(self):
        a, b = [1, 1, 2], [1, 2, 2]
        assert spearman(a, b) == pytest.approx(pearson(midranks(a), midranks(b)), abs=1e-12)

    def test_constant_is_undefined(self):
        assert kendall_tau([1, 1, 1], [1, 2, 3]) is None
        assert spearman([1, 2, 3], [5, 5, 5]) is None

    def test_length_checks(self):
        with pytest.raises(ValueError):
            kendall_tau([1, 2], [1, 2, 3])
        with pytest.raises(ValueError):
            spearman([1], [1])

    @settings(max_examples=150, deadline=None)
    @given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=2, max_size=12))
    def test_oracles_with_ties(self, pairs):
        x = np.array([p[0] for p in pairs], dtype=float)
        y = np.array([p[1] for p in pairs], dtype=float)
        assume(np.ptp(x) > 0 and np.ptp(y) > 0)
        assert kendall_tau(x, y) == pytest.approx(tau_b_pairs(x, y), abs=1e-12)
        assert spearman(x, y) == pytest.approx(pearson(midranks(x), midranks(y)), abs=1e-12)
        assert kendall_tau(x, y) == pytest.approx(kendall_tau(y, x), abs=1e-14)
        assert spearman(x, y) == pytest.approx(spearman(y, x), abs=1e-14)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(-5, 5, allow_nan=False), min_size=2, max_size=20, unique=True))
def test_monotone_transform_invariance(values):
    s = np.array(values)
    for transform in (np.exp, lambda v: v**3):
        t = transform(s)
        assume(len(np.unique(t)) == len(t))
        assert rank(t).order.tolist() == rank(s).order.tolist()
        assert intersection_similarity(rank(s), rank(t), len(s)) == 1.0
        assert kendall_tau(s, t) == pytest.approx(1.0)
        assert spearman(s, t) == pytest.approx(1.0)


class TestCurves:
    def test_self_comparison(self):
        s = np.random.default_rng(0).uniform(size=30)
        rows = similarity_curves(s, s, 30)
        assert [r["k"] for r in rows] == list(range(1, 31))
        assert all(r["isim"] == 1.0 for r in rows)
        assert rows[0]["kendall_tau"] is None and rows[0]["spearman"] is None
        assert all(r["kendall_tau"] == pytest.approx(1) and r["spearman"] == pytest.approx(1) for r in rows[1:])

    def test_restricts_to_first_top_k(self):
        s1 = np.array([0.9, 0.8, 0.1, 0.05])
        s2 = np.array([0.1, 0.2, 0.9, 0.8])
        rows = similarity_curves(s1, s2, 2)
        # top-2 of s1 are ids 0, 1; s2 orders them the other way
        assert rows[1]["kendall_tau"] == pytest.approx(-1)
        assert rows[1]["isim"] == 0.0

    def test_K_bounds(self):
        with pytest.raises(ValueError):
            similarity_curves([1, 2], [2, 1], 3)
