"""Rankings from score vectors and measures for comparing them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import stats


@dataclass(frozen=True)
class RankedList:
    """Entity ids ordered by descending score, ties broken by ascending id."""

    order: np.ndarray
    scores: np.ndarray

    def __len__(self):
        return len(self.order)

    def top(self, k: int) -> np.ndarray:
        return self.order[:k]


def rank(scores) -> RankedList:
    """Rank entities by descending score.

    >>> rank([0.2, 0.9, 0.5]).order.tolist()
    [1, 2, 0]
    """
    s = np.asarray(scores, dtype=float)
    if s.ndim != 1:
        raise ValueError("scores must be one-dimensional")
    if np.any(np.isnan(s)):
        raise ValueError(f"scores contain NaN at index {int(np.flatnonzero(np.isnan(s))[0])}")
    # lexsort sorts by the last key first: score descending, then id ascending
    order = np.lexsort((np.arange(s.size), -s))
    return RankedList(order, s)


def intersection_similarity(l1, l2, k: int) -> float:
    """Top-k intersection similarity of two ranked lists.

    ``1 - (1/k) * sum_{t=1..k} |A_t Δ B_t| / (2t)`` where ``A_t`` and ``B_t``
    are the sets of the first ``t`` entries. Equals 1 exactly when the first
    ``k`` entries agree in order and 0 when the prefixes never share an id.
    Accepts :class:`RankedList` objects or plain id sequences.
    """
    a = l1.order if isinstance(l1, RankedList) else np.asarray(l1)
    b = l2.order if isinstance(l2, RankedList) else np.asarray(l2)
    if not 1 <= k <= min(len(a), len(b)):
        raise ValueError(f"k={k} out of range 1..{min(len(a), len(b))}")
    seen_a, seen_b = set(), set()
    symdiff = 0
    total = 0.0
    for t in range(1, k + 1):
        x, y = a[t - 1].item(), b[t - 1].item()
        # a new element either cancels against the other prefix or enlarges the difference
        symdiff += -1 if x in seen_b else 1
        seen_a.add(x)
        symdiff += -1 if y in seen_a else 1
        seen_b.add(y)
        total += symdiff / (2 * t)
    return 1.0 - total / k


def _paired(s1, s2):
    a = np.asarray(s1, dtype=float)
    b = np.asarray(s2, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError(f"score vectors must be 1-d and equal length, got {a.shape} and {b.shape}")
    if a.size < 2:
        raise ValueError("need at least two entries")
    return a, b


def kendall_tau(s1, s2) -> Optional[float]:
    """Kendall tau-b; ``None`` when either vector is constant."""
    a, b = _paired(s1, s2)
    if np.all(a == a[0]) or np.all(b == b[0]):
        return None
    return float(stats.kendalltau(a, b, variant="b").statistic)


def spearman(s1, s2) -> Optional[float]:
    """Spearman correlation (Pearson on mid-ranks); ``None`` when either vector is constant."""
    a, b = _paired(s1, s2)
    if np.all(a == a[0]) or np.all(b == b[0]):
        return None
    return float(stats.spearmanr(a, b).statistic)


def similarity_curves(scores1, scores2, K: int) -> list[dict]:
    """isim, Kendall tau-b and Spearman for k = 1..K.

    The correlations at each ``k`` compare both score vectors restricted to
    the top-``k`` ids of the *first* ranking. At ``k = 1`` and whenever a
    restricted vector is constant the correlations are ``None``.
    """
    s1 = np.asarray(scores1, dtype=float)
    s2 = np.asarray(scores2, dtype=float)
    if s1.shape != s2.shape:
        raise ValueError("score vectors must have equal length")
    if not 1 <= K <= s1.size:
        raise ValueError(f"K={K} out of range 1..{s1.size}")
    r1, r2 = rank(s1), rank(s2)
    rows = []
    for k in range(1, K + 1):
        ids = r1.top(k)
        tau = rho = None
        if k >= 2:
            tau = kendall_tau(s1[ids], s2[ids])
            rho = spearman(s1[ids], s2[ids])
        rows.append({"k": k, "isim": intersection_similarity(r1, r2, k), "kendall_tau": tau, "spearman": rho})
    return rows
