"""Count-based statistics: pruning tests, smoothing, strength metrics.

All functions here work on raw per-word counts (:class:`FeatureStats`).
Add-1 smoothing is applied only where a probability estimate is needed
(likelihoods and the reliability metric); the pruning tests and the
uncertainty coefficient use the raw counts directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from scipy.stats import chi2

from .corpus import Occurrence, TagDictionary
from .features import FeatureKey, FeatureStats, feature_matches

__all__ = [
    "PruneConfig",
    "accumulate_counts",
    "passes_min_occurrences",
    "chi_square_statistic",
    "chi_square_critical",
    "chi_square_prune",
    "smoothed_likelihood",
    "peak_share",
    "reliability_strength",
    "uncertainty_strength",
]


@dataclass(frozen=True, slots=True)
class PruneConfig:
    """Thresholds for discarding unreliable features.

    ``alpha`` may be 1.0, which lowers the chi-square bar to "any
    nonzero association" (the critical value becomes 0).
    """

    t_min: int = 10
    alpha: float = 0.05

    def __post_init__(self) -> None:
        if self.t_min < 1:
            raise ValueError("t_min must be at least 1")
        if not (0.0 < self.alpha <= 1.0):
            raise ValueError("alpha must be in (0, 1]")


def accumulate_counts(
    key: FeatureKey,
    occurrence_groups: Sequence[Sequence[Occurrence]],
    k: int,
    ell: int,
    tags: TagDictionary,
) -> FeatureStats:
    """Count how often a feature matches each word's occurrences.

    ``occurrence_groups[i]`` holds the occurrences observed as word i.
    ``ell`` is accepted for signature symmetry with generation but the
    match test itself only needs ``k``.
    """
    del ell
    matched = tuple(
        sum(1 for occ in group if feature_matches(key, occ, k, tags))
        for group in occurrence_groups
    )
    totals = tuple(len(group) for group in occurrence_groups)
    return FeatureStats(matched=matched, totals=totals)


def passes_min_occurrences(stats: FeatureStats, t_min: int) -> bool:
    """Keep only features seen, and missed, at least ``t_min`` times."""
    present = sum(stats.matched)
    absent = sum(t - m for m, t in zip(stats.matched, stats.totals))
    return present >= t_min and absent >= t_min


def chi_square_statistic(stats: FeatureStats) -> float:
    """Pearson statistic of the 2 x n presence/absence table.

    Rows are (feature present, feature absent), columns are the words.
    A zero row or column marginal makes the table degenerate; the
    statistic is defined as 0 so such features are always discarded.
    """
    present = list(stats.matched)
    absent = [t - m for m, t in zip(stats.matched, stats.totals)]
    row_totals = (sum(present), sum(absent))
    col_totals = stats.totals
    n = sum(col_totals)
    if n == 0 or 0 in row_totals or 0 in col_totals:
        return 0.0
    stat = 0.0
    for row, row_total in ((present, row_totals[0]), (absent, row_totals[1])):
        for observed, col_total in zip(row, col_totals):
            expected = row_total * col_total / n
            stat += (observed - expected) ** 2 / expected
    return stat


@lru_cache(maxsize=None)
def chi_square_critical(alpha: float, df: int) -> float:
    """Critical value at significance ``alpha`` with ``df`` degrees."""
    if df < 1:
        raise ValueError("degrees of freedom must be at least 1")
    return float(chi2.ppf(1.0 - alpha, df))


def chi_square_prune(stats: FeatureStats, alpha: float) -> bool:
    """Keep iff the statistic exceeds the critical value (df = n - 1)."""
    critical = chi_square_critical(alpha, len(stats.matched) - 1)
    return chi_square_statistic(stats) > critical


def smoothed_likelihood(stats: FeatureStats, i: int) -> float:
    """Add-1 estimate of p(feature | word i): (m_i + 1) / (M_i + 2)."""
    return (stats.matched[i] + 1) / (stats.totals[i] + 2)


def peak_share(counts: Sequence[float]) -> float:
    """Largest count as a share of the total."""
    total = sum(counts)
    if total <= 0:
        raise ValueError("counts must sum to a positive value")
    return max(counts) / total


def reliability_strength(stats: FeatureStats) -> float:
    """How one-sided the feature's smoothed word distribution is.

    With add-1 counts this is max_i (m_i + 1) / sum_j (m_j + 1); it lies
    in (1/n, 1) and sorts features identically to the absolute smoothed
    log-likelihood ratio in the two-word case.
    """
    return peak_share([m + 1 for m in stats.matched])


def _xlogx(p: float) -> float:
    return 0.0 if p == 0.0 else p * math.log(p)


def uncertainty_strength(stats: FeatureStats) -> float:
    """Uncertainty coefficient U(x|y) on raw counts.

    x is feature presence, y the word.  Returns the fraction of the
    presence entropy explained by knowing the word; 0 when presence is
    constant or the proportions are identical across words, 1 when the
    word determines presence exactly.  Words with no occurrences
    contribute nothing.
    """
    grand_total = sum(stats.totals)
    if grand_total <= 0:
        raise ValueError("uncertainty is undefined without occurrences")
    p_present = sum(stats.matched) / grand_total
    h_x = -_xlogx(p_present) - _xlogx(1.0 - p_present)
    if h_x == 0.0:
        return 0.0
    h_x_given_y = 0.0
    for m, t in zip(stats.matched, stats.totals):
        if t == 0:
            continue
        p_word = t / grand_total
        p_cond = m / t
        h_x_given_y -= p_word * (_xlogx(p_cond) + _xlogx(1.0 - p_cond))
    return (h_x - h_x_given_y) / h_x
