"""Pruning statistics, smoothing, and the two strength metrics."""

from __future__ import annotations

import math

import numpy as np
import pytest
from scipy.stats import chi2_contingency

from cssc.corpus import Occurrence
from cssc.features import ContextWord, FeatureStats, word_element, Collocation
from cssc.stats import (
    PruneConfig,
    accumulate_counts,
    chi_square_critical,
    chi_square_prune,
    chi_square_statistic,
    passes_min_occurrences,
    peak_share,
    reliability_strength,
    smoothed_likelihood,
    uncertainty_strength,
)

from .helpers import make_sentence, make_tags


def stats(matched, totals) -> FeatureStats:
    return FeatureStats(matched=tuple(matched), totals=tuple(totals))


def random_stats(rng, n_words=2, max_total=60) -> FeatureStats:
    totals = tuple(int(t) for t in rng.integers(1, max_total, n_words))
    matched = tuple(int(rng.integers(0, t + 1)) for t in totals)
    return stats(matched, totals)


class TestPruneConfig:
    def test_defaults(self):
        config = PruneConfig()
        assert config.t_min == 10
        assert config.alpha == 0.05

    def test_alpha_one_allowed(self):
        assert PruneConfig(alpha=1.0).alpha == 1.0

    @pytest.mark.parametrize("kwargs", [
        {"t_min": 0},
        {"alpha": 0.0},
        {"alpha": 1.0001},
        {"alpha": -0.05},
    ])
    def test_invalid_rejected(self, kwargs):
        with pytest.raises(ValueError):
            PruneConfig(**kwargs)


class TestAccumulateCounts:
    def test_hand_counted_toy_corpus(self):
        tags = make_tags({"of": {"AA"}})
        groups = (
            # word 0 ("peace"): three occurrences
            [
                Occurrence(make_sentence("peace", "of", "mind"), 0, 0),
                Occurrence(make_sentence("a", "lasting", "peace"), 2, 0),
                Occurrence(make_sentence("peace", "talks", "now"), 0, 0),
            ],
            # word 1 ("piece"): two occurrences
            [
                Occurrence(make_sentence("a", "piece", "of", "cake"), 1, 1),
                Occurrence(make_sentence("one", "piece", "left"), 1, 1),
            ],
        )
        of_cw = accumulate_counts(ContextWord("of"), groups, 3, 2, tags)
        assert of_cw == stats((1, 1), (3, 2))
        of_right = accumulate_counts(
            Collocation(left=(), right=(word_element("of"),)),
            groups, 3, 2, tags,
        )
        assert of_right == stats((1, 1), (3, 2))
        a_left = accumulate_counts(
            Collocation(left=(word_element("a"),), right=()),
            groups, 3, 2, tags,
        )
        assert a_left == stats((0, 1), (3, 2))

    def test_window_size_changes_context_word_counts(self):
        tags = make_tags({})
        sent = make_sentence("far", "x", "x", "peace")
        groups = ([Occurrence(sent, 3, 0)], [])
        narrow = accumulate_counts(ContextWord("far"), groups, 2, 2, tags)
        wide = accumulate_counts(ContextWord("far"), groups, 3, 2, tags)
        assert narrow.matched == (0, 0)
        assert wide.matched == (1, 0)


class TestMinOccurrences:
    @pytest.mark.parametrize("matched, totals, expected", [
        ((10, 0), (20, 20), True),    # present 10, absent 30
        ((9, 0), (20, 20), False),    # present 9
        ((5, 5), (10, 10), True),     # present 10, absent 10
        ((12, 5), (13, 13), False),   # absent 1 + 8 = 9
        ((0, 9), (0, 20), False),     # present 9, absent 11
    ])
    def test_boundaries(self, matched, totals, expected):
        assert passes_min_occurrences(stats(matched, totals), 10) == expected

    def test_exact_threshold_passes(self):
        assert passes_min_occurrences(stats((6, 4), (11, 9)), 10)

    def test_one_below_threshold_fails(self):
        assert not passes_min_occurrences(stats((6, 3), (11, 8)), 10)
        assert not passes_min_occurrences(stats((6, 4), (11, 8)), 10)


class TestChiSquare:
    def test_hand_computed_statistic(self):
        # Expected counts: 1, 10, 49, 490; contributions 81, 8.1,
        # 81/49, 81/490.
        got = chi_square_statistic(stats((10, 1), (50, 500)))
        assert got == pytest.approx(81 + 8.1 + 81 / 49 + 81 / 490, rel=1e-12)
        assert got == pytest.approx(90.91836734693877, rel=1e-12)

    def test_identical_proportions_give_zero(self):
        assert chi_square_statistic(stats((10, 1), (50, 5))) == pytest.approx(0.0, abs=1e-12)

    def test_zero_row_marginal(self):
        assert chi_square_statistic(stats((0, 0), (50, 500))) == 0.0
        assert chi_square_statistic(stats((50, 500), (50, 500))) == 0.0

    def test_zero_column_marginal(self):
        assert chi_square_statistic(stats((10, 0), (50, 0))) == 0.0

    def test_matches_scipy_contingency(self):
        rng = np.random.default_rng(314)
        checked = 0
        while checked < 200:
            n_words = int(rng.integers(2, 5))
            fs = random_stats(rng, n_words)
            present = fs.matched
            absent = tuple(t - m for m, t in zip(fs.matched, fs.totals))
            if sum(present) == 0 or sum(absent) == 0 or 0 in fs.totals:
                continue
            expected = chi2_contingency([present, absent], correction=False)
            assert chi_square_statistic(fs) == pytest.approx(
                expected.statistic, rel=1e-12)
            checked += 1

    def test_critical_values_frozen(self):
        assert chi_square_critical(0.05, 1) == pytest.approx(
            3.8414588206941245, rel=1e-12)
        assert chi_square_critical(0.05, 2) == pytest.approx(
            5.99146454710798, rel=1e-12)
        assert chi_square_critical(0.05, 3) == pytest.approx(
            7.814727903251178, rel=1e-12)

    def test_critical_values_against_cdf_inversion(self):
        mpmath = pytest.importorskip("mpmath")

        def oracle(alpha, df):
            # Invert the regularized lower incomplete gamma function,
            # the chi-square CDF with df degrees of freedom.
            target = 1 - alpha
            cdf = lambda x: mpmath.gammainc(df / 2, 0, x / 2,
                                            regularized=True) - target
            return float(mpmath.findroot(cdf, df))

        for alpha in (0.01, 0.05, 0.1):
            for df in (1, 2, 3):
                assert chi_square_critical(alpha, df) == pytest.approx(
                    oracle(alpha, df), rel=1e-9)

    def test_alpha_one_keeps_any_association(self):
        assert chi_square_critical(1.0, 1) == 0.0
        assert chi_square_prune(stats((6, 4), (11, 9)), 1.0)
        assert not chi_square_prune(stats((5, 5), (10, 10)), 1.0)

    def test_prune_is_strict_comparison(self):
        # Statistic 90.9 > 3.84: kept.  Statistic 0: dropped.
        assert chi_square_prune(stats((10, 1), (50, 500)), 0.05)
        assert not chi_square_prune(stats((10, 1), (50, 5)), 0.05)

    def test_df_validation(self):
        with pytest.raises(ValueError):
            chi_square_critical(0.05, 0)


class TestSmoothedLikelihood:
    def test_examples(self):
        fs = stats((10, 1), (50, 500))
        assert smoothed_likelihood(fs, 0) == pytest.approx(11 / 52)
        assert smoothed_likelihood(fs, 1) == pytest.approx(2 / 502)

    def test_zero_counts_stay_off_the_boundary(self):
        fs = stats((0, 5), (0, 5))
        assert smoothed_likelihood(fs, 0) == pytest.approx(0.5)
        assert 0.0 < smoothed_likelihood(fs, 1) < 1.0

    def test_bounds_property(self):
        rng = np.random.default_rng(99)
        for _ in range(300):
            fs = random_stats(rng)
            for i in range(2):
                p = smoothed_likelihood(fs, i)
                assert 0.0 < p < 1.0
                raw = fs.matched[i] / fs.totals[i]
                # Smoothing pulls the estimate toward 1/2.
                assert abs(p - 0.5) <= abs(raw - 0.5) + 1e-12


class TestReliability:
    def test_peak_share_raw(self):
        assert peak_share((10, 1)) == pytest.approx(10 / 11, rel=1e-12)
        assert peak_share((5, 5)) == pytest.approx(0.5)

    def test_peak_share_needs_positive_total(self):
        with pytest.raises(ValueError):
            peak_share((0, 0))

    def test_strength_uses_smoothed_counts(self):
        assert reliability_strength(stats((10, 1), (50, 500))) == pytest.approx(
            11 / 13, rel=1e-12)

    def test_even_split_gives_half(self):
        assert reliability_strength(stats((5, 5), (9, 9))) == pytest.approx(0.5)

    def test_range_property(self):
        rng = np.random.default_rng(5)
        for _ in range(300):
            n = int(rng.integers(2, 5))
            fs = random_stats(rng, n)
            s = reliability_strength(fs)
            assert 1 / n < s < 1.0 or s == pytest.approx(1 / n) or s == pytest.approx(1.0)

    def test_orders_like_log_likelihood_ratio_for_two_words(self):
        rng = np.random.default_rng(17)
        def llr(fs):
            return abs(math.log(smoothed_likelihood(fs, 0))
                       - math.log(smoothed_likelihood(fs, 1)))
        # reliability' depends only on matched counts, so the ordering
        # claim holds for features over the same occurrence totals.
        totals = (40, 40)
        for _ in range(500):
            a = stats(tuple(int(x) for x in rng.integers(0, 41, 2)), totals)
            b = stats(tuple(int(x) for x in rng.integers(0, 41, 2)), totals)
            ra, rb = reliability_strength(a), reliability_strength(b)
            la, lb = llr(a), llr(b)
            if abs(ra - rb) > 1e-12:
                assert (ra > rb) == (la > lb)


class TestUncertainty:
    def test_identical_proportions(self):
        assert uncertainty_strength(stats((10, 1), (50, 5))) == 0.0

    def test_frozen_mixed_case(self):
        got = uncertainty_strength(stats((10, 1), (50, 500)))
        assert got == pytest.approx(0.4022102268505105, rel=1e-12)

    def test_word_determines_presence(self):
        assert uncertainty_strength(stats((50, 0), (50, 500))) == pytest.approx(1.0)

    def test_presence_constant(self):
        assert uncertainty_strength(stats((0, 0), (50, 500))) == 0.0
        assert uncertainty_strength(stats((50, 500), (50, 500))) == 0.0

    def test_empty_word_group_ignored(self):
        with_empty = uncertainty_strength(stats((10, 1, 0), (50, 500, 0)))
        without = uncertainty_strength(stats((10, 1), (50, 500)))
        assert with_empty == pytest.approx(without, rel=1e-12)

    def test_no_occurrences_at_all(self):
        with pytest.raises(ValueError):
            uncertainty_strength(stats((0, 0), (0, 0)))

    def test_against_mutual_information_oracle(self):
        def oracle(fs):
            # U(x|y) = I(x;y) / H(x) over the joint presence-by-word
            # distribution; an independent route to the same quantity.
            n = sum(fs.totals)
            joint = []
            for m, t in zip(fs.matched, fs.totals):
                joint.append((m / n, (t - m) / n))
            px = (sum(j[0] for j in joint), sum(j[1] for j in joint))
            h_x = -sum(p * math.log(p) for p in px if p > 0)
            if h_x == 0:
                return 0.0
            mi = 0.0
            for (p_present, p_absent), t in zip(joint, fs.totals):
                py = t / n
                for p, marginal in ((p_present, px[0]), (p_absent, px[1])):
                    if p > 0:
                        mi += p * math.log(p / (py * marginal))
            return mi / h_x

        rng = np.random.default_rng(2718)
        for _ in range(300):
            n_words = int(rng.integers(2, 5))
            fs = random_stats(rng, n_words)
            assert uncertainty_strength(fs) == pytest.approx(
                oracle(fs), abs=1e-10)

    def test_range_property(self):
        rng = np.random.default_rng(4242)
        for _ in range(300):
            fs = random_stats(rng, int(rng.integers(2, 5)))
            u = uncertainty_strength(fs)
            assert -1e-12 <= u <= 1.0 + 1e-12
