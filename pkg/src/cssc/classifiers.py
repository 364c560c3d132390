"""Training and prediction over a confusion set.

Five ways to pick a word for an ambiguous position:

* baseline: always the most frequent training word,
* context words / collocations: the Bayesian combination restricted to
  one feature kind,
* decision list: the single strongest matching feature decides,
* bayes: all matching, mutually non-conflicting features vote by
  multiplying smoothed likelihoods into the prior.

A trained model is an ordered feature list plus per-word totals; all
predictors are deterministic functions of the model and the occurrence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Mapping, Sequence

from .corpus import ConfusionSet, Occurrence, Sentence, TagDictionary, find_occurrences
from .features import (
    Collocation,
    ContextWord,
    Feature,
    FeatureStats,
    extract_context_words,
    feature_matches,
    features_conflict,
    format_feature_key,
    generate_collocations,
)
from .stats import (
    PruneConfig,
    chi_square_prune,
    passes_min_occurrences,
    reliability_strength,
    smoothed_likelihood,
    uncertainty_strength,
)

__all__ = [
    "CONTEXT_WORDS",
    "COLLOCATIONS",
    "ALL_FEATURE_KINDS",
    "RELIABILITY",
    "UXY",
    "METRICS",
    "METHODS",
    "TrainingError",
    "TrainConfig",
    "TrainedModel",
    "Prediction",
    "Suggestion",
    "train",
    "predict_baseline",
    "gather_evidence",
    "predict_bayes",
    "predict_decision_list",
    "restrict_features",
    "predictor",
    "correct_text",
]

CONTEXT_WORDS = "cwords"
COLLOCATIONS = "collocs"
ALL_FEATURE_KINDS = frozenset({CONTEXT_WORDS, COLLOCATIONS})

RELIABILITY = "reliability"
UXY = "uxy"
METRICS = (RELIABILITY, UXY)

METHODS = ("baseline", "cwords", "collocs", "dlist", "bayes")

_METRIC_FUNCTIONS = {
    RELIABILITY: reliability_strength,
    UXY: uncertainty_strength,
}


class TrainingError(RuntimeError):
    """Raised when a confusion set cannot be trained on the corpus."""


@dataclass(frozen=True, slots=True)
class TrainConfig:
    k: int = 3
    ell: int = 2
    prune: PruneConfig = PruneConfig()
    metric: str = RELIABILITY
    feature_kinds: frozenset[str] = ALL_FEATURE_KINDS

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.ell < 1:
            raise ValueError("ell must be at least 1")
        if self.metric not in METRICS:
            raise ValueError(f"unknown strength metric {self.metric!r}")
        if not self.feature_kinds or not self.feature_kinds <= ALL_FEATURE_KINDS:
            raise ValueError(f"bad feature kinds {sorted(self.feature_kinds)}")


@dataclass(frozen=True, slots=True)
class TrainedModel:
    """Pruned, strength-sorted features for one confusion set."""

    cset: ConfusionSet
    totals: tuple[int, ...]
    features: tuple[Feature, ...]
    config: TrainConfig


@dataclass(frozen=True, slots=True)
class Prediction:
    """Chosen word index, full posterior and the features that fired."""

    chosen: int
    posterior: tuple[float, ...]
    evidence: tuple[Feature, ...]


@dataclass(frozen=True, slots=True)
class Suggestion:
    """A proposed replacement for one occurrence in a document."""

    line: int
    col: int
    original: str
    suggested: str
    posterior: Mapping[str, float]
    set_label: str
    shared: bool


def _sort_key(feature: Feature) -> tuple[float, int, str]:
    # Collocations come before context words at equal strength, then
    # serialized text settles any remaining ties deterministically.
    kind_rank = 0 if isinstance(feature.key, Collocation) else 1
    return (-feature.strength, kind_rank, format_feature_key(feature.key))


def train(
    sentences: Sequence[Sentence],
    cset: ConfusionSet,
    config: TrainConfig,
    tags: TagDictionary,
) -> TrainedModel:
    """Propose, count, prune and rank features for one confusion set.

    Candidate features are enumerated per occurrence; because every
    feature generated at an occurrence matches it and vice versa,
    tallying generation hits yields exactly the match counts.  Features
    failing the minimum-occurrence test or the chi-square test (in that
    order) are dropped, the rest are scored by the configured metric
    and sorted by non-increasing strength.
    """
    occurrences = find_occurrences(sentences, cset)
    if not occurrences:
        raise TrainingError(
            f"no training occurrences of any word in {{{cset.label}}}"
        )
    n = len(cset.words)
    totals = [0] * n
    for occ in occurrences:
        totals[occ.observed] += 1
    totals_t = tuple(totals)

    counts: dict[object, list[int]] = {}

    def bump(key: object, word_index: int) -> None:
        row = counts.get(key)
        if row is None:
            row = counts[key] = [0] * n
        row[word_index] += 1

    use_cwords = CONTEXT_WORDS in config.feature_kinds
    use_collocs = COLLOCATIONS in config.feature_kinds
    for occ in occurrences:
        if use_cwords:
            for word in extract_context_words(occ, config.k):
                bump(ContextWord(word), occ.observed)
        if use_collocs:
            for colloc in generate_collocations(occ, config.ell, tags):
                bump(colloc, occ.observed)

    metric = _METRIC_FUNCTIONS[config.metric]
    kept: list[Feature] = []
    for key, matched in counts.items():
        stats = FeatureStats(matched=tuple(matched), totals=totals_t)
        if not passes_min_occurrences(stats, config.prune.t_min):
            continue
        if not chi_square_prune(stats, config.prune.alpha):
            continue
        kept.append(Feature(key=key, stats=stats, strength=metric(stats)))
    kept.sort(key=_sort_key)
    return TrainedModel(
        cset=cset, totals=totals_t, features=tuple(kept), config=config
    )


def _argmax(posterior: Sequence[float], totals: Sequence[int]) -> int:
    """Index of the largest value; ties go to the larger raw prior,
    then to the lower index."""
    best = max(posterior)
    candidates = [i for i, p in enumerate(posterior) if p == best]
    return max(candidates, key=lambda i: (totals[i], -i))


def predict_baseline(model: TrainedModel) -> Prediction:
    """Ignore context entirely; posterior is the prior."""
    grand = sum(model.totals)
    posterior = tuple(t / grand for t in model.totals)
    return Prediction(
        chosen=_argmax(posterior, model.totals),
        posterior=posterior,
        evidence=(),
    )


def gather_evidence(
    model: TrainedModel, occurrence: Occurrence, tags: TagDictionary
) -> tuple[Feature, ...]:
    """Matching features, strongest first, dropping any that conflict
    with an already accepted one.

    The full sorted list is traversed, so the result is deterministic
    given the model.  Context words never block each other; at most one
    left-anchored and one right-anchored collocation can survive, and a
    straddling collocation excludes both.
    """
    window = extract_context_words(occurrence, model.config.k)
    accepted: list[Feature] = []
    for feature in model.features:
        key = feature.key
        if isinstance(key, ContextWord):
            if key.word not in window:
                continue
        elif not feature_matches(key, occurrence, model.config.k, tags):
            continue
        if any(features_conflict(key, a.key) for a in accepted):
            continue
        accepted.append(feature)
    return tuple(accepted)


def _normalize_log_scores(scores: Sequence[float]) -> tuple[float, ...]:
    # Shifting all scores by a constant leaves the result unchanged,
    # which is what makes the log-domain accumulation safe.
    peak = max(scores)
    exps = [math.exp(s - peak) for s in scores]
    total = sum(exps)
    return tuple(e / total for e in exps)


def predict_bayes(
    model: TrainedModel, occurrence: Occurrence, tags: TagDictionary
) -> Prediction:
    """Combine all gathered evidence in the log domain.

    Each word's score is its log prior plus the sum of log smoothed
    likelihoods of the accepted features; the posterior is the
    normalized exponential of the scores.
    """
    evidence = gather_evidence(model, occurrence, tags)
    grand = sum(model.totals)
    scores: list[float] = []
    for i, total in enumerate(model.totals):
        if total == 0:
            scores.append(-math.inf)
            continue
        score = math.log(total / grand)
        for feature in evidence:
            score += math.log(smoothed_likelihood(feature.stats, i))
        scores.append(score)
    posterior = _normalize_log_scores(scores)
    return Prediction(
        chosen=_argmax(posterior, model.totals),
        posterior=posterior,
        evidence=evidence,
    )


def predict_decision_list(
    model: TrainedModel, occurrence: Occurrence, tags: TagDictionary
) -> Prediction:
    """Let the single strongest matching feature decide.

    The chosen word maximizes the smoothed per-feature word
    distribution (m_i + 1) / sum_j (m_j + 1); with no matching feature
    at all the prediction falls back to the baseline.
    """
    window = extract_context_words(occurrence, model.config.k)
    for feature in model.features:
        key = feature.key
        if isinstance(key, ContextWord):
            if key.word not in window:
                continue
        elif not feature_matches(key, occurrence, model.config.k, tags):
            continue
        smoothed = [m + 1 for m in feature.stats.matched]
        total = sum(smoothed)
        posterior = tuple(s / total for s in smoothed)
        return Prediction(
            chosen=_argmax(posterior, model.totals),
            posterior=posterior,
            evidence=(feature,),
        )
    return predict_baseline(model)


def restrict_features(model: TrainedModel, kinds: frozenset[str]) -> TrainedModel:
    """The model as it would be with only the given feature kinds.

    Counting, pruning and scoring are all per-feature, so filtering the
    pooled list is equivalent to having trained with that kind alone.
    """
    if not kinds or not kinds <= ALL_FEATURE_KINDS:
        raise ValueError(f"bad feature kinds {sorted(kinds)}")
    keep_cw = CONTEXT_WORDS in kinds
    keep_co = COLLOCATIONS in kinds
    features = tuple(
        f
        for f in model.features
        if (keep_cw if isinstance(f.key, ContextWord) else keep_co)
    )
    return replace(
        model, features=features, config=replace(model.config, feature_kinds=kinds)
    )


Predictor = Callable[[Occurrence, TagDictionary], Prediction]


def predictor(model: TrainedModel, method: str) -> Predictor:
    """Bind a method name to a model, returning an occurrence scorer."""
    if method == "baseline":
        return lambda occ, tags: predict_baseline(model)
    if method == "cwords":
        restricted = restrict_features(model, frozenset({CONTEXT_WORDS}))
        return lambda occ, tags: predict_bayes(restricted, occ, tags)
    if method == "collocs":
        restricted = restrict_features(model, frozenset({COLLOCATIONS}))
        return lambda occ, tags: predict_bayes(restricted, occ, tags)
    if method == "dlist":
        return lambda occ, tags: predict_decision_list(model, occ, tags)
    if method == "bayes":
        return lambda occ, tags: predict_bayes(model, occ, tags)
    raise ValueError(f"unknown method {method!r}")


def correct_text(
    models: Sequence[TrainedModel],
    sentences: Sequence[Sentence],
    tags: TagDictionary,
    threshold: float = 0.0,
    method: str = "bayes",
) -> list[Suggestion]:
    """Flag occurrences where the model prefers a different set member.

    A suggestion is emitted only when the predicted word differs from
    the written one and the posterior margin reaches ``threshold``.
    Each model is applied independently; a word belonging to several
    loaded sets is reported under each of them, marked ``shared``.
    """
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    membership: dict[str, int] = {}
    for model in models:
        for word in model.cset.words:
            membership[word] = membership.get(word, 0) + 1

    suggestions: list[Suggestion] = []
    for model in models:
        score = predictor(model, method)
        for occ in find_occurrences(sentences, model.cset):
            pred = score(occ, tags)
            if pred.chosen == occ.observed:
                continue
            if pred.posterior[pred.chosen] - pred.posterior[occ.observed] < threshold:
                continue
            token = occ.token()
            words = model.cset.words
            suggestions.append(
                Suggestion(
                    line=token.line,
                    col=token.col,
                    original=words[occ.observed],
                    suggested=words[pred.chosen],
                    posterior=dict(zip(words, pred.posterior)),
                    set_label=model.cset.label,
                    shared=membership[words[occ.observed]] > 1,
                )
            )
    suggestions.sort(key=lambda s: (s.line, s.col, s.set_label))
    return suggestions
