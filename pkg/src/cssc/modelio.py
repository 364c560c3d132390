"""Reading and writing trained models.

The format is line-oriented UTF-8 with a version header.  Counts are
stored raw; smoothing happens at prediction time.  Serialization is
deterministic, and ``parse_model(serialize_model(m))`` followed by
another serialize reproduces the bytes exactly.
"""

from __future__ import annotations

import os
from pathlib import Path

from .classifiers import (
    ALL_FEATURE_KINDS,
    COLLOCATIONS,
    CONTEXT_WORDS,
    METRICS,
    TrainConfig,
    TrainedModel,
)
from .corpus import ConfusionSet
from .features import Feature, FeatureStats, format_feature_key, parse_feature_key
from .stats import PruneConfig

__all__ = [
    "FORMAT_VERSION",
    "ModelFormatError",
    "serialize_model",
    "parse_model",
    "save_model",
    "load_model",
]

FORMAT_VERSION = "CSSC1"

# Header keys in file order; kinds are written in this fixed order too.
_KIND_ORDER = (CONTEXT_WORDS, COLLOCATIONS)


class ModelFormatError(ValueError):
    """Raised when a model file is missing, truncated or malformed."""


def _format_kinds(kinds: frozenset[str]) -> str:
    return ",".join(k for k in _KIND_ORDER if k in kinds)


def serialize_model(model: TrainedModel) -> str:
    config = model.config
    lines = [
        FORMAT_VERSION,
        "words\t" + ",".join(model.cset.words),
        "totals\t" + ",".join(str(t) for t in model.totals),
        f"k\t{config.k}",
        f"ell\t{config.ell}",
        f"tmin\t{config.prune.t_min}",
        f"alpha\t{config.prune.alpha!r}",
        f"metric\t{config.metric}",
        "kinds\t" + _format_kinds(config.feature_kinds),
        f"features\t{len(model.features)}",
    ]
    for feature in model.features:
        lines.append(
            f"{format_feature_key(feature.key)}\t{feature.strength!r}\t"
            + ",".join(str(m) for m in feature.stats.matched)
        )
    return "\n".join(lines) + "\n"


def _header_value(lines: list[str], index: int, key: str, source: str) -> str:
    if index >= len(lines):
        raise ModelFormatError(f"{source}: truncated header, expected {key!r}")
    name, tab, value = lines[index].partition("\t")
    if not tab or name != key:
        raise ModelFormatError(
            f"{source}:{index + 1}: expected {key!r} header line"
        )
    return value


def parse_model(text: str, source: str = "<string>") -> TrainedModel:
    lines = text.splitlines()
    if not lines or lines[0] != FORMAT_VERSION:
        found = lines[0] if lines else "<empty>"
        raise ModelFormatError(
            f"{source}: unsupported model version {found!r}, expected {FORMAT_VERSION}"
        )
    try:
        words = tuple(_header_value(lines, 1, "words", source).split(","))
        totals = tuple(
            int(t) for t in _header_value(lines, 2, "totals", source).split(",")
        )
        k = int(_header_value(lines, 3, "k", source))
        ell = int(_header_value(lines, 4, "ell", source))
        t_min = int(_header_value(lines, 5, "tmin", source))
        alpha = float(_header_value(lines, 6, "alpha", source))
        metric = _header_value(lines, 7, "metric", source)
        kinds = frozenset(_header_value(lines, 8, "kinds", source).split(","))
        n_features = int(_header_value(lines, 9, "features", source))
    except ModelFormatError:
        raise
    except ValueError as exc:
        raise ModelFormatError(f"{source}: bad header value ({exc})") from None

    if metric not in METRICS:
        raise ModelFormatError(f"{source}: unknown metric {metric!r}")
    if not kinds <= ALL_FEATURE_KINDS:
        raise ModelFormatError(f"{source}: unknown feature kinds {sorted(kinds)}")
    try:
        cset = ConfusionSet(words)
        config = TrainConfig(
            k=k,
            ell=ell,
            prune=PruneConfig(t_min=t_min, alpha=alpha),
            metric=metric,
            feature_kinds=kinds,
        )
    except ValueError as exc:
        raise ModelFormatError(f"{source}: {exc}") from None
    if len(totals) != len(words):
        raise ModelFormatError(f"{source}: totals do not align with words")

    body = lines[10:]
    if len(body) != n_features:
        raise ModelFormatError(
            f"{source}: header promises {n_features} features, found {len(body)}"
        )
    features = []
    for offset, line in enumerate(body):
        line_no = 11 + offset
        parts = line.split("\t")
        if len(parts) != 3:
            raise ModelFormatError(
                f"{source}:{line_no}: expected feature<TAB>strength<TAB>counts"
            )
        try:
            key = parse_feature_key(parts[0])
            strength = float(parts[1])
            matched = tuple(int(m) for m in parts[2].split(","))
            stats = FeatureStats(matched=matched, totals=totals)
        except ValueError as exc:
            raise ModelFormatError(f"{source}:{line_no}: {exc}") from None
        features.append(Feature(key=key, stats=stats, strength=strength))
    return TrainedModel(
        cset=cset, totals=totals, features=tuple(features), config=config
    )


def save_model(model: TrainedModel, path: str | os.PathLike[str]) -> None:
    Path(path).write_text(serialize_model(model), encoding="utf-8")


def load_model(path: str | os.PathLike[str]) -> TrainedModel:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ModelFormatError(f"{path}: cannot read model ({exc})") from None
    return parse_model(text, source=str(path))
