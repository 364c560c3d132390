"""Feature types for disambiguation: context words and collocations.

A context word tests presence of a word anywhere within +-k positions
of the target.  A collocation tests a contiguous pattern of words
and/or tags immediately around the target.  Both are identified purely
by what they test; per-word counts live in :class:`FeatureStats` and a
scored feature pairs the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .corpus import Occurrence, TagDictionary, tag_set

__all__ = [
    "WORD",
    "TAG",
    "CollocationElement",
    "Collocation",
    "ContextWord",
    "FeatureKey",
    "FeatureStats",
    "Feature",
    "extract_context_words",
    "generate_collocations",
    "feature_matches",
    "features_conflict",
    "format_feature_key",
    "parse_feature_key",
]

WORD = "word"
TAG = "tag"

TARGET_MARK = "__"


@dataclass(frozen=True, slots=True)
class CollocationElement:
    """One slot of a collocation: a literal word or a tag."""

    kind: str
    value: str

    def __post_init__(self) -> None:
        if self.kind not in (WORD, TAG):
            raise ValueError(f"unknown element kind {self.kind!r}")
        if not self.value:
            raise ValueError("element value must be non-empty")
        if self.kind == WORD and self.value != self.value.casefold():
            raise ValueError(f"word element {self.value!r} is not case-folded")
        if self.kind == TAG and self.value != self.value.upper():
            raise ValueError(f"tag element {self.value!r} must be upper-case")


def word_element(value: str) -> CollocationElement:
    return CollocationElement(WORD, value)


def tag_element(value: str) -> CollocationElement:
    return CollocationElement(TAG, value)


@dataclass(frozen=True, slots=True)
class Collocation:
    """A contiguous pattern touching the target gap on one or both sides.

    ``left`` elements sit at offsets -len(left)..-1 and ``right``
    elements at +1..+len(right) relative to the target.
    """

    left: tuple[CollocationElement, ...]
    right: tuple[CollocationElement, ...]

    def __post_init__(self) -> None:
        if not self.left and not self.right:
            raise ValueError("a collocation must test at least one position")

    def offsets(self) -> tuple[int, ...]:
        n_left = len(self.left)
        return tuple(range(-n_left, 0)) + tuple(range(1, len(self.right) + 1))

    def elements_with_offsets(self) -> list[tuple[int, CollocationElement]]:
        n_left = len(self.left)
        pairs = [(i - n_left, el) for i, el in enumerate(self.left)]
        pairs += [(i + 1, el) for i, el in enumerate(self.right)]
        return pairs


@dataclass(frozen=True, slots=True)
class ContextWord:
    """Presence of ``word`` within the +-k window around the target."""

    word: str

    def __post_init__(self) -> None:
        if not self.word or self.word != self.word.casefold():
            raise ValueError(f"context word {self.word!r} is not case-folded")


FeatureKey = ContextWord | Collocation


@dataclass(frozen=True, slots=True)
class FeatureStats:
    """Raw per-word counts for one feature.

    ``matched[i]`` is the number of training occurrences of word i that
    the feature matched; ``totals[i]`` is the number of training
    occurrences of word i overall.
    """

    matched: tuple[int, ...]
    totals: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.matched) != len(self.totals) or len(self.matched) < 2:
            raise ValueError("matched and totals must align over 2+ words")
        for m, t in zip(self.matched, self.totals):
            if not (0 <= m <= t):
                raise ValueError(f"counts out of range: matched={m}, total={t}")


@dataclass(frozen=True, slots=True)
class Feature:
    key: FeatureKey
    stats: FeatureStats
    strength: float


def extract_context_words(occurrence: Occurrence, k: int) -> set[str]:
    """Distinct norms within +-k positions of the target.

    The window is clipped at the sentence edges and counts every token,
    punctuation included.  The target position itself is excluded, but
    the same word type elsewhere in the window does count, as do other
    confusion-set words.
    """
    if k < 1:
        raise ValueError("window half-width k must be at least 1")
    tokens = occurrence.sentence.tokens
    pos = occurrence.position
    lo = max(0, pos - k)
    hi = min(len(tokens), pos + k + 1)
    return {tokens[i].norm for i in range(lo, hi) if i != pos}


def _alternatives(
    token_norm: str, token_tags: frozenset[str]
) -> list[CollocationElement]:
    alts = [word_element(token_norm)]
    alts.extend(tag_element(t) for t in sorted(token_tags))
    return alts


def generate_collocations(
    occurrence: Occurrence, ell: int, tags: TagDictionary
) -> set[Collocation]:
    """All collocations of up to ``ell`` elements matching this occurrence.

    Every contiguous shape touching the target is produced (left-only,
    right-only and straddling), each position contributing either the
    literal word or any of its dictionary tags.  Shapes reaching past
    the sentence boundary are skipped rather than padded.
    """
    if ell < 1:
        raise ValueError("maximum collocation length ell must be at least 1")
    tokens = occurrence.sentence.tokens
    pos = occurrence.position
    out: set[Collocation] = set()
    for n_left in range(0, ell + 1):
        for n_right in range(0, ell + 1 - n_left):
            if n_left + n_right == 0:
                continue
            if pos - n_left < 0 or pos + n_right >= len(tokens):
                continue
            left_slots = [
                _alternatives(tokens[i].norm, tag_set(tokens[i], tags))
                for i in range(pos - n_left, pos)
            ]
            right_slots = [
                _alternatives(tokens[i].norm, tag_set(tokens[i], tags))
                for i in range(pos + 1, pos + n_right + 1)
            ]
            for combo in product(*left_slots, *right_slots):
                out.add(
                    Collocation(
                        left=tuple(combo[:n_left]),
                        right=tuple(combo[n_left:]),
                    )
                )
    return out


def feature_matches(
    key: FeatureKey, occurrence: Occurrence, k: int, tags: TagDictionary
) -> bool:
    """Does the feature hold at this occurrence?

    A word element must equal the token norm; a tag element must be
    among the token's dictionary tags; positions outside the sentence
    never match.
    """
    if isinstance(key, ContextWord):
        return key.word in extract_context_words(occurrence, k)
    tokens = occurrence.sentence.tokens
    pos = occurrence.position
    for offset, element in key.elements_with_offsets():
        i = pos + offset
        if i < 0 or i >= len(tokens):
            return False
        if element.kind == WORD:
            if tokens[i].norm != element.value:
                return False
        elif element.value not in tag_set(tokens[i], tags):
            return False
    return True


def _collocations_overlap(a: Collocation, b: Collocation) -> bool:
    return bool(set(a.offsets()) & set(b.offsets()))


def _collocation_tests_word(colloc: Collocation, word: str) -> bool:
    return any(
        el.kind == WORD and el.value == word
        for el in colloc.left + colloc.right
    )


def features_conflict(a: FeatureKey, b: FeatureKey) -> bool:
    """Do two features test overlapping evidence?

    Context words never conflict with each other.  Collocations
    conflict when their tested offset sets intersect.  A context word
    conflicts with a collocation only when the collocation literally
    tests that word; tag elements never trigger this.
    """
    if isinstance(a, ContextWord) and isinstance(b, ContextWord):
        return False
    if isinstance(a, Collocation) and isinstance(b, Collocation):
        return _collocations_overlap(a, b)
    if isinstance(a, ContextWord):
        word, colloc = a.word, b
    else:
        word, colloc = b.word, a
    return _collocation_tests_word(colloc, word)


def format_feature_key(key: FeatureKey) -> str:
    """Serialize a feature key, e.g. ``CW corps`` or ``CO PREP the __``."""
    if isinstance(key, ContextWord):
        return f"CW {key.word}"
    parts = [el.value for el in key.left]
    parts.append(TARGET_MARK)
    parts.extend(el.value for el in key.right)
    return "CO " + " ".join(parts)


def _parse_element(text: str) -> CollocationElement:
    if text != text.casefold():
        return tag_element(text)
    return word_element(text)


def parse_feature_key(text: str) -> FeatureKey:
    """Inverse of :func:`format_feature_key`."""
    kind, _, rest = text.partition(" ")
    if kind == "CW":
        if not rest or " " in rest:
            raise ValueError(f"malformed context-word feature {text!r}")
        return ContextWord(rest)
    if kind != "CO":
        raise ValueError(f"unknown feature kind in {text!r}")
    parts = rest.split(" ")
    if parts.count(TARGET_MARK) != 1:
        raise ValueError(f"collocation {text!r} needs exactly one {TARGET_MARK}")
    gap = parts.index(TARGET_MARK)
    left = tuple(_parse_element(p) for p in parts[:gap])
    right = tuple(_parse_element(p) for p in parts[gap + 1:])
    return Collocation(left=left, right=right)
