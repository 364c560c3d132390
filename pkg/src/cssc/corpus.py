"""Corpus layer: tokenization, confusion sets, tag dictionaries, occurrences.

Everything downstream works on normalized tokens.  A token keeps its raw
surface form for reporting (line/column in the source document) and a
case-folded ``norm`` that all matching is done against.  Part-of-speech
information comes from a tag dictionary that maps a word to the set of
tags it can carry; there is no tagger and no disambiguation here.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

__all__ = [
    "FormatError",
    "Token",
    "Sentence",
    "ConfusionSet",
    "TagDictionary",
    "Occurrence",
    "tokenize",
    "render",
    "load_confusion_sets",
    "parse_confusion_sets",
    "load_tag_dictionary",
    "parse_tag_dictionary",
    "default_tag_dictionary_path",
    "tag_set",
    "find_occurrences",
]

TAGS_ENV_VAR = "CSSC_TAGS"

_TERMINALS = frozenset(".!?")


class FormatError(ValueError):
    """Raised when an input file does not follow its declared format."""


@dataclass(frozen=True, slots=True)
class Token:
    """One token of source text.

    ``norm`` is the case-folded surface form; ``line`` and ``col`` are
    1-based positions of the first character in the source document
    (0 when the token was built synthetically).
    """

    surface: str
    norm: str
    tags: frozenset[str] = frozenset()
    line: int = 0
    col: int = 0


@dataclass(frozen=True, slots=True)
class Sentence:
    tokens: tuple[Token, ...]

    def __post_init__(self) -> None:
        if not self.tokens:
            raise ValueError("a sentence must contain at least one token")


@dataclass(frozen=True, slots=True)
class ConfusionSet:
    """An ordered set of 2+ distinct words that are confusable in text.

    Word order defines the index used everywhere else (count vectors,
    posteriors, model files), so it is part of the identity.
    """

    words: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.words) < 2:
            raise ValueError("a confusion set needs at least two words")
        if len(set(self.words)) != len(self.words):
            raise ValueError("confusion set words must be pairwise distinct")
        for w in self.words:
            if not w:
                raise ValueError("confusion set words must be non-empty")
            if w != w.casefold():
                raise ValueError(
                    f"confusion set word {w!r} is not in normalized form"
                )

    def index(self, word: str) -> int:
        return self.words.index(word)

    @property
    def label(self) -> str:
        return ",".join(self.words)


@dataclass(frozen=True)
class TagDictionary:
    """A closed tag inventory plus per-word tag sets.

    Words absent from ``entries`` simply have no known tags; lookups on
    them return the empty set rather than failing.
    """

    inventory: frozenset[str]
    entries: dict[str, frozenset[str]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for tag in self.inventory:
            if not tag or tag != tag.upper():
                # Upper-case names keep serialized features unambiguous:
                # a collocation element is a tag iff it is not lower-case.
                raise ValueError(f"tag name {tag!r} must be upper-case")
        for word, tags in self.entries.items():
            unknown = tags - self.inventory
            if unknown:
                raise ValueError(
                    f"entry {word!r} uses tags outside the inventory: "
                    f"{sorted(unknown)}"
                )


@dataclass(frozen=True, slots=True)
class Occurrence:
    """One position in a sentence holding a confusion-set word.

    ``observed`` is the index of that word within the confusion set.
    """

    sentence: Sentence
    position: int
    observed: int

    def token(self) -> Token:
        return self.sentence.tokens[self.position]


def _is_initial(chunk: str) -> bool:
    # "J." style initials do not end a sentence even before a capital.
    return len(chunk) == 2 and chunk[0].isalpha() and chunk[0].isupper() and chunk[1] == "."


def _explode(chunk: str) -> list[tuple[str, int]]:
    """Split one whitespace-delimited chunk into (piece, offset) tokens.

    Leading and trailing non-alphanumeric characters become single-char
    tokens; anything internal (apostrophes, hyphens, digits' periods)
    stays inside the word.
    """
    i, j = 0, len(chunk)
    lead: list[tuple[str, int]] = []
    while i < j and not chunk[i].isalnum():
        lead.append((chunk[i], i))
        i += 1
    trail: list[tuple[str, int]] = []
    while j > i and not chunk[j - 1].isalnum():
        trail.append((chunk[j - 1], j - 1))
        j -= 1
    trail.reverse()
    pieces = lead
    if i < j:
        pieces.append((chunk[i:j], i))
    pieces.extend(trail)
    return pieces


def tokenize(text: str) -> list[Sentence]:
    """Split raw text into sentences of normalized tokens.

    Tokens are whitespace-separated chunks with edge punctuation peeled
    off into single-character tokens.  A sentence ends after a chunk
    whose last token is ``.``, ``!`` or ``?`` when the next chunk starts
    with an upper-case letter or the text ends there.  Single-capital
    initials ("J.") never end a sentence.  There is no abbreviation
    list, so "Dr. Smith" does split; callers needing better
    segmentation can pre-split and feed one sentence per call.
    """
    chunks: list[tuple[str, int, int]] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        start = None
        for col_no, ch in enumerate(line):
            if ch.isspace():
                if start is not None:
                    chunks.append((line[start:col_no], line_no, start + 1))
                    start = None
            elif start is None:
                start = col_no
        if start is not None:
            chunks.append((line[start:], line_no, start + 1))

    sentences: list[Sentence] = []
    current: list[Token] = []
    for idx, (chunk, line_no, col_no) in enumerate(chunks):
        pieces = _explode(chunk)
        for piece, offset in pieces:
            current.append(
                Token(
                    surface=piece,
                    norm=piece.casefold(),
                    line=line_no,
                    col=col_no + offset,
                )
            )
        if not pieces:
            continue
        if pieces[-1][0] in _TERMINALS and not _is_initial(chunk):
            nxt = chunks[idx + 1][0] if idx + 1 < len(chunks) else None
            if nxt is None or nxt[0].isupper():
                sentences.append(Sentence(tuple(current)))
                current = []
    if current:
        sentences.append(Sentence(tuple(current)))
    return sentences


def render(tokens: Iterable[Token]) -> str:
    """Join normalized tokens with single spaces.

    Re-tokenizing the result reproduces the token norms, which is the
    stability contract the renderer exists for; it makes no attempt to
    restore natural punctuation spacing.
    """
    return " ".join(t.norm for t in tokens)


def parse_confusion_sets(text: str, source: str = "<string>") -> list[ConfusionSet]:
    """Parse confusion sets, one per line, words comma-separated.

    Blank lines and lines starting with ``#`` are skipped.  Words must
    already be normalized (lower-case); anything else is a format error
    naming the offending line.
    """
    sets: list[ConfusionSet] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        words = tuple(w.strip() for w in stripped.split(","))
        try:
            sets.append(ConfusionSet(words))
        except ValueError as exc:
            raise FormatError(f"{source}:{line_no}: {exc}") from None
    return sets


def load_confusion_sets(path: str | os.PathLike[str]) -> list[ConfusionSet]:
    text = Path(path).read_text(encoding="utf-8")
    return parse_confusion_sets(text, source=str(path))


def parse_tag_dictionary(text: str, source: str = "<string>") -> TagDictionary:
    """Parse a tag dictionary.

    The first non-blank line must be ``TAGS:`` followed by the
    comma-separated inventory; every later non-blank line is
    ``word<TAB>tag,tag,...``.  Repeated words merge their tag sets.
    Errors name the offending line.
    """
    inventory: frozenset[str] | None = None
    entries: dict[str, set[str]] = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if inventory is None:
            if not line.startswith("TAGS:"):
                raise FormatError(
                    f"{source}:{line_no}: expected a TAGS: inventory line first"
                )
            tags = [t.strip() for t in line[len("TAGS:"):].split(",")]
            if not tags or any(not t for t in tags):
                raise FormatError(f"{source}:{line_no}: empty tag name in inventory")
            for t in tags:
                if t != t.upper():
                    raise FormatError(
                        f"{source}:{line_no}: tag {t!r} must be upper-case"
                    )
            if len(set(tags)) != len(tags):
                raise FormatError(f"{source}:{line_no}: duplicate tag in inventory")
            inventory = frozenset(tags)
            continue
        if "\t" not in line:
            raise FormatError(
                f"{source}:{line_no}: expected word<TAB>tags, got {line!r}"
            )
        word, _, tag_part = line.partition("\t")
        word = word.strip()
        tags = [t.strip() for t in tag_part.split(",")]
        if not word or not tags or any(not t for t in tags):
            raise FormatError(f"{source}:{line_no}: malformed entry {line!r}")
        bad = [t for t in tags if t not in inventory]
        if bad:
            raise FormatError(
                f"{source}:{line_no}: tag {bad[0]!r} not in the inventory"
            )
        entries.setdefault(word, set()).update(tags)
    if inventory is None:
        raise FormatError(f"{source}: empty tag dictionary (no TAGS: line)")
    return TagDictionary(
        inventory=inventory,
        entries={w: frozenset(ts) for w, ts in entries.items()},
    )


def load_tag_dictionary(path: str | os.PathLike[str]) -> TagDictionary:
    text = Path(path).read_text(encoding="utf-8")
    return parse_tag_dictionary(text, source=str(path))


def default_tag_dictionary_path() -> Path:
    """Path of the tag dictionary bundled with the package.

    The ``CSSC_TAGS`` environment variable overrides it when set.
    """
    env = os.environ.get(TAGS_ENV_VAR)
    if env:
        return Path(env)
    return Path(str(resources.files("cssc").joinpath("data/tags.txt")))


def tag_set(token: Token, tags: TagDictionary) -> frozenset[str]:
    """Tags the dictionary allows for this token; empty when unknown."""
    return tags.entries.get(token.norm, frozenset())


def find_occurrences(
    sentences: Sequence[Sentence], cset: ConfusionSet
) -> list[Occurrence]:
    """All positions holding a word of the set, in document order."""
    where = {w: i for i, w in enumerate(cset.words)}
    found: list[Occurrence] = []
    for sentence in sentences:
        for pos, token in enumerate(sentence.tokens):
            idx = where.get(token.norm)
            if idx is not None:
                found.append(Occurrence(sentence, pos, idx))
    return found
