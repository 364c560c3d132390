"""Shared builders for the test suite.

The synthetic corpora built here plant controlled word-neighbor
correlations so that a realistic number of features survives pruning;
everything is driven by seeded generators and fully deterministic.
"""

from __future__ import annotations

import numpy as np

from cssc.corpus import ConfusionSet, Sentence, TagDictionary, Token

TAG_NAMES = ("AA", "BB", "CC", "DD")


def make_token(norm: str, line: int = 0, col: int = 0) -> Token:
    return Token(surface=norm, norm=norm, line=line, col=col)


def make_sentence(*norms: str) -> Sentence:
    return Sentence(tuple(make_token(n) for n in norms))


def make_tags(entries: dict[str, set[str] | frozenset[str]] | None = None,
              inventory: tuple[str, ...] = TAG_NAMES) -> TagDictionary:
    entries = entries or {}
    return TagDictionary(
        inventory=frozenset(inventory),
        entries={w: frozenset(t) for w, t in entries.items()},
    )


def synth_setup(seed: int):
    """A random confusion set, tag dictionary and training sentences.

    Sentences are filler words with one confusion word planted in most
    of them; the planted word's neighbors are biased per word, which
    gives the chi-square test real associations to keep.
    """
    rng = np.random.default_rng(seed)
    n_words = 2 + seed % 2
    cset = ConfusionSet(tuple(f"t{i}" for i in range(n_words)))
    fillers = [f"w{i}" for i in range(12)]
    entries: dict[str, frozenset[str]] = {}
    for word in fillers + list(cset.words):
        n_tags = int(rng.integers(0, 3))
        if n_tags:
            picked = rng.choice(len(TAG_NAMES), size=n_tags, replace=False)
            entries[word] = frozenset(TAG_NAMES[i] for i in picked)
    tags = make_tags(entries)

    n_sentences = int(rng.integers(120, 320))
    sentences = []
    for _ in range(n_sentences):
        length = int(rng.integers(4, 11))
        words = [fillers[int(i)] for i in rng.integers(0, len(fillers), length)]
        if rng.random() < 0.75:
            pos = int(rng.integers(0, length))
            idx = int(rng.integers(0, n_words))
            words[pos] = cset.words[idx]
            if pos + 1 < length and rng.random() < 0.55:
                words[pos + 1] = fillers[(2 * idx) % len(fillers)]
            if pos - 1 >= 0 and rng.random() < 0.4:
                words[pos - 1] = fillers[(2 * idx + 1) % len(fillers)]
        sentences.append(make_sentence(*words))
    return cset, tags, sentences
