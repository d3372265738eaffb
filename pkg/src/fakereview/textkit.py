"""Word normalization, tokenization, lexicon files and simple text statistics.

Normalization lowercases a word and keeps only ``a-z``, apostrophe and hyphen,
so ``"Ph.D."`` becomes ``"phd"`` and ``"Great!!!"`` becomes ``"great"``.
"""
from __future__ import annotations

import logging
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, TextIO

logger = logging.getLogger(__name__)

ALLOWED_CHARS = frozenset("abcdefghijklmnopqrstuvwxyz'-")

_DISALLOWED = re.compile(r"[^a-z'\-]")
# whitespace is kept so a whole text can be filtered in one pass, then split
_DISALLOWED_KEEP_SPACE = re.compile(r"[^a-z'\-\s]")


class LexiconError(Exception):
    """A lexicon stream could not be read."""


def normalize_word(word: str) -> str:
    return _DISALLOWED.sub("", word.lower())


@lru_cache(maxsize=8192)
def _tokens(text: str) -> tuple[str, ...]:
    return tuple(_DISALLOWED_KEEP_SPACE.sub("", text.lower()).split())


def tokenize(text: str) -> list[str]:
    """Split on whitespace, normalize each piece and drop the empty ones."""
    return list(_tokens(text))


@dataclass(frozen=True)
class TextStats:
    word_count: int
    char_count: int


def text_stats(text: str) -> TextStats:
    # char_count is over the raw text, not the normalized tokens
    return TextStats(word_count=len(_tokens(text)), char_count=len(text))


def word_frequencies(tokens: Iterable[str]) -> Counter:
    return Counter(tokens)


def most_frequent(freqs: Counter, n: int | None = None) -> list[tuple[str, int]]:
    """Highest counts first; equal counts ordered alphabetically."""
    ranked = sorted(freqs.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked if n is None else ranked[:n]


@dataclass(frozen=True)
class Lexicon:
    """A named, immutable set of normalized words.

    Membership tests normalize the query, so ``"Ph.D." in degrees`` works.
    Hot loops that already hold normalized tokens should test ``words``
    directly.
    """

    name: str
    words: frozenset[str]
    skipped: int = field(default=0, compare=False)

    def __post_init__(self):
        bad = [w for w in self.words if not w or not set(w) <= ALLOWED_CHARS]
        if bad:
            raise ValueError(f"lexicon {self.name!r} has unnormalized words: {sorted(bad)[:5]}")

    def __contains__(self, word: object) -> bool:
        return isinstance(word, str) and normalize_word(word) in self.words

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(sorted(self.words))

    @classmethod
    def from_words(cls, name: str, words: Iterable[str]) -> "Lexicon":
        normalized = {normalize_word(w) for w in words}
        normalized.discard("")
        return cls(name, frozenset(normalized))


def load_lexicon(stream: TextIO | Iterable[str], name: str) -> Lexicon:
    """Read one word per line; ``;`` comment lines and blank lines are skipped.

    Lines that normalize to nothing are dropped and counted in ``skipped``.
    """
    words = set()
    skipped = 0
    try:
        for lineno, line in enumerate(stream, 1):
            line = line.strip()
            if not line or line.startswith(";"):
                continue
            word = normalize_word(line)
            if not word:
                skipped += 1
                logger.warning("lexicon %s line %d: %r normalizes to nothing", name, lineno, line)
                continue
            words.add(word)
    except (OSError, UnicodeDecodeError, ValueError) as e:
        raise LexiconError(f"cannot read lexicon {name!r}: {e}") from e
    return Lexicon(name, frozenset(words), skipped)
