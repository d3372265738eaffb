"""Per-review heuristics and the lexicon-ratio sentiment engine.

Every rule returns a :class:`RuleVerdict` whose signal is FAKE, GENUINE or
ABSTAIN. ABSTAIN means the rule has no usable evidence for this review, for
example vote counts missing from the labeled dataset.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, fields
from typing import Iterable, TextIO

from .ingest import ReviewRecord
from .textkit import Lexicon, _tokens, text_stats


class RuleId(str, enum.Enum):
    EXAGGERATION = "Exaggeration"
    PROFESSION = "Profession"
    LENGTH = "Length"
    HELPFUL_VOTES = "HelpfulVotes"
    PRODUCT_MENTION = "ProductMention"
    PHOTO = "Photo"
    DUPLICATE = "Duplicate"
    SENTIMENT_DIVERGENCE = "SentimentDivergence"


class Signal(str, enum.Enum):
    FAKE = "fake"
    GENUINE = "genuine"
    ABSTAIN = "abstain"


@dataclass(frozen=True)
class RuleVerdict:
    rule_id: RuleId
    signal: Signal
    detail: str

    def __post_init__(self):
        if self.signal is not Signal.ABSTAIN and not self.detail:
            raise ValueError(f"{self.rule_id.value}: a deciding verdict needs a detail")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RuleConfig:
    min_words: int = 10
    min_chars: int = 50
    helpful_votes_threshold: int = 10
    divergence_threshold: int = 2
    mention_min_token_len: int = 3

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
                raise ConfigError(f"{f.name} must be a positive integer, got {value!r}")


def load_config(stream: TextIO | Iterable[str]) -> RuleConfig:
    """Read ``key=value`` lines. ``#`` starts a comment; unknown keys are errors."""
    known = {f.name for f in fields(RuleConfig)}
    values = {}
    for lineno, raw in enumerate(stream, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep:
            raise ConfigError(f"line {lineno}: expected key=value, got {raw.strip()!r}")
        if key not in known:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        try:
            values[key] = int(value)
        except ValueError:
            raise ConfigError(f"line {lineno}: {key} is not an integer: {value!r}") from None
    return RuleConfig(**values)


def _verdict(rule_id, fake: bool, why_fake: str, why_genuine: str) -> RuleVerdict:
    if fake:
        return RuleVerdict(rule_id, Signal.FAKE, why_fake)
    return RuleVerdict(rule_id, Signal.GENUINE, why_genuine)


def _text_tokens(record: ReviewRecord) -> tuple[str, ...]:
    # headline counts as review text for word-bin matching
    return _tokens(record.review_body) + _tokens(record.review_headline)


def _bin_hits(record: ReviewRecord, *bins: Lexicon) -> list[str]:
    words = frozenset().union(*(b.words for b in bins))
    return sorted({t for t in _text_tokens(record) if t in words})


def rule_exaggeration(record: ReviewRecord, pos_bin: Lexicon, neg_bin: Lexicon) -> RuleVerdict:
    hits = _bin_hits(record, pos_bin, neg_bin)
    return _verdict(RuleId.EXAGGERATION, bool(hits),
                    f"exaggerated wording: {', '.join(hits)}", "no exaggerated wording")


def rule_profession(record: ReviewRecord, degrees: Lexicon, honorifics: Lexicon) -> RuleVerdict:
    hits = _bin_hits(record, degrees, honorifics)
    return _verdict(RuleId.PROFESSION, bool(hits),
                    f"credential or honorific: {', '.join(hits)}", "no credential or honorific")


def rule_length(record: ReviewRecord, config: RuleConfig = RuleConfig()) -> RuleVerdict:
    s = text_stats(record.review_body)
    long_enough = s.word_count > config.min_words and s.char_count > config.min_chars
    desc = f"{s.word_count} words, {s.char_count} chars"
    return _verdict(RuleId.LENGTH, not long_enough, f"too short ({desc})", f"long enough ({desc})")


def rule_helpful_votes(record: ReviewRecord, config: RuleConfig = RuleConfig()) -> RuleVerdict:
    votes = record.helpful_votes
    if votes is None:
        return RuleVerdict(RuleId.HELPFUL_VOTES, Signal.ABSTAIN, "helpful votes unavailable")
    if votes >= config.helpful_votes_threshold:
        return RuleVerdict(RuleId.HELPFUL_VOTES, Signal.GENUINE, f"{votes} helpful votes")
    # few votes are normal for genuine reviews too
    return RuleVerdict(RuleId.HELPFUL_VOTES, Signal.ABSTAIN,
                       f"{votes} helpful votes, below {config.helpful_votes_threshold}")


def product_terms(record: ReviewRecord, stopwords: Lexicon, min_len: int) -> frozenset[str]:
    """Title and category tokens that are long enough and not stopwords."""
    candidates = _tokens(record.product_title) + _tokens(record.product_category)
    return frozenset(t for t in candidates if len(t) >= min_len and t not in stopwords.words)


def rule_product_mention(record: ReviewRecord, config: RuleConfig, stopwords: Lexicon) -> RuleVerdict:
    terms = product_terms(record, stopwords, config.mention_min_token_len)
    if not terms:
        return RuleVerdict(RuleId.PRODUCT_MENTION, Signal.ABSTAIN, "no usable product terms")
    mentioned = sorted(terms.intersection(_tokens(record.review_body)))
    return _verdict(RuleId.PRODUCT_MENTION, not mentioned, "product never mentioned",
                    f"mentions product: {', '.join(mentioned)}")


def rule_photo(record: ReviewRecord) -> RuleVerdict:
    if record.has_images:
        return RuleVerdict(RuleId.PHOTO, Signal.GENUINE, "review includes photos")
    return RuleVerdict(RuleId.PHOTO, Signal.ABSTAIN,
                       "no photo data" if record.has_images is None else "no photos")


class SentimentCategory(str, enum.Enum):
    EXTREMELY_NEGATIVE = "extremely negative"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"
    POSITIVE = "positive"
    EXTREMELY_POSITIVE = "extremely positive"
    INDETERMINATE = "indeterminate"


PREDICTED_RATING = {
    SentimentCategory.EXTREMELY_POSITIVE: 5,
    SentimentCategory.POSITIVE: 4,
    SentimentCategory.NEUTRAL: 3,
    SentimentCategory.NEGATIVE: 2,
    SentimentCategory.EXTREMELY_NEGATIVE: 1,
    SentimentCategory.INDETERMINATE: 0,
}


@dataclass(frozen=True)
class SentimentSummary:
    positive_count: int
    negative_count: int
    category: SentimentCategory
    predicted_rating: int


def sentiment_category(positive_count: int, negative_count: int) -> SentimentCategory:
    """Bucket the positive/negative hit ratio.

    The branch order matters: a ratio of exactly 0.8 or 1.25 falls through
    every strict comparison and comes out INDETERMINATE. Comparisons are done
    by cross-multiplication so they are exact for any counts.
    """
    p, n = positive_count, negative_count
    if p < 0 or n < 0:
        raise ValueError("counts must be non-negative")
    if p == 0 and n == 0:
        return SentimentCategory.NEUTRAL
    if p == 0:
        return SentimentCategory.EXTREMELY_NEGATIVE
    if n == 0:
        return SentimentCategory.EXTREMELY_POSITIVE
    # ratio = p / n;  0.8 = 4/5, 1.25 = 5/4
    if 4 * n < 5 * p and 4 * p < 5 * n:
        return SentimentCategory.NEUTRAL
    if p > 2 * n:
        return SentimentCategory.EXTREMELY_POSITIVE
    if 2 * p < n:
        return SentimentCategory.EXTREMELY_NEGATIVE
    if 4 * p > 5 * n:
        return SentimentCategory.POSITIVE
    if 5 * p < 4 * n:
        return SentimentCategory.NEGATIVE
    return SentimentCategory.INDETERMINATE


def sentiment(record: ReviewRecord, pos_words: Lexicon, neg_words: Lexicon) -> SentimentSummary:
    tokens = _tokens(record.review_body)
    p = sum(1 for t in tokens if t in pos_words.words)
    n = sum(1 for t in tokens if t in neg_words.words)
    category = sentiment_category(p, n)
    return SentimentSummary(p, n, category, PREDICTED_RATING[category])


def rating_difference(record: ReviewRecord, summary: SentimentSummary) -> int | None:
    """Absolute gap between predicted and actual stars, None when indeterminate."""
    if summary.category is SentimentCategory.INDETERMINATE:
        return None
    return abs(summary.predicted_rating - record.star_rating)


def rule_sentiment_divergence(record: ReviewRecord, summary: SentimentSummary,
                              config: RuleConfig = RuleConfig()) -> RuleVerdict:
    gap = rating_difference(record, summary)
    if gap is None:
        return RuleVerdict(RuleId.SENTIMENT_DIVERGENCE, Signal.ABSTAIN, "sentiment indeterminate")
    desc = f"text reads {summary.predicted_rating} stars, rated {record.star_rating}"
    return _verdict(RuleId.SENTIMENT_DIVERGENCE, gap >= config.divergence_threshold,
                    f"sentiment contradicts rating ({desc})", f"sentiment agrees ({desc})")
