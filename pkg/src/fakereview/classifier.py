"""Corpus-level detection: duplicate bodies, verdict combination, reviewer profiles."""
from __future__ import annotations

import enum
import json
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .ingest import ReviewRecord
from .lexicons import LexiconSet, bundled_lexicons
from .rules import (
    RuleConfig, RuleId, RuleVerdict, Signal, rule_exaggeration, rule_helpful_votes,
    rule_length, rule_photo, rule_product_mention, rule_profession,
    rule_sentiment_divergence, sentiment,
)
from .textkit import _tokens


class ContractError(ValueError):
    """Inputs violate a precondition (unknown record, repeated rule, ...)."""


class CombineMode(str, enum.Enum):
    VOTE = "vote"
    PAPER_AND = "paper_and"


def fingerprint(body: str) -> str:
    return " ".join(_tokens(body))


@dataclass(frozen=True)
class DuplicateIndex:
    groups: dict[str, tuple[str, ...]]
    by_id: dict[str, str]

    def group_of(self, review_id: str) -> tuple[str, ...]:
        return self.groups[self.by_id[review_id]]


def build_duplicate_index(records: Iterable[ReviewRecord]) -> DuplicateIndex:
    groups: dict[str, list[str]] = defaultdict(list)
    by_id: dict[str, str] = {}
    for r in records:
        if r.review_id in by_id:
            raise ContractError(f"review_id {r.review_id!r} appears twice")
        fp = fingerprint(r.review_body)
        by_id[r.review_id] = fp
        groups[fp].append(r.review_id)
    return DuplicateIndex({fp: tuple(ids) for fp, ids in groups.items()}, by_id)


def rule_duplicate(record: ReviewRecord, index: DuplicateIndex) -> RuleVerdict:
    """Flag every member of a group of identical (normalized) bodies.

    Empty bodies never count as duplicates of each other.
    """
    fp = index.by_id.get(record.review_id)
    if fp is None:
        raise ContractError(f"review {record.review_id!r} is not in the duplicate index")
    others = [i for i in index.groups[fp] if i != record.review_id]
    if fp and others:
        shown = ", ".join(others[:3]) + (" ..." if len(others) > 3 else "")
        return RuleVerdict(RuleId.DUPLICATE, Signal.FAKE, f"same text as {shown}")
    return RuleVerdict(RuleId.DUPLICATE, Signal.GENUINE, "text is unique")


@dataclass(frozen=True)
class Verdict:
    review_id: str
    is_fake: bool
    fake_rules: tuple[RuleId, ...]
    genuine_rules: tuple[RuleId, ...]
    score: Fraction

    def to_dict(self) -> dict:
        return {
            "review_id": self.review_id,
            "is_fake": self.is_fake,
            "score": float(self.score),
            "fake_rules": [r.value for r in self.fake_rules],
            "genuine_rules": [r.value for r in self.genuine_rules],
        }

    def to_tsv(self) -> str:
        return "\t".join([
            self.review_id,
            "1" if self.is_fake else "0",
            f"{float(self.score):.6f}",
            ";".join(r.value for r in self.fake_rules),
            ";".join(r.value for r in self.genuine_rules),
        ])


VERDICT_TSV_HEADER = "review_id\tis_fake\tscore\tfake_rules\tgenuine_rules"


def _paper_and(signals: dict[RuleId, Signal]) -> bool:
    # duplicate AND exaggeration AND (votes not exculpatory) AND short
    return (signals.get(RuleId.DUPLICATE) is Signal.FAKE
            and signals.get(RuleId.EXAGGERATION) is Signal.FAKE
            and signals.get(RuleId.HELPFUL_VOTES) is not Signal.GENUINE
            and signals.get(RuleId.LENGTH) is Signal.FAKE)


def combine(verdicts: Sequence[RuleVerdict], mode: CombineMode | str = CombineMode.VOTE,
            review_id: str = "") -> Verdict:
    """Merge per-rule verdicts into one decision.

    ``vote``: fake when more rules say fake than genuine; ties are genuine.
    ``paper_and``: fake only when the duplicate, exaggeration, helpful-vote and
    length terms all point to fake. A missing or abstaining helpful-vote rule
    does not clear the review.
    """
    mode = CombineMode(mode)
    signals: dict[RuleId, Signal] = {}
    for v in verdicts:
        if v.rule_id in signals:
            raise ContractError(f"rule {v.rule_id.value} given twice")
        signals[v.rule_id] = v.signal
    fake = tuple(v.rule_id for v in verdicts if v.signal is Signal.FAKE)
    genuine = tuple(v.rule_id for v in verdicts if v.signal is Signal.GENUINE)
    decided = len(fake) + len(genuine)
    score = Fraction(len(fake), decided) if decided else Fraction(0)
    if mode is CombineMode.VOTE:
        is_fake = len(fake) > len(genuine)
    else:
        is_fake = _paper_and(signals)
    return Verdict(review_id, is_fake, fake, genuine, score)


def evaluate_rules(record: ReviewRecord, index: DuplicateIndex, lexicons: LexiconSet,
                   config: RuleConfig = RuleConfig()) -> list[RuleVerdict]:
    """All eight rule verdicts for one record, in a fixed order."""
    summary = sentiment(record, lexicons.sentiment_positive, lexicons.sentiment_negative)
    return [
        rule_exaggeration(record, lexicons.exaggeration_positive, lexicons.exaggeration_negative),
        rule_duplicate(record, index),
        rule_profession(record, lexicons.degrees, lexicons.honorifics),
        rule_length(record, config),
        rule_helpful_votes(record, config),
        rule_product_mention(record, config, lexicons.stopwords),
        rule_photo(record),
        rule_sentiment_divergence(record, summary, config),
    ]


def classify_corpus(records: Sequence[ReviewRecord], lexicons: LexiconSet | None = None,
                    config: RuleConfig = RuleConfig(),
                    mode: CombineMode | str = CombineMode.VOTE) -> list[Verdict]:
    """One verdict per record, in input order."""
    lexicons = lexicons or bundled_lexicons()
    index = build_duplicate_index(records)
    return [combine(evaluate_rules(r, index, lexicons, config), mode, r.review_id)
            for r in records]


@dataclass(frozen=True)
class ReviewerStats:
    customer_id: str
    review_count: int
    total_helpful: int

    @property
    def helpful_ratio(self) -> Fraction:
        return Fraction(self.total_helpful, self.review_count)


def reviewer_stats(records: Iterable[ReviewRecord]) -> list[ReviewerStats]:
    """Helpful votes per review for each customer, ordered by customer_id.

    Records missing a customer id or a helpful-vote count are left out.
    """
    counts: dict[str, list[int]] = defaultdict(lambda: [0, 0])
    for r in records:
        if r.customer_id is None or r.helpful_votes is None:
            continue
        acc = counts[r.customer_id]
        acc[0] += 1
        acc[1] += r.helpful_votes
    return [ReviewerStats(cid, n, h) for cid, (n, h) in sorted(counts.items())]


def verdicts_to_tsv(verdicts: Iterable[Verdict]) -> str:
    return "".join(v.to_tsv() + "\n" for v in verdicts)


def verdicts_to_json(verdicts: Iterable[Verdict]) -> str:
    return json.dumps([v.to_dict() for v in verdicts], indent=2) + "\n"
