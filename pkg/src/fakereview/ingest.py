"""Parsers for the two review TSV formats.

``amazon`` is the 15-column Amazon Customer Reviews layout (header line first).
``labeled`` is the 9-column deception corpus whose LABEL column carries
``__label1__`` (fake) or ``__label2__`` (genuine).

Both parsers return ``(records, report)``. In strict mode the first malformed
line raises :class:`ParseError`; in lenient mode it is logged in the report
and skipped.
"""
from __future__ import annotations

import enum
import io
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, TextIO

logger = logging.getLogger(__name__)

AMAZON_COLUMNS = (
    "marketplace", "customer_id", "review_id", "product_id", "product_parent",
    "product_title", "product_category", "star_rating", "helpful_votes",
    "total_votes", "vine", "verified_purchase", "review_headline",
    "review_body", "review_date",
)
LABELED_COLUMNS = (
    "DOC_ID", "LABEL", "RATING", "VERIFIED_PURCHASE", "PRODUCT_CATEGORY",
    "PRODUCT_ID", "PRODUCT_TITLE", "REVIEW_TITLE", "REVIEW_TEXT",
)


class Label(enum.Enum):
    FAKE = "fake"
    GENUINE = "genuine"


LABEL_TOKENS = {"__label1__": Label.FAKE, "__label2__": Label.GENUINE}


class ParseError(ValueError):
    def __init__(self, line_number: int, reason: str):
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number
        self.reason = reason


@dataclass(frozen=True)
class ReviewRecord:
    review_id: str
    product_id: str
    product_title: str
    product_category: str
    star_rating: int
    verified_purchase: bool
    review_headline: str
    review_body: str
    customer_id: str | None = None
    helpful_votes: int | None = None
    total_votes: int | None = None
    vine: bool | None = None
    review_date: str | None = None
    has_images: bool | None = None
    ground_label: Label | None = None

    def __post_init__(self):
        if not self.review_id:
            raise ValueError("review_id must be non-empty")
        if self.star_rating not in (1, 2, 3, 4, 5):
            raise ValueError(f"star_rating {self.star_rating} outside 1..5")
        for name in ("helpful_votes", "total_votes"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise ValueError(f"{name} is negative")
        if (self.helpful_votes is not None and self.total_votes is not None
                and self.helpful_votes > self.total_votes):
            raise ValueError("helpful_votes exceeds total_votes")


@dataclass
class ParseReport:
    records_ok: int = 0
    records_failed: int = 0
    failures: list[tuple[int, str]] = field(default_factory=list)


class Mode(str, enum.Enum):
    STRICT = "strict"
    LENIENT = "lenient"


class _Malformed(Exception):
    pass


def _int(value: str, column: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise _Malformed(f"{column} is not an integer: {value!r}") from None


def _rating(value: str, column: str) -> int:
    rating = _int(value, column)
    if not 1 <= rating <= 5:
        raise _Malformed(f"{column} {rating} outside 1..5")
    return rating


def _amazon_record(fields: list[str]) -> ReviewRecord:
    if len(fields) != len(AMAZON_COLUMNS):
        raise _Malformed(f"expected {len(AMAZON_COLUMNS)} columns, got {len(fields)}")
    row = dict(zip(AMAZON_COLUMNS, fields))
    helpful = _int(row["helpful_votes"], "helpful_votes")
    total = _int(row["total_votes"], "total_votes")
    if helpful < 0 or total < 0:
        raise _Malformed("negative vote count")
    if helpful > total:
        raise _Malformed(f"helpful_votes {helpful} exceeds total_votes {total}")
    return ReviewRecord(
        review_id=row["review_id"],
        customer_id=row["customer_id"] or None,
        product_id=row["product_id"],
        product_title=row["product_title"],
        product_category=row["product_category"],
        star_rating=_rating(row["star_rating"], "star_rating"),
        helpful_votes=helpful,
        total_votes=total,
        vine=row["vine"] == "Y",
        verified_purchase=row["verified_purchase"] == "Y",
        review_headline=row["review_headline"],
        review_body=row["review_body"],
        review_date=row["review_date"] or None,
    )


def _labeled_record(fields: list[str]) -> ReviewRecord:
    if len(fields) != len(LABELED_COLUMNS):
        raise _Malformed(f"expected {len(LABELED_COLUMNS)} columns, got {len(fields)}")
    row = dict(zip(LABELED_COLUMNS, fields))
    label = LABEL_TOKENS.get(row["LABEL"])
    if label is None:
        raise _Malformed(f"unknown label {row['LABEL']!r}")
    return ReviewRecord(
        review_id=row["DOC_ID"],
        ground_label=label,
        star_rating=_rating(row["RATING"], "RATING"),
        verified_purchase=row["VERIFIED_PURCHASE"] == "Y",
        product_category=row["PRODUCT_CATEGORY"],
        product_id=row["PRODUCT_ID"],
        product_title=row["PRODUCT_TITLE"],
        review_headline=row["REVIEW_TITLE"],
        review_body=row["REVIEW_TEXT"],
    )


def _parse(lines: Iterable[str], build, mode, skip_header) -> tuple[list[ReviewRecord], ParseReport]:
    mode = Mode(mode)
    records: list[ReviewRecord] = []
    report = ParseReport()
    seen: set[str] = set()
    for lineno, line in enumerate(lines, 1):
        line = line.rstrip("\n").rstrip("\r")
        fields = line.split("\t")
        if lineno == 1 and skip_header(fields):
            continue
        try:
            if not fields[0] and len(fields) == 1:
                raise _Malformed("blank line")
            try:
                record = build(fields)
            except ValueError as e:
                if isinstance(e, _Malformed):
                    raise
                raise _Malformed(str(e)) from None
            if record.review_id in seen:
                raise _Malformed(f"duplicate review_id {record.review_id!r}")
        except _Malformed as e:
            if mode is Mode.STRICT:
                raise ParseError(lineno, str(e)) from None
            logger.warning("skipping line %d: %s", lineno, e)
            report.records_failed += 1
            report.failures.append((lineno, str(e)))
            continue
        seen.add(record.review_id)
        records.append(record)
        report.records_ok += 1
    return records, report


def parse_amazon_tsv(stream: TextIO | Iterable[str], mode: Mode | str = Mode.STRICT):
    """Parse the 15-column Amazon format; the first line is always the header."""
    return _parse(stream, _amazon_record, mode, lambda fields: True)


def parse_labeled_tsv(stream: TextIO | Iterable[str], mode: Mode | str = Mode.STRICT):
    """Parse the 9-column labeled format; a leading ``DOC_ID`` header is optional."""
    return _parse(stream, _labeled_record, mode, lambda fields: fields[0] == "DOC_ID")


PARSERS = {"amazon": parse_amazon_tsv, "labeled": parse_labeled_tsv}


def _split_lines(text: str) -> list[str]:
    # only LF ends a line; a lone CR inside review text is left alone
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def read_dataset(path: str | Path, fmt: str = "labeled", mode: Mode | str = Mode.STRICT):
    """Parse a dataset file. Raises ``OSError`` if it cannot be read."""
    if fmt not in PARSERS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {sorted(PARSERS)}")
    text = Path(path).read_bytes().decode("utf-8")
    return PARSERS[fmt](_split_lines(text), mode)


def _yn(flag: bool | None) -> str:
    return "Y" if flag else "N"


def to_amazon_line(record: ReviewRecord, marketplace: str = "US", product_parent: str = "") -> str:
    def num(v):
        return "0" if v is None else str(v)

    return "\t".join([
        marketplace, record.customer_id or "", record.review_id, record.product_id,
        product_parent, record.product_title, record.product_category,
        str(record.star_rating), num(record.helpful_votes), num(record.total_votes),
        _yn(record.vine), _yn(record.verified_purchase), record.review_headline,
        record.review_body, record.review_date or "",
    ])


def to_labeled_line(record: ReviewRecord) -> str:
    if record.ground_label is None:
        raise ValueError(f"record {record.review_id!r} has no ground label")
    token = {v: k for k, v in LABEL_TOKENS.items()}[record.ground_label]
    return "\t".join([
        record.review_id, token, str(record.star_rating), _yn(record.verified_purchase),
        record.product_category, record.product_id, record.product_title,
        record.review_headline, record.review_body,
    ])


def write_tsv(records: Iterable[ReviewRecord], fmt: str = "labeled") -> str:
    """Serialize records, header included, as LF-terminated UTF-8 text."""
    out = io.StringIO()
    if fmt == "amazon":
        out.write("\t".join(AMAZON_COLUMNS) + "\n")
        for r in records:
            out.write(to_amazon_line(r) + "\n")
    elif fmt == "labeled":
        out.write("\t".join(LABELED_COLUMNS) + "\n")
        for r in records:
            out.write(to_labeled_line(r) + "\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return out.getvalue()
