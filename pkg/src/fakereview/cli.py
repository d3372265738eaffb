"""Command-line entry point: ``fakereview {detect,eval,sentiment,reviewers} INPUT``.

Data goes to stdout (or ``--output``), diagnostics to stderr. Exit status is
0 on success and 2 on any usage or input error.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import TextIO

from .classifier import (
    VERDICT_TSV_HEADER, CombineMode, classify_corpus, reviewer_stats, verdicts_to_json,
    verdicts_to_tsv,
)
from .evaluation import evaluate
from .ingest import Mode, ParseError, read_dataset
from .lexicons import data_path, load_lexicons
from .rules import ConfigError, RuleConfig, load_config, rating_difference, sentiment
from .textkit import LexiconError

EXIT_OK = 0
EXIT_USAGE = 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunManifest:
    command: str
    input_path: str
    format: str = "labeled"
    combiner_mode: str = "vote"
    config_path: str | None = None
    output_format: str = "tsv"
    output_path: str | None = None
    lexicon_dir: str | None = None
    baseline: tuple[float, ...] | None = None
    lenient: bool = False
    header: bool = False
    matrix_output: str | None = None

    def __post_init__(self):
        if self.format not in ("amazon", "labeled"):
            raise UsageError(f"unknown format {self.format!r}")
        if self.combiner_mode not in {m.value for m in CombineMode}:
            raise UsageError(f"unknown combiner {self.combiner_mode!r}")
        if self.output_format not in ("tsv", "json"):
            raise UsageError(f"unknown output format {self.output_format!r}")


def _records(m: RunManifest):
    mode = Mode.LENIENT if m.lenient else Mode.STRICT
    records, report = read_dataset(m.input_path, m.format, mode)
    for lineno, reason in report.failures:
        print(f"warning: {m.input_path}:{lineno}: skipped: {reason}", file=sys.stderr)
    return records


def _config(m: RunManifest) -> RuleConfig:
    if m.config_path is None:
        with data_path("rules.conf").open("r", encoding="utf-8") as fh:
            return load_config(fh)
    with open(m.config_path, encoding="utf-8") as fh:
        return load_config(fh)


def _tsv(rows) -> str:
    return "".join("\t".join(str(c) for c in row) + "\n" for row in rows)


def _ratio_str(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{float(r):.6f}"


def cmd_detect(m: RunManifest) -> str:
    records = _records(m)
    verdicts = classify_corpus(records, load_lexicons(m.lexicon_dir), _config(m), m.combiner_mode)
    if m.output_format == "json":
        return verdicts_to_json(verdicts)
    head = VERDICT_TSV_HEADER + "\n" if m.header else ""
    return head + verdicts_to_tsv(verdicts)


def cmd_eval(m: RunManifest) -> str:
    records = _records(m)
    if m.format != "labeled" or any(r.ground_label is None for r in records):
        raise UsageError("ground truth required: eval needs the labeled format")
    verdicts = classify_corpus(records, load_lexicons(m.lexicon_dir), _config(m), m.combiner_mode)
    report = evaluate(verdicts, records, m.baseline)
    if m.matrix_output:
        Path(m.matrix_output).write_text(report.matrix_tsv(), encoding="utf-8")
    if m.output_format == "json":
        return report.to_json()
    matrix = "" if m.matrix_output else report.matrix_tsv() + "\n"
    return matrix + report.to_text()


def cmd_sentiment(m: RunManifest) -> str:
    records = _records(m)
    lex = load_lexicons(m.lexicon_dir)
    rows = []
    for r in records:
        s = sentiment(r, lex.sentiment_positive, lex.sentiment_negative)
        rows.append({
            "review_id": r.review_id,
            "positive_count": s.positive_count,
            "negative_count": s.negative_count,
            "category": s.category.value,
            "predicted_rating": s.predicted_rating,
            "star_rating": r.star_rating,
            "difference": rating_difference(r, s),
        })
    if m.output_format == "json":
        return json.dumps(rows, indent=2) + "\n"
    head = "\t".join(rows[0]) + "\n" if m.header and rows else ""
    return head + _tsv([["NA" if v is None else v for v in row.values()] for row in rows])


def cmd_reviewers(m: RunManifest) -> str:
    if m.format != "amazon":
        raise UsageError("reviewer fields absent: reviewers needs the amazon format")
    stats = reviewer_stats(_records(m))
    stats.sort(key=lambda s: (s.helpful_ratio, s.customer_id))
    if m.output_format == "json":
        return json.dumps([
            {"customer_id": s.customer_id, "review_count": s.review_count,
             "total_helpful": s.total_helpful, "helpful_ratio": float(s.helpful_ratio)}
            for s in stats
        ], indent=2) + "\n"
    head = "customer_id\treview_count\ttotal_helpful\thelpful_ratio\n" if m.header else ""
    return head + _tsv([s.customer_id, s.review_count, s.total_helpful, _ratio_str(s.helpful_ratio)]
                       for s in stats)


COMMANDS = {
    "detect": cmd_detect,
    "eval": cmd_eval,
    "sentiment": cmd_sentiment,
    "reviewers": cmd_reviewers,
}


def _baseline(text: str) -> tuple[float, ...]:
    try:
        cells = tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of numbers: {text!r}") from None
    if len(cells) != 4 or any(c < 0 for c in cells):
        raise argparse.ArgumentTypeError("baseline needs four non-negative cells: a,b,c,d")
    return cells


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="review dataset (TSV)")
    common.add_argument("--format", choices=["labeled", "amazon"], default="labeled")
    common.add_argument("--combiner", choices=[m.value for m in CombineMode], default="vote")
    common.add_argument("--config", help="rule thresholds, key=value lines")
    common.add_argument("--output", help="write data here instead of stdout")
    common.add_argument("--output-format", choices=["tsv", "json"], default="tsv")
    common.add_argument("--lexicon-dir", help="directory overriding the bundled word lists")
    common.add_argument("--lenient", action="store_true",
                        help="skip malformed lines instead of failing")
    common.add_argument("--header", action="store_true", help="emit a TSV header line")

    parser = argparse.ArgumentParser(prog="fakereview", description="Rule-based fake review detection.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("detect", parents=[common], help="classify every review")
    ev = sub.add_parser("eval", parents=[common], help="score predictions against labels")
    ev.add_argument("--baseline", type=_baseline,
                    help="baseline cells +/+,+/-,-/+,-/- (default: coin-flip predictor)")
    ev.add_argument("--matrix-output", help="write the confusion matrix TSV here")
    sub.add_parser("sentiment", parents=[common], help="per-review sentiment and star gap")
    sub.add_parser("reviewers", parents=[common], help="helpful votes per review by customer")
    return parser


def run(argv: list[str] | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    with contextlib.redirect_stderr(stderr):
        return _run(argv, stdout, stderr)


def _run(argv, stdout, stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        manifest = RunManifest(
            command=args.command, input_path=args.input, format=args.format,
            combiner_mode=args.combiner, config_path=args.config,
            output_format=args.output_format, output_path=args.output,
            lexicon_dir=args.lexicon_dir, baseline=getattr(args, "baseline", None),
            lenient=args.lenient, header=args.header,
            matrix_output=getattr(args, "matrix_output", None),
        )
        text = COMMANDS[manifest.command](manifest)
        if manifest.output_path:
            Path(manifest.output_path).write_text(text, encoding="utf-8")
        else:
            stdout.write(text)
    except ParseError as e:
        print(f"error: {args.input}: {e}", file=stderr)
        return EXIT_USAGE
    except (UsageError, ConfigError, LexiconError, UnicodeDecodeError) as e:
        print(f"error: {e}", file=stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e.filename or ''}: {e.strerror or e}", file=stderr)
        return EXIT_USAGE
    return EXIT_OK


def main() -> None:
    logging.basicConfig(level=logging.ERROR, format="%(levelname)s: %(message)s")
    sys.exit(run())
