"""Scoring verdicts against ground-truth labels.

Confusion-matrix cells use the actual/predicted sign convention:
``tp`` is actual fake predicted fake (+/+), ``fn`` actual fake predicted
genuine (+/-), ``fp`` actual genuine predicted fake (-/+), ``tn`` (-/-).
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .classifier import Verdict
from .ingest import Label, ReviewRecord


class EvaluationError(ValueError):
    pass


class DegenerateTableError(ValueError):
    """A contingency table row or column sums to zero."""


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fn: int
    fp: int
    tn: int

    def __post_init__(self):
        if min(self.cells) < 0:
            raise ValueError("confusion matrix cells must be non-negative")

    @property
    def cells(self) -> tuple[int, int, int, int]:
        """Cells in +/+, +/-, -/+, -/- order."""
        return (self.tp, self.fn, self.fp, self.tn)

    @property
    def total(self) -> int:
        return sum(self.cells)

    def to_dict(self) -> dict:
        return {"tp": self.tp, "fn": self.fn, "fp": self.fp, "tn": self.tn}


CELL_LABELS = ("+/+", "+/-", "-/+", "-/-")


def confusion_matrix(verdicts: Iterable[Verdict], records: Iterable[ReviewRecord]) -> ConfusionMatrix:
    labels = {r.review_id: r.ground_label for r in records}
    tp = fn = fp = tn = 0
    n = 0
    for v in verdicts:
        n += 1
        if v.review_id not in labels:
            raise EvaluationError(f"verdict for unknown review {v.review_id!r}")
        label = labels[v.review_id]
        if label is None:
            raise EvaluationError(f"review {v.review_id!r} has no ground label")
        if label is Label.FAKE:
            if v.is_fake:
                tp += 1
            else:
                fn += 1
        elif v.is_fake:
            fp += 1
        else:
            tn += 1
    if n == 0:
        raise EvaluationError("nothing to evaluate")
    return ConfusionMatrix(tp, fn, fp, tn)


@dataclass(frozen=True)
class MetricsReport:
    """Rates as exact fractions; ``None`` where the rate is 0/0."""

    accuracy: Fraction | None
    precision_fake: Fraction | None
    recall_fake: Fraction | None
    f1_fake: Fraction | None

    def to_dict(self) -> dict:
        return {k: (None if v is None else float(v)) for k, v in vars(self).items()}


def _ratio(num: int, den: int) -> Fraction | None:
    return Fraction(num, den) if den else None


def metrics(matrix: ConfusionMatrix) -> MetricsReport:
    m = matrix
    precision = _ratio(m.tp, m.tp + m.fp)
    recall = _ratio(m.tp, m.tp + m.fn)
    if precision is None or recall is None or precision + recall == 0:
        f1 = None
    else:
        f1 = 2 * precision * recall / (precision + recall)
    return MetricsReport(_ratio(m.tp + m.tn, m.total), precision, recall, f1)


# -- chi-squared -----------------------------------------------------------

_EPS = 1e-16
_TINY = 1e-300


def _gamma_p_series(a: float, x: float) -> float:
    # lower regularized gamma, converges fast for x < a + 1
    term = total = 1.0 / a
    ap = a
    for _ in range(10000):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _EPS:
            break
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))


def _gamma_q_contfrac(a: float, x: float) -> float:
    # upper regularized gamma by modified Lentz, for x >= a + 1
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, 10000):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return math.exp(-x + a * math.log(x) - math.lgamma(a)) * h


def gamma_q(a: float, x: float) -> float:
    """Upper regularized incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a)."""
    if a <= 0:
        raise ValueError("a must be positive")
    if x < 0:
        raise ValueError("x must be non-negative")
    if x == 0:
        return 1.0
    if x < a + 1.0:
        return min(1.0, max(0.0, 1.0 - _gamma_p_series(a, x)))
    return min(1.0, max(0.0, _gamma_q_contfrac(a, x)))


def chi_square_pvalue(statistic: float, df: int) -> float:
    """Probability that a chi-squared variable with ``df`` degrees of freedom exceeds ``statistic``."""
    if df < 1:
        raise ValueError("df must be a positive integer")
    if statistic < 0:
        raise ValueError("statistic must be non-negative")
    return gamma_q(df / 2.0, statistic / 2.0)


@dataclass(frozen=True)
class ChiSquareResult:
    statistic: float
    degrees_of_freedom: int
    p_value: float

    @property
    def significant_at_005(self) -> bool:
        return self.p_value < 0.05

    def to_dict(self) -> dict:
        return {
            "statistic": self.statistic,
            "degrees_of_freedom": self.degrees_of_freedom,
            "p_value": self.p_value,
            "significant_at_005": self.significant_at_005,
        }


def chi_square_contingency(table: Sequence[Sequence[float]]) -> ChiSquareResult:
    """Pearson's chi-squared test of independence, without continuity correction."""
    # exact rational arithmetic: the statistic is 0 exactly when columns are proportional
    try:
        rows = [[Fraction(x) for x in row] for row in table]
    except (TypeError, ValueError, OverflowError):
        raise ValueError("contingency counts must be finite numbers") from None
    if len(rows) < 2 or len({len(r) for r in rows}) != 1 or len(rows[0]) < 2:
        raise ValueError("table must be rectangular with at least 2 rows and 2 columns")
    if any(x < 0 for row in rows for x in row):
        raise ValueError("contingency counts must be non-negative")
    row_sums = [sum(r) for r in rows]
    col_sums = [sum(col) for col in zip(*rows)]
    if 0 in row_sums or 0 in col_sums:
        raise DegenerateTableError("a row or column of the table sums to zero")
    total = sum(row_sums)
    exact = Fraction(0)
    for row, rs in zip(rows, row_sums):
        for obs, cs in zip(row, col_sums):
            expected = rs * cs / total
            exact += (obs - expected) ** 2 / expected
    stat = float(exact)
    df = (len(rows) - 1) * (len(col_sums) - 1)
    return ChiSquareResult(stat, df, chi_square_pvalue(stat, df))


def uniform_baseline(matrix: ConfusionMatrix) -> tuple[float, float, float, float]:
    """Expected cells of a coin-flip predictor with the same actual-class totals."""
    fake = matrix.tp + matrix.fn
    genuine = matrix.fp + matrix.tn
    return (fake / 2, fake / 2, genuine / 2, genuine / 2)


def compare_to_baseline(matrix: ConfusionMatrix, baseline: Sequence[float] | None = None) -> ChiSquareResult:
    """Chi-squared test of the observed cells against a baseline column.

    The table has one row per cell (+/+, +/-, -/+, -/-) and two columns,
    baseline and observed. Rows that are zero in both columns carry no
    information and are dropped.
    """
    base = tuple(uniform_baseline(matrix) if baseline is None else baseline)
    if len(base) != 4:
        raise ValueError("baseline needs four cells: +/+, +/-, -/+, -/-")
    table = [[b, o] for b, o in zip(base, matrix.cells) if b or o]
    if len(table) < 2:
        raise DegenerateTableError("fewer than two non-empty cells to compare")
    return chi_square_contingency(table)


@dataclass(frozen=True)
class EvaluationReport:
    matrix: ConfusionMatrix
    metrics: MetricsReport
    baseline: tuple[float, ...]
    chi_square: ChiSquareResult | None

    def to_dict(self) -> dict:
        return {
            "confusion_matrix": self.matrix.to_dict(),
            "baseline": list(self.baseline),
            "metrics": self.metrics.to_dict(),
            "chi_square": None if self.chi_square is None else self.chi_square.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def matrix_tsv(self) -> str:
        lines = ["cell\tbaseline\tobserved"]
        for label, b, o in zip(CELL_LABELS, self.baseline, self.matrix.cells):
            lines.append(f"{label}\t{_num(b)}\t{o}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        def fmt(v):
            return "undefined" if v is None else f"{float(v):.6f}"

        rows = [("records", str(self.matrix.total))]
        rows += [(name, fmt(getattr(self.metrics, name)))
                 for name in ("accuracy", "precision_fake", "recall_fake", "f1_fake")]
        if self.chi_square is None:
            rows.append(("chi_square", "undefined (degenerate table)"))
        else:
            c = self.chi_square
            rows += [
                ("chi_square", f"{c.statistic:.4f}"),
                ("degrees_of_freedom", str(c.degrees_of_freedom)),
                ("p_value", f"{c.p_value:.6g}"),
                ("significant_at_0.05", "yes" if c.significant_at_005 else "no"),
            ]
        width = max(len(k) for k, _ in rows)
        return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def _num(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else f"{x:g}"


def evaluate(verdicts: Sequence[Verdict], records: Sequence[ReviewRecord],
             baseline: Sequence[float] | None = None) -> EvaluationReport:
    matrix = confusion_matrix(verdicts, records)
    base = tuple(uniform_baseline(matrix) if baseline is None else baseline)
    try:
        chi = compare_to_baseline(matrix, base)
    except DegenerateTableError:
        chi = None
    return EvaluationReport(matrix, metrics(matrix), base, chi)
