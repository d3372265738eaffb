"""Rule-based fake review detection for Amazon-style review datasets."""
from .classifier import (
    CombineMode, ContractError, DuplicateIndex, ReviewerStats, Verdict,
    build_duplicate_index, classify_corpus, combine, reviewer_stats, rule_duplicate,
)
from .evaluation import (
    ChiSquareResult, ConfusionMatrix, DegenerateTableError, EvaluationError, MetricsReport,
    chi_square_contingency, chi_square_pvalue, confusion_matrix, evaluate, metrics,
)
from .ingest import Label, ParseError, ParseReport, ReviewRecord, parse_amazon_tsv, parse_labeled_tsv, read_dataset
from .lexicons import LexiconSet, bundled_lexicons, load_lexicons
from .rules import (
    RuleConfig, RuleId, RuleVerdict, SentimentCategory, SentimentSummary, Signal,
    sentiment, sentiment_category,
)
from .textkit import Lexicon, load_lexicon, normalize_word, text_stats, tokenize, word_frequencies

__version__ = "0.1.0"
