"""The word lists the rules need, loaded together from a directory."""
from __future__ import annotations

from dataclasses import dataclass, fields
from importlib import resources
from pathlib import Path

from .textkit import Lexicon, LexiconError, load_lexicon

FILENAMES = {
    "exaggeration_positive": "exaggeration_positive.txt",
    "exaggeration_negative": "exaggeration_negative.txt",
    "degrees": "degrees.txt",
    "honorifics": "honorifics.txt",
    "sentiment_positive": "sentiment_positive.txt",
    "sentiment_negative": "sentiment_negative.txt",
    "stopwords": "stopwords.txt",
}


@dataclass(frozen=True)
class LexiconSet:
    exaggeration_positive: Lexicon
    exaggeration_negative: Lexicon
    degrees: Lexicon
    honorifics: Lexicon
    sentiment_positive: Lexicon
    sentiment_negative: Lexicon
    stopwords: Lexicon


def data_path(name: str):
    """Path-like handle to a file bundled in ``fakereview/data``."""
    return resources.files("fakereview").joinpath("data", name)


def _load_file(path, name: str) -> Lexicon:
    try:
        with path.open("r", encoding="utf-8") as fh:
            return load_lexicon(fh, name)
    except OSError as e:
        raise LexiconError(f"cannot read lexicon {name!r} from {path}: {e}") from e


def load_lexicons(directory: str | Path | None = None) -> LexiconSet:
    """Load every list from ``directory``; files missing there fall back to the bundled copy."""
    loaded = {}
    for f in fields(LexiconSet):
        filename = FILENAMES[f.name]
        path = Path(directory) / filename if directory is not None else None
        if path is None or not path.exists():
            path = data_path(filename)
        loaded[f.name] = _load_file(path, f.name)
    return LexiconSet(**loaded)


_bundled: LexiconSet | None = None


def bundled_lexicons() -> LexiconSet:
    global _bundled
    if _bundled is None:
        _bundled = load_lexicons()
    return _bundled
