import io

import pytest
from hypothesis import given, strategies as st

from fakereview.lexicons import bundled_lexicons, data_path
from fakereview.textkit import (
    ALLOWED_CHARS, Lexicon, LexiconError, TextStats, load_lexicon, most_frequent, normalize_word,
    text_stats, tokenize, word_frequencies,
)

from .samples import PILLOW_REVIEW


@pytest.mark.parametrize("word, expected", [
    ("don't", "don't"),
    ("Great!!!", "great"),
    ("123", ""),
    ("Ph.D.", "phd"),
    ("Post-Masters", "post-masters"),
    ("", ""),
    ("café", "caf"),
])
def test_normalize_word(word, expected):
    assert normalize_word(word) == expected


@pytest.mark.parametrize("text, expected", [
    ("way to big", ["way", "to", "big"]),
    ("", []),
    ("So Comfy!!", ["so", "comfy"]),
    ("Showed up not how it's shown . Was", ["showed", "up", "not", "how", "it's", "shown", "was"]),
    ("tabs\tand\nnewlines", ["tabs", "and", "newlines"]),
])
def test_tokenize(text, expected):
    assert tokenize(text) == expected


@given(st.text())
def test_normalize_is_idempotent(word):
    once = normalize_word(word)
    assert normalize_word(once) == once
    assert set(once) <= ALLOWED_CHARS


@given(st.text())
def test_tokenize_matches_per_word_definition(text):
    # reference: split on whitespace, normalize each piece, drop empties
    expected = [w for w in (normalize_word(t) for t in text.split()) if w]
    tokens = tokenize(text)
    assert tokens == expected
    assert all(t and set(t) <= ALLOWED_CHARS for t in tokens)


@pytest.mark.parametrize("text, stats", [
    ("Ok", TextStats(1, 2)),
    ("", TextStats(0, 0)),
    ("way to big", TextStats(3, 10)),
    ("!!! ???", TextStats(0, 7)),
])
def test_text_stats(text, stats):
    assert text_stats(text) == stats


def test_word_frequencies():
    assert word_frequencies(["way", "to", "big"]) == {"way": 1, "to": 1, "big": 1}
    assert word_frequencies(["ok", "ok"]) == {"ok": 2}
    assert word_frequencies(tokenize(PILLOW_REVIEW))["pillow"] >= 4


@given(st.lists(st.sampled_from(["a", "b", "c", "dd"])))
def test_word_frequencies_sum(tokens):
    assert sum(word_frequencies(tokens).values()) == len(tokens)


def test_most_frequent_breaks_ties_alphabetically():
    freqs = word_frequencies(["pear", "apple", "pear", "fig", "apple", "kiwi"])
    assert most_frequent(freqs) == [("apple", 2), ("pear", 2), ("fig", 1), ("kiwi", 1)]
    assert most_frequent(freqs, 1) == [("apple", 2)]


def test_load_lexicon_skips_comments_and_blanks():
    lex = load_lexicon(io.StringIO(";; header\n\ngood\n"), "test")
    assert lex.words == {"good"}
    assert lex.name == "test"


def test_load_lexicon_normalizes_and_dedupes():
    lex = load_lexicon(io.StringIO("Ph.D.\nphd\n  Good \n"), "degrees")
    assert lex.words == {"phd", "good"}
    assert "Ph.D." in lex


def test_load_lexicon_counts_unusable_lines():
    lex = load_lexicon(io.StringIO("good\n123\n...\n"), "test")
    assert lex.words == {"good"}
    assert lex.skipped == 2


def test_load_lexicon_unreadable_stream_names_lexicon():
    class Broken:
        def __iter__(self):
            raise OSError("disk gone")

    with pytest.raises(LexiconError, match="sentiment_positive"):
        load_lexicon(Broken(), "sentiment_positive")


def test_lexicon_rejects_unnormalized_members():
    with pytest.raises(ValueError):
        Lexicon("bad", frozenset({"Good"}))


@given(st.text(max_size=20))
def test_membership_invariant_under_renormalization(word):
    lex = bundled_lexicons().sentiment_positive
    assert (word in lex) == (normalize_word(word) in lex)


def test_bundled_fixtures():
    lex = bundled_lexicons()
    assert "phenomenal" in lex.exaggeration_positive.words
    assert lex.exaggeration_positive.words == {
        "exceptional", "outstanding", "astonishing", "amazing", "phenomenal"}
    assert lex.exaggeration_negative.words == {"worst", "terrible", "appalling", "disastrous"}
    assert {"phd", "md", "dds"} <= lex.degrees.words
    assert lex.honorifics.words == {
        "dr", "mr", "mrs", "captain", "coach", "professor", "reverend"}
    with data_path("degrees.txt").open() as fh:
        assert "phd" in load_lexicon(fh, "degrees").words
