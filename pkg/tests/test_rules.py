import io

import pytest
from hypothesis import given, strategies as st

from fakereview.lexicons import bundled_lexicons
from fakereview.rules import (
    ConfigError, RuleConfig, RuleId, RuleVerdict, SentimentCategory as C, SentimentSummary, Signal,
    load_config, rule_exaggeration, rule_helpful_votes, rule_length, rule_photo,
    rule_product_mention, rule_profession, rule_sentiment_divergence, sentiment, sentiment_category,
)
from fakereview.textkit import Lexicon

from .samples import make_record, pillow_record

LEX = bundled_lexicons()
POS = Lexicon.from_words("pos", ["good", "great", "love"])
NEG = Lexicon.from_words("neg", ["bad", "poor", "hate"])


def float_transcription(p, n):
    """Branch-for-branch copy of the original double-precision code."""
    if p == 0 and n == 0:
        return "neutral"
    if p == 0:
        return "extremely negative"
    if n == 0:
        return "extremely positive"
    percent = float(p) / float(n)
    if 0.8 < percent and percent < 1.25:
        return "neutral"
    elif percent > 2:
        return "extremely positive"
    elif percent < 0.5:
        return "extremely negative"
    elif percent > 1.25:
        return "positive"
    elif percent < 0.8:
        return "negative"
    return "indeterminate"


def exaggerate(record):
    return rule_exaggeration(record, LEX.exaggeration_positive, LEX.exaggeration_negative)


def profession(record):
    return rule_profession(record, LEX.degrees, LEX.honorifics)


# exaggeration / profession ----------------------------------------------

def test_exaggeration_body():
    v = exaggerate(make_record(review_body="This pillow is phenomenal"))
    assert v.signal is Signal.FAKE and "phenomenal" in v.detail


def test_exaggeration_headline():
    v = exaggerate(make_record(review_headline="Worst", review_body="It arrived on Tuesday."))
    assert v.signal is Signal.FAKE


def test_exaggeration_absent():
    v = exaggerate(make_record(review_body="It works and does everything I need"))
    assert v.signal is Signal.GENUINE


@pytest.mark.parametrize("word", ["Exceptional", "Outstanding", "Astonishing", "Amazing",
                                  "Phenomenal", "Worst", "Terrible", "Appalling", "Disastrous"])
def test_exaggeration_fires_on_every_bin_word(word):
    assert exaggerate(make_record(review_body=f"honestly {word}!")).signal is Signal.FAKE
    assert exaggerate(make_record(review_headline=word.upper())).signal is Signal.FAKE


@pytest.mark.parametrize("body, signal", [
    ("As a Ph.D. I can confirm this works", Signal.FAKE),
    ("Professor recommended!", Signal.FAKE),
    ("my daughter loved it", Signal.GENUINE),
    ("Dr. Smith would approve", Signal.FAKE),
    ("mrs. jones loved it", Signal.FAKE),
    ("mr", Signal.FAKE),
])
def test_profession(body, signal):
    assert profession(make_record(review_body=body)).signal is signal


# length --------------------------------------------------------------------

def test_length_short():
    assert rule_length(make_record(review_body="Ok")).signal is Signal.FAKE


def test_length_long_review():
    assert rule_length(pillow_record()).signal is Signal.GENUINE


def test_length_boundaries():
    ten = "abcde " * 10  # 10 words, 60 chars
    assert rule_length(make_record(review_body=ten)).signal is Signal.FAKE
    eleven_51 = " ".join(["abcd"] * 10 + ["a"])  # 11 words, 51 chars
    assert len(eleven_51) == 51
    assert rule_length(make_record(review_body=eleven_51)).signal is Signal.GENUINE
    eleven_50 = " ".join(["abcd"] * 10)[:-1] + " a"  # 11 words, 50 chars
    assert len(eleven_50) == 50
    assert rule_length(make_record(review_body=eleven_50)).signal is Signal.FAKE


def test_length_ignores_headline():
    r = make_record(review_headline="word " * 30, review_body="Ok")
    assert rule_length(r).signal is Signal.FAKE


@given(st.lists(st.text(alphabet="abcxyz!", min_size=1, max_size=8), max_size=30),
       st.text(alphabet="abcxyz", min_size=1, max_size=8))
def test_length_monotone_when_appending(words, extra):
    body = " ".join(words)
    if rule_length(make_record(review_body=body)).signal is Signal.GENUINE:
        longer = make_record(review_body=body + " " + extra)
        assert rule_length(longer).signal is Signal.GENUINE


# helpful votes / photo ----------------------------------------------------

def test_helpful_votes():
    assert rule_helpful_votes(pillow_record()).signal is Signal.GENUINE
    assert rule_helpful_votes(make_record(helpful_votes=0, total_votes=0)).signal is Signal.ABSTAIN
    assert rule_helpful_votes(make_record()).signal is Signal.ABSTAIN
    assert rule_helpful_votes(make_record(helpful_votes=10, total_votes=10)).signal is Signal.GENUINE
    assert rule_helpful_votes(make_record(helpful_votes=9, total_votes=10)).signal is Signal.ABSTAIN


def test_photo():
    assert rule_photo(make_record(has_images=True)).signal is Signal.GENUINE
    assert rule_photo(make_record()).signal is Signal.ABSTAIN
    assert rule_photo(make_record(has_images=False)).signal is Signal.ABSTAIN


# product mention ----------------------------------------------------------

def mention(record, config=RuleConfig()):
    return rule_product_mention(record, config, LEX.stopwords)


def test_product_mention_pillow():
    v = mention(pillow_record())
    assert v.signal is Signal.GENUINE and "pillow" in v.detail


def test_product_mention_monopoly():
    r = make_record(product_title="Monopoly Junior Board Game", product_category="Toys",
                    review_body="Excellent!!!")
    assert mention(r).signal is Signal.FAKE


def test_product_mention_category_counts():
    r = make_record(product_title="Thing", product_category="Toys", review_body="great toys here")
    assert mention(r).signal is Signal.GENUINE


def test_product_mention_abstains_without_terms():
    r = make_record(product_title="The Of An Is", product_category="A", review_body="whatever")
    assert mention(r).signal is Signal.ABSTAIN


def test_product_mention_min_token_len():
    r = make_record(product_title="Go Kit", product_category="", review_body="kit is go")
    assert mention(r).signal is Signal.GENUINE
    assert mention(r, RuleConfig(mention_min_token_len=4)).signal is Signal.ABSTAIN


# sentiment ---------------------------------------------------------------

@pytest.mark.parametrize("p, n, category", [
    (0, 0, C.NEUTRAL),
    (3, 1, C.EXTREMELY_POSITIVE),
    (3, 2, C.POSITIVE),
    (1, 2, C.NEGATIVE),
    (4, 5, C.INDETERMINATE),
    (5, 4, C.INDETERMINATE),
    (0, 7, C.EXTREMELY_NEGATIVE),
    (7, 0, C.EXTREMELY_POSITIVE),
    (1, 1, C.NEUTRAL),
    (2, 1, C.POSITIVE),   # exactly 2 is not > 2
    (1, 3, C.EXTREMELY_NEGATIVE),
])
def test_sentiment_category(p, n, category):
    assert sentiment_category(p, n) is category


def test_sentiment_category_matches_float_transcription():
    for p in range(101):
        for n in range(101):
            assert sentiment_category(p, n).value == float_transcription(p, n), (p, n)


@given(st.integers(1, 500), st.integers(1, 500), st.integers(1, 50))
def test_sentiment_category_scale_invariant(p, n, k):
    assert sentiment_category(k * p, k * n) is sentiment_category(p, n)


def test_sentiment_category_rejects_negative():
    with pytest.raises(ValueError):
        sentiment_category(-1, 0)


@pytest.mark.parametrize("body, expected", [
    ("good and great", SentimentSummary(2, 0, C.EXTREMELY_POSITIVE, 5)),
    ("it arrived", SentimentSummary(0, 0, C.NEUTRAL, 3)),
    ("good but bad", SentimentSummary(1, 1, C.NEUTRAL, 3)),
    ("good good good good bad bad bad bad bad", SentimentSummary(4, 5, C.INDETERMINATE, 0)),
    ("not good", SentimentSummary(1, 0, C.EXTREMELY_POSITIVE, 5)),
])
def test_sentiment(body, expected):
    assert sentiment(make_record(review_body=body), POS, NEG) == expected


def test_sentiment_ignores_headline():
    r = make_record(review_headline="bad bad", review_body="good")
    assert sentiment(r, POS, NEG).negative_count == 0


@given(st.lists(st.sampled_from(["good", "bad", "meh", "love", "hate", "x"]), max_size=20),
       st.sampled_from(["good", "great", "love"]))
def test_adding_positive_word_never_lowers_count(words, extra):
    body = " ".join(words)
    before = sentiment(make_record(review_body=body), POS, NEG).positive_count
    after = sentiment(make_record(review_body=body + " " + extra), POS, NEG).positive_count
    assert after == before + 1


@given(st.integers(0, 100), st.integers(0, 100))
def test_summary_invariants(p, n):
    body = " ".join(["good"] * p + ["bad"] * n)
    s = sentiment(make_record(review_body=body), POS, NEG)
    assert (s.positive_count, s.negative_count) == (p, n)
    assert (s.predicted_rating == 0) == (s.category is C.INDETERMINATE)
    if p == n == 0:
        assert s.category is C.NEUTRAL


def test_divergence():
    ext_pos = SentimentSummary(2, 0, C.EXTREMELY_POSITIVE, 5)
    pos = SentimentSummary(3, 2, C.POSITIVE, 4)
    ind = SentimentSummary(4, 5, C.INDETERMINATE, 0)
    assert rule_sentiment_divergence(make_record(star_rating=1), ext_pos).signal is Signal.FAKE
    assert rule_sentiment_divergence(make_record(star_rating=5), pos).signal is Signal.GENUINE
    assert rule_sentiment_divergence(make_record(star_rating=1), ind).signal is Signal.ABSTAIN
    assert rule_sentiment_divergence(make_record(star_rating=3), ext_pos).signal is Signal.FAKE
    loose = RuleConfig(divergence_threshold=3)
    assert rule_sentiment_divergence(make_record(star_rating=3), ext_pos, loose).signal is Signal.GENUINE


# config --------------------------------------------------------------------

def test_load_config():
    cfg = load_config(io.StringIO("# thresholds\nmin_words = 5\nhelpful_votes_threshold=3  # low\n"))
    assert cfg == RuleConfig(min_words=5, helpful_votes_threshold=3)


@pytest.mark.parametrize("text", ["bogus=1\n", "min_words=abc\n", "min_words\n", "min_chars=0\n",
                                  "divergence_threshold=-2\n"])
def test_load_config_errors(text):
    with pytest.raises(ConfigError):
        load_config(io.StringIO(text))


def test_verdict_detail_required():
    with pytest.raises(ValueError):
        RuleVerdict(RuleId.LENGTH, Signal.FAKE, "")


# determinism ----------------------------------------------------------------

record_bodies = st.text(alphabet="abc Phenomenal worst Dr. pillow!", max_size=80)


@given(record_bodies, st.integers(1, 5))
def test_rules_are_deterministic(body, stars):
    r = make_record(review_body=body, star_rating=stars, product_title="Pillow")
    runs = []
    for _ in range(2):
        s = sentiment(r, LEX.sentiment_positive, LEX.sentiment_negative)
        runs.append((exaggerate(r), profession(r), rule_length(r), rule_helpful_votes(r),
                     mention(r), rule_photo(r), s, rule_sentiment_divergence(r, s)))
    assert runs[0] == runs[1]
