# %% [markdown]
# # Individual rules
#
# Each rule looks at one review and answers FAKE, GENUINE or ABSTAIN,
# with a short reason whenever it does not abstain.

# %%
from fakereview.ingest import ReviewRecord
from fakereview.lexicons import bundled_lexicons
from fakereview.rules import (
    RuleConfig, rule_exaggeration, rule_helpful_votes, rule_length, rule_photo,
    rule_product_mention, rule_profession, sentiment, sentiment_category, rating_difference,
)

lex = bundled_lexicons()
cfg = RuleConfig()


def review(body, rating=5, helpful=0, total=0, title="Memory Foam Pillow", headline=""):
    return ReviewRecord(review_id="demo", product_id="P1", product_title=title,
                        product_category="Home", star_rating=rating, verified_purchase=True,
                        review_headline=headline, review_body=body,
                        helpful_votes=helpful, total_votes=total)


short = review("Amazing! Best pillow ever.")
long = review("I am a chiropractor, Dr. Lee, D.C. I sleep on my side and this pillow "
              "keeps my neck straight. The foam is firm but the cover is soft and it "
              "washes well. After two months it has not flattened.", rating=4,
              helpful=12, total=14)

for name, rec in (("short", short), ("long", long)):
    print(f"--- {name}")
    for v in (rule_exaggeration(rec, lex.exaggeration_positive, lex.exaggeration_negative),
              rule_profession(rec, lex.degrees, lex.honorifics),
              rule_length(rec, cfg),
              rule_helpful_votes(rec, cfg),
              rule_product_mention(rec, cfg, lex.stopwords),
              rule_photo(rec)):
        print(f"{v.rule_id.value:16} {v.signal.value:8} {v.detail}")

# %% [markdown]
# ## Sentiment
#
# Counts of positive and negative words map to a category and a
# predicted star rating. A count ratio of exactly 4:5 or 5:4 falls
# between the branches and is reported as indeterminate.

# %%
for p, n in ((0, 0), (3, 0), (0, 2), (1, 1), (5, 2), (2, 3), (4, 5), (5, 4), (9, 2)):
    print(p, n, sentiment_category(p, n).value)

# %%
rec = review("Good value but the seams are poor and the smell is awful and cheap.", rating=5)
s = sentiment(rec, lex.sentiment_positive, lex.sentiment_negative)
print(s.positive_count, s.negative_count, s.category.value, s.predicted_rating,
      rating_difference(rec, s))
