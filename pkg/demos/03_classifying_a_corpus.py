# %% [markdown]
# # Classifying a corpus
#
# `classify_corpus` runs every rule, including duplicate detection
# across the whole corpus, and combines the answers per review.

# %%
from collections import Counter

from fakereview.classifier import classify_corpus, reviewer_stats
from fakereview.ingest import read_dataset
from fakereview.lexicons import data_path

records, _ = read_dataset(data_path("handcrafted_labeled.tsv"), "labeled")
verdicts = classify_corpus(records)
for v in verdicts[:5] + verdicts[-3:]:
    print(v.to_tsv())

# %% [markdown]
# The default combiner is a vote: more fake rules than genuine ones
# flags the review, and ties go to genuine. The stricter `paper_and`
# combiner only flags duplicated, exaggerated, short reviews.

# %%
strict = classify_corpus(records, mode="paper_and")
print("vote flags     ", sum(v.is_fake for v in verdicts))
print("paper_and flags", [v.review_id for v in strict if v.is_fake])

# %%
fired = Counter(rule.value for v in verdicts for rule in v.fake_rules)
print(fired.most_common())

# %% [markdown]
# Reviewer summaries need the Amazon layout, which has customer ids.

# %%
amazon, _ = read_dataset(data_path("amazon_example.tsv"), "amazon")
for s in reviewer_stats(amazon)[:5]:
    print(s.customer_id, s.review_count, s.total_helpful, s.helpful_ratio)
