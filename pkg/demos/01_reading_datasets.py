# %% [markdown]
# # Reading review datasets
#
# Two TSV layouts are supported: the 15-column Amazon export and the
# 9-column labeled layout with a `__label1__` / `__label2__` column.
# Both small samples ship inside the package.

# %%
from fakereview.ingest import Mode, parse_labeled_tsv, read_dataset, write_tsv
from fakereview.lexicons import data_path

amazon, report = read_dataset(data_path("amazon_example.tsv"), "amazon")
print(f"{len(amazon)} amazon rows, {len(report.failures)} rejected")
for r in amazon[:3]:
    print(r.review_id, r.star_rating, r.helpful_votes, r.total_votes, r.product_title)

# %% [markdown]
# The labeled file carries ground truth but no reviewer fields.

# %%
labeled, _ = read_dataset(data_path("labeled_example.tsv"), "labeled")
for r in labeled:
    print(r.review_id, r.ground_label.name, r.star_rating, r.review_body[:50])

# %% [markdown]
# Strict mode stops at the first bad line. Lenient mode skips it and
# keeps a note of the line number and reason.

# %%
rows = [
    "1\t__label1__\t5\tN\tHome\tP1\tLamp\tGreat\tAmazing lamp",
    "2\t__label9__\t5\tN\tHome\tP1\tLamp\tGreat\tunknown label",
    "3\t__label2__\t7\tY\tHome\tP1\tLamp\tOk\trating out of range",
    "4\t__label2__\t3\tY\tHome\tP1\tLamp\tOk\tworks fine",
]
records, report = parse_labeled_tsv(rows, Mode.LENIENT)
print([r.review_id for r in records])
for lineno, reason in report.failures:
    print(f"line {lineno}: {reason}")

# %%
# round trip back to text
print(write_tsv(records, "labeled"))
