# %% [markdown]
# # Evaluating predictions
#
# Predictions are compared with the ground-truth labels in a 2x2
# confusion matrix. A Pearson chi-squared test then asks whether the
# matrix differs from what a coin-flip predictor would produce.

# %%
from fakereview.classifier import classify_corpus
from fakereview.evaluation import (
    ConfusionMatrix, chi_square_contingency, compare_to_baseline, evaluate, metrics,
    uniform_baseline,
)
from fakereview.ingest import read_dataset
from fakereview.lexicons import data_path

records, _ = read_dataset(data_path("handcrafted_labeled.tsv"), "labeled")
report = evaluate(classify_corpus(records), records)
print(report.to_text())

# %% [markdown]
# ## A larger matrix
#
# 1999 labeled reviews, of which 999 are fake: 447 caught, 552 missed,
# 249 false alarms, 751 correctly passed.

# %%
m = ConfusionMatrix(tp=447, fn=552, fp=249, tn=751)
rep = metrics(m)
print("accuracy ", rep.accuracy, float(rep.accuracy))
print("precision", rep.precision_fake, float(rep.precision_fake))
print("recall   ", rep.recall_fake, float(rep.recall_fake))

# %%
# against the coin-flip baseline
print(uniform_baseline(m))
print(compare_to_baseline(m))

# %%
# against the class totals themselves as the expected column
res = chi_square_contingency([[999, 447], [999, 552], [1000, 249], [1000, 751]])
print(f"chi2={res.statistic:.4f} df={res.degrees_of_freedom} p={res.p_value:.3g}")
print("significant at 0.05:", res.significant_at_005)
