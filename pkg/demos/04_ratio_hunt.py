"""
Hunting for small domination ratios in random covers
====================================================

For random k-fold lifts G of a base F, record gamma(G) / (k gamma(F)).
On cubic bases the ratio can never drop below 3/5.
"""

from collections import Counter

from coverdom import petersen, ratio_experiment, summarize
from coverdom.graph import cartesian_product, cycle

for name, base, k in [
    ("Petersen", petersen(), 2),
    ("Petersen", petersen(), 3),
    ("C3xC3", cartesian_product(cycle(3), cycle(3)), 3),
    ("C9", cycle(9), 3),
]:
    records = ratio_experiment(base, k, trials=30, seed=2024)
    hist = Counter(str(r.c_obs) for r in records)
    print(f"{name:8s} k={k}  {summarize(records)}  ratios {dict(sorted(hist.items()))}")
