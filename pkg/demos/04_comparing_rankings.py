# %% [markdown]
# # Do the models agree on who is on top?
#
# We rank nodes by each model and compare the top-k lists with three
# measures: intersection similarity (overlap of every prefix up to k),
# Kendall tau-b and Spearman (both computed on the first ranking's top-k
# ids).

# %%
import csv
import tempfile
from pathlib import Path

from hypercent import SolverOptions, make_linear, make_max, npm_solve, random_hypergraph, similarity_curves
from hypercent.ingest import write_curves_csv

h = random_hypergraph(80, 60, seed=12, max_size=6)
opts = SolverOptions(tol=1e-12, max_iter=20_000)
lin = npm_solve(h, make_linear(), opts)
mx = npm_solve(h, make_max(10), opts)

# %%
rows = similarity_curves(lin.x, mx.x, 30)
for r in rows[::5]:
    tau = "   -" if r["kendall_tau"] is None else f"{r['kendall_tau']:+.3f}"
    print(f"k={r['k']:2d}  isim={r['isim']:.3f}  tau={tau}")

# %% [markdown]
# Comparing a ranking with itself gives one everywhere; correlations are
# undefined at `k = 1` and are left blank in the CSV.

# %%
out = Path(tempfile.mkdtemp()) / "linear_vs_linear.csv"
write_curves_csv(out, similarity_curves(lin.x, lin.x, 10), comment="self comparison")
print(out.read_text())
with open(out) as fh:
    body = [row for row in csv.reader(line for line in fh if not line.startswith("#"))][1:]
print("all isim equal to one:", all(float(r[1]) == 1.0 for r in body))
