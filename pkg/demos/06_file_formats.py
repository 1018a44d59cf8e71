# %% [markdown]
# # Reading data and running the command line tool
#
# Two input formats are supported: a hyperedge list (one edge per line,
# optional `weight:` prefix) and an `nverts` / `simplices` file pair.
# Repeated edges are merged and their weights added.

# %%
import json
import subprocess
import sys
import tempfile
from pathlib import Path

from hypercent.ingest import hypergraph_stats, load_hyperedge_list, load_simplex_stream

work = Path(tempfile.mkdtemp())
(work / "trips.txt").write_text("# basket per line\nmilk,bread\nbread,milk\n2: eggs milk flour\n")
h, labels = load_hyperedge_list(work / "trips.txt")
print(labels.labels, h.incidence_by_edge, h.edge_weights)

(work / "nverts.txt").write_text("2\n3\n2\n")
(work / "simplices.txt").write_text("10 20\n10 20 30\n20 10\n")
h, labels = load_simplex_stream(work / "nverts.txt", work / "simplices.txt")
print(labels.labels, hypergraph_stats(h))

# %% [markdown]
# The same files drive the `hypercent` command. `compute` writes a JSON
# solution and `compare` turns two solutions into similarity curves.

# %%
def run(*args):
    res = subprocess.run([sys.executable, "-m", "hypercent.cli", *map(str, args)], capture_output=True, text=True)
    print("$ hypercent", *args, f"-> exit {res.returncode}")
    return res

run("compute", "--input", work / "trips.txt", "--model", "max", "--output", work / "max.json")
run("compute", "--input", work / "trips.txt", "--model", "linear", "--output", work / "lin.json")
print(json.dumps(json.loads((work / "max.json").read_text())["nodes"], indent=1))
print(run("compare", "--input", work / "lin.json", work / "max.json", "--topk", "4").stdout)
