"""Reading and writing hypergraphs, node weights, solutions and curve data.

Two hypergraph input formats are supported.

Hyperedge list
    One edge per line: an optional ``weight:`` prefix followed by member
    labels separated by whitespace or commas. Blank lines and lines starting
    with ``#`` are skipped. Example: ``2.5: a b c``.

Simplex stream
    A pair of integer files, one value per line (or whitespace separated):
    ``nverts`` holds the size of each simplex, ``simplices`` the concatenated
    member ids. Repeated simplices become edge weights.
"""
from __future__ import annotations

import csv
import json
import math
import re
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .hypergraph import Hypergraph, HypergraphError, build_hypergraph

_SPLIT = re.compile(r"[\s,]+")


class InputError(ValueError):
    """Malformed or inconsistent input file."""


class LabelMap:
    """Bijection between external string labels and dense ids ``0..n-1``."""

    def __init__(self, labels: Sequence[str] = ()):
        self._labels: list[str] = []
        self._ids: dict[str, int] = {}
        for lab in labels:
            if str(lab) in self._ids:
                raise ValueError(f"duplicate label {lab!r}")
            self.add(lab)

    def add(self, label) -> int:
        label = str(label)
        i = self._ids.get(label)
        if i is None:
            i = len(self._labels)
            self._ids[label] = i
            self._labels.append(label)
        return i

    def id(self, label) -> int:
        return self._ids[str(label)]

    def label(self, i: int) -> str:
        return self._labels[i]

    @property
    def labels(self) -> list[str]:
        return list(self._labels)

    def __contains__(self, label):
        return str(label) in self._ids

    def __len__(self):
        return len(self._labels)

    def __eq__(self, other):
        return isinstance(other, LabelMap) and self._labels == other._labels

    def __repr__(self):
        return f"LabelMap({len(self)} labels)"

    @classmethod
    def identity(cls, n: int) -> "LabelMap":
        return cls([str(i) for i in range(n)])


def _read_lines(path):
    text = Path(path).read_text()
    if not text.strip():
        raise InputError(f"{path}: file is empty")
    return text.splitlines()


def parse_hyperedge_lines(lines, source="<input>"):
    """Parse hyperedge-list lines into ``(members, weight)`` label pairs."""
    records = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        weight = 1.0
        if ":" in line:
            head, line = line.split(":", 1)
            try:
                weight = float(head)
            except ValueError:
                raise InputError(f"{source}:{lineno}: bad weight {head.strip()!r}") from None
            if not (math.isfinite(weight) and weight > 0):
                raise InputError(f"{source}:{lineno}: weight must be positive, got {weight}")
        members = [tok for tok in _SPLIT.split(line.strip()) if tok]
        if not members:
            raise InputError(f"{source}:{lineno}: edge has no members")
        records.append((members, weight))
    if not records:
        raise InputError(f"{source}: no edges found")
    return records


def load_node_weights(path, labels: LabelMap) -> np.ndarray:
    """Read ``label weight`` lines; unlisted nodes get weight 1."""
    nu = np.ones(len(labels))
    for lineno, raw in enumerate(_read_lines(path), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"{path}:{lineno}: expected 'label weight'")
        lab, val = parts
        if lab not in labels:
            raise InputError(f"{path}:{lineno}: unknown node label {lab!r}")
        try:
            w = float(val)
        except ValueError:
            raise InputError(f"{path}:{lineno}: bad weight {val!r}") from None
        if not (math.isfinite(w) and w > 0):
            raise InputError(f"{path}:{lineno}: node weight must be positive, got {w}")
        nu[labels.id(lab)] = w
    return nu


def load_hyperedge_list(path, node_weights_path=None) -> tuple[Hypergraph, LabelMap]:
    """Load a hyperedge-list file.

    Node ids are assigned in order of first appearance. Identical edges are
    merged and their weights summed.
    """
    records = parse_hyperedge_lines(_read_lines(path), source=str(path))
    labels = LabelMap()
    edges = [([labels.add(lab) for lab in members], w) for members, w in records]
    nu = load_node_weights(node_weights_path, labels) if node_weights_path else None
    try:
        h = build_hypergraph(edges, node_weights=nu, n=len(labels))
    except HypergraphError as err:
        raise InputError(f"{path}: {err}") from err
    return h, labels


def _read_ints(path):
    try:
        return np.array(Path(path).read_text().split(), dtype=np.int64)
    except ValueError as err:
        raise InputError(f"{path}: {err}") from err


def load_simplex_stream(nverts_path, simplices_path, node_weights_path=None) -> tuple[Hypergraph, LabelMap]:
    """Load an ``nverts``/``simplices`` file pair, one hyperedge per simplex.

    Labels are the integer vertex ids as strings; internal ids follow
    ascending numeric label order. Any timestamps file is ignored.
    """
    nverts = _read_ints(nverts_path)
    flat = _read_ints(simplices_path)
    if nverts.size == 0 or flat.size == 0:
        raise InputError("simplex stream is empty")
    if np.any(nverts < 1):
        raise InputError(f"{nverts_path}: simplex sizes must be positive")
    if int(nverts.sum()) != flat.size:
        raise InputError(
            f"sum of nverts ({int(nverts.sum())}) does not match the number of simplex members ({flat.size})"
        )
    uniq, inverse = np.unique(flat, return_inverse=True)
    labels = LabelMap([str(v) for v in uniq])
    bounds = np.concatenate([[0], np.cumsum(nverts)])
    edges = ((inverse[bounds[k]:bounds[k + 1]].tolist(), 1.0) for k in range(nverts.size))
    nu = load_node_weights(node_weights_path, labels) if node_weights_path else None
    return build_hypergraph(edges, node_weights=nu, n=len(labels)), labels


def _fmt_weight(w: float) -> str:
    return str(int(w)) if float(w).is_integer() and abs(w) < 2**53 else repr(float(w))


def save_hyperedge_list(path, h: Hypergraph, labels: Optional[LabelMap] = None):
    labels = labels or LabelMap.identity(h.n)
    with open(path, "w") as fh:
        for e, w in zip(h.incidence_by_edge, h.edge_weights):
            fh.write(f"{_fmt_weight(w)}: {' '.join(labels.label(i) for i in e)}\n")


def save_node_weights(path, h: Hypergraph, labels: Optional[LabelMap] = None):
    labels = labels or LabelMap.identity(h.n)
    with open(path, "w") as fh:
        for i, w in enumerate(h.node_weights):
            fh.write(f"{labels.label(i)} {_fmt_weight(w)}\n")


def prune_isolated(h: Hypergraph, labels: Optional[LabelMap] = None):
    """Drop nodes that belong to no edge and renumber the rest.

    Returns ``(hypergraph, labels, report)``; ``report["removed"]`` lists the
    labels of dropped nodes.
    """
    labels = labels or LabelMap.identity(h.n)
    keep = np.flatnonzero(h.node_degrees > 0)
    removed = [labels.label(i) for i in np.flatnonzero(h.node_degrees == 0)]
    report = {"n_before": h.n, "n_after": int(keep.size), "removed": removed}
    if not removed:
        return h, labels, report
    remap = np.full(h.n, -1)
    remap[keep] = np.arange(keep.size)
    edges = [[int(remap[i]) for i in e] for e in h.incidence_by_edge]
    new = Hypergraph(edges, h.edge_weights, h.node_weights[keep], n=int(keep.size))
    return new, LabelMap([labels.label(i) for i in keep]), report


def hypergraph_stats(h: Hypergraph) -> dict:
    """Summary statistics of the kind reported for benchmark datasets."""
    sizes = h.edge_sizes
    w = h.edge_weights
    return {
        "n": h.n,
        "m": h.m,
        "max_edge_weight": float(w.max()),
        "mean_edge_weight": float(w.mean()),
        "var_edge_weight": float(w.var()),
        "max_edge_size": int(sizes.max()),
        "mean_edge_size": float(sizes.mean()),
    }


# -- solutions ----------------------------------------------------------

def _max_normalized(v):
    v = np.asarray(v, dtype=float)
    return v / v.max()


def solution_to_dict(sol, h: Hypergraph, labels: LabelMap, model, opts, conditions=None, max_normalize=False) -> dict:
    x_max = _max_normalized(sol.x)
    y_max = _max_normalized(sol.y)
    nodes = []
    for i in range(h.n):
        row = {"label": labels.label(i), "score": float(sol.x[i])}
        if max_normalize:
            row["score_max_normalized"] = float(x_max[i])
        nodes.append(row)
    edges = []
    for k, e in enumerate(h.incidence_by_edge):
        row = {"members": [labels.label(i) for i in e], "weight": float(h.edge_weights[k]), "score": float(sol.y[k])}
        if max_normalize:
            row["score_max_normalized"] = float(y_max[k])
        edges.append(row)
    out = {
        "model": {
            "name": model.name,
            "params": dict(model.params),
            "maps": {"f": str(model.f), "g": str(model.g), "phi": str(model.phi), "psi": str(model.psi)},
        },
        "options": opts.as_dict(),
        "lambda": float(sol.lam),
        "mu": float(sol.mu),
        "converged": bool(sol.converged),
        "iterations": int(sol.iterations),
        "residuals": [float(r) for r in sol.residuals],
    }
    if conditions is not None:
        out["conditions"] = {"regime": conditions.regime, "rho": conditions.rho, "connected": conditions.connected}
    out["nodes"] = nodes
    out["edges"] = edges
    return out


def write_solution(path, sol, h, labels, model, opts, conditions=None, max_normalize=False):
    data = solution_to_dict(sol, h, labels, model, opts, conditions, max_normalize)
    with open(path, "w") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")


def read_solution(path) -> dict:
    """Load a solution file written by :func:`write_solution`.

    Adds ``node_labels``/``node_scores`` and ``edge_scores`` arrays for
    convenience.
    """
    try:
        data = json.loads(Path(path).read_text())
        data["node_labels"] = [row["label"] for row in data["nodes"]]
        data["node_scores"] = np.array([row["score"] for row in data["nodes"]], dtype=float)
        data["edge_scores"] = np.array([row["score"] for row in data["edges"]], dtype=float)
    except (OSError, ValueError, KeyError, TypeError) as err:
        raise InputError(f"{path}: not a solution file ({err})") from err
    return data


def write_scores_csv(path, labels: Sequence[str], scores):
    """Label, raw unit-norm score and max-normalized score per entity."""
    scores = np.asarray(scores, dtype=float)
    scaled = _max_normalized(scores)
    with open(path, "w", newline="") as fh:
        wr = csv.writer(fh)
        wr.writerow(["label", "score", "score_max_normalized"])
        for lab, s, t in zip(labels, scores, scaled):
            wr.writerow([lab, repr(float(s)), repr(float(t))])


def write_curves_csv(path, rows, comment: Optional[str] = None):
    """Write similarity-vs-k rows; undefined correlations are left blank."""
    with open(path, "w", newline="") as fh:
        if comment:
            fh.write(f"# {comment}\n")
        wr = csv.writer(fh)
        wr.writerow(["k", "isim", "kendall_tau", "spearman"])
        for row in rows:
            wr.writerow([row["k"]] + ["" if row[c] is None else repr(float(row[c])) for c in ("isim", "kendall_tau", "spearman")])
