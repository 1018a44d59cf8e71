"""Command line interface: ``hypercent {compute,compare,generate,oracle}``.

Exit codes: 0 success, 2 no convergence, 3 input error, 4 precondition
violation.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys

import numpy as np

from . import ingest
from .generators import SunflowerSpec, generate_sunflower, random_hypergraph
from .hypergraph import HypergraphError
from .maps import make_model
from .oracles import dense_perron, linear_edge_matrix, linear_node_matrix, sunflower_ratio, tensor_z_residual
from .ranking import similarity_curves
from .solver import PreconditionError, SolverError, SolverOptions, check_conditions, npm_solve

EXIT_OK = 0
EXIT_NO_CONVERGENCE = 2
EXIT_INPUT = 3
EXIT_PRECONDITION = 4


class CommandError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _load(paths, node_weights=None):
    try:
        if len(paths) == 1:
            return ingest.load_hyperedge_list(paths[0], node_weights)
        if len(paths) == 2:
            return ingest.load_simplex_stream(paths[0], paths[1], node_weights)
    except (OSError, ingest.InputError, HypergraphError) as err:
        raise CommandError(str(err), EXIT_INPUT) from err
    raise CommandError("--input takes a hyperedge list or an nverts/simplices pair", EXIT_INPUT)


def _open_out(path):
    return open(path, "w", newline="") if path else contextlib.nullcontext(sys.stdout)


def cmd_compute(args) -> int:
    h, labels = _load(args.input, args.node_weights)
    h, labels, report = ingest.prune_isolated(h, labels)
    try:
        model = make_model(args.model, p=args.p, alpha=args.alpha)
        x0 = y0 = None
        if args.seed is not None:
            rng = np.random.default_rng(args.seed)
            x0 = rng.uniform(0.5, 1.5, h.n)
            y0 = rng.uniform(0.5, 1.5, h.m)
        opts = SolverOptions(tol=args.tol, max_iter=args.max_iter, norm=args.norm, x0=x0, y0=y0)
    except ValueError as err:
        raise CommandError(str(err), EXIT_INPUT) from err

    log = sys.stdout if args.output else sys.stderr
    if report["removed"]:
        print(f"pruned {len(report['removed'])} isolated node(s)", file=log)
    cond = check_conditions(h, model)
    print(f"model: {model.describe()}", file=log)
    print(f"conditions: {cond}", file=log)
    try:
        sol = npm_solve(h, model, opts)
    except PreconditionError as err:
        raise CommandError(str(err), EXIT_PRECONDITION) from err
    except SolverError as err:
        raise CommandError(str(err), EXIT_NO_CONVERGENCE) from err
    print(f"iterations: {sol.iterations} converged: {sol.converged}", file=log)
    print(f"residuals: x={sol.residuals[0]:.3e} y={sol.residuals[1]:.3e}", file=log)
    if args.topk:
        order = np.lexsort((np.arange(h.n), -sol.x))[: args.topk]
        for rank_, i in enumerate(order, 1):
            print(f"{rank_:4d} {labels.label(i)} {sol.x[i]!r}", file=log)

    data = ingest.solution_to_dict(sol, h, labels, model, opts, cond, args.max_normalize)
    with _open_out(args.output) as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")
    return EXIT_OK if sol.converged else EXIT_NO_CONVERGENCE


def cmd_compare(args) -> int:
    if len(args.input) != 2:
        raise CommandError("compare needs exactly two solution files", EXIT_INPUT)
    a, b = (ingest.read_solution(p) for p in args.input)
    if sorted(a["node_labels"]) != sorted(b["node_labels"]):
        raise CommandError("solutions are over different node sets", EXIT_INPUT)
    pos = {lab: i for i, lab in enumerate(b["node_labels"])}
    s1 = a["node_scores"]
    s2 = b["node_scores"][[pos[lab] for lab in a["node_labels"]]]
    K = args.topk if args.topk is not None else min(100, s1.size)
    try:
        rows = similarity_curves(s1, s2, K)
    except ValueError as err:
        raise CommandError(str(err), EXIT_INPUT) from err
    comment = "correlations restricted to top-k ids of the first solution"
    if args.output:
        ingest.write_curves_csv(args.output, rows, comment)
    else:
        sys.stdout.write(f"# {comment}\nk,isim,kendall_tau,spearman\n")
        for r in rows:
            vals = ["" if r[c] is None else repr(float(r[c])) for c in ("isim", "kendall_tau", "spearman")]
            sys.stdout.write(",".join([str(r["k"]), *vals]) + "\n")
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        if args.kind == "sunflower":
            if not args.sizes:
                raise ValueError("--sizes is required for a sunflower")
            h = generate_sunflower(SunflowerSpec(tuple(int(s) for s in args.sizes.split(","))))
        else:
            h = random_hypergraph(
                args.nodes, args.edges, args.seed, uniform=args.uniform, max_size=args.max_size,
            )
    except ValueError as err:
        raise CommandError(str(err), EXIT_INPUT) from err
    if args.output:
        ingest.save_hyperedge_list(args.output, h)
    else:
        for e, w in zip(h.incidence_by_edge, h.edge_weights):
            sys.stdout.write(f"{ingest._fmt_weight(w)}: {' '.join(map(str, e))}\n")
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.kind == "sunflower":
        out = {"ratio": sunflower_ratio(args.r, args.beta)}
    else:
        if not args.input:
            raise CommandError("--input is required", EXIT_INPUT)
        h, labels = _load(args.input, args.node_weights)
        if args.kind == "linear":
            x, xval, _ = dense_perron(linear_node_matrix(h))
            y, yval, _ = dense_perron(linear_edge_matrix(h))
            out = {
                "eigenvalue": xval,
                "edge_eigenvalue": yval,
                "nodes": [{"label": labels.label(i), "score": float(x[i])} for i in range(h.n)],
                "edge_scores": y.tolist(),
            }
        else:
            if not args.solution:
                raise CommandError("--solution is required for the tensor oracle", EXIT_INPUT)
            sol = ingest.read_solution(args.solution)
            pos = {lab: i for i, lab in enumerate(sol["node_labels"])}
            x = np.array([sol["node_scores"][pos[labels.label(i)]] for i in range(h.n)])
            try:
                out = {"residual": tensor_z_residual(h, x, args.p)}
            except ValueError as err:
                raise CommandError(str(err), EXIT_PRECONDITION) from err
    with _open_out(args.output) as fh:
        json.dump(out, fh, indent=1)
        fh.write("\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypercent", description=__doc__.splitlines()[0])
    parser.add_argument("--json-errors", action="store_true", help="report errors as JSON on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="node and edge centralities of a hypergraph")
    p.add_argument("--input", nargs="+", required=True, metavar="PATH",
                   help="hyperedge list, or nverts and simplices files")
    p.add_argument("--node-weights", metavar="PATH")
    p.add_argument("--model", choices=["linear", "logexp", "max"], default="linear")
    p.add_argument("--p", type=float, default=1.0, help="log-exp exponent (g = x^(1/(p+1)))")
    p.add_argument("--alpha", type=float, default=10.0, help="max-model exponent")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--max-iter", type=int, default=1000)
    p.add_argument("--norm", choices=["l1", "l2", "linf"], default="l2")
    p.add_argument("--seed", type=int, help="random positive starting vectors")
    p.add_argument("--output", metavar="PATH", help="solution JSON (default: stdout)")
    p.add_argument("--topk", type=int, help="print the top-k nodes")
    p.add_argument("--max-normalize", action="store_true", help="also store max-normalized scores")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("compare", help="similarity curves between two solutions")
    p.add_argument("--input", nargs=2, required=True, metavar="SOLUTION")
    p.add_argument("--topk", type=int, help="largest k (default min(100, n))")
    p.add_argument("--output", metavar="PATH", help="CSV (default: stdout)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("generate", help="write a synthetic hyperedge list")
    p.add_argument("kind", choices=["sunflower", "random"])
    p.add_argument("--sizes", help="comma separated petal sizes, core included")
    p.add_argument("--nodes", type=int, default=8)
    p.add_argument("--edges", type=int, default=6)
    p.add_argument("--uniform", type=int, help="edge size for a uniform hypergraph")
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oracle", help="reference computations for debugging")
    p.add_argument("kind", choices=["linear", "tensor", "sunflower"])
    p.add_argument("--input", nargs="+", metavar="PATH")
    p.add_argument("--node-weights", metavar="PATH")
    p.add_argument("--solution", metavar="PATH")
    p.add_argument("--p", type=float, default=1.0)
    p.add_argument("--r", type=int, default=8)
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CommandError, ingest.InputError) as err:
        code = getattr(err, "code", EXIT_INPUT)
        if args.json_errors:
            print(json.dumps({"error": type(err).__name__, "message": str(err), "exit_code": code}), file=sys.stderr)
        else:
            print(f"hypercent {args.command}: {err}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
