"""Nonlinear power method for coupled node and hyperedge centralities.

The iteration looks for positive ``x``, ``y`` and scalars ``lambda``, ``mu``
with::

    lambda x = g(B W f(y))
    mu     y = psi(B^T N phi(x))

Each step takes the entrywise geometric mean of the current iterate and its
image, then normalizes. The geometric mean is what makes the iteration
converge on periodic (bipartite) structures where the plain update would
oscillate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .hypergraph import Hypergraph, apply_BtN, apply_BW, bipartite_connected
from .maps import LOG, CentralityModel, MapDomainError, eval_map, model_rho

NORMS = {
    "l1": lambda v: float(np.sum(np.abs(v))),
    "l2": lambda v: float(np.linalg.norm(v)),
    "linf": lambda v: float(np.max(np.abs(v))),
}


class SolverError(RuntimeError):
    """The iteration produced a non-finite or non-positive iterate."""

    def __init__(self, message, iteration):
        super().__init__(message)
        self.iteration = iteration


class PreconditionError(ValueError):
    """The input cannot admit a strictly positive solution for this model."""


@dataclass(frozen=True)
class SolverOptions:
    tol: float = 1e-8
    max_iter: int = 1000
    norm: str = "l2"
    x0: Optional[np.ndarray] = None
    y0: Optional[np.ndarray] = None

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if int(self.max_iter) < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")
        if self.norm not in NORMS:
            raise ValueError(f"norm must be one of {sorted(NORMS)}, got {self.norm!r}")

    def as_dict(self) -> dict:
        return {"tol": self.tol, "max_iter": int(self.max_iter), "norm": self.norm}


@dataclass(frozen=True)
class CentralitySolution:
    x: np.ndarray
    y: np.ndarray
    lam: float
    mu: float
    iterations: int
    converged: bool
    change_history: tuple
    norm: str = "l2"
    residuals: tuple = field(default=(math.nan, math.nan))


@dataclass(frozen=True)
class ConditionReport:
    """Which existence/uniqueness regime the model and hypergraph fall into.

    ``regime`` is ``"P1"`` (rho < 1), ``"P2"`` (rho == 1, positive maps,
    connected incidence graph) or ``"unverified"``.
    """

    regime: str
    rho: Optional[float]
    connected: bool

    def __str__(self):
        rho = "undefined" if self.rho is None else f"{self.rho:g}"
        return f"regime={self.regime} rho={rho} connected={self.connected}"


def check_conditions(h: Hypergraph, model: CentralityModel) -> ConditionReport:
    rho = model_rho(model)
    connected = bipartite_connected(h)
    if rho is not None and rho < 1:
        regime = "P1"
    elif (
        rho is not None
        and math.isclose(rho, 1.0, rel_tol=1e-12)
        and connected
        and all(fm.kind != LOG for fm in model.maps)
    ):
        regime = "P2"
    else:
        regime = "unverified"
    return ConditionReport(regime, rho, connected)


def node_update(h: Hypergraph, model: CentralityModel, y) -> np.ndarray:
    """Raw node image ``g(B W f(y))``."""
    return eval_map(model.g, apply_BW(h, eval_map(model.f, y)))


def edge_update(h: Hypergraph, model: CentralityModel, x) -> np.ndarray:
    """Raw edge image ``psi(B^T N phi(x))``."""
    return eval_map(model.psi, apply_BtN(h, eval_map(model.phi, x)))


def _check_preconditions(h: Hypergraph, model: CentralityModel):
    isolated = np.flatnonzero(h.node_degrees == 0)
    if isolated.size == 0:
        return
    # an isolated node's image is g(0); it must be a positive number
    try:
        g0 = eval_map(model.g, np.zeros(1))[0]
    except MapDomainError:
        g0 = math.nan
    if not (math.isfinite(g0) and g0 > 0):
        raise PreconditionError(
            f"positivity unattainable: {isolated.size} isolated node(s) (first: {isolated[0]}) "
            f"and g(0) = {g0}; prune isolated nodes first"
        )


def _initial(v, size, what, norm):
    if v is None:
        v = np.ones(size)
    v = np.array(v, dtype=float)
    if v.shape != (size,):
        raise ValueError(f"initial {what} vector must have length {size}, got shape {v.shape}")
    if not np.all(np.isfinite(v) & (v > 0)):
        raise ValueError(f"initial {what} vector must be strictly positive")
    return v / norm(v)


def npm_solve(h: Hypergraph, model: CentralityModel, opts: Optional[SolverOptions] = None) -> CentralitySolution:
    """Compute node and edge centralities with the nonlinear power method.

    Parameters
    ----------
    h : Hypergraph
    model : CentralityModel
    opts : SolverOptions, optional
        Defaults to ``SolverOptions()`` (tol 1e-8, 1000 iterations, l2 norm,
        all-ones start).

    Returns
    -------
    CentralitySolution
        ``x`` and ``y`` have unit norm. ``lam`` and ``mu`` are the norms of
        the raw node and edge images at the returned iterate. When the
        iteration cap is hit the last iterate is returned with
        ``converged=False``.

    Raises
    ------
    PreconditionError
        If an isolated node makes a positive solution impossible.
    SolverError
        If an iterate becomes non-finite or loses strict positivity.

    Notes
    -----
    The starting vectors are normalized before the first step, so scaling
    them has no effect on the result. The stopping quantity is
    ``||x' - x|| / ||x'|| + ||y' - y|| / ||y'||``.
    """
    opts = opts or SolverOptions()
    _check_preconditions(h, model)
    norm = NORMS[opts.norm]
    x = _initial(opts.x0, h.n, "node", norm)
    y = _initial(opts.y0, h.m, "edge", norm)

    history = []
    converged = False
    it = 0
    for it in range(1, int(opts.max_iter) + 1):
        try:
            u = np.sqrt(x * node_update(h, model, y))
            v = np.sqrt(y * edge_update(h, model, x))
        except MapDomainError as err:
            raise SolverError(f"iteration {it}: {err}", it) from err
        nu_, nv_ = norm(u), norm(v)
        if not (math.isfinite(nu_) and math.isfinite(nv_) and nu_ > 0 and nv_ > 0):
            raise SolverError(f"iteration {it}: degenerate image norms ({nu_}, {nv_})", it)
        x_new = u / nu_
        y_new = v / nv_
        if not (np.all(x_new > 0) and np.all(y_new > 0)):
            raise SolverError(f"iteration {it}: iterate lost strict positivity", it)
        change = norm(x_new - x) / norm(x_new) + norm(y_new - y) / norm(y_new)
        history.append(change)
        x, y = x_new, y_new
        if change < opts.tol:
            converged = True
            break

    lam = norm(node_update(h, model, y))
    mu = norm(edge_update(h, model, x))
    sol = CentralitySolution(
        x=x, y=y, lam=lam, mu=mu, iterations=it, converged=converged,
        change_history=tuple(history), norm=opts.norm,
    )
    return _with_residuals(h, model, sol)


def _with_residuals(h, model, sol):
    res = residual(h, model, sol)
    return CentralitySolution(
        sol.x, sol.y, sol.lam, sol.mu, sol.iterations, sol.converged,
        sol.change_history, sol.norm, res,
    )


def residual(h: Hypergraph, model: CentralityModel, sol: CentralitySolution) -> tuple[float, float]:
    """Relative residuals of both fixed-point equations at ``sol``.

    ``res_x = ||lam x - g(B W f(y))|| / ||lam x||`` and likewise for ``y``,
    measured in the solution's norm.
    """
    norm = NORMS[sol.norm]
    lx = sol.lam * np.asarray(sol.x)
    my = sol.mu * np.asarray(sol.y)
    res_x = norm(lx - node_update(h, model, sol.y)) / norm(lx)
    res_y = norm(my - edge_update(h, model, sol.x)) / norm(my)
    return res_x, res_y


def convergence_rate(sol: CentralitySolution, tail: float = 0.5, floor: float = 1e-14) -> Optional[float]:
    """Least-squares slope of ``log(change)`` against iteration number.

    The fit uses the last ``tail`` fraction of the history (at least five
    points), dropping entries at or below ``floor`` where rounding noise
    dominates. Returns ``None`` if fewer than five usable points remain or
    if the change ever hit exactly zero. ``exp(slope)`` is the per-iteration
    contraction factor; see :func:`contraction_factor`.
    """
    hist = np.asarray(sol.change_history, dtype=float)
    if hist.size < 5 or np.any(hist == 0):
        return None
    start = min(int(hist.size * (1 - tail)), hist.size - 5)
    it = np.arange(hist.size)[start:]
    vals = hist[start:]
    keep = vals > floor
    if keep.sum() < 5:
        return None
    slope, _ = np.polyfit(it[keep], np.log(vals[keep]), 1)
    return float(slope)


def contraction_factor(sol: CentralitySolution, **kwargs) -> Optional[float]:
    slope = convergence_rate(sol, **kwargs)
    return None if slope is None else math.exp(slope)
