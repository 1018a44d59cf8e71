"""Entrywise scalar maps and the four-map centrality models built from them."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

POWER = "power"
LOG = "log"
EXP = "exp"


class MapDomainError(ValueError):
    """Raised when a map is evaluated outside its domain."""

    def __init__(self, message, index):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class NonlinearMap:
    """A scalar map applied entrywise: ``power(a)``, ``log`` or ``exp``.

    ``degree`` is the homogeneity degree for powers and ``None`` for the
    logarithm and exponential, which are not homogeneous.
    """

    kind: str
    exponent: float = 1.0

    def __post_init__(self):
        if self.kind not in (POWER, LOG, EXP):
            raise ValueError(f"unknown map kind {self.kind!r}")
        if self.kind == POWER:
            a = float(self.exponent)
            if not math.isfinite(a) or a == 0:
                raise ValueError(f"power exponent must be finite and nonzero, got {a}")
            object.__setattr__(self, "exponent", a)

    @classmethod
    def power(cls, exponent: float) -> "NonlinearMap":
        return cls(POWER, exponent)

    @classmethod
    def identity(cls) -> "NonlinearMap":
        return cls(POWER, 1.0)

    @classmethod
    def log(cls) -> "NonlinearMap":
        return cls(LOG, 0.0)

    @classmethod
    def exp(cls) -> "NonlinearMap":
        return cls(EXP, 0.0)

    @property
    def degree(self) -> Optional[float]:
        return self.exponent if self.kind == POWER else None

    @property
    def is_identity(self) -> bool:
        return self.kind == POWER and self.exponent == 1.0

    def __call__(self, v):
        return eval_map(self, v)

    def __str__(self):
        if self.kind == POWER:
            return "id" if self.is_identity else f"x^{self.exponent:g}"
        return "ln" if self.kind == LOG else "exp"


def eval_map(fmap: NonlinearMap, v) -> np.ndarray:
    """Apply ``fmap`` to every entry of ``v``.

    Raises
    ------
    MapDomainError
        For the logarithm of a non-positive entry, a non-integer power of a
        negative entry, zero raised to a negative power, or a non-finite
        result. ``err.index`` is the first offending position.
    """
    v = np.asarray(v, dtype=float)
    if fmap.kind == LOG:
        bad = np.flatnonzero(~(v > 0))
        if bad.size:
            raise MapDomainError(f"log of non-positive entry {v[bad[0]]} at index {bad[0]}", int(bad[0]))
        out = np.log(v)
    elif fmap.kind == EXP:
        with np.errstate(over="ignore"):
            out = np.exp(v)
    else:
        a = fmap.exponent
        if not float(a).is_integer():
            bad = np.flatnonzero(~(v >= 0))
            if bad.size:
                raise MapDomainError(
                    f"non-integer power {a:g} of negative entry {v[bad[0]]} at index {bad[0]}",
                    int(bad[0]),
                )
        if a < 0:
            bad = np.flatnonzero(v == 0)
            if bad.size:
                raise MapDomainError(f"zero raised to negative power {a:g} at index {bad[0]}", int(bad[0]))
        if a == 1.0:
            out = v.copy()
        else:
            with np.errstate(over="ignore", divide="ignore"):
                out = np.power(v, a)
    bad = np.flatnonzero(~np.isfinite(out))
    if bad.size:
        raise MapDomainError(f"{fmap} produced a non-finite value at index {bad[0]}", int(bad[0]))
    return out


@dataclass(frozen=True)
class CentralityModel:
    """The maps ``(f, g, phi, psi)`` of the coupled node/edge fixed point.

    Node scores satisfy ``lambda x = g(B W f(y))`` and edge scores satisfy
    ``mu y = psi(B^T N phi(x))``.
    """

    f: NonlinearMap
    g: NonlinearMap
    phi: NonlinearMap
    psi: NonlinearMap
    name: str = "custom"
    params: dict = field(default_factory=dict, compare=False)

    @property
    def maps(self) -> tuple:
        return (self.f, self.g, self.phi, self.psi)

    @property
    def degrees(self) -> tuple:
        """Homogeneity degrees (alpha, beta, gamma, delta); ``None`` where undefined."""
        return tuple(fm.degree for fm in self.maps)

    @property
    def rho(self) -> Optional[float]:
        return model_rho(self)

    def describe(self) -> str:
        return f"{self.name}: f={self.f}, g={self.g}, phi={self.phi}, psi={self.psi}"


def model_rho(model: CentralityModel) -> Optional[float]:
    """``|alpha beta gamma delta|``, or ``None`` if any map is not homogeneous."""
    degrees = model.degrees
    if any(d is None for d in degrees):
        return None
    return abs(math.prod(degrees))


def make_linear() -> CentralityModel:
    ident = NonlinearMap.identity()
    return CentralityModel(ident, ident, ident, ident, name="linear")


def make_logexp(p: float = 1.0) -> CentralityModel:
    """Multiplicative model: edge score is the product of member scores.

    ``g = x^(1/(p+1))``; ``p = 1`` gives the square root.
    """
    p = float(p)
    if not (p >= 1 and math.isfinite(p)):
        raise ValueError(f"log-exp model requires p >= 1, got {p}")
    return CentralityModel(
        NonlinearMap.identity(),
        NonlinearMap.power(1.0 / (p + 1.0)),
        NonlinearMap.log(),
        NonlinearMap.exp(),
        name="logexp",
        params={"p": p},
    )


def make_max(alpha: float = 10.0) -> CentralityModel:
    """Soft-max model: edge score is the l^alpha norm of member scores."""
    alpha = float(alpha)
    if not (alpha >= 1 and math.isfinite(alpha)):
        raise ValueError(f"max model requires alpha >= 1, got {alpha}")
    ident = NonlinearMap.identity()
    return CentralityModel(
        ident,
        ident,
        NonlinearMap.power(alpha),
        NonlinearMap.power(1.0 / alpha),
        name="max",
        params={"alpha": alpha},
    )


PRESETS = {"linear": make_linear, "logexp": make_logexp, "max": make_max}


def make_model(name: str, p: float = 1.0, alpha: float = 10.0) -> CentralityModel:
    """Look up a preset model by name (``linear``, ``logexp``, ``max``)."""
    if name == "linear":
        return make_linear()
    if name == "logexp":
        return make_logexp(p)
    if name == "max":
        return make_max(alpha)
    raise ValueError(f"unknown model {name!r}; choose from {sorted(PRESETS)}")
