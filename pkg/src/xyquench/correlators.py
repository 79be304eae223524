"""Magnetization and two-point Majorana contractions as momentum sums.

With A_i = b+_i + b_i and B_i = b+_i - b_i, every spin correlator of the chain
is a Pfaffian of the contractions

    Q(r) = <A_l A_{l+r}>,  G(r) = <B_l B_{l+r}>,  F(r) = <B_l A_{l+r}>,

which depend only on the signed separation r.  <A_l B_{l+r}> follows from
anticommutation as -F(-r).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConfigurationError
from .model import QuenchParams, dispersion, mode_phis
from .modes import quench_oscillations, thermal_factors

__all__ = [
    "TimeSpec",
    "ASYMPTOTIC",
    "as_timespec",
    "ContractionSet",
    "magnetization",
    "contractions",
]


@dataclass(frozen=True)
class TimeSpec:
    """Either a finite time ``t >= 0`` or the dephased ``t -> infinity`` limit (``t=None``)."""

    t: float | None = None

    def __post_init__(self):
        if self.t is not None and not (math.isfinite(self.t) and self.t >= 0.0):
            raise ConfigurationError(f"time must be finite and non-negative, got {self.t!r}")

    @classmethod
    def at(cls, t: float) -> "TimeSpec":
        return cls(float(t))

    @property
    def is_asymptotic(self) -> bool:
        return self.t is None

    def __str__(self):
        return "asymptotic" if self.t is None else f"t={self.t:g}"


ASYMPTOTIC = TimeSpec(None)


def as_timespec(when) -> TimeSpec:
    """Accept a TimeSpec, a number, or the string ``"asymptotic"``."""
    if isinstance(when, TimeSpec):
        return when
    if isinstance(when, str):
        if when.lower() in ("asymptotic", "inf", "infinity"):
            return ASYMPTOTIC
        return TimeSpec.at(float(when))
    return TimeSpec.at(when)


@dataclass(frozen=True)
class _ModeTable:
    phi: np.ndarray
    cos: np.ndarray
    delta: np.ndarray  # 2 gamma sin phi
    a0: np.ndarray  # J0 cos phi + h0
    a1: np.ndarray  # J1 cos phi + h1
    g1: np.ndarray
    thermal: np.ndarray  # tanh(beta Gamma0) / Gamma0


@lru_cache(maxsize=64)
def _mode_table(params: QuenchParams) -> _ModeTable:
    phi = mode_phis(params.n_spins, params.grid)
    cos = np.cos(phi)
    g0 = dispersion(params.j0, params.h0, params.gamma, phi)
    g1 = dispersion(params.j1, params.h1, params.gamma, phi)
    thermal, _ = thermal_factors(params.beta, g0)
    return _ModeTable(
        phi=phi,
        cos=cos,
        delta=2.0 * params.gamma * np.sin(phi),
        a0=params.j0 * cos + params.h0,
        a1=params.j1 * cos + params.h1,
        g1=g1,
        thermal=thermal,
    )


def magnetization(params: QuenchParams, when=ASYMPTOTIC) -> float:
    """Magnetization per spin <S^z>, in [-1/2, 1/2]."""
    when = as_timespec(when)
    m = _mode_table(params)
    s2, _ = quench_oscillations(m.g1, when.t)
    mismatch = params.j0 * params.h1 - params.j1 * params.h0
    terms = m.thermal * (2.0 * params.j1 * mismatch * m.delta**2 * s2 + 4.0 * m.a0)
    return float(np.sum(terms) / (4.0 * params.n_spins))


@dataclass(frozen=True)
class ContractionSet:
    """Contractions Q, G, F at signed separations ``-r_max..r_max``.

    Arrays are indexed by ``r + r_max``; use the accessor methods instead.
    """

    r_max: int
    q: np.ndarray
    g: np.ndarray
    f: np.ndarray

    def _index(self, r: int) -> int:
        if abs(r) > self.r_max:
            raise ConfigurationError(f"separation {r} outside computed range +-{self.r_max}")
        return r + self.r_max

    def Q(self, r: int) -> complex:
        return complex(self.q[self._index(r)])

    def G(self, r: int) -> complex:
        return complex(self.g[self._index(r)])

    def F(self, r: int) -> complex:
        return complex(self.f[self._index(r)])

    def P(self, r: int) -> complex:
        """<A_l B_{l+r}> = -<B_{l+r} A_l> = -F(-r)."""
        return -complex(self.f[self._index(-r)])

    @property
    def p(self) -> np.ndarray:
        return -self.f[::-1]

    def contraction(self, op_i: str, site_i: int, op_j: str, site_j: int) -> complex:
        """<O_i O_j> for operator labels ``"A"``/``"B"`` on the given sites."""
        r = site_j - site_i
        if op_i == "A":
            return self.Q(r) if op_j == "A" else self.P(r)
        return self.F(r) if op_j == "A" else self.G(r)


def contractions(params: QuenchParams, when=ASYMPTOTIC, r_max: int = 3) -> ContractionSet:
    """Evaluate Q, G, F for separations up to ``r_max`` at the given time."""
    if r_max < 1 or int(r_max) != r_max:
        raise ConfigurationError(f"r_max must be a positive integer, got {r_max!r}")
    if r_max >= params.n_spins // 2:
        raise ConfigurationError("r_max must be smaller than n_spins / 2")
    when = as_timespec(when)
    m = _mode_table(params)
    s2, s4 = quench_oscillations(m.g1, when.t)
    mismatch = params.j0 * params.h1 - params.j1 * params.h0
    n = params.n_spins

    seps = np.arange(-r_max, r_max + 1)
    cos_r = np.cos(np.outer(seps, m.phi))
    sin_r = np.sin(np.outer(seps, m.phi))

    even = m.thermal * (params.j1 * mismatch * m.delta**2 * s2 + 2.0 * m.a0)
    odd = m.thermal * m.delta * (params.j0 - 2.0 * mismatch * m.a1 * s2)
    f = np.sum(cos_r * even + sin_r * odd, axis=1) / n

    twist = -mismatch * m.delta * s4 * m.thermal
    imag = np.sum(sin_r * twist, axis=1) / n
    real = np.sum(2.0 * cos_r, axis=1) / n
    q = real + 1j * imag
    g = -real + 1j * imag
    # A_l^2 = 1, B_l^2 = -1
    q[r_max] = 1.0
    g[r_max] = -1.0
    return ContractionSet(int(r_max), q, g, f.astype(complex))
