"""Physical parameters, the momentum grid and the single-mode dispersion.

The chain is

    H(t) = -J(t)/2 sum_i [(1+gamma) sx_i sx_{i+1} + (1-gamma) sy_i sy_{i+1}] - h(t) sum_i sz_i

with a step quench ``(J0, h0) -> (J1, h1)`` at ``t = 0``.  Units have hbar = 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from .errors import ConfigurationError

__all__ = [
    "INFINITE",
    "GRIDS",
    "QuenchParams",
    "ModeAngle",
    "beta_from_kt",
    "mode_angles",
    "mode_phis",
    "dispersion",
    "alpha_delta",
    "coupling_at",
    "field_at",
]

#: Inverse temperature of the ground state (kT = 0).
INFINITE = math.inf

#: Momentum grids.  ``"uniform"`` is phi_p = 2 pi p / N, p = 1..N/2.
#: ``"midpoint"`` is phi_p = 2 pi (p - 1/2) / N, the even-parity sector of
#: the periodic spin chain, which has no unpaired phi = 0 or phi = pi mode.
GRIDS = ("midpoint", "uniform")


def beta_from_kt(kt: float) -> float:
    """Convert a temperature ``kT`` into an inverse temperature; 0 maps to INFINITE."""
    kt = float(kt)
    if not kt >= 0.0 or math.isinf(kt):
        raise ConfigurationError(f"kT must be a finite non-negative number, got {kt!r}")
    return INFINITE if kt == 0.0 else 1.0 / kt


@dataclass(frozen=True)
class QuenchParams:
    """Full configuration of one quench.

    Parameters
    ----------
    gamma : float
        Anisotropy in [0, 1]; 0 is the XX chain, 1 the transverse Ising chain.
    j0, j1 : float
        Exchange coupling before and after the quench.
    h0, h1 : float
        Transverse field before and after the quench.
    beta : float
        Inverse temperature of the initial thermal state, ``INFINITE`` for kT = 0.
    n_spins : int
        Even chain length N used for the momentum sums.
    grid : str
        One of :data:`GRIDS`.
    """

    gamma: float
    j0: float
    j1: float
    h0: float
    h1: float
    beta: float = INFINITE
    n_spins: int = 1000
    grid: str = "midpoint"

    def __post_init__(self):
        for name in ("j0", "j1", "h0", "h1"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ConfigurationError(f"{name} must be finite, got {value!r}")
        if not 0.0 <= self.gamma <= 1.0:
            raise ConfigurationError(f"gamma must lie in [0, 1], got {self.gamma!r}")
        if not self.beta >= 0.0:
            raise ConfigurationError(f"beta must be >= 0 or INFINITE, got {self.beta!r}")
        _check_n_spins(self.n_spins)
        if self.grid not in GRIDS:
            raise ConfigurationError(f"grid must be one of {GRIDS}, got {self.grid!r}")

    @classmethod
    def from_kt(cls, gamma, j0, j1, h0, h1, kt=0.0, **kwargs) -> "QuenchParams":
        return cls(gamma, j0, j1, h0, h1, beta=beta_from_kt(kt), **kwargs)

    @classmethod
    def static(cls, gamma, j, h, kt=0.0, **kwargs) -> "QuenchParams":
        """Parameters with no quench, ``J0 = J1 = j`` and ``h0 = h1 = h``."""
        return cls.from_kt(gamma, j, j, h, h, kt, **kwargs)

    @property
    def kt(self) -> float:
        return 0.0 if math.isinf(self.beta) else (math.inf if self.beta == 0 else 1.0 / self.beta)

    @property
    def is_static(self) -> bool:
        """True when the quench does not change the Hamiltonian up to a scale.

        All time dependence is proportional to ``J0 h1 - J1 h0``.
        """
        return self.j0 * self.h1 - self.j1 * self.h0 == 0.0

    def replace(self, **changes) -> "QuenchParams":
        return replace(self, **changes)


class ModeAngle(NamedTuple):
    p: int
    phi: float


def _check_n_spins(n_spins):
    if isinstance(n_spins, bool) or int(n_spins) != n_spins:
        raise ConfigurationError(f"n_spins must be an integer, got {n_spins!r}")
    if n_spins % 2:
        raise ConfigurationError("n_spins must be even")
    if n_spins < 4:
        raise ConfigurationError(f"n_spins must be at least 4, got {n_spins}")


def mode_phis(n_spins: int, grid: str = "midpoint") -> np.ndarray:
    """Momenta of the N/2 independent mode pairs as an array, ascending."""
    _check_n_spins(n_spins)
    p = np.arange(1, n_spins // 2 + 1, dtype=float)
    if grid == "uniform":
        return 2.0 * np.pi * p / n_spins
    if grid == "midpoint":
        return np.pi * (2.0 * p - 1.0) / n_spins
    raise ConfigurationError(f"grid must be one of {GRIDS}, got {grid!r}")


def mode_angles(n_spins: int, grid: str = "midpoint") -> list[ModeAngle]:
    """List the N/2 momentum modes ``(p, phi_p)`` for p = 1..N/2.

    >>> [round(m.phi / np.pi, 3) for m in mode_angles(4, grid="uniform")]
    [0.5, 1.0]
    """
    phis = mode_phis(n_spins, grid)
    if grid == "uniform":
        # exact pi at p = N/2 rather than 2*pi*(N/2)/N rounded
        phis[-1] = np.pi
    return [ModeAngle(p, float(phi)) for p, phi in enumerate(phis, start=1)]


def dispersion(j, h, gamma, phi):
    """Gamma(h, J) = sqrt[(J cos phi + h)^2 + gamma^2 J^2 sin^2 phi].

    Works elementwise on arrays.  Half the quasiparticle energy of mode ``phi``.
    """
    return np.hypot(j * np.cos(phi) + h, gamma * j * np.sin(phi))


def alpha_delta(j, h, gamma, phi):
    """Return ``(alpha, delta)`` with alpha = -2 J cos phi - 2 h and delta = 2 gamma sin phi."""
    return -2.0 * j * np.cos(phi) - 2.0 * h, 2.0 * gamma * np.sin(phi)


def coupling_at(params: QuenchParams, t: float) -> float:
    """J(t) for the step schedule, with theta(0) = 1."""
    return params.j0 if t < 0 else params.j1


def field_at(params: QuenchParams, t: float) -> float:
    """h(t) for the step schedule, with theta(0) = 1."""
    return params.h0 if t < 0 else params.h1
