"""Two-site reduced density matrix and Wootters concurrence."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .correlators import as_timespec, contractions, magnetization
from .errors import NumericalConsistencyError
from .model import QuenchParams
from .pfaffian import spin_correlators

__all__ = ["TwoSiteState", "two_site_density", "concurrence", "concurrence_at", "observables_at"]

#: Roundoff budget for negative diagonal entries and products under square roots.
CLAMP_TOL = 1e-10


@dataclass(frozen=True)
class TwoSiteState:
    """X-shaped two-spin density matrix in the basis |uu>, |ud>, |du>, |dd>.

    Only six entries are independent; all are real.
    """

    r11: float
    r22: float
    r33: float
    r44: float
    r23: float
    r14: float

    @property
    def trace(self) -> float:
        return self.r11 + self.r22 + self.r33 + self.r44

    def matrix(self) -> np.ndarray:
        return np.array(
            [
                [self.r11, 0.0, 0.0, self.r14],
                [0.0, self.r22, self.r23, 0.0],
                [0.0, self.r23, self.r33, 0.0],
                [self.r14, 0.0, 0.0, self.r44],
            ]
        )


def two_site_density(mz: float, sx: float, sy: float, sz: float) -> TwoSiteState:
    """Reduced state of two spins from the magnetization and spin-spin correlators.

    Translation invariance makes both sites carry the same magnetization ``mz``.
    """
    state = TwoSiteState(
        r11=0.25 + mz + sz,
        r22=0.25 - sz,
        r33=0.25 - sz,
        r44=0.25 - mz + sz,
        r23=sx + sy,
        r14=sx - sy,
    )
    if not abs(state.trace - 1.0) <= 1e-8:  # also rejects NaN
        raise NumericalConsistencyError(f"two-site trace is {state.trace!r}")
    return state


def _clamped_sqrt(value: float, what: str) -> float:
    if not value >= -CLAMP_TOL:
        raise NumericalConsistencyError(f"{what} = {value:.3e} is negative beyond roundoff")
    return math.sqrt(max(value, 0.0))


def concurrence(state: TwoSiteState) -> float:
    """Wootters concurrence of an X state, in [0, 1]."""
    for name in ("r11", "r22", "r33", "r44"):
        if not getattr(state, name) >= -CLAMP_TOL:
            raise NumericalConsistencyError(f"{name} = {getattr(state, name):.3e} is negative")
    outer = _clamped_sqrt(state.r11 * state.r44, "r11*r44")
    inner = _clamped_sqrt(state.r22 * state.r33, "r22*r33")
    lams = sorted(
        (
            outer + abs(state.r14),
            inner + abs(state.r23),
            abs(outer - abs(state.r14)),
            abs(inner - abs(state.r23)),
        ),
        reverse=True,
    )
    return min(max(0.0, lams[0] - lams[1] - lams[2] - lams[3]), 1.0)


def observables_at(params: QuenchParams, when, r: int = 1) -> dict:
    """Magnetization, spin correlators at separation ``r`` and their concurrence."""
    when = as_timespec(when)
    mz = magnetization(params, when)
    cs = contractions(params, when, r_max=max(r, 1))
    sx, sy, sz = spin_correlators(cs, r)
    c = concurrence(two_site_density(mz, sx, sy, sz))
    return {"magnetization": mz, "sx": sx, "sy": sy, "sz": sz, "concurrence": c}


def concurrence_at(params: QuenchParams, when, r: int = 1) -> float:
    """Concurrence C(i, i+r) of the quenched chain at time ``when``."""
    return observables_at(params, when, r)["concurrence"]
