"""Time series and rectangular parameter sweeps with CSV output.

Grid points are independent pipeline evaluations.  They may be spread over a
process pool, but rows always come back in x-then-y order, and every
momentum sum has a fixed reduction order, so output is reproducible bit for bit.
"""
from __future__ import annotations

import io
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .correlators import ASYMPTOTIC, TimeSpec, contractions, magnetization
from .entanglement import concurrence, two_site_density
from .errors import ConfigurationError
from .model import QuenchParams, beta_from_kt
from .pfaffian import spin_correlators

__all__ = [
    "OBSERVABLES",
    "AXIS_NAMES",
    "Axis",
    "SweepGrid",
    "evaluate",
    "run_dynamics",
    "run_sweep",
    "to_csv",
]

OBSERVABLES = (
    "concurrence_r1",
    "concurrence_r2",
    "concurrence",
    "magnetization",
    "sx",
    "sy",
    "sz",
)
AXIS_NAMES = ("gamma", "j0", "j1", "h0", "h1", "kt", "lambda", "lambda0", "lambda1", "t")
# preset-only: lambda = J/h swept with J held fixed, so h = J / lambda
_EXTRA_AXES = ("lambda_fixed_j",)
_LAMBDA_AXES = ("lambda", "lambda0", "lambda1", "lambda_fixed_j")

DEFAULT_FIXED = {
    "gamma": 1.0,
    "j0": 1.0,
    "j1": 1.0,
    "h0": 1.0,
    "h1": 1.0,
    "kt": 0.0,
    "n_spins": 1000,
    "grid": "midpoint",
}


@dataclass(frozen=True)
class Axis:
    """Uniform axis of ``steps`` points from ``start`` to ``stop`` inclusive."""

    name: str
    start: float
    stop: float
    steps: int

    def __post_init__(self):
        if self.name not in AXIS_NAMES + _EXTRA_AXES:
            raise ConfigurationError(
                f"unknown axis {self.name!r}; choose from {', '.join(AXIS_NAMES)}"
            )
        if int(self.steps) != self.steps or self.steps < 2:
            raise ConfigurationError(f"axis {self.name} needs at least 2 steps, got {self.steps}")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise ConfigurationError(f"axis {self.name} bounds must be finite")

    @classmethod
    def parse(cls, text: str) -> "Axis":
        """Parse ``name:min:max:steps``."""
        parts = text.split(":")
        if len(parts) != 4:
            raise ConfigurationError(f"axis must look like name:min:max:steps, got {text!r}")
        name, lo, hi, steps = parts
        try:
            return cls(name.strip().lower(), float(lo), float(hi), int(steps))
        except ValueError as exc:
            raise ConfigurationError(f"bad axis specification {text!r}: {exc}") from None

    @property
    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, int(self.steps))


@dataclass(frozen=True)
class SweepGrid:
    """A 1-D or 2-D sweep of one or more observables.

    ``fixed`` holds the remaining parameters by name (see DEFAULT_FIXED).
    Without a ``t`` axis the time is ``time`` (a float) or, when
    ``asymptotic`` is set, the dephased limit.
    """

    x: Axis
    y: Axis | None = None
    fixed: dict = field(default_factory=dict)
    observables: tuple = ("concurrence_r1",)
    separation: int = 1
    asymptotic: bool = True
    time: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "fixed", {**DEFAULT_FIXED, **self.fixed})
        object.__setattr__(self, "observables", tuple(self.observables))
        _check_observables(self.observables)
        axes = self.axes
        names = [a.name for a in axes]
        if len(set(names)) != len(names):
            raise ConfigurationError("the two sweep axes must differ")
        if "t" in names and self.asymptotic:
            raise ConfigurationError("a t axis cannot be combined with the asymptotic limit")
        if "t" not in names and not self.asymptotic and self.time is None:
            raise ConfigurationError("give a time, a t axis, or request the asymptotic limit")
        for a in axes:
            if a.name in ("t", "kt") and min(a.start, a.stop) < 0:
                raise ConfigurationError(f"axis {a.name} must be non-negative")
        # validate every corner of the grid once, cheaply
        for xv in (self.x.start, self.x.stop):
            for yv in ((self.y.start, self.y.stop) if self.y else (None,)):
                point = {self.x.name: xv}
                if self.y:
                    point[self.y.name] = yv
                self.resolve(point)

    @property
    def axes(self) -> tuple:
        return (self.x,) if self.y is None else (self.x, self.y)

    def resolve(self, point: dict) -> tuple[QuenchParams, TimeSpec]:
        """Turn axis values at one grid point into parameters and a time."""
        values = dict(self.fixed)
        lambdas = {}
        t = None
        for name, v in point.items():
            if name == "t":
                t = float(v)
            elif name in _LAMBDA_AXES:
                lambdas[name] = float(v)
            else:
                values[name] = float(v)
        for name, lam in lambdas.items():
            if name == "lambda":
                h = _nonzero_field(values, "h0", name)
                if values["h1"] != h:
                    raise ConfigurationError("a lambda axis needs h0 == h1")
                values["j0"] = values["j1"] = lam * h
            elif name == "lambda0":
                values["j0"] = lam * _nonzero_field(values, "h0", name)
            elif name == "lambda1":
                values["j1"] = lam * _nonzero_field(values, "h1", name)
            else:
                if lam == 0:
                    raise ConfigurationError("lambda with fixed J cannot reach 0")
                if values["j0"] != values["j1"]:
                    raise ConfigurationError("lambda with fixed J needs j0 == j1")
                values["h0"] = values["h1"] = values["j0"] / lam
        params = QuenchParams(
            gamma=values["gamma"],
            j0=values["j0"],
            j1=values["j1"],
            h0=values["h0"],
            h1=values["h1"],
            beta=beta_from_kt(values["kt"]),
            n_spins=int(values["n_spins"]),
            grid=values["grid"],
        )
        if t is not None:
            return params, TimeSpec.at(t)
        return params, ASYMPTOTIC if self.asymptotic else TimeSpec.at(self.time)

    def points(self):
        """Grid points as dicts of axis values, x outer and y inner."""
        xs = self.x.values
        if self.y is None:
            return [{self.x.name: float(x)} for x in xs]
        ys = self.y.values
        return [{self.x.name: float(x), self.y.name: float(y)} for x in xs for y in ys]


def _nonzero_field(values, key, axis):
    h = values[key]
    if h == 0:
        raise ConfigurationError(f"axis {axis} needs a nonzero {key}")
    return h


def _check_observables(observables):
    if not observables:
        raise ConfigurationError("at least one observable is required")
    for name in observables:
        if name not in OBSERVABLES:
            raise ConfigurationError(
                f"unknown observable {name!r}; choose from {', '.join(OBSERVABLES)}"
            )


def evaluate(params: QuenchParams, when, observables, separation: int = 1) -> dict:
    """Compute the requested observables at one parameter point."""
    _check_observables(observables)
    if separation < 1:
        raise ConfigurationError(f"separation must be >= 1, got {separation}")
    needed = set()
    for name in observables:
        if name == "concurrence_r1":
            needed.add(1)
        elif name == "concurrence_r2":
            needed.add(2)
        elif name in ("concurrence", "sx", "sy", "sz"):
            needed.add(separation)
    mz = magnetization(params, when)
    out = {"magnetization": mz}
    if needed:
        cs = contractions(params, when, r_max=max(needed))
        for r in sorted(needed):
            sx, sy, sz = spin_correlators(cs, r)
            c = concurrence(two_site_density(mz, sx, sy, sz))
            out[f"concurrence_r{r}"] = c
            if r == separation:
                out.update(sx=sx, sy=sy, sz=sz, concurrence=c)
    return {name: out[name] for name in observables}


def _evaluate_point(args):
    grid, point = args
    params, when = grid.resolve(point)
    return evaluate(params, when, grid.observables, grid.separation)


def _map(func, items, workers):
    if workers is None:
        workers = os.cpu_count() or 1
    if workers <= 1 or len(items) < 256:
        return [func(item) for item in items]
    chunk = max(1, len(items) // (8 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=chunk))


def run_sweep(grid: SweepGrid, workers: int | None = 1) -> tuple[list[str], list[list[float]]]:
    """Evaluate every grid point; return ``(header, rows)`` in x-then-y order."""
    points = grid.points()
    results = _map(_evaluate_point, [(grid, p) for p in points], workers)
    header = [a.name for a in grid.axes] + list(grid.observables)
    rows = [
        [p[a.name] for a in grid.axes] + [res[o] for o in grid.observables]
        for p, res in zip(points, results)
    ]
    return header, rows


def run_dynamics(
    params: QuenchParams,
    t_max: float,
    t_steps: int,
    observables=("concurrence_r1",),
    separation: int = 1,
    workers: int | None = 1,
) -> tuple[list[str], list[list[float]]]:
    """Observables on ``t_steps`` uniformly spaced times from 0 to ``t_max``."""
    if not (t_max > 0 and math.isfinite(t_max)):
        raise ConfigurationError(f"t_max must be positive, got {t_max!r}")
    _check_observables(observables)
    times = np.linspace(0.0, t_max, int(t_steps)) if t_steps >= 2 else None
    if times is None:
        raise ConfigurationError(f"t_steps must be at least 2, got {t_steps}")
    results = _map(
        _evaluate_at_time, [(params, float(t), tuple(observables), separation) for t in times], workers
    )
    header = ["t"] + list(observables)
    rows = [[float(t)] + [res[o] for o in observables] for t, res in zip(times, results)]
    return header, rows


def _evaluate_at_time(args):
    params, t, observables, separation = args
    return evaluate(params, TimeSpec.at(t), observables, separation)


def format_value(v) -> str:
    return f"{v:.12g}"


def to_csv(header, rows, comments=(), out=None) -> str:
    """Render CSV text (and write it to ``out`` if given, a path or file object).

    Comment lines start with ``#``; values carry 12 significant digits.
    """
    buf = io.StringIO()
    buf.write(f"# xyquench {__version__}\n")
    for line in comments:
        buf.write(f"# {line}\n")
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(v if isinstance(v, str) else format_value(v) for v in row) + "\n")
    text = buf.getvalue()
    if out is not None:
        if hasattr(out, "write"):
            out.write(text)
        else:
            with open(out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
    return text


def describe_fixed(fixed: dict) -> str:
    keys = ("gamma", "j0", "j1", "h0", "h1", "kt", "n_spins", "grid")
    return " ".join(f"{k}={fixed[k]}" for k in keys if k in fixed)
