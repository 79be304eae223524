"""Parameter tables for each figure of the study, expressed as sweeps or time series.

Captions fix the physical parameters; plotting ranges and resolutions are not
given there, so the ranges below are chosen to cover the features discussed
and 2-D maps default to 101 x 101 points.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConfigurationError
from .model import QuenchParams, beta_from_kt
from .sweep import Axis, SweepGrid, describe_fixed, run_dynamics, run_sweep

__all__ = ["Preset", "PRESETS", "FIGURE_IDS", "get_preset", "reproduce"]

T_MAX = 20.0
T_STEPS = 401
MAP_STEPS = 101
LINE_STEPS = 301


@dataclass(frozen=True)
class Preset:
    """One figure panel.

    With ``x`` unset the panel is a time series on ``[0, t_max]``; otherwise a
    sweep over ``x`` (and ``y``).  Each case overrides ``fixed`` and becomes
    its own block of rows, tagged in a leading ``case`` column.
    """

    figure_id: str
    title: str
    fixed: dict
    observables: tuple = ("concurrence_r1",)
    x: Axis | None = None
    y: Axis | None = None
    asymptotic: bool = True
    cases: tuple = ()
    t_max: float = T_MAX
    t_steps: int = T_STEPS

    @property
    def kind(self) -> str:
        return "dynamics" if self.x is None else "sweep"

    def case_list(self):
        if not self.cases:
            return [("", {})]
        return [(_label(c), c) for c in self.cases]


def _label(overrides: dict) -> str:
    return " ".join(f"{k}={v:g}" for k, v in overrides.items())


def _jh(j0, j1, h0=1.0, h1=1.0):
    return {"j0": j0, "j1": j1, "h0": h0, "h1": h1}


def _axis(name, lo, hi, steps=MAP_STEPS):
    return Axis(name, float(lo), float(hi), steps)


_LAMBDA_LINE = _axis("lambda", 0, 3, LINE_STEPS)
# J held fixed: lambda = 0 would need an infinite field
_LAMBDA_FIXED_J = _axis("lambda_fixed_j", 0.01, 3, 300)
_T_AXIS = _axis("t", 0, 10)
_KT_AXIS = _axis("kt", 0, 2)


def _family(prefix, gamma, figs):
    """Dynamics (a-d) panels shared by the anisotropic sections."""
    a_cases, b_cases = figs
    base = {"gamma": gamma, "kt": 0.0}
    return [
        Preset(f"{prefix}a", "C(i,i+1) dynamics, field fixed, J quenched", base, cases=a_cases),
        Preset(f"{prefix}b", "C(i,i+1) dynamics, J fixed, field quenched", base, cases=b_cases),
        Preset(f"{prefix}c", "magnetization dynamics", base, ("magnetization",), cases=a_cases),
        Preset(f"{prefix}d", "S^z S^z correlator dynamics", base, ("sz",), cases=a_cases),
    ]


def _static_lambda(prefix, gamma):
    field_cases = tuple({"h0": h, "h1": h} for h in (0.25, 1.0, 4.0))
    coupling_cases = tuple({"j0": j, "j1": j} for j in (0.25, 1.0, 4.0))
    base = {"gamma": gamma}
    return [
        Preset(f"{prefix}a", "static C(i,i+1) vs lambda at kT=0", {**base, "kt": 0.0},
               x=_LAMBDA_LINE, cases=field_cases),
        Preset(f"{prefix}b", "static C(i,i+1) vs lambda at kT=1, field varied",
               {**base, "kt": 1.0}, x=_LAMBDA_LINE, cases=field_cases),
        Preset(f"{prefix}c", "static C(i,i+1) vs lambda at kT=1, J varied",
               {**base, "kt": 1.0}, x=_LAMBDA_FIXED_J, cases=coupling_cases),
        Preset(f"{prefix}d", "static C(i,i+1) vs lambda at kT=3, field varied",
               {**base, "kt": 3.0}, x=_LAMBDA_LINE, cases=field_cases),
    ]


def _lambda1_time(fid, gamma, j0):
    return Preset(fid, f"C(i,i+1) vs lambda1 and t, J0={j0:g}",
                  {"gamma": gamma, **_jh(j0, 1.0), "kt": 0.0},
                  x=_axis("lambda1", 0, 3), y=_T_AXIS, asymptotic=False)


def _thermal_maps(prefix, gamma):
    base = {"gamma": gamma, "h0": 1.0, "h1": 1.0}
    return [
        Preset(f"{prefix}a", "asymptotic C(i,i+1) vs lambda and kT (static)", {**base},
               x=_axis("lambda", 0, 3), y=_KT_AXIS),
        Preset(f"{prefix}b", "asymptotic C(i,i+1) vs lambda1 and kT, J0=1", {**base, "j0": 1.0},
               x=_axis("lambda1", 0, 3), y=_KT_AXIS),
    ]


def _nnn_dynamics(fid, gamma, kts):
    quenches = (_jh(1.0, 1.0), _jh(0.5, 1.0), _jh(1.0, 0.5), _jh(2.0, 1.0))
    cases = tuple({**q, "kt": kt} for kt in kts for q in quenches)
    return Preset(fid, "C(i,i+2) dynamics", {"gamma": gamma}, ("concurrence_r2",), cases=cases)


def _build():
    out = []
    out += _family("1", 1.0, (
        (_jh(1, 1), _jh(0.5, 0.5), _jh(0.5, 1), _jh(1, 0.5)),
        (_jh(1, 1, 1, 1), _jh(1, 1, 0.5, 0.5), _jh(1, 1, 0.5, 1), _jh(1, 1, 1, 0.5)),
    ))
    out += _static_lambda("2", 1.0)
    out += [
        _lambda1_time("3a", 1.0, 1.0),
        _lambda1_time("3b", 1.0, 5.0),
        Preset("3c", "asymptotic C(i,i+1) vs lambda1", {"gamma": 1.0, "h0": 1.0, "h1": 1.0},
               x=_axis("lambda1", 0, 3, LINE_STEPS),
               cases=tuple({"j0": j} for j in (0.5, 1.0, 2.0))),
        Preset("3d", "C(i,i+1) dynamics after switching J off", {"gamma": 1.0, "j1": 0.0},
               cases=(_jh(1, 0), _jh(2, 0))),
    ]
    map4 = {"gamma": 1.0, "kt": 0.0}
    out += [
        Preset("4a", "asymptotic C(i,i+1) vs J0, J1", {**map4, "h0": 1.0, "h1": 1.0},
               x=_axis("j0", 0, 5), y=_axis("j1", 0, 5)),
        Preset("4b", "asymptotic C(i,i+1) vs h0, h1", {**map4, "j0": 2.0, "j1": 2.0},
               x=_axis("h0", 0, 5), y=_axis("h1", 0, 5)),
        Preset("4c", "asymptotic C(i,i+1) vs h0, J0", {**map4, "h1": 1.0, "j1": 1.0},
               x=_axis("h0", 0, 5), y=_axis("j0", 0, 5)),
        Preset("4d", "asymptotic C(i,i+1) vs h1, J1", {**map4, "h0": 1.0, "j0": 1.0},
               x=_axis("h1", 0, 5), y=_axis("j1", 0, 5)),
    ]
    out += _thermal_maps("5", 1.0)
    out.append(_nnn_dynamics("6", 1.0, (0.0, 0.1)))
    out += _family("7", 0.5, (
        (_jh(0.5, 0.5), _jh(2, 2), _jh(0.5, 2), _jh(2, 0.5)),
        (_jh(1, 1, 0.5, 0.5), _jh(1, 1, 2, 2), _jh(1, 1, 0.5, 2), _jh(1, 1, 2, 0.5)),
    ))
    out += _static_lambda("8", 0.5)
    map9 = {"gamma": 0.5, "kt": 0.0}
    out += [
        _lambda1_time("9a", 0.5, 1.0),
        _lambda1_time("9b", 0.5, 5.0),
        Preset("9c", "asymptotic C(i,i+1) vs J0, J1", {**map9, "h0": 1.0, "h1": 1.0},
               x=_axis("j0", 0, 5), y=_axis("j1", 0, 5)),
        Preset("9d", "asymptotic C(i,i+1) vs h0, h1", {**map9, "j0": 1.0, "j1": 1.0},
               x=_axis("h0", 0, 5), y=_axis("h1", 0, 5)),
    ]
    out += _thermal_maps("10", 0.5)
    out.append(_nnn_dynamics("11", 0.5, (0.0, 0.25)))
    iso = {"gamma": 0.0, "kt": 0.0}
    out += [
        Preset("12a", "C(i,i+1) dynamics, isotropic chain", iso, cases=(
            _jh(2, 2), _jh(0.5, 2), _jh(2, 0.5),
            _jh(1, 1, 2, 2), _jh(1, 1, 0.5, 2), _jh(1, 1, 2, 0.5),
        )),
        Preset("12b", "magnetization and S^z S^z dynamics, isotropic chain", iso,
               ("magnetization", "sz"), cases=(_jh(2, 2), _jh(0.5, 2), _jh(2, 0.5))),
    ]
    out += _static_lambda("13", 0.0)
    out += [
        Preset("14a", "C(i,i+1) vs lambda1 and t, J0=5", {**iso, **_jh(5.0, 1.0)},
               x=_axis("lambda1", 0, 3), y=_T_AXIS, asymptotic=False),
        Preset("14b", "C(i,i+1) vs lambda0 and t, J1=5", {**iso, **_jh(1.0, 5.0)},
               x=_axis("lambda0", 0, 3), y=_T_AXIS, asymptotic=False),
        Preset("15a", "asymptotic C(i,i+1) vs lambda0 and kT, J1=1",
               {"gamma": 0.0, **_jh(1.0, 1.0)}, x=_axis("lambda0", 0, 3), y=_KT_AXIS),
        Preset("15b", "asymptotic C(i,i+1) vs kT", {"gamma": 0.0, **_jh(1.0, 1.0)},
               x=_axis("kt", 0, 1.2, 121)),
        _nnn_dynamics("16", 0.0, (0.0, 0.1)),
        Preset("17a", "asymptotic C(i,i+1) vs lambda1 and gamma", {**_jh(1.0, 1.0), "kt": 0.0},
               x=_axis("lambda1", 0, 3), y=_axis("gamma", 0, 1)),
        Preset("17b", "asymptotic C(i,i+2) vs lambda1 and gamma", {**_jh(1.0, 1.0), "kt": 0.0},
               ("concurrence_r2",), x=_axis("lambda1", 0, 3), y=_axis("gamma", 0, 1)),
    ]
    return {p.figure_id: p for p in out}


PRESETS = _build()
FIGURE_IDS = tuple(PRESETS)


def get_preset(figure_id: str) -> Preset:
    try:
        return PRESETS[figure_id.strip().lower()]
    except KeyError:
        raise ConfigurationError(
            f"unknown figure id {figure_id!r}; valid ids: {', '.join(FIGURE_IDS)}"
        ) from None


def reproduce(figure_id: str, n_spins: int = 1000, workers: int | None = 1,
              grid: str = "midpoint", resolution: int | None = None):
    """Return ``(header, rows, comments)`` for one figure panel.

    ``resolution`` overrides the number of points on every sweep axis.
    """
    preset = get_preset(figure_id)
    cases = preset.case_list()
    tagged = len(cases) > 1
    comments = [f"figure {preset.figure_id}: {preset.title}"]
    header, rows = None, []
    for label, overrides in cases:
        fixed = {**preset.fixed, **overrides, "n_spins": n_spins, "grid": grid}
        if preset.kind == "dynamics":
            params = _params(fixed)
            comments.append(f"case {label or '-'}: {describe_fixed(fixed)} t_max={preset.t_max:g} "
                            f"t_steps={preset.t_steps}")
            h, block = run_dynamics(params, preset.t_max, preset.t_steps,
                                    preset.observables, workers=workers)
        else:
            x, y = preset.x, preset.y
            if resolution is not None:
                x = Axis(x.name, x.start, x.stop, resolution)
                y = Axis(y.name, y.start, y.stop, resolution) if y else None
            sweep = SweepGrid(x=x, y=y, fixed=fixed, observables=preset.observables,
                              asymptotic=preset.asymptotic)
            axes = " ".join(f"{a.name}:{a.start:g}:{a.stop:g}:{a.steps}" for a in sweep.axes)
            when = "asymptotic" if preset.asymptotic else "t axis"
            comments.append(f"case {label or '-'}: {describe_fixed(sweep.fixed)} axes {axes} {when}")
            h, block = run_sweep(sweep, workers=workers)
        if tagged:
            h = ["case"] + h
            block = [[label] + row for row in block]
        header = h
        rows.extend(block)
    return header, rows, comments


def _params(fixed):
    return QuenchParams(
        gamma=fixed.get("gamma", 1.0),
        j0=fixed.get("j0", 1.0),
        j1=fixed.get("j1", 1.0),
        h0=fixed.get("h0", 1.0),
        h1=fixed.get("h1", 1.0),
        beta=beta_from_kt(fixed.get("kt", 0.0)),
        n_spins=fixed["n_spins"],
        grid=fixed["grid"],
    )
