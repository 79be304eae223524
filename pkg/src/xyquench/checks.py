"""Oracle comparison suites behind ``xyquench oracle``.

Each suite draws its own random cases from the generator it is given and
returns a :class:`Report` listing the worst deviation of every comparison.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .correlators import TimeSpec, contractions, magnetization
from .entanglement import TwoSiteState, concurrence, two_site_density
from .model import INFINITE, QuenchParams
from .modes import evolved_density, initial_density, propagator
from .oracle import ed_concurrence, ed_observables, integrate_mode_propagator, wootters_general
from .pfaffian import spin_correlators

__all__ = ["Report", "SUITES", "mode_propagator_suite", "wootters_xstate_suite", "ed_small_n_suite"]


@dataclass
class Report:
    suite: str
    rows: list = field(default_factory=list)  # (name, value, limit, passed)

    def add(self, name, value, limit, passed=None):
        ok = value <= limit if passed is None else passed
        self.rows.append((name, float(value), float(limit), bool(ok)))

    @property
    def passed(self) -> bool:
        return all(r[3] for r in self.rows)

    def lines(self):
        for name, value, limit, ok in self.rows:
            yield f"{'PASS' if ok else 'FAIL'}  {name}: {value:.3e} (limit {limit:.1e})"
        yield f"{self.suite}: {'PASS' if self.passed else 'FAIL'}"


def random_quench(rng, n_spins=1000) -> QuenchParams:
    j0, j1, h0, h1 = rng.uniform(-3, 3, size=4)
    beta = INFINITE if rng.random() < 0.3 else float(rng.uniform(0.05, 20))
    return QuenchParams(float(rng.uniform(0, 1)), j0, j1, h0, h1, beta=beta, n_spins=n_spins)


def mode_propagator_suite(rng, cases: int = 100) -> Report:
    """Closed-form U_p and rho_p(t) against numerical exponentiation."""
    rep = Report("mode-propagator")
    du = drho = unit = 0.0
    for _ in range(cases):
        params = random_quench(rng)
        phi = float(rng.uniform(0, np.pi))
        t = float(rng.uniform(0, 10))
        u = propagator(params, phi, t)
        ref = integrate_mode_propagator(params, phi, t)
        du = max(du, np.abs(u - ref).max())
        unit = max(unit, np.abs(u @ u.conj().T - np.eye(4)).max())
        rho0 = initial_density(params, phi)
        drho = max(drho, np.abs(evolved_density(params, phi, t) - ref @ rho0 @ ref.conj().T).max())
    rep.add("U closed form vs exp(-iHt)", du, 1e-10)
    rep.add("U unitarity", unit, 1e-12)
    rep.add("rho(t) closed form vs U rho0 U^+", drho, 1e-10)
    return rep


def random_xstate(rng) -> TwoSiteState:
    """Full-rank X state with coherences up to 99% of the positivity bound."""
    d = rng.dirichlet(np.ones(4))
    r23 = rng.uniform(-0.99, 0.99) * np.sqrt(d[1] * d[2])
    r14 = rng.uniform(-0.99, 0.99) * np.sqrt(d[0] * d[3])
    return TwoSiteState(d[0], d[1], d[2], d[3], r23, r14)


def wootters_xstate_suite(rng, cases: int = 2000) -> Report:
    """Closed X-state concurrence against the general Wootters construction."""
    rep = Report("wootters-xstate")
    worst = 0.0
    for _ in range(cases):
        s = random_xstate(rng)
        worst = max(worst, abs(concurrence(s) - wootters_general(s.matrix())))
    rep.add(f"random full-rank X states ({cases})", worst, 1e-10)
    bell = TwoSiteState(0.0, 0.5, 0.5, 0.0, 0.5, 0.0)
    bell2 = TwoSiteState(0.5, 0.0, 0.0, 0.5, 0.0, 0.5)
    special = [(bell, 1.0), (bell2, 1.0), (TwoSiteState(1, 0, 0, 0, 0, 0), 0.0),
               (TwoSiteState(0.25, 0.25, 0.25, 0.25, 0, 0), 0.0)]
    dev = max(max(abs(concurrence(s) - c), abs(wootters_general(s.matrix()) - c))
              for s, c in special)
    rep.add("Bell, product and maximally mixed states", dev, 1e-10)
    return rep


def _analytic(params, t, r):
    when = TimeSpec.at(t) if t is not None else TimeSpec(None)
    mz = magnetization(params, when)
    sx, sy, sz = spin_correlators(contractions(params, when, r_max=r), r)
    return {"magnetization": mz, "sx": sx, "sy": sy, "sz": sz,
            "concurrence": concurrence(two_site_density(mz, sx, sy, sz))}


def ed_small_n_suite(rng, n_values=(8, 10, 12)) -> Report:
    """Exact diagonalization of short periodic chains.

    On a chain of n spins the momentum sums on the midpoint grid with N = n are
    exact in the even-parity sector, so magnetization and correlators must agree
    to roundoff.  The initial field dominates (|J0| < |h0|) so the finite-chain
    ground state is unique and lies in that sector; otherwise, most visibly at
    small gamma, it can sit in the odd sector.  Against the N = 1000 result the
    ED concurrence must converge as n grows.
    """
    rep = Report("ed-small-n")
    n = 8
    worst = 0.0
    for _ in range(3):
        params = random_quench(rng, n_spins=n)
        params = params.replace(beta=INFINITE, j0=params.h0 * float(rng.uniform(-0.9, 0.9)))
        t = float(rng.uniform(0, 3))
        ed = ed_observables(params, n, t, 1)
        an = _analytic(params, t, 1)
        worst = max(worst, max(abs(ed[k] - an[k]) for k in ("magnetization", "sx", "sy", "sz")))
    rep.add(f"n={n} quench: magnetization and correlators vs momentum sums", worst, 1e-10)

    ref = _analytic(QuenchParams.static(1.0, 1.0, 1.0), None, 1)["concurrence"]
    errs = {n: abs(ed_concurrence(1.0, 1.0, 1.0, 1.0, 1.0, n=n) - ref) for n in n_values}
    for n, e in errs.items():
        rep.add(f"critical Ising C(i,i+1), |ED(n={n}) - N=1000|", e, 0.03)
    lo, hi = min(n_values), max(n_values)
    rep.add(f"finite-size convergence |ED({hi})| < |ED({lo})|", errs[hi], errs[lo],
            passed=errs[hi] < errs[lo])
    return rep


SUITES = {
    "mode-propagator": mode_propagator_suite,
    "ed-small-n": ed_small_n_suite,
    "wootters-xstate": wootters_xstate_suite,
}
