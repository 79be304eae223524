"""Entanglement dynamics of the anisotropic XY chain after a step quench of J and h.

The chain maps onto free fermions, so every quantity here is a finite sum over
momentum modes: no many-body state is ever built, except in :mod:`xyquench.oracle`.
"""

__version__ = "0.1.0"

from .correlators import ASYMPTOTIC, ContractionSet, TimeSpec, contractions, magnetization
from .entanglement import TwoSiteState, concurrence, concurrence_at, observables_at, two_site_density
from .errors import ConfigurationError, NumericalConsistencyError, ResourceError
from .model import (
    INFINITE,
    ModeAngle,
    QuenchParams,
    alpha_delta,
    beta_from_kt,
    coupling_at,
    dispersion,
    field_at,
    mode_angles,
)
from .modes import evolved_density, initial_density, mode_hamiltonian, propagator
from .pfaffian import pfaffian, spin_correlators

__all__ = [
    "__version__",
    "ASYMPTOTIC",
    "INFINITE",
    "ConfigurationError",
    "ContractionSet",
    "ModeAngle",
    "NumericalConsistencyError",
    "QuenchParams",
    "ResourceError",
    "TimeSpec",
    "TwoSiteState",
    "alpha_delta",
    "beta_from_kt",
    "concurrence",
    "concurrence_at",
    "contractions",
    "coupling_at",
    "dispersion",
    "evolved_density",
    "field_at",
    "initial_density",
    "magnetization",
    "mode_angles",
    "mode_hamiltonian",
    "observables_at",
    "pfaffian",
    "propagator",
    "spin_correlators",
    "two_site_density",
]
