"""Per-momentum 4x4 objects in the basis {|0>, c+_p c+_-p|0>, c+_p|0>, c+_-p|0>}.

Density matrices are always returned normalized.  The unnormalized Boltzmann
prefactors exp(2 beta (J cos phi + Gamma)) overflow at large beta and cancel in
every expectation value, so they are never formed.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import ConfigurationError
from .model import QuenchParams, alpha_delta, dispersion

__all__ = [
    "EPS",
    "mode_hamiltonian",
    "initial_density",
    "propagator",
    "evolved_density",
]

#: Below this value a dispersion Gamma is treated as zero.
EPS = 1e-12


def _phi(mode) -> float:
    return float(getattr(mode, "phi", mode))


def _check_time(t):
    if not (t >= 0.0 and math.isfinite(t)):
        raise ConfigurationError(f"time must be finite and non-negative, got {t!r}")


def thermal_factors(beta, g0):
    """Return ``(tanh(beta*g0)/g0, exp(-2*beta*g0))`` elementwise, with limits.

    A mode with ``g0 <= EPS`` has four degenerate levels, so its thermal state
    is the identity/4 at every beta: the first factor is beta for finite beta
    and 0 at beta = INFINITE, the second is 1.
    """
    g0 = np.asarray(g0, dtype=float)
    degenerate = g0 <= EPS
    safe = np.where(degenerate, 1.0, g0)
    if math.isinf(beta):
        ratio = np.where(degenerate, 0.0, 1.0 / safe)
        boltz = np.where(degenerate, 1.0, 0.0)
        return ratio, boltz
    x = beta * g0
    small = x < 1e-8
    ratio = np.where(small, beta, np.tanh(x) / safe)
    boltz = np.exp(-2.0 * x)
    return ratio, boltz


def quench_oscillations(g1, t):
    """Return ``(sin^2(2 t g1)/g1^2, sin(4 t g1)/g1)`` elementwise.

    ``t=None`` gives the dephased long-time values 1/(2 g1^2) and 0.  A mode
    with ``g1 <= EPS`` does not oscillate and keeps its t = 0 value.
    """
    g1 = np.asarray(g1, dtype=float)
    if t is None:
        safe = np.where(g1 <= EPS, 1.0, g1)
        s2 = np.where(g1 <= EPS, 0.0, 0.5 / safe**2)
        return s2, np.zeros_like(g1)
    # np.sinc(x) = sin(pi x)/(pi x), exact through x = 0
    s2 = (2.0 * t * np.sinc(2.0 * t * g1 / np.pi)) ** 2
    s4 = 4.0 * t * np.sinc(4.0 * t * g1 / np.pi)
    return s2, s4


def mode_hamiltonian(j: float, h: float, gamma: float, mode) -> np.ndarray:
    """Matrix of the mode Hamiltonian H_p for coupling ``j`` and field ``h``."""
    phi = _phi(mode)
    _, delta = alpha_delta(j, h, gamma, phi)
    c = math.cos(phi)
    H = np.zeros((4, 4), dtype=complex)
    H[0, 0] = 2.0 * h
    H[0, 1] = -1j * j * delta
    H[1, 0] = 1j * j * delta
    H[1, 1] = -4.0 * j * c - 2.0 * h
    H[2, 2] = H[3, 3] = -2.0 * j * c
    return H


def initial_density(params: QuenchParams, mode) -> np.ndarray:
    """Normalized thermal state exp(-beta H_p(J0, h0)) / Z of one mode pair."""
    phi = _phi(mode)
    _, delta = alpha_delta(params.j0, params.h0, params.gamma, phi)
    g0 = float(dispersion(params.j0, params.h0, params.gamma, phi))
    a0 = params.j0 * math.cos(phi) + params.h0
    ratio, x = (float(v) for v in thermal_factors(params.beta, g0))
    z = (1.0 + x) ** 2
    # tanh(beta g0) = (1 - x^2)/z
    tanh_term = ratio / 4.0
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = (1.0 + x * x) / (2.0 * z) - 2.0 * a0 * tanh_term
    rho[1, 1] = (1.0 + x * x) / (2.0 * z) + 2.0 * a0 * tanh_term
    rho[0, 1] = 1j * delta * params.j0 * tanh_term
    rho[1, 0] = np.conj(rho[0, 1])
    rho[2, 2] = rho[3, 3] = x / z
    return rho


def propagator(params: QuenchParams, mode, t: float) -> np.ndarray:
    """Step-quench evolution operator exp(-i t H_p(J1, h1)) in closed form."""
    _check_time(t)
    phi = _phi(mode)
    j1, h1 = params.j1, params.h1
    _, delta = alpha_delta(j1, h1, params.gamma, phi)
    g1 = float(dispersion(j1, h1, params.gamma, phi))
    c = math.cos(phi)
    phase = np.exp(2j * t * j1 * c)
    sin_over = 2.0 * t * np.sinc(2.0 * t * g1 / np.pi)  # sin(2 t g1)/g1
    cos_term = math.cos(2.0 * t * g1)
    U = np.zeros((4, 4), dtype=complex)
    U[0, 0] = phase * (-1j * (j1 * c + h1) * sin_over + cos_term)
    U[0, 1] = phase * (-j1 * delta * sin_over / 2.0)
    U[1, 0] = phase * (j1 * delta * sin_over / 2.0)
    U[1, 1] = phase * (1j * (j1 * c + h1) * sin_over + cos_term)
    U[2, 2] = U[3, 3] = phase
    return U


def evolved_density(params: QuenchParams, mode, t: float) -> np.ndarray:
    """Normalized rho_p(t) = U rho_p(0) U^+ from its closed form."""
    _check_time(t)
    phi = _phi(mode)
    gamma = params.gamma
    j0, j1, h0, h1 = params.j0, params.j1, params.h0, params.h1
    c = math.cos(phi)
    _, delta = alpha_delta(j0, h0, gamma, phi)
    g0 = float(dispersion(j0, h0, gamma, phi))
    g1 = float(dispersion(j1, h1, gamma, phi))
    ratio, x = (float(v) for v in thermal_factors(params.beta, g0))
    s2, s4 = (float(v) for v in quench_oscillations(g1, t))
    z = (1.0 + x) ** 2
    mismatch = j0 * h1 - j1 * h0
    tanh_term = ratio / 4.0
    shift = tanh_term * (j1 * mismatch * delta**2 * s2 + 2.0 * (j0 * c + h0))
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = (1.0 + x * x) / (2.0 * z) - shift
    rho[1, 1] = (1.0 + x * x) / (2.0 * z) + shift
    rho[0, 1] = delta * tanh_term * (
        mismatch * s4 + 1j * (j0 - 2.0 * mismatch * (j1 * c + h1) * s2)
    )
    rho[1, 0] = np.conj(rho[0, 1])
    rho[2, 2] = rho[3, 3] = x / z
    return rho
