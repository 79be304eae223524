import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from xyquench import INFINITE, ConfigurationError, QuenchParams
from xyquench.model import ModeAngle
from xyquench.modes import (
    evolved_density,
    initial_density,
    mode_hamiltonian,
    propagator,
    quench_oscillations,
    thermal_factors,
)
from xyquench.oracle import expm_taylor

coupling = st.floats(-3, 3, allow_nan=False)
gammas = st.floats(0, 1)
angles = st.floats(0, math.pi)
betas = st.one_of(st.just(INFINITE), st.floats(0, 30))


@st.composite
def quenches(draw):
    return QuenchParams(draw(gammas), draw(coupling), draw(coupling), draw(coupling),
                        draw(coupling), beta=draw(betas))


def test_hamiltonian_examples():
    assert np.allclose(mode_hamiltonian(1, 1, 1, math.pi), np.diag([2, 2, 2, 2]))
    assert np.allclose(mode_hamiltonian(0, 1, 0.4, 0.7), np.diag([2, -2, 0, 0]))


def test_hamiltonian_accepts_mode_angle():
    a = mode_hamiltonian(0.3, 1.2, 0.5, ModeAngle(3, 0.9))
    assert np.array_equal(a, mode_hamiltonian(0.3, 1.2, 0.5, 0.9))


@given(coupling, coupling, gammas, angles)
def test_hamiltonian_hermitian_block(j, h, g, phi):
    H = mode_hamiltonian(j, h, g, phi)
    assert np.allclose(H, H.conj().T)
    assert np.all(H[:2, 2:] == 0) and np.all(H[2:, :2] == 0)
    assert H[2, 3] == 0 and H[3, 2] == 0


def test_infinite_temperature_is_identity():
    p = QuenchParams(0.7, 1.3, 2, -0.4, 1, beta=0.0)
    assert np.allclose(initial_density(p, 1.1), np.eye(4) / 4)


def test_polarized_ground_state():
    p = QuenchParams(0.6, 0.0, 0.0, 1.0, 1.0)
    for phi in (0.3, 1.7, math.pi):
        assert np.allclose(initial_density(p, phi), np.diag([0, 1, 0, 0]))


def test_ground_state_matches_eigenvector():
    p = QuenchParams(1, 1, 1, 1, 1)
    rho = initial_density(p, math.pi / 2)
    w, v = np.linalg.eigh(mode_hamiltonian(1, 1, 1, math.pi / 2)[:2, :2])
    g = v[:, 0]
    ref = np.zeros((4, 4), dtype=complex)
    ref[:2, :2] = np.outer(g, g.conj())
    assert np.allclose(rho, ref, atol=1e-14)
    assert rho[0, 0].real == pytest.approx((2 - math.sqrt(2)) / 4)
    assert rho[1, 1].real == pytest.approx((2 + math.sqrt(2)) / 4)
    assert abs(rho[0, 1]) == pytest.approx(math.sqrt(2) / 4)


@settings(max_examples=60, deadline=None)
@given(quenches(), angles)
def test_initial_density_is_thermal(p, phi):
    rho = initial_density(p, phi)
    H = mode_hamiltonian(p.j0, p.h0, p.gamma, phi)
    w, v = np.linalg.eigh(H)
    if math.isinf(p.beta):
        if w[1] - w[0] < 1e-9 * max(1, abs(w[0])):
            return  # degenerate ground space: covered separately
        weights = (w == w[0]).astype(float)
    else:
        weights = np.exp(-p.beta * (w - w[0]))
    ref = (v * (weights / weights.sum())) @ v.conj().T
    assert np.allclose(rho, ref, atol=1e-10)


def test_degenerate_mode_is_maximally_mixed():
    # Gamma0 = 0 at phi = pi when J0 = h0: all four levels degenerate
    for beta in (INFINITE, 3.0):
        p = QuenchParams(1, 1, 0.5, 1, 1, beta=beta)
        assert np.allclose(initial_density(p, math.pi), np.eye(4) / 4)
        assert np.allclose(evolved_density(p, math.pi, 2.0), np.eye(4) / 4)


def test_thermal_factor_limits():
    ratio, boltz = thermal_factors(INFINITE, np.array([0.0, 2.0]))
    assert np.allclose(ratio, [0, 0.5]) and np.allclose(boltz, [1, 0])
    ratio, _ = thermal_factors(5.0, np.array([1e-11, 0.0]))
    assert np.allclose(ratio, [5.0, 5.0])


def test_propagator_examples():
    p = QuenchParams(1, 1, 1, 1, 1)
    assert np.allclose(propagator(p, 0.8, 0.0), np.eye(4))
    for t in (0.3, 2.0, 11.0):
        assert np.allclose(propagator(p, math.pi, t), np.exp(-2j * t) * np.eye(4), atol=1e-14)


def test_negative_time_rejected():
    p = QuenchParams(1, 1, 1, 1, 1)
    with pytest.raises(ConfigurationError):
        propagator(p, 1.0, -0.1)
    with pytest.raises(ConfigurationError):
        evolved_density(p, 1.0, -1)


@settings(max_examples=80, deadline=None)
@given(quenches(), angles, st.sampled_from([0.1, 1.0, 10.0]))
def test_propagator_unitary_and_exact(p, phi, t):
    U = propagator(p, phi, t)
    assert np.abs(U @ U.conj().T - np.eye(4)).max() < 1e-12
    ref = expm_taylor(-1j * t * mode_hamiltonian(p.j1, p.h1, p.gamma, phi))
    assert np.abs(U - ref).max() < 1e-10


@settings(max_examples=80, deadline=None)
@given(quenches(), angles, st.floats(0, 20))
def test_evolved_density_closed_form(p, phi, t):
    U = propagator(p, phi, t)
    rho = evolved_density(p, phi, t)
    ref = U @ initial_density(p, phi) @ U.conj().T
    assert np.abs(rho - ref).max() < 1e-10
    assert abs(np.trace(rho) - 1) < 1e-12
    assert np.linalg.eigvalsh(rho).min() > -1e-12


def test_reference_quench_point():
    p = QuenchParams(1, 1, 0.5, 1, 1)
    U = expm_taylor(-1j * mode_hamiltonian(0.5, 1, 1, math.pi / 2))
    ref = U @ initial_density(p, math.pi / 2) @ U.conj().T
    assert np.abs(evolved_density(p, math.pi / 2, 1.0) - ref).max() < 1e-10


def test_static_density_is_stationary():
    p = QuenchParams(0.5, 1.3, 1.3, 0.7, 0.7, beta=2.0)
    rho0 = initial_density(p, 1.0)
    for t in (0.0, 1.0, 50.0):
        assert np.allclose(evolved_density(p, 1.0, t), rho0, atol=1e-14)


def test_isotropic_density_is_frozen():
    p = QuenchParams(0.0, 2.0, 0.1, 1.0, 5.0, beta=1.0)
    rho0 = initial_density(p, 0.8)
    assert np.allclose(evolved_density(p, 0.8, 7.0), rho0, atol=1e-14)
    assert np.allclose(rho0, np.diag(np.diag(rho0)))


def test_oscillation_limits():
    g = np.array([0.0, 1e-13, 0.5])
    s2, s4 = quench_oscillations(g, 0.7)
    assert s2[0] == pytest.approx(4 * 0.49) and s4[0] == pytest.approx(2.8)
    assert s2[1] == pytest.approx(4 * 0.49)
    assert s2[2] == pytest.approx(math.sin(0.7) ** 2 / 0.25)
    s2, s4 = quench_oscillations(g, None)
    assert np.allclose(s2, [0, 0, 2]) and np.all(s4 == 0)
