import numpy as np
import pytest

from xyquench import ASYMPTOTIC, ConfigurationError, QuenchParams, TimeSpec, contractions, magnetization
from xyquench.correlators import as_timespec
from xyquench.oracle import ed_observables


def test_timespec():
    assert ASYMPTOTIC.is_asymptotic and str(ASYMPTOTIC) == "asymptotic"
    assert as_timespec(2) == TimeSpec.at(2.0)
    assert as_timespec("asymptotic") is ASYMPTOTIC
    assert as_timespec(ASYMPTOTIC) is ASYMPTOTIC
    for bad in (-1.0, float("inf"), float("nan")):
        with pytest.raises(ConfigurationError):
            TimeSpec.at(bad)


def test_polarized_magnetization():
    assert magnetization(QuenchParams(0.4, 0, 0, 1, 1)) == pytest.approx(0.5, abs=1e-15)
    assert magnetization(QuenchParams(0.4, 0, 0, -1, -1)) == pytest.approx(-0.5, abs=1e-15)


def test_infinite_temperature_magnetization():
    p = QuenchParams(1, 2, 0.5, 1, 3, beta=0.0)
    for when in (0.0, 3.0, ASYMPTOTIC):
        assert magnetization(p, when) == 0.0


def test_magnetization_bounds():
    rng = np.random.default_rng(3)
    for _ in range(50):
        j0, j1, h0, h1 = rng.uniform(-3, 3, 4)
        p = QuenchParams(rng.uniform(), j0, j1, h0, h1, beta=rng.choice([np.inf, 0.5, 3.0]))
        assert abs(magnetization(p, rng.uniform(0, 10))) <= 0.5 + 1e-12


def test_equal_site_values():
    cs = contractions(QuenchParams(0.3, 2, 1, 0.5, 1, beta=2.0), 1.7, r_max=3)
    assert cs.Q(0) == 1 and cs.G(0) == -1


def test_p_is_reflected_f():
    cs = contractions(QuenchParams(1, 2, 1, 1, 1), 2.5, r_max=3)
    for r in range(-3, 4):
        assert cs.P(r) == -cs.F(-r)
    assert np.array_equal(cs.p, -cs.f[::-1])
    assert cs.contraction("A", 2, "B", 5) == cs.P(3)
    assert cs.contraction("B", 4, "A", 1) == cs.F(-3)
    assert cs.contraction("B", 0, "B", 2) == cs.G(2)


def test_static_contractions_are_real():
    cs = contractions(QuenchParams(1, 1, 1, 1, 1), 3.0)
    assert np.all(cs.q.imag == 0) and np.all(cs.g.imag == 0)
    assert np.all(cs.f.imag == 0)


def test_static_time_independence():
    p = QuenchParams(0.5, 0.8, 0.8, 1.2, 1.2, beta=1.5)
    ref = contractions(p, 0.0)
    for t in (0.4, 9.0):
        cs = contractions(p, t)
        assert np.abs(cs.f - ref.f).max() < 1e-12
        assert np.abs(cs.q - ref.q).max() < 1e-12
    assert abs(magnetization(p, 9.0) - magnetization(p, 0.0)) < 1e-12


def test_range_checks():
    p = QuenchParams(1, 1, 1, 1, 1, n_spins=8)
    with pytest.raises(ConfigurationError):
        contractions(p, r_max=4)
    with pytest.raises(ConfigurationError):
        contractions(p, r_max=0)
    cs = contractions(p, r_max=2)
    with pytest.raises(ConfigurationError):
        cs.F(3)


@pytest.mark.parametrize("n", [8, 12])
def test_f1_matches_ed_on_same_chain(n):
    # momentum sums on the chain's own grid are exact for the even-parity ground state
    p = QuenchParams(1, 2, 1, 1, 1, n_spins=n)
    ed = ed_observables(p, n, 5.0, 1)
    cs = contractions(p, 5.0, r_max=1)
    assert abs(4 * ed["sx"] - cs.F(1).real) < 1e-10
    assert abs(ed["magnetization"] - magnetization(p, 5.0)) < 1e-10


def test_time_average_equals_asymptotic():
    rng = np.random.default_rng(11)
    ts = np.arange(100.0, 200.0 + 1e-9, 0.01)
    for _ in range(2):
        j0, j1, h0, h1 = rng.uniform(0.2, 2, 4)
        p = QuenchParams(rng.uniform(0.2, 1), j0, j1, h0, h1)
        mean_m = np.mean([magnetization(p, t) for t in ts])
        assert abs(mean_m - magnetization(p, ASYMPTOTIC)) < 1e-3
        mean_f = np.mean([contractions(p, t, r_max=2).f for t in ts[::10]], axis=0)
        assert np.abs(mean_f - contractions(p, ASYMPTOTIC, r_max=2).f).max() < 1e-3


def test_reference_time_average_point():
    p = QuenchParams(1, 1, 0.5, 1, 1)
    ts = np.arange(100.0, 200.0 + 1e-9, 0.01)
    assert abs(np.mean([magnetization(p, t) for t in ts]) - magnetization(p)) < 1e-3


def test_convergence_in_n():
    for gamma, j0, j1 in [(1, 0.5, 1), (0.5, 2, 0.7), (0, 1, 3)]:
        a = QuenchParams(gamma, j0, j1, 1, 1, n_spins=1000)
        b = a.replace(n_spins=2000)
        for when in (ASYMPTOTIC, 4.0):
            assert abs(magnetization(a, when) - magnetization(b, when)) < 1e-6
            fa, fb = contractions(a, when).f, contractions(b, when).f
            assert np.abs(fa - fb).max() < 1e-6
