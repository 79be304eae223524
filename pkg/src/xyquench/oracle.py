"""Brute-force reference paths, independent of the closed forms.

* numerical exponentiation of the 4x4 mode Hamiltonian,
* exact diagonalization of the full 2^n spin chain with periodic boundaries,
* the general Wootters concurrence of an arbitrary two-qubit state.
"""
from __future__ import annotations

import math
from functools import reduce

import numpy as np
import scipy.linalg as la
import scipy.sparse as sp

from .errors import ConfigurationError, ResourceError
from .model import INFINITE, QuenchParams
from .modes import mode_hamiltonian

__all__ = [
    "expm_taylor",
    "integrate_mode_propagator",
    "chain_hamiltonian",
    "parity_sectors",
    "thermal_state_vectors",
    "ed_reduced_density",
    "ed_observables",
    "ed_concurrence",
    "partial_trace_pair",
    "wootters_general",
]

MAX_ED_SPINS = 12

_SX = sp.csr_matrix(np.array([[0.0, 1.0], [1.0, 0.0]]))
# sigma^y sigma^y is real: keep i*sigma^y and flip the sign of the bond term
_ISY = sp.csr_matrix(np.array([[0.0, 1.0], [-1.0, 0.0]]))
_SZ = sp.csr_matrix(np.array([[1.0, 0.0], [0.0, -1.0]]))


def expm_taylor(a: np.ndarray, order: int = 18) -> np.ndarray:
    """Matrix exponential by scaling and squaring of a truncated Taylor series."""
    a = np.asarray(a, dtype=complex)
    norm = np.abs(a).sum(axis=0).max()
    squarings = max(0, int(math.ceil(math.log2(norm / 0.5)))) if norm > 0.5 else 0
    scaled = a / 2.0**squarings
    result = np.eye(a.shape[0], dtype=complex)
    term = np.eye(a.shape[0], dtype=complex)
    for k in range(1, order + 1):
        term = term @ scaled / k
        result = result + term
    for _ in range(squarings):
        result = result @ result
    return result


def integrate_mode_propagator(params: QuenchParams, mode, t: float) -> np.ndarray:
    """exp(-i t H_p(J1, h1)) by numerical exponentiation."""
    if t < 0:
        raise ConfigurationError(f"time must be non-negative, got {t!r}")
    H = mode_hamiltonian(params.j1, params.h1, params.gamma, mode)
    return expm_taylor(-1j * t * H)


def _site_op(op, site, n):
    ops = [sp.identity(2, format="csr")] * n
    ops[site] = op
    return reduce(lambda x, y: sp.kron(x, y, format="csr"), ops)


def chain_hamiltonian(n: int, j: float, h: float, gamma: float) -> np.ndarray:
    """Dense real matrix of the periodic XY chain on ``n`` spins.

    Basis states are ordered with site 0 as the most significant bit and
    bit value 0 meaning spin up (sigma^z = +1).
    """
    if n > MAX_ED_SPINS:
        raise ResourceError(f"exact diagonalization is limited to n <= {MAX_ED_SPINS}, got {n}")
    if n < 3:
        raise ConfigurationError("periodic chain needs at least 3 spins")
    sx = [_site_op(_SX, i, n) for i in range(n)]
    isy = [_site_op(_ISY, i, n) for i in range(n)]
    H = sp.csr_matrix((2**n, 2**n))
    for i in range(n):
        k = (i + 1) % n
        H = H - 0.5 * j * (1 + gamma) * (sx[i] @ sx[k])
        H = H + 0.5 * j * (1 - gamma) * (isy[i] @ isy[k])
        H = H - h * _site_op(_SZ, i, n)
    return H.toarray()


def parity_sectors(n: int) -> list[np.ndarray]:
    """Basis indices of the even and odd sigma^z-parity sectors, which H never mixes."""
    flips = np.array([bin(k).count("1") % 2 for k in range(2**n)])
    return [np.flatnonzero(flips == 0), np.flatnonzero(flips == 1)]


def thermal_state_vectors(H: np.ndarray, beta: float, degeneracy_tol: float = 1e-9, sectors=None):
    """Eigenvectors and normalized Boltzmann weights of exp(-beta H).

    At ``beta = INFINITE`` all levels within ``degeneracy_tol`` of the ground
    energy share the weight equally.  Weights below 1e-16 are dropped.  With
    ``sectors`` (index arrays of invariant subspaces) the result is a list of
    ``(indices, vectors, weights)`` per sector, vectors restricted to it.
    """
    blocks = sectors if sectors is not None else [np.arange(H.shape[0])]
    spectra = [la.eigh(H[np.ix_(idx, idx)]) for idx in blocks]
    ground = min(e[0] for e, _ in spectra)
    if math.isinf(beta):
        scale = max(1.0, abs(ground))
        raw = [(e - ground <= degeneracy_tol * scale).astype(float) for e, _ in spectra]
    else:
        raw = [np.exp(-beta * (e - ground)) for e, _ in spectra]
    total = sum(w.sum() for w in raw)
    out = []
    for idx, (_, vecs), w in zip(blocks, spectra, raw):
        w = w / total
        keep = w > 1e-16
        out.append((idx, vecs[:, keep], w[keep]))
    if sectors is None:
        return out[0][1], out[0][2]
    return out


def partial_trace_pair(states: np.ndarray, n: int, i: int, k: int) -> np.ndarray:
    """Reduced density matrix of sites ``(i, k)`` from weighted state columns.

    ``states`` has shape (2^n, m) with columns sqrt(w) |psi>; the result is the
    4x4 matrix sum_m w_m Tr_rest |psi_m><psi_m|, site ``i`` as the first qubit.
    """
    m = states.shape[1]
    t = states.reshape([2] * n + [m])
    t = np.moveaxis(t, (i, k), (0, 1)).reshape(4, -1)
    return t @ t.conj().T


def ed_reduced_density(params: QuenchParams, n: int, t, r: int) -> np.ndarray:
    """Reduced density matrix of spins (0, r) after the quench, by exact diagonalization.

    ``t=None`` is not supported: finite chains do not dephase.
    """
    if t is None or t < 0:
        raise ConfigurationError("exact diagonalization needs a finite time t >= 0")
    if not 1 <= r < n:
        raise ConfigurationError(f"separation must satisfy 1 <= r < n, got {r}")
    sectors = parity_sectors(n)
    H0 = chain_hamiltonian(n, params.j0, params.h0, params.gamma)
    H1 = chain_hamiltonian(n, params.j1, params.h1, params.gamma) if t > 0 else None
    rho = np.zeros((4, 4), dtype=complex)
    for idx, vecs, weights in thermal_state_vectors(H0, params.beta, sectors=sectors):
        if not len(weights):
            continue
        states = (vecs * np.sqrt(weights)).astype(complex)
        if H1 is not None:
            e1, v1 = la.eigh(H1[np.ix_(idx, idx)])
            states = v1 @ (np.exp(-1j * t * e1)[:, None] * (v1.T @ states))
        full = np.zeros((2**n, states.shape[1]), dtype=complex)
        full[idx] = states
        rho += partial_trace_pair(full, n, 0, r)
    return rho


def ed_observables(params: QuenchParams, n: int, t: float, r: int) -> dict:
    """Magnetization, spin-1/2 correlators and concurrence from the reduced ED state."""
    rho = ed_reduced_density(params, n, t, r)
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]])
    sz = np.diag([1.0, -1.0]).astype(complex)
    expect = lambda op: float(np.real(np.trace(rho @ op)))
    return {
        "magnetization": expect(np.kron(sz, np.eye(2))) / 2.0,
        "sx": expect(np.kron(sx, sx)) / 4.0,
        "sy": expect(np.kron(sy, sy)) / 4.0,
        "sz": expect(np.kron(sz, sz)) / 4.0,
        "concurrence": wootters_general(rho),
        "rho": rho,
    }


def ed_concurrence(gamma, j0, j1, h0, h1, beta=INFINITE, n=12, t=0.0, r=1) -> float:
    """Concurrence C(1, 1+r) of an ``n``-spin periodic chain after the quench."""
    params = QuenchParams(gamma, j0, j1, h0, h1, beta=beta, n_spins=max(4, n + n % 2))
    return wootters_general(ed_reduced_density(params, n, t, r))


def wootters_general(rho: np.ndarray, tol: float = 1e-8) -> float:
    """Concurrence of any two-qubit density matrix from the spectrum of rho * rho_tilde."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 density matrix, got shape {rho.shape}")
    if np.abs(rho - rho.conj().T).max() > tol:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > tol:
        raise ValueError(f"density matrix has trace {np.trace(rho).real!r}")
    if la.eigvalsh(rho).min() < -tol:
        raise ValueError("density matrix is not positive semidefinite")
    # lambda_i are the singular values of sqrt(rho) Y sqrt(rho)^*, Y = sy (x) sy;
    # an SVD keeps the small ones accurate where sqrt(eig(rho rho_tilde)) would not
    w, v = la.eigh(rho)
    root = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    yy = np.fliplr(np.diag([-1.0, 1.0, 1.0, -1.0]))
    lams = la.svdvals(root @ yy @ root.conj())
    return float(max(0.0, lams[0] - lams[1:].sum()))
