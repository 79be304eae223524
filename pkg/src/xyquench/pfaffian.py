"""Pfaffians of skew-symmetric matrices and the Wick-theorem spin correlators."""
from __future__ import annotations

import numpy as np

from .correlators import ContractionSet
from .errors import ConfigurationError, NumericalConsistencyError

__all__ = [
    "pfaffian",
    "skew_from_upper",
    "correlator_operators",
    "wick_matrix",
    "spin_correlators",
]


def skew_from_upper(upper, dim: int) -> np.ndarray:
    """Build a ``dim x dim`` skew matrix from its strict upper triangle, row-major."""
    upper = np.asarray(upper)
    iu = np.triu_indices(dim, k=1)
    if upper.size != len(iu[0]):
        raise ValueError(f"expected {len(iu[0])} upper-triangle entries, got {upper.size}")
    m = np.zeros((dim, dim), dtype=np.result_type(upper.dtype, float))
    m[iu] = upper
    return m - m.T


def pfaffian(m, *, check: bool = True):
    """Pfaffian of a skew-symmetric matrix.

    Skew-symmetric Gaussian elimination to tridiagonal form with partial
    pivoting (Parlett-Reid), O(n^3).  Every row/column interchange flips
    the sign.

    Parameters
    ----------
    m : array_like, shape (n, n)
        Real or complex skew-symmetric matrix with ``n`` even.
    check : bool
        Verify skew symmetry to a relative tolerance of 1e-12.
    """
    a = np.array(m, dtype=np.result_type(np.asarray(m).dtype, float), copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"pfaffian needs a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n % 2:
        raise ValueError(f"pfaffian needs an even dimension, got {n}")
    if n == 0:
        return a.dtype.type(1)
    if check:
        scale = max(np.abs(a).max(), 1.0)
        if np.abs(a + a.T).max() > 1e-12 * scale:
            raise ValueError("matrix is not skew-symmetric")

    result = a.dtype.type(1)
    for k in range(0, n - 1, 2):
        kp = k + 1 + int(np.abs(a[k + 1 :, k]).argmax())
        if kp != k + 1:
            a[[k + 1, kp], :] = a[[kp, k + 1], :]
            a[:, [k + 1, kp]] = a[:, [kp, k + 1]]
            result = -result
        pivot = a[k, k + 1]
        if pivot == 0:
            return a.dtype.type(0)
        result = result * pivot
        if k + 2 < n:
            tau = a[k, k + 2 :] / pivot
            col = a[k + 2 :, k + 1]
            a[k + 2 :, k + 2 :] += np.outer(tau, col) - np.outer(col, tau)
    return result


def correlator_operators(component: str, r: int) -> list[tuple[str, int]]:
    """Ordered Majorana strings whose expectation gives S^component at separation r.

    Sites are counted from the left spin (site 0).
    """
    if r < 1:
        raise ConfigurationError(f"separation must be >= 1, got {r}")
    middle = range(1, r)
    if component == "x":
        return [("B", 0)] + [op for k in middle for op in (("A", k), ("B", k))] + [("A", r)]
    if component == "y":
        return [("A", 0)] + [op for k in middle for op in (("B", k), ("A", k))] + [("B", r)]
    if component == "z":
        return [("A", 0), ("B", 0), ("A", r), ("B", r)]
    raise ValueError(f"unknown component {component!r}")


def wick_matrix(cs: ContractionSet, ops) -> np.ndarray:
    """Skew matrix with entry (i, j), i < j, equal to <O_i O_j>."""
    n = len(ops)
    m = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(i + 1, n):
            m[i, j] = cs.contraction(*ops[i], *ops[j])
            m[j, i] = -m[i, j]
    return m


def spin_correlators(cs: ContractionSet, r: int, tol: float = 1e-8) -> tuple[float, float, float]:
    """Return ``(<S^x_l S^x_{l+r}>, <S^y_l S^y_{l+r}>, <S^z_l S^z_{l+r}>)`` for spin-1/2 operators."""
    if r > cs.r_max:
        raise ConfigurationError(f"separation {r} exceeds contraction range {cs.r_max}")
    sign_y = -1.0 if r % 2 else 1.0
    values = (
        pfaffian(wick_matrix(cs, correlator_operators("x", r))) / 4.0,
        sign_y * pfaffian(wick_matrix(cs, correlator_operators("y", r))) / 4.0,
        pfaffian(wick_matrix(cs, correlator_operators("z", r))) / 4.0,
    )
    for label, v in zip("xyz", values):
        if not abs(v.imag) <= tol:
            raise NumericalConsistencyError(
                f"S^{label} correlator at r={r} has imaginary part {v.imag:.3e}"
            )
    return tuple(float(v.real) for v in values)
