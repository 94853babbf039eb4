"""Small dense Hermitian linear algebra.

Matrices are plain ``numpy`` complex128 arrays. Everything here targets
D <= 16, where LAPACK's ``eigh`` is both exact enough and fast enough.
"""

from __future__ import annotations

import numpy as np

# Tolerances used across the package.
HERMITIAN_TOL = 1e-12
DECOMPOSITION_TOL = 1e-10
UNITARY_TOL = 1e-10
SEQUENCE_UNITARY_TOL = 1e-9


class NonHermitianError(ValueError):
    """Raised when a matrix handed to an eigen-solver is not Hermitian."""

    def __init__(self, asymmetry: float, tol: float):
        self.asymmetry = asymmetry
        self.tol = tol
        super().__init__(
            f"matrix is not Hermitian: max |H - H^dagger| entry = {asymmetry:.3e} "
            f"exceeds tolerance {tol:.1e}"
        )


def as_matrix(m) -> np.ndarray:
    """Coerce ``m`` to a finite square complex128 matrix."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim == 0:
        a = a.reshape(1, 1)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix contains NaN or Inf entries")
    return a


def max_asymmetry(m: np.ndarray) -> float:
    return float(np.max(np.abs(m - m.conj().T)))


def is_hermitian(m, tol: float = HERMITIAN_TOL) -> bool:
    return max_asymmetry(as_matrix(m)) <= tol


def is_unitary(m, tol: float = UNITARY_TOL) -> bool:
    a = as_matrix(m)
    err = np.max(np.abs(a.conj().T @ a - np.eye(a.shape[0])))
    return bool(err <= tol)


def _fix_phases(vecs: np.ndarray) -> np.ndarray:
    # Largest-magnitude component of each eigenvector made real positive,
    # so neighbouring parameter values see the same gauge.
    idx = np.argmax(np.abs(vecs), axis=0)
    pivots = vecs[idx, np.arange(vecs.shape[1])]
    return vecs * (np.abs(pivots) / pivots)


def hermitian_eigen(m, tol: float = HERMITIAN_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decompose a Hermitian matrix.

    Returns ascending real eigenvalues and a unitary matrix whose columns are
    the matching eigenvectors. The input is symmetrized, ``(m + m^dagger)/2``,
    before decomposition; anything further than ``tol`` from Hermitian is
    rejected with :class:`NonHermitianError`.
    """
    a = as_matrix(m)
    asym = max_asymmetry(a)
    if asym > tol:
        raise NonHermitianError(asym, tol)
    a = 0.5 * (a + a.conj().T)
    vals, vecs = np.linalg.eigh(a)
    return vals, _fix_phases(vecs)


def unitary_exp(h, t: float) -> np.ndarray:
    """exp(-i h t) for Hermitian ``h`` via its eigendecomposition."""
    if not np.isfinite(t):
        raise ValueError(f"evolution time must be finite, got {t!r}")
    vals, vecs = hermitian_eigen(h)
    return (vecs * np.exp(-1j * vals * t)) @ vecs.conj().T
