"""Dense complex linear-algebra primitives used throughout the library.

Everything here works on plain ``numpy`` arrays of complex numbers. Composite
system-environment spaces are ordered system (x) environment with the
environment index fastest-varying; every module in the package follows this
convention.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    NotHermitian,
    NotOrthonormal,
    NotSquare,
    NotState,
    ShapeMismatch,
    TooManyColumns,
)

__all__ = [
    "ToleranceProfile",
    "DEFAULT_TOL",
    "HermitianEigenResult",
    "hermitian_eig",
    "schur_product",
    "partial_trace_env",
    "partial_trace_sys",
    "unitary_completion",
    "von_neumann_entropy",
]


@dataclass(frozen=True)
class ToleranceProfile:
    """Numerical tolerances shared by validation routines.

    herm  - max allowed |a_kl - conj(a_lk)| for a matrix to count as Hermitian
    eig   - relative reconstruction / orthonormality tolerance for eigensolves
    psd   - eigenvalues >= -psd are accepted as nonnegative (and clamped to 0)
    tr    - allowed deviation of a trace or probability sum from 1
    """

    herm: float = 1e-9
    eig: float = 1e-9
    psd: float = 1e-9
    tr: float = 1e-9


DEFAULT_TOL = ToleranceProfile()


@dataclass(frozen=True)
class HermitianEigenResult:
    """Eigenvalues sorted descending; column j of ``eigenvectors`` pairs with
    ``eigenvalues[j]``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ShapeMismatch(f"expected a 2-d array, got shape {m.shape}")
    return m


def _require_square(m: np.ndarray) -> np.ndarray:
    if m.shape[0] != m.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {m.shape}")
    return m


def _require_hermitian(m: np.ndarray, tol: float) -> None:
    dev = np.max(np.abs(m - m.conj().T)) if m.size else 0.0
    if dev > tol:
        raise NotHermitian(f"max |a_kl - conj(a_lk)| = {dev:.3e} exceeds {tol:.1e}")


def hermitian_eig(a, tol: ToleranceProfile = DEFAULT_TOL) -> HermitianEigenResult:
    """Eigendecomposition of a Hermitian matrix.

    Returns eigenvalues sorted descending with matching orthonormal
    eigenvector columns. Each eigenvector is phase-fixed so that its
    largest-modulus entry is real and positive, which makes downstream
    constructions (Kolmogorov vectors, dilations) deterministic.
    """
    m = _require_square(_as_matrix(a))
    _require_hermitian(m, tol.herm)
    vals, vecs = np.linalg.eigh((m + m.conj().T) / 2)
    order = np.argsort(-vals, kind="stable")
    vals = vals[order]
    vecs = vecs[:, order]
    anchors = vecs[np.argmax(np.abs(vecs), axis=0), np.arange(vecs.shape[1])]
    vecs = vecs / (anchors / np.abs(anchors))[None, :]
    return HermitianEigenResult(eigenvalues=vals, eigenvectors=vecs)


def schur_product(a, b) -> np.ndarray:
    """Entrywise (Schur/Hadamard) product of two equally-shaped matrices."""
    ma, mb = _as_matrix(a), _as_matrix(b)
    if ma.shape != mb.shape:
        raise ShapeMismatch(f"shapes {ma.shape} and {mb.shape} differ")
    return ma * mb


def partial_trace_env(m, dim_sys: int, dim_env: int) -> np.ndarray:
    """Trace out the environment (fast index) of a system (x) environment matrix."""
    mm = _as_matrix(m)
    n = dim_sys * dim_env
    if mm.shape != (n, n):
        raise ShapeMismatch(f"expected shape ({n}, {n}), got {mm.shape}")
    return np.trace(mm.reshape(dim_sys, dim_env, dim_sys, dim_env), axis1=1, axis2=3)


def partial_trace_sys(m, dim_sys: int, dim_env: int) -> np.ndarray:
    """Trace out the system (slow index), leaving the environment."""
    mm = _as_matrix(m)
    n = dim_sys * dim_env
    if mm.shape != (n, n):
        raise ShapeMismatch(f"expected shape ({n}, {n}), got {mm.shape}")
    return np.trace(mm.reshape(dim_sys, dim_env, dim_sys, dim_env), axis1=0, axis2=2)


def _fill_remaining_columns(u: np.ndarray, filled: list[int], tol_skip: float = 1e-8):
    """Complete partially assigned unitary columns by Gram-Schmidt.

    Standard basis vectors are orthogonalized against the already-assigned
    columns in index order; candidates whose residual norm falls below
    ``tol_skip`` are skipped. Deterministic by construction.
    """
    total = u.shape[0]
    free = [j for j in range(total) if j not in filled]
    taken = [u[:, j] for j in filled]
    it = iter(free)
    for cand in range(total):
        if len(taken) == total:
            break
        v = np.zeros(total, dtype=complex)
        v[cand] = 1.0
        for w in taken:
            v = v - w * (w.conj() @ v)
        nrm = np.linalg.norm(v)
        if nrm < tol_skip:
            continue
        v = v / nrm
        j = next(it)
        u[:, j] = v
        taken.append(v)
    if len(taken) != total:
        raise NotOrthonormal("could not complete the column set to a unitary")
    return u


def unitary_completion(columns, total_dim: int, tol: ToleranceProfile = DEFAULT_TOL) -> np.ndarray:
    """Extend orthonormal vectors to a full unitary whose first columns are the inputs.

    Completion convention: Gram-Schmidt of the standard basis against the
    given columns, in index order, skipping candidates with residual norm
    below 1e-8.
    """
    cols = [np.asarray(c, dtype=complex).reshape(-1) for c in columns]
    if len(cols) > total_dim:
        raise TooManyColumns(f"{len(cols)} columns cannot fit in dimension {total_dim}")
    for c in cols:
        if c.shape[0] != total_dim:
            raise ShapeMismatch(f"column length {c.shape[0]} != total_dim {total_dim}")
    if cols:
        g = np.array([[ci.conj() @ cj for cj in cols] for ci in cols])
        if np.max(np.abs(g - np.eye(len(cols)))) > tol.eig:
            raise NotOrthonormal("input columns are not orthonormal")
    u = np.zeros((total_dim, total_dim), dtype=complex)
    for j, c in enumerate(cols):
        u[:, j] = c
    return _fill_remaining_columns(u, list(range(len(cols))))


def von_neumann_entropy(rho, tol: ToleranceProfile = DEFAULT_TOL) -> float:
    """Von Neumann entropy in bits, -sum(lam * log2(lam)) with 0*log 0 = 0.

    The input must be a valid state: Hermitian, PSD, and unit trace within
    the profile's tolerances.
    """
    m = _require_square(_as_matrix(rho))
    _require_hermitian(m, tol.herm)
    tr = np.trace(m).real
    if abs(tr - 1.0) > tol.tr:
        raise NotState(f"trace {tr} differs from 1 beyond tolerance")
    vals = np.linalg.eigvalsh((m + m.conj().T) / 2)
    if vals[0] < -tol.psd:
        raise NotState(f"negative eigenvalue {vals[0]:.3e} beyond tolerance")
    vals = np.clip(vals, 0.0, None)
    nz = vals[vals > 0]
    return float(-(nz * np.log2(nz)).sum())
