"""Decoherence channels as Schur-product maps.

A channel that preserves every observable diagonal in a fixed basis is
fully described by a correlation matrix xi (PSD, unit diagonal): it acts as
``O -> xi o O`` on observables and ``rho -> xi^T o rho`` on states, where
``o`` is the entrywise product. The decoherence basis is always the
standard basis here.
"""

from dataclasses import dataclass

import numpy as np

from .errors import BadDiagonal, NotPSD, NotState, ShapeMismatch
from .numerics import (
    DEFAULT_TOL,
    ToleranceProfile,
    _as_matrix,
    _require_hermitian,
    _require_square,
    schur_product,
)

__all__ = [
    "DensityMatrix",
    "CorrelationMatrix",
    "SchurChannel",
    "validate_correlation",
    "apply_heisenberg",
    "apply_schrodinger",
    "iterate",
    "asymptotic_state",
    "choi_operator",
    "jamiolkowski_operator",
]


@dataclass(frozen=True)
class DensityMatrix:
    """Validated quantum state: Hermitian, PSD, unit trace."""

    dim: int
    matrix: np.ndarray

    @classmethod
    def from_matrix(cls, m, tol: ToleranceProfile = DEFAULT_TOL) -> "DensityMatrix":
        mm = _require_square(_as_matrix(m))
        _require_hermitian(mm, tol.herm)
        tr = np.trace(mm).real
        if abs(tr - 1.0) > tol.tr:
            raise NotState(f"trace {tr} differs from 1 beyond tolerance")
        vals = np.linalg.eigvalsh((mm + mm.conj().T) / 2)
        if vals[0] < -tol.psd:
            raise NotState(f"negative eigenvalue {vals[0]:.3e} beyond tolerance")
        return cls(dim=mm.shape[0], matrix=mm)

    @classmethod
    def pure(cls, vector) -> "DensityMatrix":
        v = np.asarray(vector, dtype=complex).reshape(-1)
        v = v / np.linalg.norm(v)
        return cls(dim=v.shape[0], matrix=np.outer(v, v.conj()))


@dataclass(frozen=True)
class CorrelationMatrix:
    """PSD matrix with exactly-unit diagonal; the channel's full description."""

    dim: int
    matrix: np.ndarray


@dataclass(frozen=True)
class SchurChannel:
    """Schur-product channel determined by a correlation matrix."""

    xi: CorrelationMatrix

    @property
    def dim(self) -> int:
        return self.xi.dim

    @property
    def complete(self) -> bool:
        """True iff every off-diagonal |xi_kl| < 1, i.e. the channel drives
        all states to their diagonal."""
        m = self.xi.matrix
        off = np.abs(m - np.diag(np.diag(m)))
        return bool(np.all(off < 1.0))


def validate_correlation(m, tol: ToleranceProfile = DEFAULT_TOL) -> CorrelationMatrix:
    """Validate a matrix as a correlation matrix.

    Diagonal entries within ``tol.tr`` of 1 are snapped to exactly 1 so the
    unit-diagonal invariant holds exactly downstream.
    """
    mm = _require_square(_as_matrix(m)).copy()
    _require_hermitian(mm, tol.herm)
    diag = np.diag(mm)
    for k, v in enumerate(diag):
        if abs(v - 1.0) > tol.tr:
            raise BadDiagonal(k, v)
    np.fill_diagonal(mm, 1.0)
    vals = np.linalg.eigvalsh((mm + mm.conj().T) / 2)
    if vals[0] < -tol.psd:
        raise NotPSD(float(vals[0]))
    return CorrelationMatrix(dim=mm.shape[0], matrix=mm)


def _check_dim(ch: SchurChannel, m: np.ndarray) -> None:
    if m.shape != (ch.dim, ch.dim):
        raise ShapeMismatch(f"operator shape {m.shape} does not match channel dim {ch.dim}")


def apply_heisenberg(ch: SchurChannel, obs) -> np.ndarray:
    """Heisenberg-picture action on an observable: xi o O."""
    m = _as_matrix(obs)
    _check_dim(ch, m)
    return schur_product(ch.xi.matrix, m)


def apply_schrodinger(
    ch: SchurChannel, rho: DensityMatrix, tol: ToleranceProfile = DEFAULT_TOL
) -> DensityMatrix:
    """Schrodinger-picture action on a state: xi^T o rho (transpose taken in
    the decoherence basis, never omitted)."""
    _check_dim(ch, rho.matrix)
    out = schur_product(ch.xi.matrix.T, rho.matrix)
    return DensityMatrix.from_matrix(out, tol)


def iterate(
    ch: SchurChannel, rho: DensityMatrix, n: int, tol: ToleranceProfile = DEFAULT_TOL
) -> DensityMatrix:
    """n-fold application of the channel to a state.

    Implemented as a single Schur product with the elementwise n-th power of
    xi^T, which is exactly equivalent for Schur maps and stabler for large n.
    """
    if n < 0:
        raise ValueError("iteration count must be nonnegative")
    _check_dim(ch, rho.matrix)
    powered = np.power(ch.xi.matrix.T, n)
    out = schur_product(powered, rho.matrix)
    return DensityMatrix.from_matrix(out, tol)


def asymptotic_state(rho: DensityMatrix) -> DensityMatrix:
    """Diagonal truncation of the state, the fixed point of complete decoherence."""
    return DensityMatrix(dim=rho.dim, matrix=np.diag(np.diag(rho.matrix)).astype(complex))


def choi_operator(ch: SchurChannel) -> np.ndarray:
    """Choi operator: entries <k,k|R_C|l,l> = xi_kl, zero elsewhere (d^2 x d^2)."""
    d = ch.dim
    r = np.zeros((d * d, d * d), dtype=complex)
    for k in range(d):
        for l in range(d):
            r[k * d + k, l * d + l] = ch.xi.matrix[k, l]
    return r


def jamiolkowski_operator(ch: SchurChannel) -> np.ndarray:
    """Jamiolkowski operator: sum_kl xi_kl |l,k><k,l| (d^2 x d^2)."""
    d = ch.dim
    r = np.zeros((d * d, d * d), dtype=complex)
    for k in range(d):
        for l in range(d):
            r[l * d + k, k * d + l] = ch.xi.matrix[k, l]
    return r
