"""Unitary system-environment realizations of Schur channels.

The Gram (Kolmogorov) factorization xi_kl = <e_l|e_k> of the correlation
matrix yields environment kets |e_k>; the interaction acts as
``U |k> (x) |0>_e = |k> (x) |e_k>`` and tracing out the environment
reproduces the channel.
"""

from dataclasses import dataclass

import numpy as np

from .channels import CorrelationMatrix, DensityMatrix, SchurChannel
from .errors import DimensionMismatch
from .numerics import (
    DEFAULT_TOL,
    ToleranceProfile,
    _fill_remaining_columns,
    hermitian_eig,
    partial_trace_sys,
)

__all__ = ["Dilation", "kolmogorov_vectors", "build_dilation", "environment_state"]

RANK_THRESHOLD = 1e-9


@dataclass(frozen=True)
class Dilation:
    """System-environment unitary realization with pure environment input.

    ``env_vectors[k]`` is the environment ket the interaction writes when the
    system is in basis state k; ``env_initial_index`` is the |0>_e slot.
    """

    dim_sys: int
    dim_env: int
    env_vectors: np.ndarray  # shape (dim_sys, dim_env)
    unitary: np.ndarray  # shape (dim_sys*dim_env,)^2
    env_initial_index: int = 0


def kolmogorov_vectors(xi: CorrelationMatrix, tol: ToleranceProfile = DEFAULT_TOL) -> np.ndarray:
    """Unit vectors e_k (rows) whose Gram matrix <e_k|e_l> equals xi_kl,
    of dimension rank(xi).

    Spectral construction: xi = V Lam V* gives e_k = row k of
    conj(V) sqrt(Lam), keeping only eigenvalues above the rank threshold.
    With this index order the dilation reproduces the Schrodinger action
    xi^T o rho (for real xi both orders coincide). Deterministic thanks to
    the eigensolver's phase convention.
    """
    res = hermitian_eig(xi.matrix, tol)
    keep = res.eigenvalues > RANK_THRESHOLD
    vals = res.eigenvalues[keep]
    vecs = res.eigenvectors[:, keep]
    return vecs.conj() * np.sqrt(vals)[None, :]


def unitary_from_env_vectors(env_vectors: np.ndarray) -> np.ndarray:
    """Joint unitary with U |k>(x)|0>_e = |k>(x)|e_k>, completed deterministically.

    The specified columns sit at slots k*dim_env; the remaining columns come
    from Gram-Schmidt of the standard basis in index order.
    """
    d, de = env_vectors.shape
    n = d * de
    u = np.zeros((n, n), dtype=complex)
    filled = []
    for k in range(d):
        col = np.zeros(n, dtype=complex)
        col[k * de : (k + 1) * de] = env_vectors[k]
        u[:, k * de] = col
        filled.append(k * de)
    return _fill_remaining_columns(u, filled)


def build_dilation(ch: SchurChannel, tol: ToleranceProfile = DEFAULT_TOL) -> Dilation:
    """Spectral dilation of a Schur channel.

    The environment dimension is max(rank(xi), 2): a one-dimensional
    environment admits no nontrivial measurement, so a never-populated
    dimension is padded in to keep the correction machinery uniform.
    """
    vecs = kolmogorov_vectors(ch.xi, tol)
    d, r = vecs.shape
    de = max(r, 2)
    env = np.zeros((d, de), dtype=complex)
    env[:, :r] = vecs
    u = unitary_from_env_vectors(env)
    return Dilation(dim_sys=d, dim_env=de, env_vectors=env, unitary=u)


def evolve_joint(dil: Dilation, rho: DensityMatrix) -> np.ndarray:
    """U (rho (x) |0><0|_e) U* on the joint space."""
    if rho.dim != dil.dim_sys:
        raise DimensionMismatch(f"state dim {rho.dim} != system dim {dil.dim_sys}")
    e0 = np.zeros(dil.dim_env, dtype=complex)
    e0[dil.env_initial_index] = 1.0
    joint0 = np.kron(rho.matrix, np.outer(e0, e0))
    return dil.unitary @ joint0 @ dil.unitary.conj().T


def environment_state(
    dil: Dilation, rho: DensityMatrix, tol: ToleranceProfile = DEFAULT_TOL
) -> DensityMatrix:
    """Reduced environment state after the interaction: sum_k rho_kk |e_k><e_k|.

    Computed both in closed form and as a partial trace of the evolved joint
    state; the two must agree to 1e-10. Returns the closed-form value.
    """
    if rho.dim != dil.dim_sys:
        raise DimensionMismatch(f"state dim {rho.dim} != system dim {dil.dim_sys}")
    weights = np.diag(rho.matrix).real
    sigma = np.einsum("k,ka,kb->ab", weights, dil.env_vectors, dil.env_vectors.conj())
    traced = partial_trace_sys(evolve_joint(dil, rho), dil.dim_sys, dil.dim_env)
    dev = np.max(np.abs(sigma - traced))
    if dev > 1e-10:
        raise RuntimeError(f"environment-state cross-check failed: deviation {dev:.3e}")
    return DensityMatrix.from_matrix(sigma, tol)
