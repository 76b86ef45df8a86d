"""Entropy exchange and the information-flow bounds for Schur channels.

All entropies are in bits (base-2 logarithms) throughout the package.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .channels import DensityMatrix, SchurChannel, apply_schrodinger
from .decomposition import (
    FlatDecomposition,
    correlation_rank,
    verify_decomposition,
)
from .errors import DimensionMismatch, NotDistribution, VerificationFailure
from .numerics import DEFAULT_TOL, ToleranceProfile, von_neumann_entropy

__all__ = [
    "BoundsReport",
    "EntropyProductionReport",
    "entropy_exchange",
    "entropy_exchange_from_decomposition",
    "shannon_entropy",
    "bounds_report",
    "entropy_production_check",
    "majorization_check",
]


@dataclass(frozen=True)
class BoundsReport:
    """Sandwich of the classical-information cost of undoing the channel.

    s_xi_over_d is both the entropy of xi/d and the entropy exchange at the
    maximally mixed input; h_p is the weight entropy of the supplied
    decomposition, when any.
    """

    s_xi_over_d: float
    two_log_rank: float
    s_ex_maximal: float
    rank: int
    rank_threshold: float
    h_p: Optional[float] = None
    lower_bound_satisfied: Optional[bool] = None
    upper_bound_satisfied: Optional[bool] = None


@dataclass(frozen=True)
class EntropyProductionReport:
    entropy_in: float
    entropy_out: float
    entropy_exchange: float
    satisfied: bool


def entropy_exchange(
    ch: SchurChannel, rho: DensityMatrix, tol: ToleranceProfile = DEFAULT_TOL
) -> float:
    """Entropy exchange S(sqrt(rho_inf) xi sqrt(rho_inf)) in bits.

    rho_inf is diagonal, so its square root is taken entrywise.
    """
    if rho.dim != ch.dim:
        raise DimensionMismatch(f"state dim {rho.dim} != channel dim {ch.dim}")
    sq = np.sqrt(np.clip(np.diag(rho.matrix).real, 0.0, None))
    core = sq[:, None] * ch.xi.matrix * sq[None, :]
    return von_neumann_entropy(core, tol)


def entropy_exchange_from_decomposition(
    dec: FlatDecomposition, rho: DensityMatrix, tol: ToleranceProfile = DEFAULT_TOL
) -> float:
    """Entropy exchange from a random-unitary decomposition.

    Builds W_ij = sqrt(p_i p_j) Tr[U_i rho U_j*] (an m x m state for flat
    diagonal unitaries) and returns its entropy.
    """
    if rho.dim != dec.dim:
        raise DimensionMismatch(f"state dim {rho.dim} != decomposition dim {dec.dim}")
    diag = np.diag(rho.matrix)
    overlaps = np.einsum("ik,jk,k->ij", dec.phase_vectors, dec.phase_vectors.conj(), diag)
    sq = np.sqrt(dec.weights)
    w = sq[:, None] * overlaps * sq[None, :]
    return von_neumann_entropy(w, tol)


def shannon_entropy(p, tol: ToleranceProfile = DEFAULT_TOL) -> float:
    """Shannon entropy of a probability vector, in bits."""
    v = np.asarray(p, dtype=float)
    if np.any(v < 0):
        raise NotDistribution(f"negative entry {v.min()}")
    if abs(v.sum() - 1.0) > tol.tr:
        raise NotDistribution(f"entries sum to {v.sum()}, expected 1")
    nz = v[v > 0]
    return float(-(nz * np.log2(nz)).sum())


def bounds_report(
    ch: SchurChannel,
    dec: Optional[FlatDecomposition] = None,
    rank_threshold: float = 1e-9,
    tol: ToleranceProfile = DEFAULT_TOL,
) -> BoundsReport:
    """Information-flow bounds for a channel, optionally against a decomposition.

    S(xi/d) lower-bounds the weight entropy of any flat decomposition; the
    upper bound 2 log2 rank(xi) constrains only the minimum over
    decompositions and is reported informationally.
    """
    d = ch.dim
    s_low = von_neumann_entropy(ch.xi.matrix / d, tol)
    rank = correlation_rank(ch.xi, rank_threshold)
    two_log_rank = 2.0 * float(np.log2(rank)) if rank >= 1 else 0.0
    h_p = lower_ok = upper_ok = None
    if dec is not None:
        report = verify_decomposition(ch.xi, dec)
        if not report.accepted:
            raise VerificationFailure(
                f"decomposition does not reconstruct xi (residual {report.residual:.3e})"
            )
        h_p = report.shannon_entropy_bits
        lower_ok = bool(s_low <= h_p + 1e-9)
        upper_ok = bool(h_p <= two_log_rank + 1e-9)
    return BoundsReport(
        s_xi_over_d=s_low,
        two_log_rank=two_log_rank,
        s_ex_maximal=s_low,
        rank=rank,
        rank_threshold=rank_threshold,
        h_p=h_p,
        lower_bound_satisfied=lower_ok,
        upper_bound_satisfied=upper_ok,
    )


def entropy_production_check(
    ch: SchurChannel, rho: DensityMatrix, tol: ToleranceProfile = DEFAULT_TOL
) -> EntropyProductionReport:
    """Check |S(E(rho)) - S(rho)| <= S_ex(rho)."""
    if rho.dim != ch.dim:
        raise DimensionMismatch(f"state dim {rho.dim} != channel dim {ch.dim}")
    s_in = von_neumann_entropy(rho.matrix, tol)
    s_out = von_neumann_entropy(apply_schrodinger(ch, rho, tol).matrix, tol)
    s_ex = entropy_exchange(ch, rho, tol)
    return EntropyProductionReport(
        entropy_in=s_in,
        entropy_out=s_out,
        entropy_exchange=s_ex,
        satisfied=abs(s_out - s_in) <= s_ex + 1e-9,
    )


def majorization_check(rho: DensityMatrix, slack: float = 1e-10) -> bool:
    """True iff the diagonal of rho is majorized by its spectrum."""
    from .numerics import hermitian_eig

    diag = np.sort(np.diag(rho.matrix).real)[::-1]
    spec = hermitian_eig(rho.matrix).eigenvalues
    partial_diag = np.cumsum(diag)
    partial_spec = np.cumsum(spec)
    if abs(partial_diag[-1] - partial_spec[-1]) > slack:
        return False
    return bool(np.all(partial_diag <= partial_spec + slack))
