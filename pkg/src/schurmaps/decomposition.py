"""Random-unitary decompositions of Schur channels.

A Schur channel is random-unitary iff its correlation matrix is a convex
mixture of rank-one correlation matrices u u* with flat (all entries
unimodular) vectors u; each flat vector encodes the diagonal unitary
diag(u). Closed forms exist for d = 2 and for xi = I in any d; the general
case is handled by a seeded numerical search, which may legitimately fail
for d >= 4.
"""

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.optimize import minimize

from .channels import CorrelationMatrix
from .errors import (
    BadDimension,
    DimensionMismatch,
    NoDecompositionFound,
    WrongDimension,
)
from .numerics import DEFAULT_TOL, ToleranceProfile, hermitian_eig

__all__ = [
    "FlatDecomposition",
    "SearchConfig",
    "VerificationReport",
    "ExtremalityVerdict",
    "ExtremalityResult",
    "decompose_qubit",
    "decompose_identity_xi",
    "flat_search",
    "verify_decomposition",
    "extremality_test",
    "reconstruct_xi",
]

RANK_THRESHOLD = 1e-9


@dataclass(frozen=True)
class FlatDecomposition:
    """Compressed random-unitary decomposition.

    ``phase_vectors`` has one flat vector per row; row i encodes the diagonal
    unitary diag(phase_vectors[i]) applied with probability ``weights[i]``.
    The first entry of every phase vector is normalized to 1.
    """

    dim: int
    weights: np.ndarray
    phase_vectors: np.ndarray  # shape (terms, dim), entries unimodular

    @property
    def terms(self) -> int:
        return self.weights.shape[0]

    def unitaries(self) -> list[np.ndarray]:
        return [np.diag(u) for u in self.phase_vectors]


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the numerical flat-vector search."""

    terms: Optional[int] = None  # default d^2 - d + 1 (Caratheodory bound)
    restarts: int = 32
    max_iters: int = 5000
    tol: float = 1e-8
    seed: int = 0


@dataclass(frozen=True)
class VerificationReport:
    residual: float
    flatness_deviation: float
    weight_sum_deviation: float
    shannon_entropy_bits: float
    orthogonality_matrix: np.ndarray = field(repr=False)
    orthogonal_family: bool
    accepted: bool


class ExtremalityVerdict(enum.Enum):
    EXTREMAL = "extremal"
    NOT_EXTREMAL = "not_extremal"
    RANK_ONE_EXTREMAL = "rank_one_extremal"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class ExtremalityResult:
    verdict: ExtremalityVerdict
    rank: int


def reconstruct_xi(dec: FlatDecomposition) -> np.ndarray:
    """sum_i p_i u_i u_i*, the correlation matrix the decomposition encodes."""
    return np.einsum("i,ik,il->kl", dec.weights, dec.phase_vectors, dec.phase_vectors.conj())


def _normalize_first_entry(u: np.ndarray) -> np.ndarray:
    return u / (u[:, :1] / np.abs(u[:, :1]))


def decompose_qubit(xi: CorrelationMatrix, tol: ToleranceProfile = DEFAULT_TOL) -> FlatDecomposition:
    """Optimal decomposition for d = 2 from the spectrum of xi.

    Eigenvectors of a 2x2 correlation matrix are flat after scaling by
    sqrt(2), so xi = sum lam v v* repackages as weights lam/2 and flat
    vectors sqrt(2) v; the weight entropy then equals S(xi/2), the minimum.
    A vanishing eigenvalue (below 1e-12) drops its term.
    """
    if xi.dim != 2:
        raise WrongDimension(f"decompose_qubit needs d=2, got d={xi.dim}")
    if abs(xi.matrix[0, 1]) < 1e-12:
        return decompose_identity_xi(2)
    res = hermitian_eig(xi.matrix, tol)
    weights, vectors = [], []
    for lam, v in zip(res.eigenvalues, res.eigenvectors.T):
        if lam < 1e-12:
            continue
        weights.append(lam / 2.0)
        vectors.append(np.sqrt(2.0) * v)
    u = _normalize_first_entry(np.array(vectors))
    return FlatDecomposition(dim=2, weights=np.array(weights), phase_vectors=u)


def decompose_identity_xi(d: int) -> FlatDecomposition:
    """Uniform mixture of the d clock unitaries Z_j = diag(e^{2 pi i k j / d}).

    Reconstructs xi = I exactly and attains the minimal weight entropy
    log2(d) for the instantaneous-decoherence channel.
    """
    if d < 2:
        raise BadDimension(f"need d >= 2, got {d}")
    k = np.arange(d)
    phases = np.exp(2j * np.pi * np.outer(k, k) / d)  # row j = Z_j diagonal
    return FlatDecomposition(
        dim=d, weights=np.full(d, 1.0 / d), phase_vectors=phases
    )


def _objective(x: np.ndarray, xi: np.ndarray, m: int, d: int):
    """Squared Frobenius residual and its analytic gradient.

    Parameters: free phase angles theta[i, 1:] (first entry of each flat
    vector pinned at angle 0) followed by m real weight scores fed through a
    softmax.
    """
    n_theta = m * (d - 1)
    theta = np.zeros((m, d))
    theta[:, 1:] = x[:n_theta].reshape(m, d - 1)
    s = x[n_theta:]
    s = s - np.max(s)
    es = np.exp(s)
    p = es / es.sum()
    u = np.exp(1j * theta)
    recon = np.einsum("i,ik,il->kl", p, u, u.conj())
    r = xi - recon
    f = float(np.sum(np.abs(r) ** 2))
    g = u @ r.T  # g[i, k] = (r @ u_i)[k] since r is Hermitian
    grad_theta = 4.0 * p[:, None] * np.imag(np.conj(g) * u)
    quad = np.real(np.sum(np.conj(u) * g, axis=1))
    grad_p = -2.0 * quad
    grad_s = p * (grad_p - float(p @ grad_p))
    grad = np.concatenate([grad_theta[:, 1:].ravel(), grad_s])
    return f, grad


def _polish(x0, xi, m, d, max_iters):
    res = minimize(
        _objective,
        x0,
        args=(xi, m, d),
        jac=True,
        method="L-BFGS-B",
        options={"maxiter": max_iters, "ftol": 1e-18, "gtol": 1e-14},
    )
    return res.x, float(res.fun)


def _unpack(x, m, d):
    n_theta = m * (d - 1)
    theta = np.zeros((m, d))
    theta[:, 1:] = x[:n_theta].reshape(m, d - 1)
    s = x[n_theta:] - np.max(x[n_theta:])
    es = np.exp(s)
    return np.exp(1j * theta), es / es.sum()


def flat_search(xi: CorrelationMatrix, config: SearchConfig = SearchConfig()) -> FlatDecomposition:
    """Seeded numerical search for a flat decomposition of a correlation matrix.

    Minimizes the squared Frobenius residual over phase angles and softmax
    weights with analytic gradients, restarting from fresh random points
    until the residual meets ``config.tol``. Terms with weight below 1e-6
    are pruned and the survivors re-polished. Deterministic under a fixed
    seed. Raises :class:`NoDecompositionFound` (carrying the best residual)
    when every restart fails -- an expected outcome for some d >= 4 inputs.
    """
    d = xi.dim
    if d < 2:
        raise WrongDimension(f"need d >= 2, got {d}")
    m = config.terms if config.terms is not None else d * d - d + 1
    target = xi.matrix
    best_residual = np.inf
    for restart in range(config.restarts):
        rng = np.random.default_rng([config.seed, restart])
        x0 = np.concatenate(
            [
                rng.uniform(0.0, 2.0 * np.pi, size=m * (d - 1)),
                rng.normal(0.0, 1.0, size=m),
            ]
        )
        x, f = _polish(x0, target, m, d, config.max_iters)
        u, p = _unpack(x, m, d)
        keep = p >= 1e-6
        if not np.all(keep) and np.any(keep):
            mk = int(keep.sum())
            n_theta_kept = np.angle(u[keep])  # first column is 0 by construction
            s_kept = np.log(p[keep])
            x0p = np.concatenate([n_theta_kept[:, 1:].ravel(), s_kept])
            x, f = _polish(x0p, target, mk, d, config.max_iters)
            u, p = _unpack(x, mk, d)
        residual = np.sqrt(max(f, 0.0))
        if residual < best_residual:
            best_residual = residual
        if residual <= config.tol:
            order = np.argsort(-p, kind="stable")
            return FlatDecomposition(dim=d, weights=p[order], phase_vectors=u[order])
    raise NoDecompositionFound(best_residual, config.restarts)


def verify_decomposition(
    xi: CorrelationMatrix, dec: FlatDecomposition, tol: float = 1e-8
) -> VerificationReport:
    """Check a decomposition against a correlation matrix.

    Reports the reconstruction residual, flatness and weight-sum deviations,
    the weight Shannon entropy in bits, and the trace-form Gram matrix
    O_ij = Tr[U_i U_j*]/d whose identity shape characterizes mutually
    orthogonal unitary families (the equality case of the information lower
    bound).
    """
    if dec.dim != xi.dim:
        raise DimensionMismatch(f"decomposition dim {dec.dim} != xi dim {xi.dim}")
    residual = float(np.linalg.norm(xi.matrix - reconstruct_xi(dec)))
    flatness = float(np.max(np.abs(np.abs(dec.phase_vectors) - 1.0)))
    weight_dev = float(abs(dec.weights.sum() - 1.0))
    p = dec.weights[dec.weights > 0]
    entropy = float(-(p * np.log2(p)).sum())
    ortho = dec.phase_vectors @ dec.phase_vectors.conj().T / dec.dim
    orthogonal = bool(np.max(np.abs(ortho - np.eye(dec.terms))) <= tol)
    accepted = residual <= tol and flatness <= tol and weight_dev <= tol
    return VerificationReport(
        residual=residual,
        flatness_deviation=flatness,
        weight_sum_deviation=weight_dev,
        shannon_entropy_bits=entropy,
        orthogonality_matrix=ortho,
        orthogonal_family=orthogonal,
        accepted=accepted,
    )


def correlation_rank(xi: CorrelationMatrix, threshold: float = RANK_THRESHOLD) -> int:
    vals = hermitian_eig(xi.matrix).eigenvalues
    return int(np.sum(vals > threshold))


def extremality_test(xi: CorrelationMatrix) -> ExtremalityResult:
    """Extreme-point test for the convex set of correlation matrices.

    For d <= 3 rank one is necessary and sufficient for extremality; for
    d >= 4 rank one is still sufficient but higher ranks are undecidable by
    the rank criterion alone.
    """
    rank = correlation_rank(xi)
    if xi.dim <= 3:
        verdict = ExtremalityVerdict.EXTREMAL if rank == 1 else ExtremalityVerdict.NOT_EXTREMAL
    else:
        verdict = (
            ExtremalityVerdict.RANK_ONE_EXTREMAL if rank == 1 else ExtremalityVerdict.UNDECIDED
        )
    return ExtremalityResult(verdict=verdict, rank=rank)
