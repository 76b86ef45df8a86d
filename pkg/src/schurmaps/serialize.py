"""JSON and CSV envelopes shared by the library and the CLI.

Matrix envelope: {"kind": "correlation"|"state"|"unitary"|"generic",
"dim": d, "entries": [[re, im], ...]} with entries row-major. Floats pass
through Python's shortest-roundtrip repr, so every file the library writes
reads back bit-exactly.
"""

import json

import numpy as np

from .channels import CorrelationMatrix, DensityMatrix, validate_correlation
from .decomposition import FlatDecomposition
from .dilation import Dilation
from .errors import SerializationError
from .numerics import DEFAULT_TOL, ToleranceProfile

__all__ = [
    "matrix_to_dict",
    "matrix_from_dict",
    "load_matrix",
    "save_json",
    "load_json",
    "density_from_dict",
    "correlation_from_dict",
    "decomposition_to_dict",
    "decomposition_from_dict",
    "dilation_to_dict",
    "pattern_to_csv",
    "fmt",
]

MATRIX_KINDS = ("correlation", "state", "unitary", "generic")


def fmt(x: float) -> str:
    """17 significant digits: enough to round-trip any double."""
    return format(float(x), ".17g")


def matrix_to_dict(m, kind: str = "generic") -> dict:
    if kind not in MATRIX_KINDS:
        raise SerializationError(f"unknown matrix kind {kind!r}")
    mm = np.asarray(m, dtype=complex)
    if mm.ndim != 2 or mm.shape[0] != mm.shape[1]:
        raise SerializationError(f"expected a square matrix, got shape {mm.shape}")
    entries = [[z.real, z.imag] for z in mm.reshape(-1)]
    return {"kind": kind, "dim": mm.shape[0], "entries": entries}


def matrix_from_dict(obj) -> tuple[str, np.ndarray]:
    try:
        kind = obj["kind"]
        dim = int(obj["dim"])
        entries = obj["entries"]
    except (KeyError, TypeError) as exc:
        raise SerializationError(f"malformed matrix envelope: {exc}") from exc
    if kind not in MATRIX_KINDS:
        raise SerializationError(f"unknown matrix kind {kind!r}")
    if dim < 1 or len(entries) != dim * dim:
        raise SerializationError(
            f"entry count {len(entries)} does not match dim {dim}"
        )
    try:
        flat = np.array([complex(re, im) for re, im in entries])
    except (TypeError, ValueError) as exc:
        raise SerializationError(f"bad matrix entry: {exc}") from exc
    return kind, flat.reshape(dim, dim)


def save_json(path, obj) -> None:
    with open(path, "w") as f:
        json.dump(obj, f, indent=1)
        f.write("\n")


def load_json(path):
    try:
        with open(path) as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise SerializationError(f"cannot read {path}: {exc}") from exc


def load_matrix(path) -> tuple[str, np.ndarray]:
    return matrix_from_dict(load_json(path))


def density_from_dict(obj, tol: ToleranceProfile = DEFAULT_TOL) -> DensityMatrix:
    _, m = matrix_from_dict(obj)
    return DensityMatrix.from_matrix(m, tol)


def correlation_from_dict(obj, tol: ToleranceProfile = DEFAULT_TOL) -> CorrelationMatrix:
    _, m = matrix_from_dict(obj)
    return validate_correlation(m, tol)


def decomposition_to_dict(dec: FlatDecomposition) -> dict:
    return {
        "dim": dec.dim,
        "weights": [float(w) for w in dec.weights],
        "phases": [[float(t) for t in np.angle(u)] for u in dec.phase_vectors],
    }


def decomposition_from_dict(obj) -> FlatDecomposition:
    try:
        dim = int(obj["dim"])
        weights = np.asarray(obj["weights"], dtype=float)
        phases = np.asarray(obj["phases"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise SerializationError(f"malformed decomposition: {exc}") from exc
    if phases.ndim != 2 or phases.shape != (weights.shape[0], dim):
        raise SerializationError(
            f"phase array shape {phases.shape} does not match "
            f"{weights.shape[0]} terms of dim {dim}"
        )
    return FlatDecomposition(dim=dim, weights=weights, phase_vectors=np.exp(1j * phases))


def dilation_to_dict(dil: Dilation) -> dict:
    out = matrix_to_dict(dil.unitary, "unitary")
    out["env"] = {
        "dim_env": dil.dim_env,
        "initial_index": dil.env_initial_index,
        "vectors": [[[z.real, z.imag] for z in v] for v in dil.env_vectors],
    }
    return out


def pattern_to_csv(path, thetas, intensities) -> None:
    with open(path, "w") as f:
        f.write("theta,intensity\n")
        for t, i in zip(thetas, intensities):
            f.write(f"{fmt(t)},{fmt(i)}\n")
