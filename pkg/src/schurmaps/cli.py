"""Command-line front end.

Subcommands: validate, evolve, decompose, correct, eraser, bounds.
Exit codes: 0 success, 2 validation failure, 3 verification/recovery
failure (including an exhausted decomposition search), 4 I/O or parse
error. All randomness sits behind --seed (default 0), so identical
invocations produce identical files.
"""

import argparse
import json
import sys

import numpy as np

from . import serialize
from .channels import (
    DensityMatrix,
    SchurChannel,
    iterate,
    validate_correlation,
)
from .correction import eraser_scenario, run_correction, run_eraser, screen_pattern
from .decomposition import (
    SearchConfig,
    decompose_identity_xi,
    decompose_qubit,
    extremality_test,
    flat_search,
    verify_decomposition,
)
from .errors import (
    NoDecompositionFound,
    RecoveryFailure,
    SchurMapsError,
    SerializationError,
    VerificationFailure,
)
from .infometrics import bounds_report, shannon_entropy
from .numerics import DEFAULT_TOL, ToleranceProfile

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_UNVERIFIED = 3
EXIT_IO = 4


def _load_tol(path) -> ToleranceProfile:
    if path is None:
        return DEFAULT_TOL
    obj = serialize.load_json(path)
    try:
        return ToleranceProfile(**obj)
    except TypeError as exc:
        raise SerializationError(f"bad tolerance profile: {exc}") from exc


def _emit(args, obj, table_lines):
    if args.json:
        print(json.dumps(obj, indent=1))
    else:
        for line in table_lines:
            print(line)


def cmd_validate(args) -> int:
    tol = _load_tol(args.tol)
    _, m = serialize.load_matrix(args.xi)
    xi = validate_correlation(m, tol)
    ch = SchurChannel(xi)
    ext = extremality_test(xi)
    obj = {
        "valid": True,
        "dim": xi.dim,
        "complete": ch.complete,
        "extremality": ext.verdict.value,
        "rank": ext.rank,
    }
    _emit(
        args,
        obj,
        [
            f"valid correlation matrix, d = {xi.dim}",
            f"complete decoherence: {'yes' if ch.complete else 'no'}",
            f"extremality: {ext.verdict.value} (rank {ext.rank})",
        ],
    )
    return EXIT_OK


def cmd_evolve(args) -> int:
    tol = _load_tol(args.tol)
    xi = validate_correlation(serialize.load_matrix(args.xi)[1], tol)
    rho = DensityMatrix.from_matrix(serialize.load_matrix(args.rho)[1], tol)
    ch = SchurChannel(xi)
    prefix = args.out or "evolve"
    d = xi.dim
    pairs = [(k, l) for k in range(d) for l in range(k + 1, d)]
    rows = []
    final = rho
    for n in range(args.n + 1):
        state = iterate(ch, rho, n, tol)
        rows.append([n] + [abs(state.matrix[k, l]) for k, l in pairs])
        final = state
    serialize.save_json(prefix + "_state.json", serialize.matrix_to_dict(final.matrix, "state"))
    csv_path = prefix + "_decay.csv"
    with open(csv_path, "w") as f:
        f.write("n," + ",".join(f"abs_rho_{k}_{l}" for k, l in pairs) + "\n")
        for row in rows:
            f.write(str(row[0]) + "," + ",".join(serialize.fmt(v) for v in row[1:]) + "\n")
    print(f"wrote {prefix}_state.json and {csv_path}")
    return EXIT_OK


def _decompose(xi, seed, tol):
    """Closed forms where available, seeded numerical search otherwise."""
    if np.max(np.abs(xi.matrix - np.eye(xi.dim))) < 1e-12 and xi.dim >= 2:
        return decompose_identity_xi(xi.dim)
    if xi.dim == 2:
        return decompose_qubit(xi, tol)
    return flat_search(xi, SearchConfig(seed=seed))


def cmd_decompose(args) -> int:
    tol = _load_tol(args.tol)
    xi = validate_correlation(serialize.load_matrix(args.xi)[1], tol)
    dec = _decompose(xi, args.seed, tol)
    report = verify_decomposition(xi, dec)
    obj = {
        "decomposition": serialize.decomposition_to_dict(dec),
        "verification": {
            "residual": report.residual,
            "flatness_deviation": report.flatness_deviation,
            "weight_sum_deviation": report.weight_sum_deviation,
            "shannon_entropy_bits": report.shannon_entropy_bits,
            "orthogonal_family": report.orthogonal_family,
            "accepted": report.accepted,
        },
    }
    if args.out:
        serialize.save_json(args.out + "_decomposition.json", obj["decomposition"])
        serialize.save_json(args.out + "_verification.json", obj["verification"])
    _emit(
        args,
        obj,
        [
            f"terms: {dec.terms}",
            f"residual: {report.residual:.3e}",
            f"H(p): {report.shannon_entropy_bits:.6f} bits (base 2)",
            f"orthogonal family: {report.orthogonal_family}",
        ],
    )
    return EXIT_OK if report.accepted else EXIT_UNVERIFIED


def cmd_correct(args) -> int:
    tol = _load_tol(args.tol)
    xi = validate_correlation(serialize.load_matrix(args.xi)[1], tol)
    rho = DensityMatrix.from_matrix(serialize.load_matrix(args.rho)[1], tol)
    ch = SchurChannel(xi)
    if args.dec:
        dec = serialize.decomposition_from_dict(serialize.load_json(args.dec))
    else:
        dec = _decompose(xi, args.seed, tol)
    records, recovered = run_correction(ch, dec, rho, tol)
    residual = float(np.linalg.norm(recovered.matrix - rho.matrix))
    obj = {
        "outcomes": [
            {
                "index": r.outcome_index,
                "probability": r.probability,
                "conditional": serialize.matrix_to_dict(r.conditional_state.matrix, "state"),
                "corrected": serialize.matrix_to_dict(r.corrected_state.matrix, "state"),
            }
            for r in records
        ],
        "recovered": serialize.matrix_to_dict(recovered.matrix, "state"),
        "recovery_residual": residual,
    }
    if args.out:
        serialize.save_json(args.out + "_records.json", obj)
    _emit(
        args,
        obj,
        [f"outcome {r.outcome_index}: p = {r.probability:.6f}" for r in records]
        + [f"recovery residual: {residual:.3e}"],
    )
    return EXIT_OK


def cmd_eraser(args) -> int:
    tol = _load_tol(args.tol)
    scenario = eraser_scenario(args.d, tol)
    if args.state:
        rho = DensityMatrix.from_matrix(serialize.load_matrix(args.state)[1], tol)
    else:
        rho = DensityMatrix.pure(np.ones(args.d))
    records, recovered = run_eraser(scenario, rho, tol)
    decohered = DensityMatrix(rho.dim, np.diag(np.diag(rho.matrix)))
    prefix = args.out or "eraser"
    p_in = screen_pattern(rho, args.samples)
    p_dec = screen_pattern(decohered, args.samples)
    p_cor = screen_pattern(recovered, args.samples)
    serialize.pattern_to_csv(prefix + "_input.csv", p_in.thetas, p_in.intensities)
    serialize.pattern_to_csv(prefix + "_decohered.csv", p_dec.thetas, p_dec.intensities)
    serialize.pattern_to_csv(prefix + "_corrected.csv", p_cor.thetas, p_cor.intensities)
    probs = [r.probability for r in records]
    ledger = {
        "d": args.d,
        "entropy_base": 2,
        "info_stored_bits": scenario.info_stored_bits,
        "info_extracted_bits": scenario.info_extracted_bits,
        "outcome_probabilities": probs,
        "outcome_entropy_bits": shannon_entropy(probs),
        "visibility_input": p_in.visibility,
        "visibility_decohered": p_dec.visibility,
        "visibility_corrected": p_cor.visibility,
    }
    serialize.save_json(prefix + "_ledger.json", ledger)
    print(
        f"wrote {prefix}_input.csv, {prefix}_decohered.csv, "
        f"{prefix}_corrected.csv, {prefix}_ledger.json"
    )
    return EXIT_OK


def cmd_bounds(args) -> int:
    tol = _load_tol(args.tol)
    xi = validate_correlation(serialize.load_matrix(args.xi)[1], tol)
    ch = SchurChannel(xi)
    dec = None
    if args.dec:
        dec = serialize.decomposition_from_dict(serialize.load_json(args.dec))
    report = bounds_report(ch, dec, tol=tol)
    obj = {
        "entropy_base": 2,
        "s_xi_over_d_bits": report.s_xi_over_d,
        "s_ex_maximal_bits": report.s_ex_maximal,
        "two_log_rank_bits": report.two_log_rank,
        "rank": report.rank,
        "rank_threshold": report.rank_threshold,
        "h_p_bits": report.h_p,
        "lower_bound_satisfied": report.lower_bound_satisfied,
        "upper_bound_satisfied": report.upper_bound_satisfied,
    }
    lines = [
        "all entropies in bits (base 2)",
        f"S(xi/d)         = {report.s_xi_over_d:.6f}",
        f"S_ex(I/d)       = {report.s_ex_maximal:.6f}",
        f"2 log2 rank(xi) = {report.two_log_rank:.6f}  (rank {report.rank})",
    ]
    if report.h_p is not None:
        lines += [
            f"H(p)            = {report.h_p:.6f}",
            f"lower bound satisfied: {report.lower_bound_satisfied}",
            f"upper bound satisfied: {report.upper_bound_satisfied}",
        ]
    _emit(args, obj, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schurmaps")
    parser.add_argument("--seed", type=int, default=0, help="seed for all randomness")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--tol", default=None, help="tolerance profile JSON")
    parser.add_argument("--out", default=None, help="output path prefix")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a correlation matrix file")
    p.add_argument("xi")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("evolve", help="iterate a channel on a state")
    p.add_argument("xi")
    p.add_argument("rho")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("decompose", help="random-unitary decomposition of a channel")
    p.add_argument("xi")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("correct", help="environment-assisted correction loop")
    p.add_argument("xi")
    p.add_argument("rho")
    p.add_argument("--dec", default=None, help="decomposition JSON (default: compute)")
    p.set_defaults(func=cmd_correct)

    p = sub.add_parser("eraser", help="d-dimensional quantum eraser run")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--state", default=None, help="input state JSON (default: flat pure)")
    p.add_argument("--samples", type=int, default=360)
    p.set_defaults(func=cmd_eraser)

    p = sub.add_parser("bounds", help="information-flow bounds report")
    p.add_argument("xi")
    p.add_argument("dec", nargs="?", default=None)
    p.set_defaults(func=cmd_bounds)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SerializationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (VerificationFailure, RecoveryFailure, NoDecompositionFound) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNVERIFIED
    except SchurMapsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
