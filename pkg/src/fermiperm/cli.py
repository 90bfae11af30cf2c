"""Command-line interface: encode, reduce, perm, verify, costs, stats.

Exit codes are a stable contract: 0 success, 1 verification failure,
2 usage or parse error.  All output is deterministic for identical inputs;
Pauli terms are always emitted in lexicographic letter order.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

import numpy as np

from . import f2
from .encodings import (
    FermionOperator,
    LinearEncodingF2,
    jw_majoranas,
    linear_encoding_majoranas,
    parity_majoranas,
    encode_fermion_operator,
    parse_hamiltonian,
    random_one_body,
)
from .errors import FermipermError, HamiltonianParseError
from .minimal import (
    SectorSpec,
    appendix_verify,
    costs_csv,
    minimal_permutation_index_embed,
    redundant_qubits,
    synthesize_permutation,
)
from .pauli import PauliString, PauliSum, commutes
from .permutations import (
    BasisPermutation,
    GateCircuit,
    classify_affine,
    conjugate_pauli_dense,
    from_cycles,
    parse_cycles,
    permutation_from_circuit,
)
from .reduction import ORACLE_TOL, encode_and_reduce, sector_oracle, verify_reduction

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def parse_matrix_text(text: str) -> np.ndarray:
    """Rows of 0/1 digits (spaces allowed), '#' comments."""
    rows = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        digits = line.replace(" ", "")
        if not set(digits) <= {"0", "1"}:
            raise ValueError(f"line {line_no}: matrix rows must be 0/1 digits")
        rows.append([int(ch) for ch in digits])
    if not rows or any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix must be square and non-empty")
    return np.array(rows, dtype=np.uint8)


def _add_perm_selector(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--mapping", choices=["jw", "parity"], help="named linear encoding")
    group.add_argument("--matrix", metavar="FILE", help="GF(2) encoding matrix file")
    group.add_argument("--cycles", metavar="CYCLES", help='cycle string like "(0,2)(1,12)"')
    group.add_argument("--circuit", metavar="FILE", help="gate-per-line circuit file")
    group.add_argument(
        "--index-embed",
        action="store_true",
        help="rank-labelling permutation for the (N, K) sector",
    )


def _resolve_permutation(args) -> BasisPermutation:
    n = args.modes
    if args.mapping == "jw":
        return BasisPermutation.identity(n)
    if args.mapping == "parity":
        enc = LinearEncodingF2.parity(n)
        from .encodings import gl_to_cnot_circuit

        return permutation_from_circuit(gl_to_cnot_circuit(enc))
    if args.matrix:
        with open(args.matrix) as fh:
            m = parse_matrix_text(fh.read())
        if m.shape[0] != n:
            raise ValueError(f"matrix is {m.shape[0]}x{m.shape[0]} but --modes is {n}")
        from .encodings import gl_to_cnot_circuit

        return permutation_from_circuit(gl_to_cnot_circuit(LinearEncodingF2(m)))
    if args.cycles:
        return from_cycles(n, parse_cycles(args.cycles))
    if args.circuit:
        with open(args.circuit) as fh:
            circuit = GateCircuit.from_text(n, fh.read())
        return permutation_from_circuit(circuit)
    if args.index_embed:
        if args.fermions is None:
            raise ValueError("--index-embed needs --fermions")
        return minimal_permutation_index_embed(SectorSpec(n, args.fermions))
    raise ValueError("no permutation selector given")


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _load_hamiltonian(args) -> FermionOperator:
    with open(args.hamiltonian) as fh:
        return parse_hamiltonian(
            fh.read(), n_modes=args.modes, hermitize=args.hermitize
        )


def cmd_encode(args) -> int:
    h = _load_hamiltonian(args)
    if args.mapping == "parity":
        majoranas = parity_majoranas(args.modes)
    elif args.matrix:
        with open(args.matrix) as fh:
            m = parse_matrix_text(fh.read())
        majoranas = linear_encoding_majoranas(LinearEncodingF2(m))
    else:
        majoranas = jw_majoranas(args.modes)
    encoded = encode_fermion_operator(h, majoranas)
    payload = encoded.to_json_dict()
    payload["stats"] = _sum_stats(encoded)
    _emit(json.dumps(payload, indent=2), args.output)
    return EXIT_OK


def _sum_stats(s: PauliSum) -> dict:
    return {
        "term_count": len(s),
        "max_weight": s.max_weight(),
        "mean_weight": round(s.mean_weight(), 12),
    }


def cmd_reduce(args) -> int:
    if args.fermions is None:
        raise ValueError("reduce needs --fermions")
    spec = SectorSpec(args.modes, args.fermions)
    h = _load_hamiltonian(args)
    p = _resolve_permutation(args)
    overrides = {}
    if args.dense_cap is not None:
        overrides["dense_cap"] = args.dense_cap
    if args.tolerance is not None:
        overrides["tolerance"] = args.tolerance

    from . import pauli

    saved_cap = pauli.DENSE_CAP
    try:
        if args.dense_cap is not None:
            pauli.DENSE_CAP = args.dense_cap
        rh = encode_and_reduce(h, p, spec)
        oracle = sector_oracle(h, spec)
        tol = args.tolerance if args.tolerance is not None else ORACLE_TOL
        check = verify_reduction(rh, oracle, tol=tol)
    finally:
        pauli.DENSE_CAP = saved_cap

    payload = {
        "spec": {"N": spec.n_modes, "K": spec.n_fermions, "q_min": spec.q_min},
        "fixed_qubits": [[q, v] for q, v in rh.report.fixed],
        "hamiltonian": rh.pauli_sum.to_json_dict(),
        "state_map": [
            {"rank": r, "bits": rh.state_map[r]} for r in range(spec.dimension)
        ],
        "verify": {"max_deviation": check.max_deviation, "passed": check.passed},
    }
    if overrides:
        payload["overrides"] = overrides
    _emit(json.dumps(payload, indent=2), args.output)
    return EXIT_OK if check.passed else EXIT_VERIFY_FAILED


def cmd_perm(args) -> int:
    p = _resolve_permutation(args)
    lines = [f"cycles: {p.cycle_string()}"]
    affine = classify_affine(p)
    lines.append(f"affine: {'yes' if affine is not None else 'no'}")
    if args.fermions is not None:
        spec = SectorSpec(args.modes, args.fermions)
        report = redundant_qubits(p, spec)
        if report.fixed:
            desc = "; ".join(f"qubit {q} = {v}" for q, v in report.fixed)
        else:
            desc = "none"
        lines.append(f"redundant: {desc}")
    if args.synthesize:
        sector = SectorSpec(args.modes, args.fermions) if args.fermions is not None else None
        rep = synthesize_permutation(p, sector=sector)
        lines.append(
            "synthesis: "
            f"gates={rep.total_gates} cnot={rep.cnot_count} x={rep.x_count} "
            f"nonclifford={rep.nonclifford_count} transpositions={rep.transposition_count}"
        )
        lines.append("circuit:")
        lines.append(rep.circuit.to_text())
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_costs(args) -> int:
    _emit(costs_csv(args.modes), args.output)
    return EXIT_OK


def cmd_stats(args) -> int:
    with open(args.input) as fh:
        data = json.load(fh)
    s = PauliSum.from_json_dict(data)
    payload = {"n_qubits": s.n_qubits, **_sum_stats(s)}
    _emit(json.dumps(payload, indent=2), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification suites


def anticommutation_suite(majoranas) -> tuple[int, list[str]]:
    """Check every Majorana pair anticommutes and every square is identity.

    ``majoranas`` is a list of (plain, primed) pairs of PauliString or
    PauliSum.  Returns (number of checks, failure descriptions).
    """
    flat: list[tuple[str, object]] = []
    for j, (g, gp) in enumerate(majoranas, start=1):
        flat.append((f"g{j}", g))
        flat.append((f"g'{j}", gp))
    failures = []
    checks = 0
    all_single = all(isinstance(op, PauliString) for _, op in flat)
    if all_single:
        for i in range(len(flat)):
            name_i, a = flat[i]
            sq = a * a
            checks += 1
            if (sq.x_bits, sq.z_bits, sq.phase) != (0, 0, 0):
                failures.append(f"{name_i}^2 != I")
            for j in range(i + 1, len(flat)):
                name_j, b = flat[j]
                checks += 1
                if commutes(a, b):
                    failures.append(f"{name_i} and {name_j} commute")
    else:
        dense = [(name, _as_sum(op).to_dense()) for name, op in flat]
        dim = dense[0][1].shape[0]
        eye = np.eye(dim)
        for i in range(len(dense)):
            name_i, a = dense[i]
            checks += 1
            if not np.array_equal(a @ a, eye):
                failures.append(f"{name_i}^2 != I")
            for j in range(i + 1, len(dense)):
                name_j, b = dense[j]
                checks += 1
                if np.max(np.abs(a @ b + b @ a)) != 0.0:
                    failures.append(f"{{ {name_i}, {name_j} }} != 0")
    return checks, failures


def _as_sum(op) -> PauliSum:
    return PauliSum.from_pauli(op) if isinstance(op, PauliString) else op


def random_minimal_majoranas(
    spec: SectorSpec, rng: np.random.Generator
) -> list[tuple[PauliSum, PauliSum]]:
    """JW Majoranas conjugated by an index-embed permutation whose
    non-sector completion is randomized."""
    p = minimal_permutation_index_embed(spec, completion="random", rng=rng)
    return [
        (
            conjugate_pauli_dense(p, PauliSum.from_pauli(g)),
            conjugate_pauli_dense(p, PauliSum.from_pauli(gp)),
        )
        for g, gp in jw_majoranas(spec.n_modes)
    ]


def cmd_verify(args) -> int:
    if args.suite == "appendix":
        report = appendix_verify(args.n, allow_large=(args.n == 5))
        print(f"{report.matrix_count} matrices, max constant digits {report.max_constant_digits}")
        if report.max_constant_digits != 1:
            print(f"counterexample rows (bit masks): {report.witness}")
            return EXIT_VERIFY_FAILED
        return EXIT_OK

    if args.suite == "anticommutation":
        n = args.modes
        rng = np.random.default_rng(args.seed)
        suites = []
        if args.mapping in (None, "jw"):
            suites.append(("jw", jw_majoranas(n)))
        if args.mapping in (None, "parity"):
            suites.append(("parity", parity_majoranas(n)))
        if args.mapping in (None, "random-minimal"):
            for k in range(1, n):
                spec = SectorSpec(n, k)
                for t in range(args.trials):
                    suites.append(
                        (f"minimal(K={k},#{t})", random_minimal_majoranas(spec, rng))
                    )
        bad = 0
        for name, majos in suites:
            checks, failures = anticommutation_suite(majos)
            status = "pass" if not failures else "FAIL"
            print(f"{name}: {checks} checks {status}")
            for f in failures[:1]:
                print(f"  counterexample: {f}")
            bad += len(failures)
        return EXIT_OK if bad == 0 else EXIT_VERIFY_FAILED

    if args.suite == "oracle":
        if args.fermions is None:
            raise ValueError("verify oracle needs --fermions")
        spec = SectorSpec(args.modes, args.fermions)
        rng = np.random.default_rng(args.seed)
        tol = args.tolerance if args.tolerance is not None else ORACLE_TOL
        p = minimal_permutation_index_embed(spec)
        worst = 0.0
        for _ in range(args.trials):
            h = random_one_body(spec.n_modes, rng)
            rh = encode_and_reduce(h, p, spec)
            check = verify_reduction(rh, sector_oracle(h, spec), tol=tol)
            worst = max(worst, check.max_deviation)
            if not check.passed:
                print(f"FAIL: deviation {check.max_deviation:g} exceeds {tol:g}")
                return EXIT_VERIFY_FAILED
        print(f"{args.trials} trials pass, max deviation {worst:.3g}")
        return EXIT_OK

    raise ValueError(f"unknown verify suite {args.suite!r}")


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fermiperm",
        description="Permutation-based fermion-to-qubit encodings and sector reduction",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encode", help="encode a fermionic Hamiltonian file")
    enc.add_argument("--modes", type=int, required=True)
    enc.add_argument("--hamiltonian", required=True, metavar="FILE")
    enc.add_argument("--hermitize", action="store_true")
    enc.add_argument("--output", metavar="FILE")
    group = enc.add_mutually_exclusive_group()
    group.add_argument("--mapping", choices=["jw", "parity"], default="jw")
    group.add_argument("--matrix", metavar="FILE")
    enc.set_defaults(func=cmd_encode)

    red = sub.add_parser("reduce", help="encode, conjugate, and project a sector")
    red.add_argument("--modes", type=int, required=True)
    red.add_argument("--fermions", type=int, required=True)
    red.add_argument("--hamiltonian", required=True, metavar="FILE")
    red.add_argument("--hermitize", action="store_true")
    red.add_argument("--tolerance", type=float, help="oracle comparison tolerance")
    red.add_argument("--dense-cap", type=int, help="override the dense-matrix qubit cap")
    red.add_argument("--output", metavar="FILE")
    _add_perm_selector(red)
    red.set_defaults(func=cmd_reduce)

    perm = sub.add_parser("perm", help="inspect or synthesize a basis permutation")
    perm.add_argument("--modes", type=int, required=True)
    perm.add_argument("--fermions", type=int)
    perm.add_argument("--synthesize", action="store_true")
    perm.add_argument("--output", metavar="FILE")
    _add_perm_selector(perm)
    perm.set_defaults(func=cmd_perm)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver_sub = ver.add_subparsers(dest="suite", required=True)
    v_anti = ver_sub.add_parser("anticommutation")
    v_anti.add_argument("--modes", type=int, required=True)
    v_anti.add_argument("--mapping", choices=["jw", "parity", "random-minimal"])
    v_anti.add_argument("--trials", type=int, default=2)
    v_anti.add_argument("--seed", type=int, default=0)
    v_anti.set_defaults(func=cmd_verify)
    v_app = ver_sub.add_parser("appendix")
    v_app.add_argument("--n", type=int, required=True, choices=[2, 3, 4, 5])
    v_app.set_defaults(func=cmd_verify)
    v_orc = ver_sub.add_parser("oracle")
    v_orc.add_argument("--modes", type=int, required=True)
    v_orc.add_argument("--fermions", type=int, required=True)
    v_orc.add_argument("--trials", type=int, default=20)
    v_orc.add_argument("--seed", type=int, default=0)
    v_orc.add_argument("--tolerance", type=float)
    v_orc.set_defaults(func=cmd_verify)

    costs = sub.add_parser("costs", help="qubit-cost table as CSV")
    costs.add_argument("--modes", type=int, required=True)
    costs.add_argument("--output", metavar="FILE")
    costs.set_defaults(func=cmd_costs)

    stats = sub.add_parser("stats", help="term statistics of a Pauli-sum JSON file")
    stats.add_argument("--input", required=True, metavar="FILE")
    stats.add_argument("--output", metavar="FILE")
    stats.set_defaults(func=cmd_stats)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except HamiltonianParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FermipermError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
