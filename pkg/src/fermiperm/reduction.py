"""End-to-end reduction: encode, conjugate, project out redundant qubits.

``encode_and_reduce`` takes a number-conserving fermionic operator, encodes
it with Jordan-Wigner, conjugates by a chosen basis permutation (closed-form
fast path when the permutation is affine), removes every qubit whose value
is constant across the sector images, and returns the reduced operator plus
the map from sector ranks to surviving-qubit bitstrings.  ``sector_oracle``
computes the same physics with no qubit encoding at all and is the ground
truth that ``verify_reduction`` compares against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .encodings import FermionOperator, jw_majoranas, encode_fermion_operator
from .errors import DimensionError, InvalidEncodingError
from .minimal import RedundancyReport, SectorSpec, redundant_qubits, unrank_weightk
from .pauli import PauliString, PauliSum, _popcount
from .permutations import (
    BasisPermutation,
    classify_affine,
    conjugate_pauli_affine,
    conjugate_pauli_dense,
)

ORACLE_TOL = 1e-9
SPECTRUM_TOL = 1e-8


def project_fixed_qubit(s: PauliSum, qubit: int, value: int) -> PauliSum:
    """<value| s |value> on one tensor factor: I keeps a term, Z scales it
    by (-1)^value, X or Y drops it; the result lives on n-1 qubits."""
    n = s.n_qubits
    if not 1 <= qubit <= n:
        raise DimensionError(f"qubit {qubit} out of range 1..{n}")
    if n == 1:
        raise DimensionError("cannot project the last remaining qubit away")
    bit = 1 << (n - qubit)
    low = bit - 1
    items = []
    for (x, z), coeff in s.items():
        if x & bit:
            continue  # X or Y: off-diagonal on the fixed qubit
        if z & bit and value:
            coeff = -coeff
        x_new = ((x >> 1) & ~low) | (x & low)
        z_new = ((z >> 1) & ~low) | (z & low)
        items.append(((x_new, z_new), coeff))
    return PauliSum(n - 1, items)


@dataclass(frozen=True)
class ReducedHamiltonian:
    """A Pauli sum on the surviving qubits plus the sector bookkeeping."""

    pauli_sum: PauliSum
    report: RedundancyReport
    spec: SectorSpec
    state_map: tuple[str, ...]  # rank -> surviving-qubit bitstring

    def state_index(self, rank: int) -> int:
        return int(self.state_map[rank], 2)


def encode_and_reduce(
    h: FermionOperator, p: BasisPermutation, spec: SectorSpec
) -> ReducedHamiltonian:
    """Full pipeline; raises if ``h`` is not number conserving or if the
    permutation does not separate the sector on its surviving qubits."""
    h.require_number_conserving()
    n = spec.n_modes
    if p.n_qubits != n:
        raise DimensionError("permutation size does not match the mode count")
    if spec.dimension < 2:
        raise InvalidEncodingError(
            "sector holds a single state; there is no operator left to reduce"
        )
    encoded = encode_fermion_operator(h, jw_majoranas(n))

    affine = classify_affine(p)
    if affine is not None:
        items = []
        for (x, z), coeff in encoded.items():
            q = conjugate_pauli_affine(affine, PauliString(n, x, z))
            items.append(((q.x_bits, q.z_bits), coeff * q.coefficient))
        conjugated = PauliSum(n, items)
    else:
        conjugated = conjugate_pauli_dense(p, encoded)

    report = redundant_qubits(p, spec)
    if not report.restricted_injective:
        raise InvalidEncodingError(
            "sector images collide once restricted to the surviving qubits"
        )

    if affine is not None:
        _check_identity_on_fixed(conjugated, report)

    reduced = conjugated
    for qubit, value in sorted(report.fixed, reverse=True):
        reduced = project_fixed_qubit(reduced, qubit, value)

    surv_positions = [n - q for q in report.surviving]
    state_map = []
    for r in range(spec.dimension):
        img = p.apply(unrank_weightk(r, n, spec.n_fermions))
        bits = "".join(str((img >> pos) & 1) for pos in surv_positions)
        state_map.append(bits)
    return ReducedHamiltonian(reduced, report, spec, tuple(state_map))


def _check_identity_on_fixed(s: PauliSum, report: RedundancyReport) -> None:
    """For Clifford permutations every encoded number-conserving term must
    carry only I or Z on the redundant qubits; X or Y there means the
    permutation or the conjugation is wrong."""
    n = s.n_qubits
    fixed_mask = 0
    for q, _ in report.fixed:
        fixed_mask |= 1 << (n - q)
    for (x, _z), _c in s.items():
        if x & fixed_mask:
            raise InvalidEncodingError(
                "encoded term acts with X or Y on a redundant qubit"
            )


def sector_oracle(h: FermionOperator, spec: SectorSpec) -> np.ndarray:
    """Brute-force sector matrix: H[r', r] = <unrank(r')| h |unrank(r)>,
    applying ladder operators directly to occupancy strings with the sign
    (-1)^(number of occupied modes left of the acted mode)."""
    n, k = spec.n_modes, spec.n_fermions
    dim = spec.dimension
    if dim > 1 << 12:
        raise DimensionError("sector dimension exceeds the dense cap")
    from .minimal import rank_weightk

    out = np.zeros((dim, dim), dtype=complex)
    for col in range(dim):
        start = unrank_weightk(col, n, k)
        for term in h.terms:
            amp = complex(term.coefficient)
            state = start
            dead = False
            for mode, dagger in reversed(term.ops):
                bit = 1 << (n - mode)
                occupied = bool(state & bit)
                if dagger == occupied:
                    dead = True
                    break
                left_mask = ~((bit << 1) - 1)
                if _popcount(state & left_mask) % 2:
                    amp = -amp
                state ^= bit
            if dead:
                continue
            if state.bit_count() == k:
                out[rank_weightk(state, n, k), col] += amp
    return out


@dataclass(frozen=True)
class ReductionCheck:
    max_deviation: float
    spectrum_deviation: float
    passed: bool
    tolerance: float


def verify_reduction(
    rh: ReducedHamiltonian, oracle: np.ndarray, tol: float = ORACLE_TOL
) -> ReductionCheck:
    """Compare every sector matrix element of the reduced operator against
    the brute-force oracle, and the sector spectra as well."""
    dim = rh.spec.dimension
    if oracle.shape != (dim, dim):
        raise DimensionError("oracle shape does not match the sector dimension")
    indices = [rh.state_index(r) for r in range(dim)]
    dense = rh.pauli_sum.to_dense()
    block = dense[np.ix_(indices, indices)]
    max_dev = float(np.max(np.abs(block - oracle))) if dim else 0.0

    eig_block = np.sort(np.linalg.eigvalsh((block + block.conj().T) / 2))
    eig_oracle = np.sort(np.linalg.eigvalsh((oracle + oracle.conj().T) / 2))
    spectrum_dev = float(np.max(np.abs(eig_block - eig_oracle))) if dim else 0.0

    passed = max_dev < tol and spectrum_dev < SPECTRUM_TOL
    return ReductionCheck(max_dev, spectrum_dev, passed, tol)
