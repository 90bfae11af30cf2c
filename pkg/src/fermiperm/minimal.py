"""Minimal-qubit basis construction, redundancy detection, and synthesis.

A sector of K fermions in N modes spans C(N,K) basis states, so
ceil(log2 C(N,K)) qubits suffice to label them.  This module builds basis
permutations that move every weight-K state onto a state whose leading
qubits hold its lexicographic rank, detects which qubits become constant
across the sector, decomposes arbitrary basis permutations into reversible
X/CNOT/TOFFOLI/MCX circuits via Gray-code routed transpositions, and
brute-forces the claim that no invertible GF(2) map can fix more than one
output digit across a fixed-weight set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from . import f2
from .errors import DimensionError, ResourceError
from .permutations import (
    AffineMapF2,
    BasisPermutation,
    Gate,
    GateCircuit,
    classify_affine,
    permutation_from_circuit,
)

HARD_CAP = 16


@dataclass(frozen=True)
class SectorSpec:
    """An (N modes, K fermions) sector and its minimal qubit count."""

    n_modes: int
    n_fermions: int

    def __post_init__(self):
        if not 0 <= self.n_fermions <= self.n_modes:
            raise ValueError("need 0 <= K <= N")

    @property
    def dimension(self) -> int:
        return math.comb(self.n_modes, self.n_fermions)

    @property
    def q_min(self) -> int:
        # exact ceil(log2 C(N,K)) without float rounding
        return (self.dimension - 1).bit_length()

    def sector_states(self) -> list[int]:
        """All weight-K basis integers in increasing (lexicographic) order."""
        return [
            unrank_weightk(r, self.n_modes, self.n_fermions)
            for r in range(self.dimension)
        ]


def rank_weightk(bits: int, n: int, k: int) -> int:
    """Lexicographic rank of a weight-k string among all weight-k strings,
    reading qubit 1 (most significant bit) first."""
    if not 0 <= bits < 1 << n:
        raise ValueError(f"state {bits} out of range for {n} bits")
    if bits.bit_count() != k:
        raise ValueError(f"state {bits:0{n}b} does not have weight {k}")
    rank = 0
    remaining = k
    for j in range(1, n + 1):
        if (bits >> (n - j)) & 1:
            rank += math.comb(n - j, remaining)
            remaining -= 1
    return rank


def unrank_weightk(rank: int, n: int, k: int) -> int:
    """Inverse of :func:`rank_weightk` via the combinatorial number system."""
    if not 0 <= rank < math.comb(n, k):
        raise ValueError(f"rank {rank} out of range for C({n},{k})")
    bits = 0
    remaining = k
    for j in range(1, n + 1):
        if remaining == 0:
            break
        block = math.comb(n - j, remaining)
        if rank >= block:
            bits |= 1 << (n - j)
            rank -= block
            remaining -= 1
    return bits


def minimal_permutation_index_embed(
    spec: SectorSpec,
    completion: str = "ordered",
    rng: Optional[np.random.Generator] = None,
) -> BasisPermutation:
    """Permutation sending the weight-K state of rank r to the state whose
    first q_min qubits hold r in binary and whose remaining qubits are zero.

    Non-sector states are completed per ``completion``:

    * ``"ordered"``  - enumerate non-sector sources in increasing order and
      map them to the unused targets in increasing order (the default,
      deterministic rule);
    * ``"compact"``  - fix every state outside sources-union-targets, so the
      permutation's support stays within 2 C(N,K) states;
    * ``"random"``   - shuffle the unused targets with ``rng``.
    """
    n, k = spec.n_modes, spec.n_fermions
    if n > HARD_CAP:
        raise ResourceError(f"permutations are capped at {HARD_CAP} qubits, got {n}")
    dim = 1 << n
    shift = n - spec.q_min
    sources = spec.sector_states()
    targets = [r << shift for r in range(spec.dimension)]
    image = np.full(dim, -1, dtype=np.int64)
    for src, tgt in zip(sources, targets):
        image[src] = tgt

    src_set, tgt_set = set(sources), set(targets)
    if completion == "compact":
        for state in range(dim):
            if image[state] >= 0:
                continue
            if state not in tgt_set:
                image[state] = state
        leftovers = sorted(src_set - tgt_set)
        for state, tgt in zip(sorted(tgt_set - src_set), leftovers):
            image[state] = tgt
    else:
        free_targets = [s for s in range(dim) if s not in tgt_set]
        if completion == "random":
            if rng is None:
                raise ValueError("completion='random' requires an rng")
            free_targets = list(rng.permutation(free_targets))
        elif completion != "ordered":
            raise ValueError(f"unknown completion rule {completion!r}")
        free_iter = iter(free_targets)
        for state in range(dim):
            if image[state] < 0:
                image[state] = next(free_iter)
    return BasisPermutation(image)


def count_valid_permutations(spec: SectorSpec) -> int:
    """Exact (2^N - C(N,K))!, the freedom left after fixing the sector map."""
    return math.factorial((1 << spec.n_modes) - spec.dimension)


@dataclass(frozen=True)
class RedundancyReport:
    """Which qubits are constant across the images of a sector."""

    fixed: tuple[tuple[int, int], ...]  # (qubit index 1-based, fixed bit value)
    surviving: tuple[int, ...]
    restricted_injective: bool

    @property
    def fixed_qubits(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.fixed)


def redundant_qubits(p: BasisPermutation, spec: SectorSpec) -> RedundancyReport:
    """Scan the images of all weight-K states for constant bit positions and
    check that the images restricted to the surviving qubits stay distinct."""
    n = p.n_qubits
    if n != spec.n_modes:
        raise DimensionError("permutation and sector have different sizes")
    images = [p.apply(s) for s in spec.sector_states()]
    fixed = []
    surviving = []
    for q in range(1, n + 1):
        bit = 1 << (n - q)
        values = {(img & bit) != 0 for img in images}
        if len(values) == 1:
            fixed.append((q, int(values.pop())))
        else:
            surviving.append(q)
    surv_masks = [_extract_bits(img, [n - q for q in surviving]) for img in images]
    injective = len(set(surv_masks)) == len(surv_masks)
    return RedundancyReport(tuple(fixed), tuple(surviving), injective)


def _extract_bits(value: int, positions: list[int]) -> int:
    """Pack the given bit positions (descending) into a compact integer."""
    out = 0
    for pos in positions:
        out = (out << 1) | ((value >> pos) & 1)
    return out


@dataclass(frozen=True)
class SynthesisReport:
    circuit: GateCircuit
    total_gates: int
    cnot_count: int
    x_count: int
    nonclifford_count: int
    transposition_count: int


def synthesize_permutation(
    p: BasisPermutation, sector: Optional[SectorSpec] = None
) -> SynthesisReport:
    """Decompose a basis permutation into a reversible circuit.

    Affine permutations take a fast path: a CNOT netlist for the linear part
    followed by X gates for the offset, with no non-Clifford gates.  General
    permutations are split cycle by cycle into transpositions (cycles that
    touch sector states first, when a sector is given); each transposition
    of basis states a, b is routed along a Gray-code path of single-bit
    flips, every flip being an (X-conjugated) multi-controlled X that swaps
    exactly two states.
    """
    n = p.n_qubits
    affine = classify_affine(p)
    if affine is not None:
        circuit = _affine_netlist(affine)
        return _report(circuit, transpositions=0)

    cycles = p.to_cycles()
    if sector is not None:
        sector_states = set(sector.sector_states())
        cycles.sort(key=lambda c: (not any(s in sector_states for s in c), c[0]))
    circuit = GateCircuit(n)
    n_transpositions = 0
    for cyc in cycles:
        # (a1 ... ak) = (a1 a2)(a2 a3)...(a_{k-1} a_k), rightmost applied first
        for i in range(len(cyc) - 1, 0, -1):
            _emit_transposition(circuit, cyc[i - 1], cyc[i])
            n_transpositions += 1
    if permutation_from_circuit(circuit) != p:
        raise AssertionError("synthesized circuit does not reproduce the permutation")
    return _report(circuit, transpositions=n_transpositions)


def _report(circuit: GateCircuit, transpositions: int) -> SynthesisReport:
    return SynthesisReport(
        circuit=circuit,
        total_gates=len(circuit),
        cnot_count=circuit.count("CNOT"),
        x_count=circuit.count("X"),
        nonclifford_count=circuit.nonclifford_count,
        transposition_count=transpositions,
    )


def _affine_netlist(a: AffineMapF2) -> GateCircuit:
    from .encodings import LinearEncodingF2, gl_to_cnot_circuit

    circuit = gl_to_cnot_circuit(LinearEncodingF2(a.matrix))
    for q in range(1, a.n_qubits + 1):
        if a.offset[q - 1]:
            circuit.x(q)
    return circuit


def _emit_transposition(circuit: GateCircuit, a: int, b: int) -> None:
    """Swap basis states a and b via a Gray-code walk.

    Walk a through single-bit flips to the last state before b, apply the
    central controlled flip, then unwind.  Each step swaps exactly the two
    states that differ in the flipped bit and match everywhere else.
    """
    n = circuit.n_qubits
    diff_positions = [q for q in range(1, n + 1) if (a ^ b) >> (n - q) & 1]
    path = [a]
    for q in diff_positions:
        path.append(path[-1] ^ (1 << (n - q)))
    assert path[-1] == b
    steps = list(zip(path[:-1], path[1:]))
    forward = steps[:-1]
    for u, v in forward:
        _emit_two_state_flip(circuit, u, v)
    _emit_two_state_flip(circuit, *steps[-1])
    for u, v in reversed(forward):
        _emit_two_state_flip(circuit, u, v)


def _emit_two_state_flip(circuit: GateCircuit, u: int, v: int) -> None:
    """One multi-controlled X swapping the two states u, v at Hamming
    distance 1; controls on value 0 are realized by X conjugation."""
    n = circuit.n_qubits
    diff = u ^ v
    target = n - (diff.bit_length() - 1)
    controls = [q for q in range(1, n + 1) if q != target]
    zero_controls = [q for q in controls if not (u >> (n - q)) & 1]
    for q in zero_controls:
        circuit.x(q)
    circuit.mcx(controls, target) if controls else circuit.x(target)
    for q in zero_controls:
        circuit.x(q)


def lower_mcx(circuit: GateCircuit) -> GateCircuit:
    """Expand every gate with three or more controls into Toffolis using a
    standard compute/uncompute ladder of clean ancilla wires.

    Ancillas are appended after the original wires, one per extra control
    (max over the circuit), and every gate restores them to zero, so the
    lowered circuit's action on the original wires is unchanged.
    """
    extra = max((len(g.controls) - 1 for g in circuit.gates if len(g.controls) >= 3), default=0)
    lowered = GateCircuit(circuit.n_qubits + extra)
    base = circuit.n_qubits
    for g in circuit.gates:
        k = len(g.controls)
        if k < 3:
            lowered._push(g)
            continue
        ladder: list[Gate] = []
        ladder.append(Gate((g.controls[0], g.controls[1]), base + 1))
        for i in range(2, k):
            ladder.append(Gate((g.controls[i], base + i - 1), base + i))
        for step in ladder:
            lowered._push(step)
        lowered.cnot(base + k - 1, g.target)
        for step in reversed(ladder):
            lowered._push(step)
    return lowered


@dataclass(frozen=True)
class AppendixReport:
    """Outcome of the exhaustive invertible-matrix scan."""

    n: int
    matrix_count: int
    max_constant_digits: int
    witness: tuple[int, ...]  # row masks of a matrix achieving the max
    per_weight_max: tuple[tuple[int, int], ...] = field(default=())


def appendix_verify(n: int, allow_large: bool = False) -> AppendixReport:
    """Enumerate every invertible n x n GF(2) matrix and, for each weight
    0 < k < n, count output digits constant across the images of all
    weight-k strings; report the maximum and a witness matrix reaching it.

    The prefix-parity matrix always pins exactly one digit, so a maximum of
    1 means no invertible map can do better.  n <= 4 filters all 2^(n^2)
    candidates by rank; n = 5 (about 9.9M invertible matrices) must be
    enabled with ``allow_large``.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if n > 5 or (n == 5 and not allow_large):
        raise ResourceError(
            "appendix enumeration is capped at n = 4 (n = 5 behind allow_large)"
        )

    weight_sets = {
        k: [s for s in range(1 << n) if s.bit_count() == k] for k in range(1, n)
    }
    expected = _gl2_order(n)

    if n <= 4:
        count, max_digits, per_k, argmax = _appendix_scan_filter(n, weight_sets)
    else:
        count, max_digits, per_k, argmax = _appendix_scan_large(n, weight_sets)
    if count != expected:
        raise AssertionError(
            f"enumerated {count} invertible matrices, expected {expected}"
        )
    parity_rows = tuple(f2.rows_to_masks(f2.parity_matrix(n)))
    parity_digits = max(
        _constant_digits(parity_rows, n, weight_sets[k]) for k in range(1, n)
    )
    if parity_digits != 1:
        raise AssertionError("parity matrix must pin exactly one digit")
    witness = parity_rows if max_digits == 1 else argmax
    return AppendixReport(
        n=n,
        matrix_count=count,
        max_constant_digits=max_digits,
        witness=witness,
        per_weight_max=tuple(sorted(per_k.items())),
    )


def _gl2_order(n: int) -> int:
    order = 1
    for i in range(n):
        order *= (1 << n) - (1 << i)
    return order


def _constant_digits(rows: tuple[int, ...], n: int, states: list[int]) -> int:
    constant = 0
    for row in rows:
        first = (row & states[0]).bit_count() & 1
        if all(((row & s).bit_count() & 1) == first for s in states[1:]):
            constant += 1
    return constant


def _appendix_scan_filter(n, weight_sets):
    count = 0
    max_digits = 0
    argmax: tuple[int, ...] = ()
    per_k = {k: 0 for k in weight_sets}
    row_mask = (1 << n) - 1
    for candidate in range(1 << (n * n)):
        rows = tuple((candidate >> (n * i)) & row_mask for i in range(n))
        if not f2.masks_invertible(rows):
            continue
        count += 1
        for k, states in weight_sets.items():
            digits = _constant_digits(rows, n, states)
            if digits > per_k[k]:
                per_k[k] = digits
            if digits > max_digits:
                max_digits = digits
                argmax = rows
    return count, max_digits, per_k, argmax


def _appendix_scan_large(n, weight_sets):
    """n = 5 path: enumerate matrices row by row, each new row outside the
    span of the previous ones; the last two rows are handled as a
    vectorized pair grid."""
    assert n == 5
    dim = 1 << n
    # lookup: for each candidate row and weight k, is row . x constant?
    const_lut = {}
    for k, states in weight_sets.items():
        lut = np.zeros(dim, dtype=np.int64)
        for row in range(dim):
            first = (row & states[0]).bit_count() & 1
            if all(((row & s).bit_count() & 1) == first for s in states[1:]):
                lut[row] = 1
        const_lut[k] = lut

    count = 0
    max_digits = 0
    argmax: tuple[int, ...] = ()
    per_k = {k: 0 for k in weight_sets}
    for r0 in range(1, dim):
        span0 = {0, r0}
        for r1 in range(1, dim):
            if r1 in span0:
                continue
            span1 = span0 | {v ^ r1 for v in span0}
            for r2 in range(1, dim):
                if r2 in span1:
                    continue
                span2 = span1 | {v ^ r2 for v in span1}
                in_span2 = np.zeros(dim, dtype=bool)
                in_span2[list(span2)] = True
                r34 = np.nonzero(~in_span2)[0]
                # rows r3, r4 must differ by something outside span2, i.e.
                # (r3 ^ r4) not in span2; 0 is in span2 so r3 != r4 is implied
                valid = ~in_span2[r34[:, None] ^ r34[None, :]]
                count += int(valid.sum())
                for k, lut in const_lut.items():
                    partial = int(lut[r0] + lut[r1] + lut[r2])
                    scores = partial + lut[r34][:, None] + lut[r34][None, :]
                    masked = np.where(valid, scores, -1)
                    top = int(masked.max())
                    if top > per_k[k]:
                        per_k[k] = top
                    if top > max_digits:
                        max_digits = top
                        i3, i4 = np.unravel_index(int(masked.argmax()), masked.shape)
                        argmax = (r0, r1, r2, int(r34[i3]), int(r34[i4]))
    return count, max_digits, per_k, argmax


@dataclass(frozen=True)
class CostRow:
    n_fermions: int
    parity: int
    minimal: int
    first_quantized: int


def qubit_costs(n_modes: int) -> list[CostRow]:
    """Qubit costs for K = 0..N: the parity basis with known overall parity
    (N-1), the minimal basis (ceil log2 C(N,K)), and first quantization
    (K ceil log2 N)."""
    if n_modes < 1:
        raise ValueError("need at least one mode")
    log_n = (n_modes - 1).bit_length()
    rows = []
    for k in range(n_modes + 1):
        spec = SectorSpec(n_modes, k)
        rows.append(
            CostRow(
                n_fermions=k,
                parity=n_modes - 1,
                minimal=spec.q_min,
                first_quantized=k * log_n,
            )
        )
    return rows


def costs_csv(n_modes: int) -> str:
    lines = ["K,parity,minimal,first_quantized"]
    for row in qubit_costs(n_modes):
        lines.append(f"{row.n_fermions},{row.parity},{row.minimal},{row.first_quantized}")
    return "\n".join(lines) + "\n"


def single_toffoli_one_fermion_circuit() -> GateCircuit:
    """A 4-wire circuit, Clifford except for one Toffoli, that routes the
    one-fermion states onto their rank labels: |1000> -> |1000>,
    |0100> -> |0100>, |0010> -> |0000>, |0001> -> |1100>, leaving the last
    two qubits redundant for the sector.

    The final wire values are y1 = x1+x4, y2 = x2+x4, y3 = 1+x1+x2+x3+x4
    and y4 = x1 + (x1+x2)(x1+x3) over GF(2); the single quadratic output is
    what one Toffoli buys, and no affine map alone can zero two digits.
    """
    c = GateCircuit(4)
    c.cnot(4, 1)
    c.cnot(4, 2)
    c.cnot(1, 4)
    c.cnot(2, 3)
    c.cnot(4, 3)
    c.x(3)
    # stage alpha = x1+x2 on wire 1 and beta = x1+x3 on wire 2, AND them
    # into wire 4, then restore wires 1 and 2
    c.cnot(2, 1)
    c.cnot(3, 2)
    c.x(2)
    c.toffoli(1, 2, 4)
    c.x(2)
    c.cnot(3, 2)
    c.cnot(2, 1)
    return c
