"""Fermionic operators, Fock states, and concrete fermion-to-qubit encodings.

Provides the Jordan-Wigner and parity-basis Majorana operators, arbitrary
invertible GF(2)-linear state encodings (Jordan-Wigner is the identity
matrix, the parity basis the lower-triangular all-ones matrix), ladder
operator encoding, and synthesis of the CNOT circuit realizing any
invertible linear encoding on the basis states.

Modes are 1-based; mode 1 is the leftmost entry of an occupancy string and
the most significant bit of its integer form, matching the qubit convention
in :mod:`fermiperm.pauli`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import f2
from .errors import (
    DimensionError,
    HamiltonianParseError,
    InvalidEncodingError,
    NumberConservationError,
)
from .pauli import PauliString, PauliSum
from .permutations import AffineMapF2, GateCircuit, conjugate_pauli_affine


@dataclass(frozen=True)
class FockState:
    """Occupancy string |n1 n2 ... nN>, stored as an integer bit mask."""

    n_modes: int
    occupancy: int

    def __post_init__(self):
        if self.n_modes < 1:
            raise ValueError("need at least one mode")
        if self.occupancy & ~((1 << self.n_modes) - 1):
            raise ValueError("occupancy mask exceeds the register")

    @classmethod
    def from_string(cls, bits: str) -> "FockState":
        return cls(len(bits), int(bits, 2))

    def to_string(self) -> str:
        return format(self.occupancy, f"0{self.n_modes}b")

    def occ(self, mode: int) -> int:
        return (self.occupancy >> (self.n_modes - mode)) & 1

    def hamming_weight(self) -> int:
        return self.occupancy.bit_count()


@dataclass(frozen=True)
class FermionTerm:
    """coefficient * product of ladder operators, leftmost written first.

    ``ops`` is a sequence of (mode, dagger) pairs; when the term acts on a
    ket the rightmost operator applies first.
    """

    coefficient: complex
    ops: tuple[tuple[int, bool], ...]

    @classmethod
    def make(cls, coefficient: complex, ops: Iterable[tuple[int, bool]]) -> "FermionTerm":
        return cls(complex(coefficient), tuple((int(m), bool(d)) for m, d in ops))

    def dagger(self) -> "FermionTerm":
        flipped = tuple((m, not d) for m, d in reversed(self.ops))
        return FermionTerm(self.coefficient.conjugate(), flipped)

    def is_number_conserving(self) -> bool:
        raised = sum(1 for _, d in self.ops if d)
        return raised * 2 == len(self.ops)

    def describe(self) -> str:
        if not self.ops:
            return f"{self.coefficient:g} * 1"
        names = " ".join(f"a{'+' if d else ''}_{m}" for m, d in self.ops)
        return f"({self.coefficient.real:g}{self.coefficient.imag:+g}i) {names}"


@dataclass(frozen=True)
class FermionOperator:
    """A finite sum of :class:`FermionTerm`."""

    terms: tuple[FermionTerm, ...] = field(default_factory=tuple)

    @classmethod
    def from_terms(cls, terms: Iterable[FermionTerm]) -> "FermionOperator":
        return cls(tuple(terms))

    @classmethod
    def one_body(cls, coefficients: np.ndarray) -> "FermionOperator":
        """sum_pq h[p-1, q-1] a+_p a_q from a coefficient matrix."""
        h = np.asarray(coefficients, dtype=complex)
        terms = []
        for p in range(h.shape[0]):
            for q in range(h.shape[1]):
                if h[p, q] != 0:
                    terms.append(FermionTerm.make(h[p, q], [(p + 1, True), (q + 1, False)]))
        return cls(tuple(terms))

    @classmethod
    def number_operator(cls, n_modes: int) -> "FermionOperator":
        return cls.one_body(np.eye(n_modes))

    def __add__(self, other: "FermionOperator") -> "FermionOperator":
        return FermionOperator(self.terms + other.terms)

    def dagger(self) -> "FermionOperator":
        return FermionOperator(tuple(t.dagger() for t in self.terms))

    def hermitized(self) -> "FermionOperator":
        return self + self.dagger()

    def max_mode(self) -> int:
        return max((m for t in self.terms for m, _ in t.ops), default=0)

    def is_number_conserving(self) -> bool:
        return all(t.is_number_conserving() for t in self.terms)

    def require_number_conserving(self) -> None:
        for t in self.terms:
            if not t.is_number_conserving():
                raise NumberConservationError(
                    f"term does not conserve particle number: {t.describe()}", term=t
                )


@dataclass(frozen=True)
class LinearEncodingF2:
    """An invertible GF(2) matrix M encoding occupancies as x = M n."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.ascontiguousarray(self.matrix, dtype=np.uint8) % 2
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("encoding matrix must be square")
        if not f2.is_invertible(m):
            raise InvalidEncodingError("encoding matrix is singular over GF(2)")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def n_modes(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def jordan_wigner(cls, n_modes: int) -> "LinearEncodingF2":
        return cls(f2.identity(n_modes))

    @classmethod
    def parity(cls, n_modes: int) -> "LinearEncodingF2":
        return cls(f2.parity_matrix(n_modes))


def jw_majorana(j: int, primed: bool, n_modes: int) -> PauliString:
    """Jordan-Wigner Majorana: Z on qubits 1..j-1 then X (or Y if primed) on j."""
    if not 1 <= j <= n_modes:
        raise DimensionError(f"mode {j} out of range 1..{n_modes}")
    letters = "Z" * (j - 1) + ("Y" if primed else "X") + "I" * (n_modes - j)
    return PauliString.from_letters(letters)


def parity_majorana(j: int, primed: bool, n_modes: int) -> PauliString:
    """Parity-basis Majorana: Z on j-1 (absent if primed or j=1), then X or Y
    on j, then X on every later qubit."""
    if not 1 <= j <= n_modes:
        raise DimensionError(f"mode {j} out of range 1..{n_modes}")
    if primed:
        letters = "I" * (j - 1) + "Y" + "X" * (n_modes - j)
    else:
        letters = "I" * (j - 2) + ("Z" if j > 1 else "") + "X" + "X" * (n_modes - j)
    return PauliString.from_letters(letters)


def jw_majoranas(n_modes: int) -> list[tuple[PauliString, PauliString]]:
    return [
        (jw_majorana(j, False, n_modes), jw_majorana(j, True, n_modes))
        for j in range(1, n_modes + 1)
    ]


def parity_majoranas(n_modes: int) -> list[tuple[PauliString, PauliString]]:
    return [
        (parity_majorana(j, False, n_modes), parity_majorana(j, True, n_modes))
        for j in range(1, n_modes + 1)
    ]


def encode_state(enc: LinearEncodingF2, state: FockState) -> FockState:
    """Apply the encoding matrix to an occupancy vector over GF(2)."""
    if enc.n_modes != state.n_modes:
        raise DimensionError("encoding and state have different mode counts")
    vec = f2.mask_to_vec(state.occupancy, state.n_modes)
    return FockState(state.n_modes, f2.vec_to_mask(f2.matvec(enc.matrix, vec)))


def gl_to_cnot_circuit(enc: LinearEncodingF2) -> GateCircuit:
    """Synthesize a CNOT circuit whose basis action maps |x> to |Mx>.

    Gaussian elimination, column-major: clear below the diagonal, then above
    it.  Each row operation row_t += row_c is a CNOT with control c+1 and
    target t+1; the recorded operations, reversed, reproduce M.
    """
    n = enc.n_modes
    work = enc.matrix.astype(np.uint8).copy()
    ops: list[tuple[int, int]] = []  # (control row, target row), 0-based

    def add_row(src: int, dst: int) -> None:
        work[dst] ^= work[src]
        ops.append((src, dst))

    for col in range(n):
        if work[col, col] == 0:
            below = [r for r in range(col + 1, n) if work[r, col]]
            add_row(below[0], col)
        for r in range(col + 1, n):
            if work[r, col]:
                add_row(col, r)
    for col in range(n - 1, 0, -1):
        for r in range(col - 1, -1, -1):
            if work[r, col]:
                add_row(col, r)

    circuit = GateCircuit(n)
    for src, dst in reversed(ops):
        circuit.cnot(src + 1, dst + 1)
    return circuit


def _coerce_majorana(op) -> PauliSum:
    if isinstance(op, PauliString):
        return PauliSum.from_pauli(op)
    return op


def encode_ladder(
    j: int,
    dagger: bool,
    majoranas: Sequence[tuple[PauliString, PauliString]],
) -> PauliSum:
    """Ladder operator from a Majorana pair table:
    a+_j = (g_j - i g'_j)/2 and a_j = (g_j + i g'_j)/2."""
    if not 1 <= j <= len(majoranas):
        raise DimensionError(f"no Majorana pair for mode {j}")
    g, gp = majoranas[j - 1]
    sign = -1j if dagger else 1j
    return _coerce_majorana(g).scale(0.5) + _coerce_majorana(gp).scale(0.5 * sign)


def encode_fermion_operator(
    h: FermionOperator,
    majoranas: Sequence[tuple[PauliString, PauliString]],
) -> PauliSum:
    """Encode each term as the product of its encoded ladder operators, in
    the order written, and return the simplified sum."""
    n_modes = len(majoranas)
    if h.max_mode() > n_modes:
        raise DimensionError(
            f"operator touches mode {h.max_mode()} but only {n_modes} are encoded"
        )
    first = _coerce_majorana(majoranas[0][0])
    n_qubits = first.n_qubits
    total = PauliSum.zero(n_qubits)
    for term in h.terms:
        acc = PauliSum.identity(n_qubits, term.coefficient)
        for mode, dag in term.ops:
            acc = acc * encode_ladder(mode, dag, majoranas)
        total = total + acc
    return total.simplify()


def linear_encoding_majoranas(enc: LinearEncodingF2) -> list[tuple[PauliString, PauliString]]:
    """Majoranas of a linear encoding, obtained by conjugating the
    Jordan-Wigner Majoranas with the synthesized CNOT circuit's action."""
    from .permutations import classify_affine, permutation_from_circuit

    perm = permutation_from_circuit(gl_to_cnot_circuit(enc))
    affine = classify_affine(perm)
    assert affine is not None  # CNOT circuits are always linear
    return [
        (conjugate_pauli_affine(affine, g), conjugate_pauli_affine(affine, gp))
        for g, gp in jw_majoranas(enc.n_modes)
    ]


def random_one_body(
    n_modes: int, rng: np.random.Generator, hermitian: bool = True
) -> FermionOperator:
    """Random one-body number-conserving operator with entries in [-1, 1]."""
    h = rng.uniform(-1.0, 1.0, size=(n_modes, n_modes)) + 1j * rng.uniform(
        -1.0, 1.0, size=(n_modes, n_modes)
    )
    if hermitian:
        h = (h + h.conj().T) / 2
    return FermionOperator.one_body(h)


def parse_hamiltonian(
    text: str, n_modes: int | None = None, hermitize: bool = False
) -> FermionOperator:
    """Parse the fermionic Hamiltonian text format.

    Lines are either ``p q re im`` for (re+im*i) a+_p a_q or
    ``p q r s re im`` for (re+im*i) a+_p a+_q a_r a_s; '#' starts a comment
    and modes are 1-based.  Hermiticity is the caller's responsibility
    unless ``hermitize`` is set, which adds the conjugate transpose of
    every parsed term.
    """
    terms = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) == 4:
            n_ops = 2
        elif len(tokens) == 6:
            n_ops = 4
        else:
            raise HamiltonianParseError(
                f"line {line_no}: expected 4 or 6 fields, got {len(tokens)}",
                line_no=line_no,
            )
        try:
            modes = [int(t) for t in tokens[:n_ops]]
            re_part, im_part = float(tokens[n_ops]), float(tokens[n_ops + 1])
        except ValueError:
            raise HamiltonianParseError(
                f"line {line_no}: could not parse fields {tokens!r}", line_no=line_no
            ) from None
        for m in modes:
            if m < 1 or (n_modes is not None and m > n_modes):
                raise HamiltonianParseError(
                    f"line {line_no}: mode {m} out of range", line_no=line_no
                )
        coeff = complex(re_part, im_part)
        if n_ops == 2:
            ops = [(modes[0], True), (modes[1], False)]
        else:
            ops = [
                (modes[0], True),
                (modes[1], True),
                (modes[2], False),
                (modes[3], False),
            ]
        terms.append(FermionTerm.make(coeff, ops))
    op = FermionOperator(tuple(terms))
    return op.hermitized() if hermitize else op
