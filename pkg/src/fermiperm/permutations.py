"""Permutations of the computational basis and Pauli conjugation by them.

A :class:`BasisPermutation` is a bijection on the 2^n basis indices (an
element of S_{2^n}, not a wire permutation).  Permutations whose action is
x -> Mx (+) b over GF(2) are Clifford; they conjugate a Pauli string to a
single Pauli string via a closed form.  Arbitrary permutations conjugate a
Pauli sum to a Pauli sum via the generalized-permutation-matrix structure
and a Walsh-Hadamard transform per basis-index displacement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import f2
from .errors import DimensionError, ResourceError
from .pauli import PauliString, PauliSum, _check_dense_cap, _popcount, parity_u64

PERMUTATION_CAP = 16


class BasisPermutation:
    """A bijection on {0, ..., 2^n - 1}; image[i] is where basis state i goes."""

    __slots__ = ("n_qubits", "image")

    def __init__(self, image: Sequence[int]):
        arr = np.asarray(image, dtype=np.int64)
        dim = arr.size
        n = dim.bit_length() - 1
        if dim < 2 or dim != 1 << n:
            raise ValueError("image length must be a power of two, at least 2")
        if n > PERMUTATION_CAP:
            raise ResourceError(
                f"permutation storage is capped at {PERMUTATION_CAP} qubits, got {n}"
            )
        if not np.array_equal(np.sort(arr), np.arange(dim)):
            raise ValueError("image is not a bijection on the basis indices")
        arr = arr.copy()
        arr.setflags(write=False)
        self.n_qubits = n
        self.image = arr

    @classmethod
    def identity(cls, n_qubits: int) -> "BasisPermutation":
        return cls(np.arange(1 << n_qubits))

    def apply(self, index: int) -> int:
        return int(self.image[index])

    __call__ = apply

    @property
    def dim(self) -> int:
        return self.image.size

    def compose(self, other: "BasisPermutation") -> "BasisPermutation":
        """Operator-style composition: (self . other)(x) = self(other(x))."""
        if self.n_qubits != other.n_qubits:
            raise DimensionError("cannot compose permutations on different registers")
        return BasisPermutation(self.image[other.image])

    def inverse(self) -> "BasisPermutation":
        inv = np.empty_like(self.image)
        inv[self.image] = np.arange(self.dim)
        return BasisPermutation(inv)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BasisPermutation):
            return NotImplemented
        return np.array_equal(self.image, other.image)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.image, np.arange(self.dim)))

    def to_cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition, fixed points omitted; each cycle starts at its
        smallest element and cycles are sorted by that element."""
        seen = np.zeros(self.dim, dtype=bool)
        cycles = []
        for start in range(self.dim):
            if seen[start] or self.image[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            nxt = int(self.image[start])
            while nxt != start:
                cyc.append(nxt)
                seen[nxt] = True
                nxt = int(self.image[nxt])
            cycles.append(tuple(cyc))
        return cycles

    def cycle_string(self) -> str:
        cycles = self.to_cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(str(i) for i in c) + ")" for c in cycles)

    def to_matrix(self) -> np.ndarray:
        """Dense permutation matrix U with U|i> = |image[i]>."""
        _check_dense_cap(self.n_qubits)
        m = np.zeros((self.dim, self.dim), dtype=complex)
        m[self.image, np.arange(self.dim)] = 1.0
        return m


def from_cycles(n_qubits: int, cycles: Iterable[Sequence[int]]) -> BasisPermutation:
    """Standard cycle notation on 0-based state values: within (a1,...,ak),
    a_i maps to a_{i+1} and a_k maps back to a1; unlisted states are fixed."""
    dim = 1 << n_qubits
    image = np.arange(dim)
    touched: set[int] = set()
    for cyc in cycles:
        cyc = list(cyc)
        for a in cyc:
            if not 0 <= a < dim:
                raise ValueError(f"state {a} out of range for {n_qubits} qubits")
            if a in touched:
                raise ValueError(f"state {a} appears twice in the cycles")
            touched.add(a)
        for i, a in enumerate(cyc):
            image[a] = cyc[(i + 1) % len(cyc)]
    return BasisPermutation(image)


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    """Parse ``"(a,b,c)(d,e)"`` into cycle tuples of 0-based integers."""
    text = text.strip()
    cycles = []
    pos = 0
    while pos < len(text):
        if text[pos] != "(":
            raise ValueError(f"expected '(' at position {pos} of cycle string")
        end = text.find(")", pos)
        if end < 0:
            raise ValueError("unbalanced parenthesis in cycle string")
        body = text[pos + 1 : end].strip()
        if body:
            cycles.append(tuple(int(tok) for tok in body.split(",")))
        pos = end + 1
    return cycles


@dataclass(frozen=True)
class Gate:
    """A classical reversible gate: flip ``target`` if all controls are 1."""

    controls: tuple[int, ...]
    target: int

    @property
    def name(self) -> str:
        k = len(self.controls)
        return {0: "X", 1: "CNOT", 2: "TOFFOLI"}.get(k, "MCX")

    def to_line(self) -> str:
        wires = " ".join(str(w) for w in (*self.controls, self.target))
        return f"{self.name} {wires}"


class GateCircuit:
    """An ordered list of X/CNOT/TOFFOLI/MCX gates on wires 1..n.

    Gates apply first-to-last; to transcribe a printed operator product
    G_k ... G_1, list G_1 first.
    """

    __slots__ = ("n_qubits", "gates")

    def __init__(self, n_qubits: int, gates: Iterable[Gate] = ()):
        if n_qubits < 1:
            raise ValueError("need at least one wire")
        self.n_qubits = n_qubits
        self.gates = list(gates)
        for g in self.gates:
            self._validate(g)

    def _validate(self, g: Gate) -> None:
        wires = (*g.controls, g.target)
        if len(set(wires)) != len(wires):
            raise ValueError(f"gate {g.to_line()!r} reuses a wire")
        for w in wires:
            if not 1 <= w <= self.n_qubits:
                raise ValueError(f"wire {w} out of range 1..{self.n_qubits}")

    def x(self, target: int) -> "GateCircuit":
        return self._push(Gate((), target))

    def cnot(self, control: int, target: int) -> "GateCircuit":
        return self._push(Gate((control,), target))

    def toffoli(self, c1: int, c2: int, target: int) -> "GateCircuit":
        return self._push(Gate((c1, c2), target))

    def mcx(self, controls: Sequence[int], target: int) -> "GateCircuit":
        return self._push(Gate(tuple(controls), target))

    def _push(self, g: Gate) -> "GateCircuit":
        self._validate(g)
        self.gates.append(g)
        return self

    def __len__(self) -> int:
        return len(self.gates)

    @property
    def nonclifford_count(self) -> int:
        return sum(1 for g in self.gates if len(g.controls) >= 2)

    def count(self, name: str) -> int:
        return sum(1 for g in self.gates if g.name == name)

    def to_text(self) -> str:
        return "\n".join(g.to_line() for g in self.gates)

    @classmethod
    def from_text(cls, n_qubits: int, text: str) -> "GateCircuit":
        circuit = cls(n_qubits)
        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            kind, wires = tokens[0].upper(), [int(t) for t in tokens[1:]]
            expected = {"X": 1, "CNOT": 2, "TOFFOLI": 3}
            if kind in expected and len(wires) != expected[kind]:
                raise ValueError(f"line {line_no}: {kind} takes {expected[kind]} wire(s)")
            if kind == "MCX" and len(wires) < 3:
                raise ValueError(f"line {line_no}: MCX needs at least two controls")
            if kind not in ("X", "CNOT", "TOFFOLI", "MCX"):
                raise ValueError(f"line {line_no}: unknown gate {tokens[0]!r}")
            circuit._push(Gate(tuple(wires[:-1]), wires[-1]))
        return circuit


def permutation_from_circuit(circuit: GateCircuit) -> BasisPermutation:
    """Compose the gates' actions on basis indices, first gate acting first."""
    n = circuit.n_qubits
    if n > PERMUTATION_CAP:
        raise ResourceError(f"circuit register exceeds the {PERMUTATION_CAP}-qubit cap")
    state = np.arange(1 << n, dtype=np.int64)
    for g in circuit.gates:
        tbit = 1 << (n - g.target)
        if g.controls:
            cmask = 0
            for c in g.controls:
                cmask |= 1 << (n - c)
            state = np.where((state & cmask) == cmask, state ^ tbit, state)
        else:
            state = state ^ tbit
    # state[i] is the image of basis state i after the whole circuit
    return BasisPermutation(state)


@dataclass(frozen=True)
class AffineMapF2:
    """The invertible affine map x -> Mx (+) b over GF(2)."""

    matrix: np.ndarray
    offset: np.ndarray

    def __post_init__(self):
        m = np.ascontiguousarray(self.matrix, dtype=np.uint8) % 2
        b = np.ascontiguousarray(self.offset, dtype=np.uint8) % 2
        if m.ndim != 2 or m.shape[0] != m.shape[1] or b.shape != (m.shape[0],):
            raise ValueError("matrix must be square and offset a matching vector")
        if not f2.is_invertible(m):
            raise ValueError("affine map matrix must be invertible over GF(2)")
        m.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "offset", b)

    @property
    def n_qubits(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def identity(cls, n_qubits: int) -> "AffineMapF2":
        return cls(f2.identity(n_qubits), np.zeros(n_qubits, dtype=np.uint8))

    @classmethod
    def linear(cls, matrix: np.ndarray) -> "AffineMapF2":
        matrix = np.asarray(matrix, dtype=np.uint8)
        return cls(matrix, np.zeros(matrix.shape[0], dtype=np.uint8))

    def column_masks(self) -> list[int]:
        return f2.rows_to_masks(self.matrix.T)

    def offset_mask(self) -> int:
        return f2.vec_to_mask(self.offset)

    def apply_mask(self, state: int) -> int:
        out = self.offset_mask()
        n = self.n_qubits
        for i, col in enumerate(self.column_masks()):
            if (state >> (n - 1 - i)) & 1:
                out ^= col
        return out

    def to_permutation(self) -> BasisPermutation:
        n = self.n_qubits
        if n > PERMUTATION_CAP:
            raise ResourceError(f"register exceeds the {PERMUTATION_CAP}-qubit cap")
        dim = 1 << n
        state = np.arange(dim, dtype=np.int64)
        image = np.full(dim, self.offset_mask(), dtype=np.int64)
        for i, col in enumerate(self.column_masks()):
            bit_set = (state >> (n - 1 - i)) & 1
            image ^= bit_set * col
        return BasisPermutation(image)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffineMapF2):
            return NotImplemented
        return np.array_equal(self.matrix, other.matrix) and np.array_equal(
            self.offset, other.offset
        )


def classify_affine(p: BasisPermutation) -> Optional[AffineMapF2]:
    """Return the affine map realizing p, or None if p is not affine.

    Candidate: b = p(0) and column i = p(e_i) (+) b; the candidate is then
    verified against every one of the 2^n states, so the answer is exact.
    """
    n = p.n_qubits
    b_mask = int(p.image[0])
    col_masks = [int(p.image[1 << (n - 1 - i)]) ^ b_mask for i in range(n)]
    state = np.arange(p.dim, dtype=np.int64)
    predicted = np.full(p.dim, b_mask, dtype=np.int64)
    for i, col in enumerate(col_masks):
        predicted ^= ((state >> (n - 1 - i)) & 1) * col
    if not np.array_equal(predicted, p.image):
        return None
    matrix = f2.masks_to_matrix(col_masks, n).T
    return AffineMapF2(matrix, f2.mask_to_vec(b_mask, n))


def conjugate_pauli_affine(a: AffineMapF2, p: PauliString) -> PauliString:
    """Closed-form U P U^dag for the basis permutation U: |x> -> |Mx (+) b>.

    The X part maps by M, the Z part by (M^-1)^T, and the phase picks up
    (-1)^(z . M^-1 b) together with the X/Z overlap normalization.
    """
    n = a.n_qubits
    if p.n_qubits != n:
        raise DimensionError("Pauli string and affine map act on different registers")
    minv = f2.inverse(a.matrix)
    minv_rows = f2.rows_to_masks(minv)

    x_new = 0
    for i, col in enumerate(a.column_masks()):
        if (p.x_bits >> (n - 1 - i)) & 1:
            x_new ^= col
    z_new = 0
    for j, row in enumerate(minv_rows):
        if (p.z_bits >> (n - 1 - j)) & 1:
            z_new ^= row

    b_mask = a.offset_mask()
    minv_b = 0
    for i, row in enumerate(minv_rows):
        if _popcount(row & b_mask) % 2:
            minv_b |= 1 << (n - 1 - i)
    sign_flips = _popcount(p.z_bits & minv_b) % 2

    overlap_delta = _popcount(p.x_bits & p.z_bits) - _popcount(x_new & z_new)
    if overlap_delta % 2 != 0:
        raise AssertionError("affine conjugation produced a complex phase")
    phase = (p.phase + overlap_delta + 2 * sign_flips) % 4
    return PauliString(n, x_new, z_new, phase)


def _walsh_hadamard(values: np.ndarray) -> np.ndarray:
    """Unnormalized transform: out[z] = sum_v values[v] * (-1)^popcount(z & v)."""
    out = values.copy()
    h = 1
    size = out.size
    while h < size:
        out = out.reshape(-1, 2, h)
        top = out[:, 0, :] + out[:, 1, :]
        bot = out[:, 0, :] - out[:, 1, :]
        out = np.stack([top, bot], axis=1).reshape(size)
        h *= 2
    return out


def conjugate_pauli_dense(p: BasisPermutation, s: PauliSum) -> PauliSum:
    """Exact U S U^dag for an arbitrary basis permutation U.

    Each conjugated Pauli term is a generalized permutation matrix (one
    non-zero per column).  Columns are grouped by row(+)column displacement
    and the Z-coefficients of each group are recovered with a Walsh-Hadamard
    transform, O(n 2^n) per displacement per input term.
    """
    n = p.n_qubits
    if s.n_qubits != n:
        raise DimensionError("Pauli sum and permutation act on different registers")
    _check_dense_cap(n)
    dim = p.dim
    cols = np.arange(dim, dtype=np.int64)
    p_inv = p.inverse().image
    out: dict[tuple[int, int], complex] = {}
    for (x, z), coeff in s.items():
        u = p_inv
        rows = p.image[u ^ x]
        # column v of U P U^dag holds coeff * i^|x&z| * (-1)^(z.u) at row rows[v]
        amp = coeff * 1j ** (_popcount(x & z) % 4)
        values = amp * (1.0 - 2.0 * parity_u64(u & z))
        disp = rows ^ cols
        for d in np.unique(disp):
            f = np.where(disp == d, values, 0.0).astype(complex)
            spectrum = _walsh_hadamard(f) / dim
            (z_hits,) = np.nonzero(np.abs(spectrum) > 1e-14)
            d_int = int(d)
            for z_new in z_hits:
                z_int = int(z_new)
                gamma = spectrum[z_int] * (-1j) ** (_popcount(d_int & z_int) % 4)
                key = (d_int, z_int)
                out[key] = out.get(key, 0.0) + gamma
    return PauliSum(n, out.items())


def conjugate_pauli_matrix(p: BasisPermutation, s: PauliSum) -> PauliSum:
    """Reference oracle: build dense matrices and decompose U S U^dag."""
    from .pauli import pauli_decompose

    u = p.to_matrix()
    return pauli_decompose(u @ s.to_dense() @ u.conj().T)


def compose(p: BasisPermutation, q: BasisPermutation) -> BasisPermutation:
    return p.compose(q)


def inverse(p: BasisPermutation) -> BasisPermutation:
    return p.inverse()


def apply(p: BasisPermutation, index: int) -> int:
    return p.apply(index)
