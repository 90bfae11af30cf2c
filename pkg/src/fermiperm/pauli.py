"""Exact Pauli-string and Pauli-sum algebra with a dense-matrix oracle.

Representation conventions, used consistently across the package:

* Qubit 1 is the leftmost letter of a string like ``ZXIX`` and the most
  significant bit of a computational-basis index, so the ket |n1 n2 ... nN>
  is the integer ``n1*2^(N-1) + ... + nN``.
* A :class:`PauliString` stores bit masks ``x_bits``/``z_bits`` (bit for
  qubit q is ``1 << (n - q)``) plus an integer ``phase`` in {0,1,2,3}.
  The operator it denotes is exactly ``i**phase`` times the tensor product
  of the standard letters, with the letter at qubit q given by
  (x,z) = (0,0) -> I, (1,0) -> X, (0,1) -> Z, (1,1) -> Y.
* A :class:`PauliSum` maps (x_bits, z_bits) keys to complex coefficients;
  like terms are always merged and coefficients with magnitude below
  ``PRUNE_TOL`` are dropped by arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import DimensionError, ResourceError

DENSE_CAP = 12
PRUNE_TOL = 1e-12

_LETTER_TO_XZ = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_XZ_TO_LETTER = {v: k for k, v in _LETTER_TO_XZ.items()}


def _popcount(v: int) -> int:
    return v.bit_count()


def _check_dense_cap(n_qubits: int) -> None:
    if n_qubits > DENSE_CAP:
        raise ResourceError(
            f"dense operations are capped at {DENSE_CAP} qubits, got {n_qubits}"
        )


def parity_u64(values: np.ndarray) -> np.ndarray:
    """Elementwise popcount parity of an integer array (values < 2**16)."""
    v = values.astype(np.uint64)
    v ^= v >> np.uint64(8)
    v ^= v >> np.uint64(4)
    v ^= v >> np.uint64(2)
    v ^= v >> np.uint64(1)
    return (v & np.uint64(1)).astype(np.int64)


@dataclass(frozen=True)
class PauliString:
    """A signed Pauli operator i**phase * (letter_1 x ... x letter_n)."""

    n_qubits: int
    x_bits: int
    z_bits: int
    phase: int = 0

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("need at least one qubit")
        full = (1 << self.n_qubits) - 1
        if self.x_bits & ~full or self.z_bits & ~full:
            raise ValueError("bit mask exceeds register size")
        if self.phase not in (0, 1, 2, 3):
            raise ValueError("phase must be an integer power of i in {0,1,2,3}")

    @classmethod
    def identity(cls, n_qubits: int) -> "PauliString":
        return cls(n_qubits, 0, 0, 0)

    @classmethod
    def from_letters(cls, letters: str, phase: int = 0) -> "PauliString":
        """Build from a string like ``"ZXIX"`` (qubit 1 leftmost)."""
        n = len(letters)
        x = z = 0
        for q, letter in enumerate(letters, start=1):
            try:
                xq, zq = _LETTER_TO_XZ[letter]
            except KeyError:
                raise ValueError(f"invalid Pauli letter {letter!r}") from None
            bit = 1 << (n - q)
            x |= xq * bit
            z |= zq * bit
        return cls(n, x, z, phase)

    @classmethod
    def single(cls, n_qubits: int, qubit: int, letter: str) -> "PauliString":
        """One non-identity letter on the given qubit (1-based)."""
        if not 1 <= qubit <= n_qubits:
            raise DimensionError(f"qubit {qubit} out of range 1..{n_qubits}")
        xq, zq = _LETTER_TO_XZ[letter]
        bit = 1 << (n_qubits - qubit)
        return cls(n_qubits, xq * bit, zq * bit, 0)

    def letter(self, qubit: int) -> str:
        bit = 1 << (self.n_qubits - qubit)
        return _XZ_TO_LETTER[(int(bool(self.x_bits & bit)), int(bool(self.z_bits & bit)))]

    def letters(self) -> str:
        return "".join(self.letter(q) for q in range(1, self.n_qubits + 1))

    @property
    def coefficient(self) -> complex:
        return 1j ** self.phase

    def weight(self) -> int:
        """Number of qubits acted on non-trivially."""
        return _popcount(self.x_bits | self.z_bits)

    def __mul__(self, other: "PauliString") -> "PauliString":
        return multiply(self, other)

    def __str__(self) -> str:
        return f"{_format_coeff(self.coefficient)} {self.letters()}"

    def to_dense(self) -> np.ndarray:
        return PauliSum.from_pauli(self).to_dense()


def multiply(a: PauliString, b: PauliString) -> PauliString:
    """Exact group product a*b with the phase tracked in {1, i, -1, -i}."""
    if a.n_qubits != b.n_qubits:
        raise DimensionError(
            f"cannot multiply Pauli strings on {a.n_qubits} and {b.n_qubits} qubits"
        )
    x = a.x_bits ^ b.x_bits
    z = a.z_bits ^ b.z_bits
    # Fold each operand's Y letters into X*Z form, pick up the (-1) from
    # commuting Z past X, then normalize the product's Y letters back.
    k = (
        a.phase
        + b.phase
        + _popcount(a.x_bits & a.z_bits)
        + _popcount(b.x_bits & b.z_bits)
        + 2 * _popcount(a.z_bits & b.x_bits)
        - _popcount(x & z)
    ) % 4
    return PauliString(a.n_qubits, x, z, k)


def commutes(a: PauliString, b: PauliString) -> bool:
    """Symplectic-form test: True iff a and b commute."""
    if a.n_qubits != b.n_qubits:
        raise DimensionError("commutator of Pauli strings on different registers")
    return (_popcount(a.x_bits & b.z_bits) + _popcount(a.z_bits & b.x_bits)) % 2 == 0


def commutator_type(a: PauliString, b: PauliString) -> str:
    """Return ``"commute"`` or ``"anticommute"``."""
    return "commute" if commutes(a, b) else "anticommute"


def weight(p: PauliString) -> int:
    return p.weight()


class PauliSum:
    """A complex-weighted sum of Pauli strings on a fixed register.

    Instances are immutable: every operation returns a new sum.  Terms are
    keyed by (x_bits, z_bits); the stored coefficient includes any i**phase
    carried by the strings that produced the term.
    """

    __slots__ = ("n_qubits", "_terms")

    def __init__(self, n_qubits: int, terms: Iterable[tuple[tuple[int, int], complex]] = ()):
        if n_qubits < 1:
            raise ValueError("need at least one qubit")
        self.n_qubits = n_qubits
        pairs = terms.items() if isinstance(terms, dict) else terms
        merged: dict[tuple[int, int], complex] = {}
        for key, coeff in pairs:
            merged[key] = merged.get(key, 0.0) + complex(coeff)
        self._terms = {k: c for k, c in merged.items() if abs(c) > PRUNE_TOL}

    @classmethod
    def zero(cls, n_qubits: int) -> "PauliSum":
        return cls(n_qubits)

    @classmethod
    def identity(cls, n_qubits: int, coeff: complex = 1.0) -> "PauliSum":
        return cls(n_qubits, [((0, 0), coeff)])

    @classmethod
    def from_pauli(cls, p: PauliString, coeff: complex = 1.0) -> "PauliSum":
        return cls(p.n_qubits, [((p.x_bits, p.z_bits), coeff * p.coefficient)])

    @classmethod
    def from_terms(cls, n_qubits: int, pairs: Iterable[tuple[complex, str]]) -> "PauliSum":
        """Build from (coefficient, letters) pairs, e.g. ``(0.5, "XIZX")``."""
        items = []
        for coeff, letters in pairs:
            if len(letters) != n_qubits:
                raise DimensionError(
                    f"term {letters!r} does not act on {n_qubits} qubits"
                )
            p = PauliString.from_letters(letters)
            items.append(((p.x_bits, p.z_bits), complex(coeff)))
        return cls(n_qubits, items)

    def items(self) -> Iterator[tuple[tuple[int, int], complex]]:
        return iter(self._terms.items())

    def items_sorted(self) -> list[tuple[str, complex]]:
        """(letters, coefficient) pairs sorted lexicographically by letters."""
        out = [(self._letters(key), c) for key, c in self._terms.items()]
        out.sort(key=lambda t: t[0])
        return out

    def _letters(self, key: tuple[int, int]) -> str:
        return PauliString(self.n_qubits, key[0], key[1]).letters()

    def coefficient(self, letters: str) -> complex:
        p = PauliString.from_letters(letters)
        if p.n_qubits != self.n_qubits:
            raise DimensionError("letter string length does not match register")
        return self._terms.get((p.x_bits, p.z_bits), 0.0)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliSum):
            return NotImplemented
        return self.n_qubits == other.n_qubits and self._terms == other._terms

    def __add__(self, other: "PauliSum") -> "PauliSum":
        if self.n_qubits != other.n_qubits:
            raise DimensionError("cannot add sums on different registers")
        items = list(self._terms.items()) + list(other._terms.items())
        return PauliSum(self.n_qubits, items)

    def __sub__(self, other: "PauliSum") -> "PauliSum":
        return self + other.scale(-1.0)

    def scale(self, factor: complex) -> "PauliSum":
        return PauliSum(self.n_qubits, [(k, c * factor) for k, c in self._terms.items()])

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return self.scale(other)
        if not isinstance(other, PauliSum):
            return NotImplemented
        if self.n_qubits != other.n_qubits:
            raise DimensionError("cannot multiply sums on different registers")
        items = []
        for (xa, za), ca in self._terms.items():
            pa = PauliString(self.n_qubits, xa, za)
            for (xb, zb), cb in other._terms.items():
                prod = pa * PauliString(self.n_qubits, xb, zb)
                items.append(((prod.x_bits, prod.z_bits), ca * cb * prod.coefficient))
        return PauliSum(self.n_qubits, items)

    __rmul__ = __mul__

    def dagger(self) -> "PauliSum":
        return PauliSum(self.n_qubits, [(k, c.conjugate()) for k, c in self._terms.items()])

    def is_hermitian(self, tol: float = PRUNE_TOL) -> bool:
        return all(abs(c.imag) <= tol for c in self._terms.values())

    def simplify(self, tol: float = PRUNE_TOL) -> "PauliSum":
        """Drop terms whose coefficient magnitude is at most ``tol``."""
        return PauliSum(self.n_qubits, [(k, c) for k, c in self._terms.items() if abs(c) > tol])

    def frobenius_sq(self) -> float:
        """Sum of squared coefficient magnitudes (Frobenius norm^2 / 2^n)."""
        return float(sum(abs(c) ** 2 for c in self._terms.values()))

    def max_weight(self) -> int:
        return max((_popcount(x | z) for (x, z) in self._terms), default=0)

    def mean_weight(self) -> float:
        if not self._terms:
            return 0.0
        return sum(_popcount(x | z) for (x, z) in self._terms) / len(self._terms)

    def to_dense(self) -> np.ndarray:
        """Exact 2^n x 2^n matrix; qubit 1 is the most significant index bit."""
        _check_dense_cap(self.n_qubits)
        dim = 1 << self.n_qubits
        out = np.zeros((dim, dim), dtype=complex)
        cols = np.arange(dim, dtype=np.int64)
        for (x, z), coeff in self._terms.items():
            rows = cols ^ x
            signs = 1.0 - 2.0 * parity_u64(cols & z)
            amp = coeff * 1j ** (_popcount(x & z) % 4)
            out[rows, cols] += amp * signs
        return out

    def matrix_element(self, row: int, col: int) -> complex:
        """<row| sum |col> without building the dense matrix."""
        val = 0.0 + 0.0j
        for (x, z), coeff in self._terms.items():
            if col ^ x == row:
                sign = -1.0 if _popcount(col & z) % 2 else 1.0
                val += coeff * (1j ** (_popcount(x & z) % 4)) * sign
        return val

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{_format_coeff(c)} {s}" for s, c in self.items_sorted())

    def to_json_dict(self) -> dict:
        return {
            "n_qubits": self.n_qubits,
            "terms": [
                {"pauli": s, "re": c.real, "im": c.imag} for s, c in self.items_sorted()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "PauliSum":
        return cls.from_terms(
            data["n_qubits"],
            [(complex(t["re"], t["im"]), t["pauli"]) for t in data["terms"]],
        )


def _format_coeff(c: complex) -> str:
    return f"({c.real:g}{c.imag:+g}i)"


def sum_add(a: PauliSum, b: PauliSum) -> PauliSum:
    return a + b


def sum_scale(s: PauliSum, factor: complex) -> PauliSum:
    return s.scale(factor)


def simplify(s: PauliSum, tol: float = PRUNE_TOL) -> PauliSum:
    return s.simplify(tol)


def to_dense(s: PauliSum) -> np.ndarray:
    return s.to_dense()


def pauli_decompose(m: np.ndarray, tol: float = PRUNE_TOL) -> PauliSum:
    """Expand a matrix in the Pauli basis: coefficients tr(Q^dag m) / 2^n.

    Works by recursive quadrant splitting on the most significant qubit,
    pruning zero blocks, so sparse operators cost far less than 4^n.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expected a square matrix")
    dim = m.shape[0]
    n = dim.bit_length() - 1
    if dim != 1 << n or n < 1:
        raise ValueError("matrix dimension must be a power of two, at least 2")
    _check_dense_cap(n)

    terms: dict[tuple[int, int], complex] = {}

    def rec(block: np.ndarray, depth: int, x: int, z: int) -> None:
        if np.max(np.abs(block)) <= tol:
            return
        if depth == n:
            terms[(x, z)] = complex(block[0, 0])
            return
        half = block.shape[0] // 2
        a = block[:half, :half]
        b = block[:half, half:]
        c = block[half:, :half]
        d = block[half:, half:]
        bit = 1 << (n - 1 - depth)
        rec((a + d) / 2, depth + 1, x, z)
        rec((a - d) / 2, depth + 1, x, z | bit)
        rec((b + c) / 2, depth + 1, x | bit, z)
        rec(1j * (b - c) / 2, depth + 1, x | bit, z | bit)

    rec(m, 0, 0, 0)
    return PauliSum(n, terms.items())
