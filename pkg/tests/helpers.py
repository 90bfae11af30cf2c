"""Shared test oracles, independent of the library's own dense paths."""

import numpy as np

from fermiperm import GateCircuit, PauliSum, permutation_from_circuit

_SINGLE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def kron_dense(letters: str, coeff: complex = 1.0) -> np.ndarray:
    """Tensor product of literal 2x2 matrices, qubit 1 as the leftmost factor."""
    out = np.array([[coeff]], dtype=complex)
    for ch in letters:
        out = np.kron(out, _SINGLE[ch])
    return out


def kron_dense_sum(pairs) -> np.ndarray:
    """Dense matrix of a list of (coeff, letters) pairs via the kron oracle."""
    return sum(kron_dense(letters, coeff) for coeff, letters in pairs)


def permutation_matrix(perm) -> np.ndarray:
    """Dense unitary of a BasisPermutation, built by direct indexing."""
    dim = perm.dim
    u = np.zeros((dim, dim), dtype=complex)
    for col in range(dim):
        u[perm.apply(col), col] = 1.0
    return u


def random_pauli_sum(n_qubits: int, n_terms: int, rng: np.random.Generator) -> PauliSum:
    items = []
    for _ in range(n_terms):
        x = int(rng.integers(0, 1 << n_qubits))
        z = int(rng.integers(0, 1 << n_qubits))
        c = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        items.append(((x, z), c))
    return PauliSum(n_qubits, items)


def random_pauli_letters(n_qubits: int, rng: np.random.Generator) -> str:
    return "".join(rng.choice(list("IXYZ")) for _ in range(n_qubits))


def three_cnot_circuit() -> GateCircuit:
    """The two-fermion example circuit: product CNOT(1->4) CNOT(2->4) CNOT(3->4),
    transcribed with the rightmost factor first."""
    c = GateCircuit(4)
    c.cnot(3, 4)
    c.cnot(2, 4)
    c.cnot(1, 4)
    return c


def three_cnot_permutation():
    return permutation_from_circuit(three_cnot_circuit())
