"""Pauli string / Pauli sum algebra against the literal-matrix oracle."""

import numpy as np
import pytest

from fermiperm import (
    DimensionError,
    PauliString,
    PauliSum,
    ResourceError,
    commutator_type,
    commutes,
    multiply,
    pauli_decompose,
)
from helpers import kron_dense, kron_dense_sum, random_pauli_letters, random_pauli_sum


def test_multiply_single_qubit_identities():
    X = PauliString.from_letters("X")
    Y = PauliString.from_letters("Y")
    Z = PauliString.from_letters("Z")
    assert X * Y == PauliString.from_letters("Z", phase=1)  # i Z
    assert Y * X == PauliString.from_letters("Z", phase=3)  # -i Z
    assert Y * Z == PauliString.from_letters("X", phase=1)
    assert Z * X == PauliString.from_letters("Y", phase=1)


@pytest.mark.parametrize("letters", ["X", "ZXIX", "YYZ", "IIIII"])
def test_paulis_square_to_identity(letters):
    p = PauliString.from_letters(letters)
    sq = p * p
    assert sq == PauliString.identity(p.n_qubits)


def test_multiply_checked_against_dense_product():
    a = PauliString.from_letters("ZX")
    b = PauliString.from_letters("XX")
    prod = a * b
    expected = kron_dense("ZX") @ kron_dense("XX")
    got = prod.coefficient * kron_dense(prod.letters())
    assert np.allclose(got, expected)


def test_multiply_random_pairs_against_dense(seed=11):
    rng = np.random.default_rng(seed)
    for _ in range(50):
        n = int(rng.integers(1, 5))
        sa = random_pauli_letters(n, rng)
        sb = random_pauli_letters(n, rng)
        prod = PauliString.from_letters(sa) * PauliString.from_letters(sb)
        expected = kron_dense(sa) @ kron_dense(sb)
        assert np.allclose(prod.coefficient * kron_dense(prod.letters()), expected)


def test_multiply_associative_on_random_triples():
    rng = np.random.default_rng(5)
    for _ in range(50):
        n = int(rng.integers(1, 6))
        a, b, c = (PauliString.from_letters(random_pauli_letters(n, rng)) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        triple = (a * b) * c
        dense = kron_dense(a.letters()) @ kron_dense(b.letters()) @ kron_dense(c.letters())
        assert np.allclose(triple.coefficient * kron_dense(triple.letters()), dense)


def test_multiply_dimension_mismatch():
    with pytest.raises(DimensionError):
        multiply(PauliString.from_letters("X"), PauliString.from_letters("XX"))


def test_commutator_type_basics():
    X1 = PauliString.from_letters("X")
    Z1 = PauliString.from_letters("Z")
    assert commutator_type(X1, Z1) == "anticommute"
    assert commutator_type(
        PauliString.from_letters("XI"), PauliString.from_letters("IZ")
    ) == "commute"


def test_jw_gamma2_gamma3_anticommute():
    from fermiperm import jw_majorana

    g2 = jw_majorana(2, False, 4)
    g3 = jw_majorana(3, False, 4)
    assert commutator_type(g2, g3) == "anticommute"


def test_commutator_type_matches_dense_exhaustive_3q():
    """Symplectic test vs dense [a,b] / {a,b} for every letter pair on 3 qubits."""
    letters3 = [a + b + c for a in "IXYZ" for b in "IXYZ" for c in "IXYZ"]
    for sa in letters3:
        ma = kron_dense(sa)
        pa = PauliString.from_letters(sa)
        for sb in letters3:
            mb = kron_dense(sb)
            pb = PauliString.from_letters(sb)
            comm_zero = np.allclose(ma @ mb - mb @ ma, 0)
            assert commutes(pa, pb) == comm_zero
            if not comm_zero:
                assert np.allclose(ma @ mb + mb @ ma, 0)


def test_commutator_type_matches_dense_random_8q():
    rng = np.random.default_rng(23)
    for _ in range(30):
        sa = random_pauli_letters(8, rng)
        sb = random_pauli_letters(8, rng)
        pa, pb = PauliString.from_letters(sa), PauliString.from_letters(sb)
        ma, mb = kron_dense(sa), kron_dense(sb)
        assert commutes(pa, pb) == np.allclose(ma @ mb, mb @ ma)


def test_weight():
    assert PauliString.identity(5).weight() == 0
    assert PauliString.from_letters("ZXIX").weight() == 3
    from fermiperm import jw_majorana

    for n in (1, 3, 7):
        for j in range(1, n + 1):
            assert jw_majorana(j, False, n).weight() == j


def test_sum_cancellation_and_merging():
    s = PauliSum.from_terms(2, [(0.5, "XZ"), (1.0, "YY")])
    assert len(s + s.scale(-1.0)) == 0
    a = PauliSum.from_terms(1, [(1.0, "X")])
    b = PauliSum.from_terms(1, [(1.0, "Z")])
    half = (a + b).scale(0.5) + (a - b).scale(0.5)
    assert half == a


def test_four_term_majorana_image_stays_four_terms():
    # image of the first Majorana under a single-Toffoli permutation
    s = PauliSum.from_terms(
        4,
        [(0.5, "XIXI"), (0.5, "XIXX"), (0.5, "XZXI"), (-0.5, "XZXX")],
    )
    assert len(s.simplify()) == 4
    coeffs = [c for _, c in s.items_sorted()]
    assert all(c.imag == 0 for c in coeffs)
    assert sorted(c.real for c in coeffs) == [-0.5, 0.5, 0.5, 0.5]


def test_to_dense_identity_and_z():
    assert np.allclose(PauliString.identity(3).to_dense(), np.eye(8))
    assert np.allclose(PauliString.from_letters("Z").to_dense(), np.diag([1, -1]))


def test_to_dense_cnot_combination():
    """1/2 (II + ZI + IX - ZX) is the controlled-NOT permutation matrix."""
    s = PauliSum.from_terms(2, [(0.5, "II"), (0.5, "ZI"), (0.5, "IX"), (-0.5, "ZX")])
    cnot = np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    )
    assert np.allclose(s.to_dense(), cnot)


def test_to_dense_matches_kron_oracle():
    rng = np.random.default_rng(2)
    for _ in range(25):
        n = int(rng.integers(1, 5))
        pairs = [
            (complex(rng.uniform(-1, 1), rng.uniform(-1, 1)), random_pauli_letters(n, rng))
            for _ in range(4)
        ]
        s = PauliSum.from_terms(n, pairs)
        assert np.allclose(s.to_dense(), kron_dense_sum(pairs))


def test_dense_cap_enforced():
    with pytest.raises(ResourceError):
        PauliSum.identity(13).to_dense()
    with pytest.raises((ResourceError, ValueError)):
        pauli_decompose(np.eye(2**13))


def test_decompose_identity_and_z():
    one = pauli_decompose(np.eye(4))
    assert one == PauliSum.from_terms(2, [(1.0, "II")])
    z = pauli_decompose(np.diag([1.0, -1.0]))
    assert z == PauliSum.from_terms(1, [(1.0, "Z")])


def test_decompose_round_trip_random_3q():
    rng = np.random.default_rng(17)
    for _ in range(100):
        s = random_pauli_sum(3, int(rng.integers(1, 8)), rng)
        back = pauli_decompose(s.to_dense())
        assert back.n_qubits == s.n_qubits
        for (key, coeff) in s.items():
            assert abs(dict(back.items()).get(key, 0.0) - coeff) < 1e-12
        assert len(back) == len(s)


def test_decompose_unitary_norm_is_one():
    rng = np.random.default_rng(31)
    for n in (1, 2, 3, 4):
        dim = 1 << n
        raw = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        q, _ = np.linalg.qr(raw)
        s = pauli_decompose(q)
        assert abs(s.frobenius_sq() - 1.0) < 1e-9


def test_decompose_rejects_bad_shapes():
    with pytest.raises(ValueError):
        pauli_decompose(np.zeros((3, 3)))
    with pytest.raises(ValueError):
        pauli_decompose(np.zeros((2, 4)))


def test_matrix_element_agrees_with_dense():
    rng = np.random.default_rng(41)
    s = random_pauli_sum(4, 6, rng)
    dense = s.to_dense()
    for _ in range(30):
        r = int(rng.integers(0, 16))
        c = int(rng.integers(0, 16))
        assert abs(s.matrix_element(r, c) - dense[r, c]) < 1e-12


def test_from_letters_validation():
    with pytest.raises(ValueError):
        PauliString.from_letters("XQZ")
    with pytest.raises(ValueError):
        PauliString(2, 0, 0, 5)
    with pytest.raises(DimensionError):
        PauliSum.from_terms(3, [(1.0, "XX")])


def test_string_rendering():
    p = PauliString.from_letters("XIZX")
    assert str(p) == "(1+0i) XIZX"
    s = PauliSum.from_terms(4, [(0.5, "XIZX")])
    assert s.items_sorted() == [("XIZX", 0.5 + 0j)]


def test_json_round_trip_and_sorted_terms():
    s = PauliSum.from_terms(2, [(0.25, "ZI"), (-1.0, "IX"), (0.5j, "YY")])
    data = s.to_json_dict()
    assert [t["pauli"] for t in data["terms"]] == sorted(t["pauli"] for t in data["terms"])
    assert PauliSum.from_json_dict(data) == s


def test_hermiticity_detection():
    herm = PauliSum.from_terms(2, [(1.0, "XZ"), (-0.25, "YY")])
    assert herm.is_hermitian()
    assert not PauliSum.from_terms(2, [(1j, "XZ")]).is_hermitian()
    assert herm.dagger() == herm
