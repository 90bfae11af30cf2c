"""Reduction pipeline against the brute-force sector oracle."""

import numpy as np
import pytest

from fermiperm import (
    BasisPermutation,
    DimensionError,
    FermionOperator,
    FermionTerm,
    InvalidEncodingError,
    NumberConservationError,
    PauliSum,
    SectorSpec,
    encode_and_reduce,
    encode_fermion_operator,
    jw_majoranas,
    minimal_permutation_index_embed,
    project_fixed_qubit,
    sector_oracle,
    unrank_weightk,
    verify_reduction,
)
from helpers import random_pauli_sum, three_cnot_permutation


# --- projection ------------------------------------------------------------


def test_project_z_on_own_qubit():
    s = PauliSum.from_terms(2, [(1.0, "ZI")])
    out = project_fixed_qubit(s, 1, 0)
    assert out == PauliSum.from_terms(1, [(1.0, "I")])
    out = project_fixed_qubit(s, 1, 1)
    assert out == PauliSum.from_terms(1, [(-1.0, "I")])


def test_project_x_vanishes():
    s = PauliSum.from_terms(2, [(1.0, "XI")])
    assert len(project_fixed_qubit(s, 1, 0)) == 0


def test_project_out_of_range():
    s = PauliSum.from_terms(2, [(1.0, "XI")])
    with pytest.raises(DimensionError):
        project_fixed_qubit(s, 3, 0)


def test_project_matches_dense_block_extraction():
    """dense(project(s, q, v)) equals the <v| . |v> block of dense(s)."""
    rng = np.random.default_rng(3)
    for _ in range(25):
        n = int(rng.integers(2, 8))
        s = random_pauli_sum(n, 6, rng)
        q = int(rng.integers(1, n + 1))
        v = int(rng.integers(0, 2))
        proj = project_fixed_qubit(s, q, v)
        dense = s.to_dense()
        keep = [
            idx
            for idx in range(1 << n)
            if ((idx >> (n - q)) & 1) == v
        ]
        block = dense[np.ix_(keep, keep)]
        assert np.max(np.abs(proj.to_dense() - block)) < 1e-12


def test_project_number_conserving_term_keeps_structure():
    """Projecting the encoded total number on the redundant qubit at 0
    leaves the same diagonal operator on three qubits."""
    p = three_cnot_permutation()
    spec = SectorSpec(4, 2)
    h = FermionOperator.number_operator(4)
    rh = encode_and_reduce(h, p, spec)
    dense = rh.pauli_sum.to_dense()
    assert np.max(np.abs(dense - np.diag(np.diag(dense)))) < 1e-12


# --- sector oracle ---------------------------------------------------------


def test_oracle_number_operator_is_k_identity():
    for n, k in [(3, 1), (4, 2), (5, 3)]:
        spec = SectorSpec(n, k)
        oracle = sector_oracle(FermionOperator.number_operator(n), spec)
        assert np.allclose(oracle, k * np.eye(spec.dimension))


def test_oracle_two_mode_hopping():
    spec = SectorSpec(2, 1)
    h = FermionOperator.from_terms(
        [
            FermionTerm.make(1.0, [(1, True), (2, False)]),
            FermionTerm.make(1.0, [(2, True), (1, False)]),
        ]
    )
    oracle = sector_oracle(h, spec)
    assert np.allclose(oracle, np.array([[0, 1], [1, 0]]))


def test_oracle_matches_jw_dense_restriction():
    """Dual-oracle check: eigenvalues agree with the dense encoded
    Hamiltonian restricted to the weight-K block."""
    rng = np.random.default_rng(11)
    for n, k in [(3, 1), (4, 2), (5, 2)]:
        spec = SectorSpec(n, k)
        raw = rng.uniform(-1, 1, (n, n)) + 1j * rng.uniform(-1, 1, (n, n))
        h = FermionOperator.one_body((raw + raw.conj().T) / 2)
        oracle = sector_oracle(h, spec)
        dense = encode_fermion_operator(h, jw_majoranas(n)).to_dense()
        states = [unrank_weightk(r, n, k) for r in range(spec.dimension)]
        block = dense[np.ix_(states, states)]
        assert np.max(np.abs(block - oracle)) < 1e-12
        ev_a = np.sort(np.linalg.eigvalsh(oracle))
        ev_b = np.sort(np.linalg.eigvalsh(block))
        assert np.max(np.abs(ev_a - ev_b)) < 1e-9


def test_oracle_fermionic_sign():
    # a+_1 a_3 on |011> must come with the sign from crossing mode 2
    spec = SectorSpec(3, 2)
    h = FermionOperator.from_terms([FermionTerm.make(1.0, [(1, True), (3, False)])])
    oracle = sector_oracle(h, spec)
    col = 0  # |011>
    row = 2  # |110>
    assert oracle[row, col] == -1.0  # one occupied mode (2) sits left of mode 3


# --- pipeline --------------------------------------------------------------


def test_reduce_number_operator_two_fermion_circuit():
    p = three_cnot_permutation()
    spec = SectorSpec(4, 2)
    rh = encode_and_reduce(FermionOperator.number_operator(4), p, spec)
    assert rh.pauli_sum.n_qubits == 3
    assert rh.report.fixed == ((4, 0),)
    dense = rh.pauli_sum.to_dense()
    for r in range(spec.dimension):
        idx = rh.state_index(r)
        assert abs(dense[idx, idx] - 2.0) < 1e-12
    check = verify_reduction(rh, sector_oracle(FermionOperator.number_operator(4), spec))
    assert check.passed and check.max_deviation < 1e-12


def test_reduce_number_operator_index_embed():
    for n, k in [(4, 1), (4, 2), (5, 2)]:
        spec = SectorSpec(n, k)
        p = minimal_permutation_index_embed(spec)
        rh = encode_and_reduce(FermionOperator.number_operator(n), p, spec)
        assert rh.pauli_sum.n_qubits == spec.q_min
        oracle = sector_oracle(FermionOperator.number_operator(n), spec)
        assert verify_reduction(rh, oracle).passed


def test_reduce_random_hermitian_one_body():
    rng = np.random.default_rng(29)
    for n, k in [(4, 1), (4, 2), (5, 2), (6, 3)]:
        spec = SectorSpec(n, k)
        p = minimal_permutation_index_embed(spec)
        for _ in range(5):
            raw = rng.uniform(-1, 1, (n, n)) + 1j * rng.uniform(-1, 1, (n, n))
            h = FermionOperator.one_body((raw + raw.conj().T) / 2)
            rh = encode_and_reduce(h, p, spec)
            assert rh.pauli_sum.n_qubits == spec.q_min
            assert rh.pauli_sum.is_hermitian(tol=1e-9)
            check = verify_reduction(rh, sector_oracle(h, spec))
            assert check.passed
            assert check.max_deviation < 1e-9


def test_reduce_two_body_term():
    spec = SectorSpec(4, 2)
    p = minimal_permutation_index_embed(spec)
    h = FermionOperator.from_terms(
        [
            FermionTerm.make(0.5, [(1, True), (2, True), (2, False), (1, False)]),
            FermionTerm.make(1.0, [(1, True), (1, False)]),
        ]
    )
    rh = encode_and_reduce(h, p, spec)
    assert verify_reduction(rh, sector_oracle(h, spec)).passed


def test_reduce_rejects_nonconserving():
    spec = SectorSpec(3, 1)
    p = minimal_permutation_index_embed(spec)
    bad = FermionOperator.from_terms([FermionTerm.make(1.0, [(1, True)])])
    with pytest.raises(NumberConservationError) as err:
        encode_and_reduce(bad, p, spec)
    assert err.value.term is not None


def test_reduce_rejects_trivial_sector():
    spec = SectorSpec(3, 3)
    p = minimal_permutation_index_embed(spec)
    with pytest.raises(InvalidEncodingError):
        encode_and_reduce(FermionOperator.number_operator(3), p, spec)


def test_reduce_nonclifford_permutation():
    """The single-Toffoli one-fermion permutation reduces by two qubits."""
    from fermiperm import permutation_from_circuit, single_toffoli_one_fermion_circuit

    spec = SectorSpec(4, 1)
    p = permutation_from_circuit(single_toffoli_one_fermion_circuit())
    rng = np.random.default_rng(31)
    raw = rng.uniform(-1, 1, (4, 4))
    h = FermionOperator.one_body((raw + raw.T) / 2)
    rh = encode_and_reduce(h, p, spec)
    assert rh.pauli_sum.n_qubits == 2
    assert verify_reduction(rh, sector_oracle(h, spec)).passed


def test_verify_detects_swapped_sector_images():
    """Negative control: operating with two sector images exchanged while
    the bookkeeping still claims the original map must be caught."""
    from fermiperm import ReducedHamiltonian

    spec = SectorSpec(4, 2)
    p = minimal_permutation_index_embed(spec)
    rng = np.random.default_rng(17)
    raw = rng.uniform(-1, 1, (4, 4))
    h = FermionOperator.one_body((raw + raw.T) / 2)
    rh = encode_and_reduce(h, p, spec)
    swapped = list(rh.state_map)
    swapped[0], swapped[1] = swapped[1], swapped[0]
    corrupted = ReducedHamiltonian(rh.pauli_sum, rh.report, rh.spec, tuple(swapped))
    check = verify_reduction(corrupted, sector_oracle(h, spec))
    assert not check.passed
    assert check.max_deviation > 1e-6
    # the uncorrupted bookkeeping passes
    assert verify_reduction(rh, sector_oracle(h, spec)).passed


def test_spectrum_containment():
    """Sector spectrum sits inside the reduced operator's spectrum."""
    rng = np.random.default_rng(23)
    spec = SectorSpec(5, 2)
    p = minimal_permutation_index_embed(spec)
    raw = rng.uniform(-1, 1, (5, 5))
    h = FermionOperator.one_body((raw + raw.T) / 2)
    rh = encode_and_reduce(h, p, spec)
    oracle = sector_oracle(h, spec)
    check = verify_reduction(rh, oracle)
    assert check.passed
    assert check.spectrum_deviation < 1e-8


def test_identity_permutation_reduction_has_no_fixed_qubits():
    spec = SectorSpec(4, 2)
    p = BasisPermutation.identity(4)
    h = FermionOperator.number_operator(4)
    rh = encode_and_reduce(h, p, spec)
    assert rh.report.fixed == ()
    assert rh.pauli_sum.n_qubits == 4
    assert verify_reduction(rh, sector_oracle(h, spec)).passed
