#!/usr/bin/env python3
"""Building a minimal-qubit basis for a fixed particle number.

With K fermions in N modes only C(N,K) occupancy strings occur, so
ceil(log2 C(N,K)) qubits can label them.  A basis permutation that writes
each sector state's lexicographic rank into the leading qubits makes the
trailing qubits constant, and they can then be dropped.  Clifford
permutations can only ever drop one qubit; the exhaustive scan at the end
demonstrates that limit.
"""

from fermiperm import (
    SectorSpec,
    appendix_verify,
    classify_affine,
    count_valid_permutations,
    minimal_permutation_index_embed,
    rank_weightk,
    redundant_qubits,
    unrank_weightk,
)

# --- lexicographic ranking ----------------------------------------------------

spec = SectorSpec(4, 2)
print(f"N = {spec.n_modes}, K = {spec.n_fermions}: "
      f"{spec.dimension} states, q_min = {spec.q_min}")
for r in range(spec.dimension):
    bits = unrank_weightk(r, 4, 2)
    assert rank_weightk(bits, 4, 2) == r
    print(f"  |{bits:04b}>  ->  rank {r}")

# --- the index-embedding permutation -------------------------------------------

p = minimal_permutation_index_embed(spec)
print("\nindex-embed permutation on the sector:")
for r in range(spec.dimension):
    src = unrank_weightk(r, 4, 2)
    print(f"  |{src:04b}> -> |{p.apply(src):04b}>   (rank {r} in the first 3 qubits)")

report = redundant_qubits(p, spec)
print("fixed qubits:", report.fixed, "- surviving:", report.surviving)
print("non-sector completion freedom:", count_valid_permutations(spec), "permutations")

# --- one-fermion sector needs a non-Clifford permutation ------------------------

one = SectorSpec(4, 1)
p1 = minimal_permutation_index_embed(one)
report1 = redundant_qubits(p1, one)
print(f"\nN=4, K=1 embeds into q_min = {one.q_min} qubits,"
      f" fixed = {report1.fixed}")
print("is that permutation Clifford (affine)?", classify_affine(p1) is not None)

# --- why: exhaustive check over all invertible GF(2) matrices -------------------

print("\nscanning every invertible matrix for constant output digits:")
for n in (2, 3, 4):
    rep = appendix_verify(n)
    print(f"  n = {n}: {rep.matrix_count} invertible matrices, "
          f"max constant digits = {rep.max_constant_digits}")
print("so linear (Clifford) relabelings never free more than one qubit,")
print("while the one-fermion sector above needs two - hence the Toffoli.")
