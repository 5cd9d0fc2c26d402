"""The logical order on self-adjoint operators, from scratch.

A precedes B when B acts like A on A's whole range: A = B P_A. This is a
genuine partial order on Hermitian matrices, much finer than the usual
positive-semidefinite order, and the zero operator is its least element.
"""

import numpy as np

from starorder import (
    HermitianOperator,
    logical_le,
    orthogonal,
    osum,
    range_projector,
)

A = HermitianOperator.diagonal([1, 2, 0])
B = HermitianOperator.diagonal([1, 2, 7])
C = HermitianOperator([[2, 1, 0], [1, 2, 0], [0, 0, 1]])

print("A =", A.entries.real.diagonal(), "(diagonal)")
print("B =", B.entries.real.diagonal(), "(diagonal)")

# A's range is spanned by e1, e2; B agrees with A there, so A precedes B.
print("\nP_A =\n", range_projector(A).entries.real)
print("A <= B:", logical_le(A, B))
print("B <= A:", logical_le(B, A))

# C doesn't restrict to A on ran A, even though C - A is positive
# semidefinite; the logical order is not the PSD order.
print("A <= C:", logical_le(A, C), " (PSD order would say yes)")

# Orthogonality means the composition vanishes; orthogonal pieces can be
# summed, and the sum is their least upper bound.
D = HermitianOperator.diagonal([0, 0, -3])
print("\nA perp D:", orthogonal(A, D))
S = osum(A, D)
print("A (+) D =", S.entries.real.diagonal())
print("A <= A(+)D and D <= A(+)D:", logical_le(A, S), logical_le(D, S))

# scaling does not change ranges, so range projectors are scale invariant
print("\nP_A == P_(-2A):", np.allclose(range_projector(A).entries, range_projector(A.scaled(-2)).entries))
