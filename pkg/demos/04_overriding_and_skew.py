"""Overriding and the non-commutative skew meet.

A is overridden by B when everything orthogonal to B is orthogonal to A;
for operators that is exactly range containment, P_A <= P_B. The skew
meet x /\\. y is the largest operator overridden by x and below y. It is
total and idempotent, commutes on pairs with a common upper bound, and is
associative on such families, but two genuine boundary phenomena appear
for unrelated operators in finite dimension, both pinned below.
"""

import numpy as np

from starorder import (
    HermitianOperator,
    meet,
    op_equal,
    overridden,
    skew_meet,
)

A = HermitianOperator.diagonal([0, 3, 0])
B = HermitianOperator.diagonal([1, 5, 0])
print("A overridden by B:", overridden(A, B))
S = skew_meet(A, B)
print("A skew-meet B =", S.entries.real.diagonal(), "(takes B's values on A's support)")
print("B skew-meet A =", skew_meet(B, A).entries.real.diagonal(), "(not commutative)")

# on a bounded pair the skew meet collapses to the ordinary meet
C = HermitianOperator.diagonal([1, 3, 2])
P = HermitianOperator.diagonal([1, 3, 0])
Q = HermitianOperator.diagonal([0, 3, 2])
print("\nbounded pair: skew == meet both ways:",
      op_equal(skew_meet(P, Q), meet(P, Q)) and op_equal(skew_meet(Q, P), meet(P, Q)))

# boundary 1: no projection witness for overriding. A's range sits inside
# B's, but no operator below B has exactly A's range: the only candidate
# B P_A fails to be self-adjoint when B does not commute with P_A.
A1 = HermitianOperator.diagonal([1, 0])
B1 = HermitianOperator([[1, 1], [1, 2]])
cand = skew_meet(A1, B1)
print("\noverriding holds:", overridden(A1, B1))
print("but nothing below B reaches A's range:", not overridden(A1, cand))

# boundary 2: without that witness, associativity can break on unrelated
# triples (it provably holds on families with a common upper bound)
x = HermitianOperator([[0.5, 0.5], [0.5, 0.5]])
y = HermitianOperator.diagonal([1, 2])
z = HermitianOperator([[0, 1], [1, 0]])
lhs = skew_meet(skew_meet(x, y), z)
rhs = skew_meet(x, skew_meet(y, z))
print("\n(x . y) . z =", np.round(lhs.entries.real, 10).tolist())
print("x . (y . z) =", np.round(rhs.entries.real, 10).tolist())
print("associative on this unrelated triple:", op_equal(lhs, rhs))
