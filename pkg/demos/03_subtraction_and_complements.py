"""Sectional complements and the total BCK-style subtraction.

Inside a segment [O, B] every element A has the complement B - A: it is
orthogonal to A and restores B under the orthogonal sum. Gluing these
complements together along meets gives a total subtraction
B (-) A = B (I - P_{A meet B}) that obeys the weak-BCK laws.
"""

from starorder import (
    HermitianOperator,
    bck_subtract,
    logical_le,
    meet,
    op_equal,
    orthogonal,
    osum,
    segment_complement,
)

A = HermitianOperator.diagonal([1, 0, 0])
B = HermitianOperator.diagonal([1, 5, 7])

comp = segment_complement(A, B)
print("complement of diag(1,0,0) in [O, diag(1,5,7)]:", comp.entries.real.diagonal())
print("  orthogonal to A:", orthogonal(comp, A))
print("  A (+) complement == B:", op_equal(osum(A, comp), B))

D = bck_subtract(B, HermitianOperator.diagonal([1, 2, 0]))
print("\ndiag(1,5,7) minus diag(1,2,0) =", D.entries.real.diagonal())

# the three weak-BCK laws on a concrete triple
X = HermitianOperator.diagonal([1, 2, 0])
Y = HermitianOperator.diagonal([1, 2, 7])
Z = HermitianOperator.diagonal([4, 2, 1])
print("\nantitone: X <= Y so Z-Y <= Z-X:", logical_le(bck_subtract(Z, Y), bck_subtract(Z, X)))
print("x - (x - y) <= y:", logical_le(bck_subtract(X, bck_subtract(X, Y)), Y))
print("x - 0 == x:", op_equal(bck_subtract(X, HermitianOperator.zero(3)), X))

# subtraction recovers the sectional complement of the meet
V = meet(X, Y)
S = bck_subtract(X, Y)
print("\nx - y is the complement of (x meet y) inside [O, x]:",
      orthogonal(V, S) and op_equal(osum(V, S), X))
