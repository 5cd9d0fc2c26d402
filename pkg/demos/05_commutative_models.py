"""The two commutative models and their embeddings.

Partial functions under graph inclusion and random variables on a finite
sample space carry the same order structure as the operators: the same
meets, bounded joins, orthogonal sums, subtraction, and skew meets, with
set-level formulas instead of spectral ones. Random variables embed into
both worlds, and the embeddings commute with every shared operation,
which makes the models cheap exhaustive oracles for the operator claims.
"""

from starorder import (
    PartialFunction,
    RandomVariable,
    meet,
    op_equal,
    pf_skew_intersect,
    pf_union,
    rv_join_bounded,
    rv_meet,
    rv_skew_meet,
    rv_to_diagonal,
    rv_to_partial_function,
    skew_meet,
)
from starorder.models import rv_bck, rv_le

f = RandomVariable((1, 2, 0))
g = RandomVariable((1, 5, 7))

print("f =", f, " g =", g)
print("f <= g:", rv_le(f, g))
print("f meet g =", rv_meet(f, g), "(keep points where both agree and live)")
print("g minus f =", rv_bck(g, f))
print("f skew g =", rv_skew_meet(f, g), "(g's values on f's support)")

h = RandomVariable((1, 2, 7))
print("join of f and (0,0,7) below h:", rv_join_bounded(f, RandomVariable((0, 0, 7)), h))

# partial functions: union is the join and exists iff the graphs agree
phi = PartialFunction.from_dict((1, 2, 3), {1: "a"})
psi = PartialFunction.from_dict((1, 2, 3), {2: "b"})
print("\nphi u psi =", pf_union(phi, psi))
chi = PartialFunction.from_dict((1, 2, 3), {1: "b", 3: "c"})
print("skew keeps psi's side:", pf_skew_intersect(phi, chi))

# the embeddings transport every computation
fd, gd = rv_to_diagonal(f), rv_to_diagonal(g)
print("\ndiag embedding: meet commutes:",
      op_equal(rv_to_diagonal(rv_meet(f, g)), meet(fd, gd)))
print("diag embedding: skew commutes:",
      op_equal(rv_to_diagonal(rv_skew_meet(f, g)), skew_meet(fd, gd)))
print("pf embedding of f:", rv_to_partial_function(f))
