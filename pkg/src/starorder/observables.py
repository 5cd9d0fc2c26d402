"""The logical order on self-adjoint operators and its derived operations.

``A`` precedes ``B`` in the logical order when B agrees with A on A's
range, equivalently when A = B P_A for the range projection P_A.  The
order is not a lattice order, but meets always exist, joins exist for
families with a common upper bound, and every initial segment [O, B] is an
orthomodular lattice carried by the projections commuting with B.

The meet of A and B is computed on the candidate subspace

    S0 = ran A  intersect  ran B  intersect  ker(A - B).

For a projector P with range inside ker(A - B) we have (A - B)P = O, so P
commutes with A exactly when it commutes with B; membership in the meet's
projector set therefore reduces to plain B-invariance of the range, and
the meet is B composed with the projector of the largest B-invariant
subspace of S0.  The skew meet drops the kernel factor from S0.  Both are
total; the join is only provided against an explicit upper-bound witness,
because deciding whether a common upper bound exists is a different
problem from computing the join once one is known.
"""

from __future__ import annotations

import numpy as np

from .errors import NotLess, NotOrthogonal, NotUpperBound
from .numerics import (
    DEFAULT_TOL,
    HermitianOperator,
    Projector,
    Tolerances,
    _arrays_close,
    _same_dim,
    largest_invariant_subspace,
    proj_join,
    proj_meet,
    range_projector,
    symmetrized,
)

__all__ = [
    "logical_le",
    "orthogonal",
    "osum",
    "meet",
    "join_bounded",
    "meet_bounded",
    "bck_subtract",
    "segment_complement",
    "overridden",
    "skew_meet",
]


def _zeroish(a: HermitianOperator, tol: Tolerances) -> bool:
    # membership in the zero class of the package equality
    return a.norm() <= tol.eq_abs_tol


def _eff_range_projector(a: HermitianOperator, tol: Tolerances) -> Projector:
    """Range projector as seen by the order: operators equal to O under the
    package equality get the zero projector, so that order predicates are
    congruent with `op_equal`. (The bare relative rank cutoff would keep
    rounding noise as range for such operators.)"""
    if _zeroish(a, tol):
        return Projector(np.zeros((a.dim, a.dim)))
    return range_projector(a, tol)


def logical_le(a: HermitianOperator, b: HermitianOperator, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Whether A precedes B, i.e. A = B P_A."""
    _same_dim(a, b)
    if _zeroish(a, tol):
        return True
    pa = range_projector(a, tol)
    return _arrays_close(a.entries, b.entries @ pa.entries, tol)


def orthogonal(a: HermitianOperator, b: HermitianOperator, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Whether the composition AB vanishes (a symmetric relation on self-adjoint pairs)."""
    _same_dim(a, b)
    return float(np.linalg.norm(a.entries @ b.entries)) <= tol.eq_abs_tol * max(
        1.0, a.norm() * b.norm()
    )


def osum(a: HermitianOperator, b: HermitianOperator, tol: Tolerances = DEFAULT_TOL) -> HermitianOperator:
    """Orthogonal sum A + B, defined only for orthogonal pairs.

    When defined, the sum is the join of the pair, so both summands precede it.
    """
    if not orthogonal(a, b, tol):
        raise NotOrthogonal("osum is undefined: the operators are not orthogonal")
    return a + b


def meet(a: HermitianOperator, b: HermitianOperator, tol: Tolerances = DEFAULT_TOL) -> HermitianOperator:
    """Greatest lower bound of A and B. Total, unlike the join."""
    _same_dim(a, b)
    pa = _eff_range_projector(a, tol)
    pb = _eff_range_projector(b, tol)
    kernel = _eff_range_projector(a - b, tol).complement()
    s0 = proj_meet(proj_meet(pa, pb, tol), kernel, tol).to_subspace()
    p_star = largest_invariant_subspace(b, s0, tol).projector()
    return symmetrized(b.entries @ p_star.entries)


def _checked_family(family, c, tol):
    members = list(family)
    if not members:
        raise ValueError("family must be nonempty")
    projs = []
    for i, a in enumerate(members):
        if not logical_le(a, c, tol):
            raise NotUpperBound(i)
        projs.append(_eff_range_projector(a, tol))
    return projs


def join_bounded(family, c: HermitianOperator, tol: Tolerances = DEFAULT_TOL) -> HermitianOperator:
    """Least upper bound of a nonempty family, given an upper bound C of it.

    Equals C composed with the projector join of the members' range
    projections; the range projection of the result is that join.
    """
    projs = _checked_family(family, c, tol)
    p = projs[0]
    for q in projs[1:]:
        p = proj_join(p, q, tol)
    return symmetrized(c.entries @ p.entries)


def meet_bounded(family, c: HermitianOperator, tol: Tolerances = DEFAULT_TOL) -> HermitianOperator:
    """Greatest lower bound of a nonempty family below C; agrees with `meet`
    on two-element families whenever a common upper bound exists."""
    projs = _checked_family(family, c, tol)
    p = projs[0]
    for q in projs[1:]:
        p = proj_meet(p, q, tol)
    return symmetrized(c.entries @ p.entries)


def bck_subtract(b: HermitianOperator, a: HermitianOperator, tol: Tolerances = DEFAULT_TOL) -> HermitianOperator:
    """Total subtraction B(I - P_{A meet B}), the weak-BCK difference of B by A."""
    _same_dim(a, b)
    m = meet(a, b, tol)
    pm = _eff_range_projector(m, tol)
    return symmetrized(b.entries @ (np.eye(b.dim) - pm.entries))


def segment_complement(a: HermitianOperator, b: HermitianOperator, tol: Tolerances = DEFAULT_TOL) -> HermitianOperator:
    """B - A, the complement of A in the segment [O, B]; requires A below B.

    The result precedes B, is orthogonal to A, and restores B under osum.
    """
    if not logical_le(a, b, tol):
        raise NotLess("segment complement needs the first operand below the second")
    return b - a


def overridden(a: HermitianOperator, b: HermitianOperator, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Whether A's range is contained in B's range (P_A <= P_B)."""
    _same_dim(a, b)
    if _zeroish(a, tol):
        return True
    if _zeroish(b, tol):
        return False
    pa = range_projector(a, tol)
    pb = range_projector(b, tol)
    return _arrays_close(pa.entries @ pb.entries, pa.entries, tol)


def skew_meet(a: HermitianOperator, b: HermitianOperator, tol: Tolerances = DEFAULT_TOL) -> HermitianOperator:
    """The right-handed skew meet: the largest operator that precedes B and is
    overridden by A. Total and associative but not commutative."""
    _same_dim(a, b)
    pa = _eff_range_projector(a, tol)
    pb = _eff_range_projector(b, tol)
    s0 = proj_meet(pa, pb, tol).to_subspace()
    p_star = largest_invariant_subspace(b, s0, tol).projector()
    return symmetrized(b.entries @ p_star.entries)


def _try_join(a: HermitianOperator, b: HermitianOperator, tol: Tolerances = DEFAULT_TOL):
    """Join of A and B, or None when they have no common upper bound.

    Any common upper bound agrees with A on ran A and with B on ran B, and
    the join is the unique such operator supported on ran A + ran B. We
    solve for that candidate and verify it; the verification step decides
    definedness, so no existence oracle is needed. Harness plumbing: the
    public API for joins is `join_bounded`, which takes the witness.
    """
    _same_dim(a, b)
    ua = _eff_range_projector(a, tol).to_subspace().basis
    ub = _eff_range_projector(b, tol).to_subspace().basis
    x = np.hstack([ua, ub])
    if x.shape[1] == 0:
        return HermitianOperator.zero(a.dim)
    y = np.hstack([a.entries @ ua, b.entries @ ub])
    d = y @ np.linalg.pinv(x, rcond=tol.rank_rel_tol)
    try:
        cand = HermitianOperator((d + d.conj().T) / 2.0)
    except ValueError:
        return None
    if logical_le(a, cand, tol) and logical_le(b, cand, tol):
        return cand
    return None
