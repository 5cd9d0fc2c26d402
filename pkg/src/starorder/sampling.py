"""Seeded random generation of operators, projectors, and harness tuples.

The operator model cannot be enumerated, so the axiom harness samples it.
Unrelated random Hermitian pairs are almost never comparable or orthogonal,
which would make every law vacuous; tuples are therefore drawn from a
recipe that manufactures the relevant relations by construction:

* draw a base operator C, usually with a degenerate integer spectrum so
  that its commutant is rich;
* emit members A_i = C P_i for random projectors P_i commuting with C
  (sums of spectral projectors, or rotated sub-projectors inside
  eigenspaces, which need not commute with each other);
* occasionally emit unrelated operators so that false premises are
  exercised too.

Everything is driven by a caller-supplied numpy Generator, so runs are
reproducible bit for bit.
"""

from __future__ import annotations

import numpy as np

from .numerics import (
    DEFAULT_TOL,
    HermitianOperator,
    Projector,
    Tolerances,
    eigh,
    op_equal,
    symmetrized,
)
from . import observables as obs
from .axioms import StructureHandle
from .errors import NotLess

__all__ = [
    "random_unitary",
    "random_hermitian",
    "random_spectrum_hermitian",
    "random_commuting_projector",
    "bounded_family",
    "spectral_segment",
    "matrix_structure",
    "describe_operator",
]

_EIGENVALUE_POOL = (-2.0, -1.0, 0.0, 1.0, 2.0, 3.0)


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar-ish random unitary via QR of a complex Gaussian, phase-fixed."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_hermitian(rng: np.random.Generator, dim: int, scale: float = 1.0) -> HermitianOperator:
    """Gaussian entries, symmetrized."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return HermitianOperator(scale * (z + z.conj().T) / 2.0)


def _assemble(w, v, indices) -> HermitianOperator:
    # sum of lam_i v_i v_i* over the selected indices; zero eigenvalues
    # contribute exactly nothing, so an all-zero pick is the exact O
    n = v.shape[0]
    a = np.zeros((n, n), dtype=np.complex128)
    for i in indices:
        if w[i] != 0.0:
            col = v[:, i : i + 1]
            a += w[i] * (col @ col.conj().T)
    return symmetrized(a)


def random_spectrum_hermitian(
    rng: np.random.Generator, dim: int, pool=_EIGENVALUE_POOL
) -> HermitianOperator:
    """Random basis, eigenvalues drawn (with repeats) from a small pool, so
    degeneracies and kernels actually occur."""
    v = random_unitary(rng, dim)
    w = rng.choice(pool, size=dim)
    return _assemble(w, v, range(dim))


def random_commuting_projector(
    rng: np.random.Generator, c: HermitianOperator, tol: Tolerances = DEFAULT_TOL, rotate: bool = True
) -> Projector:
    """A random projector commuting with c.

    Either a sum of a random subset of eigenprojectors, or (when rotate is
    chosen) a random sub-projector inside each spectral eigenspace; the
    latter generally do not commute with one another, only with c."""
    w, v = eigh(c)
    n = c.dim
    if not rotate or rng.random() < 0.5:
        mask = rng.random(n) < 0.5
        u = v[:, mask]
        return Projector(u @ u.conj().T)
    # group nearly equal eigenvalues into spectral clusters
    order = np.argsort(w)
    blocks = []
    start = 0
    for i in range(1, n + 1):
        if i == n or abs(w[order[i]] - w[order[start]]) > 1e-8 * max(1.0, abs(w[order[start]])):
            blocks.append(order[start:i])
            start = i
    cols = []
    for block in blocks:
        m = len(block)
        r = int(rng.integers(0, m + 1))
        if r == 0:
            continue
        basis = v[:, block]
        mix = random_unitary(rng, m)[:, :r]
        cols.append(basis @ mix)
    if not cols:
        return Projector(np.zeros((n, n)))
    u = np.hstack(cols)
    return Projector(u @ u.conj().T)


def _random_member(rng, w, v) -> HermitianOperator:
    """One operator C P for a random projector P commuting with C = V diag(w) V*.

    Half the time P selects a random subset of the eigenbasis (commutes with
    every other such member); otherwise P is rotated inside the eigenspaces,
    which keeps C P self-adjoint but lets members fail to commute with each
    other. Built spectrally so that kernel picks contribute exact zeros."""
    n = len(w)
    if rng.random() < 0.5:
        return _assemble(w, v, np.flatnonzero(rng.random(n) < 0.5))
    a = np.zeros((n, n), dtype=np.complex128)
    for lam in np.unique(w):
        idx = np.flatnonzero(w == lam)
        r = int(rng.integers(0, len(idx) + 1))
        if r == 0 or lam == 0.0:
            continue
        u = v[:, idx] @ random_unitary(rng, len(idx))[:, :r]
        a += lam * (u @ u.conj().T)
    return symmetrized(a)


def bounded_family(
    rng: np.random.Generator, dim: int, size: int, tol: Tolerances = DEFAULT_TOL, disjoint: bool = False
):
    """(C, members): members are C P_i with P_i commuting with C, so C bounds
    them all. With disjoint=True the P_i are sums over disjoint subsets of a
    common eigenbasis, making the members pairwise orthogonal."""
    v = random_unitary(rng, dim)
    w = rng.choice(_EIGENVALUE_POOL, size=dim)
    c = _assemble(w, v, range(dim))
    members = []
    if disjoint:
        owner = rng.integers(0, size + 1, size=dim)  # slot `size` means unused
        for k in range(size):
            members.append(_assemble(w, v, np.flatnonzero(owner == k)))
    else:
        for _ in range(size):
            members.append(_random_member(rng, w, v))
    return c, members


def spectral_segment(b: HermitianOperator, tol: Tolerances = DEFAULT_TOL):
    """The finite family {B P : P a sum of spectral projectors of B}, which
    carries the initial segment [O, B]; 2^dim members before deduplication.

    Assembled spectrally with the numerical-rank cutoff, so kernel
    directions contribute exact zeros rather than rounding noise."""
    w, v = eigh(b)
    top = float(np.max(np.abs(w))) if w.size else 0.0
    w = np.where(np.abs(w) > tol.rank_rel_tol * top, w, 0.0)
    out = []
    for mask in range(2 ** b.dim):
        candidate = _assemble(w, v, [i for i in range(b.dim) if mask >> i & 1])
        if not any(op_equal(candidate, seen, tol) for seen in out):
            out.append(candidate)
    return out


def describe_operator(a: HermitianOperator, digits: int = 8) -> str:
    """Canonical, deterministic rendering used in axiom reports."""
    m = np.round(a.entries, digits) + 0.0  # normalize -0.0
    rows = []
    for row in m:
        cells = []
        for x in row:
            if x.imag == 0.0:
                cells.append(f"{x.real:.6g}")
            else:
                cells.append(f"{x.real:.6g}{x.imag:+.6g}j")
        rows.append("[" + ", ".join(cells) + "]")
    return f"H{a.dim}[" + ", ".join(rows) + "]"


def matrix_structure(dim: int = 4, tol: Tolerances = DEFAULT_TOL) -> StructureHandle:
    """The operator model wired into the axiom harness (sampled carrier).

    The join hook is the verified constructive join (None when the pair has
    no common upper bound); the segment hook enumerates spectral families,
    and the sectional-complement constructor is the segment complement."""

    def sample(rng: np.random.Generator, arity: int):
        # Tuples always share a constructed upper bound. Unrelated tuples
        # would exercise territory the source theory leaves open: the
        # overriding projection law can fail between unrelated operators,
        # and with it skew-meet associativity (see the tests for a concrete
        # two-dimensional counterexample). Bounded tuples are exactly what
        # the theorems govern; rotated sub-projectors make members
        # non-commuting with each other, and the Gaussian branch exercises
        # non-integer spectra through the tolerance machinery.
        roll = rng.random()
        if roll < 0.4:
            _, members = bounded_family(rng, dim, arity, tol)
        elif roll < 0.75:
            _, members = bounded_family(rng, dim, arity, tol, disjoint=True)
        else:
            c = random_hermitian(rng, dim)
            w, v = eigh(c)
            members = [
                _assemble(w, v, np.flatnonzero(rng.random(dim) < 0.5)) for _ in range(arity)
            ]
        return tuple(members)

    def complement_in(x, p):
        try:
            return obs.segment_complement(x, p, tol)
        except NotLess:
            return None

    return StructureHandle(
        name=f"matrix(dim={dim})",
        zero=HermitianOperator.zero(dim),
        eq=lambda a, b: op_equal(a, b, tol),
        le=lambda a, b: obs.logical_le(a, b, tol),
        join=lambda a, b: obs._try_join(a, b, tol),
        sample=sample,
        perp=lambda a, b: obs.orthogonal(a, b, tol),
        meet=lambda a, b: obs.meet(a, b, tol),
        skew=lambda a, b: obs.skew_meet(a, b, tol),
        subtract=lambda a, b: obs.bck_subtract(a, b, tol),
        osum=lambda a, b: (a + b) if obs.orthogonal(a, b, tol) else None,
        overridden=lambda a, b: obs.overridden(a, b, tol),
        complement_in=complement_in,
        segment=lambda p: spectral_segment(p, tol),
        describe=describe_operator,
        tolerance=tol.eq_abs_tol,
    )
