"""Dense Hermitian linear algebra underpinning the operator order.

Everything here is tolerance-driven: numerical ranks are decided relative
to the largest eigenvalue magnitude, and operator equality is a Frobenius
norm test with a mixed absolute/relative threshold. Both knobs live in
:class:`Tolerances` so that callers can tighten or relax them coherently.
The equality implemented by :func:`op_equal` is *the* equality of the whole
package; no other module compares raw matrix entries.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure, DimMismatch, ParseError

__all__ = [
    "Tolerances",
    "DEFAULT_TOL",
    "HermitianOperator",
    "Projector",
    "Subspace",
    "eigh",
    "range_projector",
    "kernel_projector",
    "proj_meet",
    "proj_join",
    "op_equal",
    "commutes",
    "largest_invariant_subspace",
    "rank_sensitive",
    "matrix_to_json",
    "matrix_from_json",
]

# Construction-time invariants, fixed by the data-type contracts (these are
# not user-tunable; Tolerances governs rank and equality decisions only).
_HERMITIZE_REL_DEFECT = 1e-10
_PROJ_IDEMPOTENT_TOL = 1e-9
_PROJ_EIGENVALUE_TOL = 1e-9
_BASIS_ORTHO_TOL = 1e-10


@dataclass(frozen=True)
class Tolerances:
    """Numerical policy shared by every operation in the package.

    rank_rel_tol
        Eigenvalue/singular-value cutoff, relative to the largest magnitude.
    eq_abs_tol
        Operator-equality threshold (Frobenius norm, mixed abs/rel).
    max_dim
        Guard against accidentally huge inputs.
    """

    rank_rel_tol: float = 1e-9
    eq_abs_tol: float = 1e-8
    max_dim: int = 64

    def __post_init__(self):
        if self.rank_rel_tol < 0 or self.eq_abs_tol < 0:
            raise ValueError("tolerances must be nonnegative")
        if self.max_dim < 1:
            raise ValueError("max_dim must be a positive integer")


DEFAULT_TOL = Tolerances()


class HermitianOperator:
    """An n-by-n complex self-adjoint matrix.

    The constructor symmetrizes its input, M <- (M + M*)/2, and records the
    symmetrization defect; inputs further than 1e-10 * ||M|| from
    self-adjoint are rejected. Instances are immutable and safe to share.
    """

    __slots__ = ("entries", "defect")

    def __init__(self, entries):
        m = np.array(entries, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
            raise ValueError(f"expected a nonempty square matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValueError("matrix entries must be finite")
        sym = (m + m.conj().T) / 2.0
        defect = float(np.linalg.norm(m - sym))
        if defect > _HERMITIZE_REL_DEFECT * float(np.linalg.norm(m)):
            raise ValueError(
                f"matrix is not self-adjoint: symmetrization defect {defect:.3e} "
                f"exceeds {_HERMITIZE_REL_DEFECT:g} * ||M||"
            )
        sym.setflags(write=False)
        object.__setattr__(self, "entries", sym)
        object.__setattr__(self, "defect", defect)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def norm(self) -> float:
        """Frobenius norm."""
        return float(np.linalg.norm(self.entries))

    @classmethod
    def zero(cls, dim: int):
        return cls(np.zeros((dim, dim)))

    @classmethod
    def identity(cls, dim: int):
        return cls(np.eye(dim))

    @classmethod
    def diagonal(cls, values):
        return cls(np.diag(np.asarray(values, dtype=float)))

    def __add__(self, other):
        _same_dim(self, other)
        return HermitianOperator(self.entries + other.entries)

    def __sub__(self, other):
        _same_dim(self, other)
        return HermitianOperator(self.entries - other.entries)

    def __neg__(self):
        return HermitianOperator(-self.entries)

    def scaled(self, c: float):
        """c * A for a real scalar c (complex scalars would break self-adjointness)."""
        return HermitianOperator(float(c) * self.entries)

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim})"


class Projector(HermitianOperator):
    """An orthogonal projector: self-adjoint, idempotent, spectrum in {0, 1}.

    Construction validates ||P^2 - P||_F <= 1e-9 * dim and that every
    eigenvalue lies within 1e-9 of 0 or 1.
    """

    __slots__ = ()

    def __init__(self, entries):
        super().__init__(entries)
        p = self.entries
        if float(np.linalg.norm(p @ p - p)) > _PROJ_IDEMPOTENT_TOL * self.dim:
            raise ValueError("matrix is not idempotent within tolerance")
        w = np.linalg.eigvalsh(p)
        if float(np.max(np.minimum(np.abs(w), np.abs(w - 1.0)))) > _PROJ_EIGENVALUE_TOL:
            raise ValueError("projector eigenvalues not within 1e-9 of {0, 1}")

    @property
    def rank(self) -> int:
        return int(round(float(np.trace(self.entries).real)))

    def complement(self) -> "Projector":
        """I - P, the projector onto the orthogonal complement of the range."""
        return Projector(np.eye(self.dim) - self.entries)

    def to_subspace(self) -> "Subspace":
        """Orthonormal basis of the range (eigenvectors with eigenvalue near 1)."""
        w, v = np.linalg.eigh(self.entries)
        return Subspace(v[:, w > 0.5])


class Subspace:
    """A linear subspace of C^n carried as an orthonormal column basis.

    The basis may have zero columns (the zero subspace). Columns must be
    orthonormal within 1e-10.
    """

    __slots__ = ("basis",)

    def __init__(self, basis):
        b = np.array(basis, dtype=np.complex128)
        if b.ndim != 2 or b.shape[0] == 0:
            raise ValueError(f"expected a dim-by-k basis array, got shape {b.shape}")
        k = b.shape[1]
        if k and float(np.linalg.norm(b.conj().T @ b - np.eye(k))) > _BASIS_ORTHO_TOL * max(1, k):
            raise ValueError("basis columns are not orthonormal within 1e-10")
        b.setflags(write=False)
        object.__setattr__(self, "basis", b)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def subspace_dim(self) -> int:
        return self.basis.shape[1]

    @classmethod
    def zero(cls, dim: int):
        return cls(np.zeros((dim, 0)))

    @classmethod
    def full(cls, dim: int):
        return cls(np.eye(dim))

    def projector(self) -> Projector:
        return Projector(self.basis @ self.basis.conj().T)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, subspace_dim={self.subspace_dim})"


def _same_dim(a, b):
    if a.dim != b.dim:
        raise DimMismatch(f"dimensions differ: {a.dim} vs {b.dim}")


def _arrays_close(x, y, tol: Tolerances) -> bool:
    # the package-wide equality: ||X - Y||_F <= eq_abs_tol * max(1, ||X||, ||Y||)
    nx = float(np.linalg.norm(x))
    ny = float(np.linalg.norm(y))
    return float(np.linalg.norm(x - y)) <= tol.eq_abs_tol * max(1.0, nx, ny)


def symmetrized(entries) -> HermitianOperator:
    """Build an operator from a matrix that is self-adjoint in exact
    arithmetic, discarding floating-point asymmetry noise first.

    Internal products like B P with P commuting with B are Hermitian as a
    theorem but carry rounding noise that the constructor's strict defect
    gate would reject when the product is nearly zero; call sites that hold
    such a guarantee go through here. User-supplied matrices never should.
    """
    m = np.asarray(entries, dtype=np.complex128)
    return HermitianOperator((m + m.conj().T) / 2.0)


def eigh(a: HermitianOperator):
    """Spectral decomposition: ascending real eigenvalues and a unitary of eigenvectors."""
    try:
        w, v = np.linalg.eigh(a.entries)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    return w, v


def _orthonormal_columns(m: np.ndarray, rel_tol: float) -> np.ndarray:
    """Orthonormal basis of the column span, with singular values below
    rel_tol * sigma_max treated as zero."""
    if m.shape[1] == 0:
        return m
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    if s.size == 0 or s[0] <= 0.0:
        return np.zeros((m.shape[0], 0), dtype=np.complex128)
    r = int(np.count_nonzero(s > rel_tol * s[0]))
    return u[:, :r]


def _null_columns(m: np.ndarray, rel_tol: float, scale: float) -> np.ndarray:
    """Orthonormal basis (k x m) of the right null space of an n-by-k matrix,
    counting singular values <= rel_tol * scale as zero."""
    k = m.shape[1]
    if k == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    _, s, vh = np.linalg.svd(m, full_matrices=True)
    r = int(np.count_nonzero(s > rel_tol * scale))
    return vh[r:].conj().T


def range_projector(a: HermitianOperator, tol: Tolerances = DEFAULT_TOL) -> Projector:
    """Projector onto the range of a self-adjoint operator.

    Eigenvalues with magnitude at most rank_rel_tol times the largest are
    treated as zero, so the result is invariant under nonzero rescaling of
    the input. The zero operator maps to the zero projector.
    """
    w, v = eigh(a)
    top = float(np.max(np.abs(w))) if w.size else 0.0
    keep = np.abs(w) > tol.rank_rel_tol * top
    u = v[:, keep]
    return Projector(u @ u.conj().T)


def kernel_projector(a: HermitianOperator, tol: Tolerances = DEFAULT_TOL) -> Projector:
    """Projector onto the kernel, i.e. the complement of the range (A is self-adjoint)."""
    return range_projector(a, tol).complement()


def _projector_sum_span(s: HermitianOperator, tol: Tolerances) -> Projector:
    """Range projector of a sum of projectors.

    Unlike the general range projector, the cutoff here has an absolute
    floor at scale 1: the summands' eigenvalues sit within 1e-9 of {0, 1}
    by the Projector invariants, so spectral content of the sum below
    rank_rel_tol is definitionally zero (a pure-rounding-noise sum must
    yield the empty span, which a purely relative cutoff would not give).
    """
    w, v = eigh(s)
    top = float(np.max(np.abs(w))) if w.size else 0.0
    u = v[:, np.abs(w) > tol.rank_rel_tol * max(1.0, top)]
    m = u @ u.conj().T
    return Projector((m + m.conj().T) / 2.0)


def proj_meet(p: Projector, q: Projector, tol: Tolerances = DEFAULT_TOL) -> Projector:
    """Projector onto ran p intersect ran q.

    Computed as the orthogonal complement of span(ran(I-p) union ran(I-q)),
    which is exact in finite dimensions and has no trouble with nearly
    parallel subspaces, unlike alternating projections. The span is taken
    as the range of the sum of the two complement projectors: a single
    Hermitian eigendecomposition, which keeps exactly-diagonal inputs exact
    (stacked-basis orthonormalization would reintroduce rounding noise on
    duplicated columns).
    """
    _same_dim(p, q)
    n = p.dim
    span = _projector_sum_span(p.complement() + q.complement(), tol)
    m = np.eye(n) - span.entries
    return Projector((m + m.conj().T) / 2.0)


def proj_join(p: Projector, q: Projector, tol: Tolerances = DEFAULT_TOL) -> Projector:
    """Projector onto span(ran p union ran q), the smallest projector above
    both; the span is the range of p + q (same remark as in proj_meet)."""
    _same_dim(p, q)
    return _projector_sum_span(p + q, tol)


def op_equal(a: HermitianOperator, b: HermitianOperator, tol: Tolerances = DEFAULT_TOL) -> bool:
    """THE operator equality of the package: Frobenius with mixed abs/rel threshold."""
    _same_dim(a, b)
    return _arrays_close(a.entries, b.entries, tol)


def commutes(a: HermitianOperator, b: HermitianOperator, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Whether ||AB - BA||_F <= eq_abs_tol * max(1, ||A|| * ||B||)."""
    _same_dim(a, b)
    ab = a.entries @ b.entries
    return float(np.linalg.norm(ab - ab.conj().T)) <= tol.eq_abs_tol * max(
        1.0, float(np.linalg.norm(a.entries)) * float(np.linalg.norm(b.entries))
    )


def largest_invariant_subspace(
    b: HermitianOperator, s0: Subspace, tol: Tolerances = DEFAULT_TOL
) -> Subspace:
    """The largest subspace S of s0 with B S contained in S.

    Descending iteration S_{k+1} = S_k intersect {x : (I - P_k) B x = 0};
    the dimension strictly decreases until the fixed point, so at most dim
    rounds run. For self-adjoint B every invariant subspace is reducing,
    hence the projector of the result commutes with B (within tolerance).
    """
    if b.dim != s0.dim:
        raise DimMismatch(f"dimensions differ: {b.dim} vs {s0.dim}")
    n = b.dim
    scale = b.norm()
    u = s0.basis
    while u.shape[1] > 0:
        p = u @ u.conj().T
        resid = (np.eye(n) - p) @ b.entries @ u
        w = _null_columns(resid, tol.rank_rel_tol, scale)
        if w.shape[1] == u.shape[1]:
            return Subspace(u)
        u = _orthonormal_columns(u @ w, tol.rank_rel_tol)
    return Subspace.zero(n)


def rank_sensitive(operators, tol: Tolerances = DEFAULT_TOL, factor: float = 10.0) -> bool:
    """True when perturbing rank_rel_tol by the factor (up or down) changes
    the numerical rank of any of the operators. Such results should be
    flagged as tolerance-sensitive by reporting layers."""
    for a in operators:
        w = np.abs(np.linalg.eigvalsh(a.entries))
        top = float(w.max()) if w.size else 0.0
        base = int(np.count_nonzero(w > tol.rank_rel_tol * top))
        lo = int(np.count_nonzero(w > (tol.rank_rel_tol / factor) * top))
        hi = int(np.count_nonzero(w > (tol.rank_rel_tol * factor) * top))
        if lo != base or hi != base:
            return True
    return False


def matrix_to_json(a: HermitianOperator) -> dict:
    """{"dim": n, "entries": [[[re, im], ...], ...]}, collapsing to plain reals
    when the matrix has no imaginary part."""
    m = a.entries
    if float(np.max(np.abs(m.imag))) == 0.0:
        entries = [[float(x.real) for x in row] for row in m]
    else:
        entries = [[[float(x.real), float(x.imag)] for x in row] for row in m]
    return {"dim": a.dim, "entries": entries}


def _parse_scalar(cell):
    if isinstance(cell, (int, float)):
        return complex(cell, 0.0)
    if isinstance(cell, list) and len(cell) == 2 and all(isinstance(t, (int, float)) for t in cell):
        return complex(cell[0], cell[1])
    raise ParseError(f"matrix entry must be a number or [re, im] pair, got {cell!r}")


def matrix_from_json(doc, tol: Tolerances = DEFAULT_TOL) -> HermitianOperator:
    if not isinstance(doc, dict) or "entries" not in doc:
        raise ParseError('matrix JSON must be an object with an "entries" field')
    rows = doc["entries"]
    if not isinstance(rows, list) or not rows:
        raise ParseError('"entries" must be a nonempty array of rows')
    n = len(rows)
    if "dim" in doc and doc["dim"] != n:
        raise ParseError(f'"dim" field says {doc["dim"]} but there are {n} rows')
    if n > tol.max_dim:
        raise ParseError(f"dimension {n} exceeds max_dim {tol.max_dim}")
    m = np.zeros((n, n), dtype=np.complex128)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"row {i} does not have {n} entries")
        for j, cell in enumerate(row):
            m[i, j] = _parse_scalar(cell)
    try:
        return HermitianOperator(m)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
