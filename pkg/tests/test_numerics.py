import numpy as np
import pytest

from starorder.errors import DimMismatch, ParseError
from starorder.numerics import (
    DEFAULT_TOL,
    HermitianOperator,
    Projector,
    Subspace,
    Tolerances,
    commutes,
    eigh,
    largest_invariant_subspace,
    matrix_from_json,
    matrix_to_json,
    op_equal,
    proj_join,
    proj_meet,
    range_projector,
    rank_sensitive,
)

from conftest import diag, random_projector


# ---------------------------------------------------------------------------
# construction invariants


def test_constructor_symmetrizes_and_records_defect():
    a = HermitianOperator([[1.0, 2.0 + 1e-12j], [2.0 - 1e-12j, 3.0]])
    assert a.defect <= 1e-10 * np.linalg.norm(a.entries)
    assert np.array_equal(a.entries, a.entries.conj().T)


def test_constructor_rejects_non_hermitian():
    with pytest.raises(ValueError):
        HermitianOperator([[0.0, 1.0], [-1.0, 0.0]])  # skew-symmetric


def test_constructor_rejects_non_square():
    with pytest.raises(ValueError):
        HermitianOperator(np.zeros((2, 3)))


def test_operators_are_immutable():
    a = diag(1, 2)
    with pytest.raises(AttributeError):
        a.entries = np.zeros((2, 2))
    with pytest.raises(ValueError):
        a.entries[0, 0] = 5.0


def test_projector_validation():
    Projector(np.diag([1.0, 0.0, 1.0]))
    with pytest.raises(ValueError):
        Projector(np.diag([0.5, 1.0]))
    with pytest.raises(ValueError):
        Projector(np.array([[0.0, 1.0], [1.0, 0.0]]))  # eigenvalues -1, 1


def test_subspace_validation_and_round_trip(rng):
    with pytest.raises(ValueError):
        Subspace(np.array([[1.0], [1.0]]))  # not normalized
    for _ in range(10):
        p = random_projector(rng, 5)
        q = p.to_subspace().projector()
        assert np.linalg.norm(p.entries - q.entries) <= 1e-9


def test_tolerances_validation():
    with pytest.raises(ValueError):
        Tolerances(rank_rel_tol=-1)
    with pytest.raises(ValueError):
        Tolerances(max_dim=0)
    assert DEFAULT_TOL.rank_rel_tol == 1e-9
    assert DEFAULT_TOL.eq_abs_tol == 1e-8
    assert DEFAULT_TOL.max_dim == 64


# ---------------------------------------------------------------------------
# eigh


def test_eigh_zero_operator():
    w, v = eigh(HermitianOperator.zero(2))
    assert np.allclose(w, [0.0, 0.0])
    assert np.allclose(v.conj().T @ v, np.eye(2), atol=1e-10)


def test_eigh_identity():
    w, _ = eigh(HermitianOperator.identity(3))
    assert np.allclose(w, [1.0, 1.0, 1.0])


def test_eigh_hand_decomposition():
    # [[1,1],[1,1]] has eigenpairs (0, (1,-1)/sqrt2) and (2, (1,1)/sqrt2)
    a = HermitianOperator([[1.0, 1.0], [1.0, 1.0]])
    w, v = eigh(a)
    assert np.allclose(w, [0.0, 2.0])
    for i in range(2):
        assert np.allclose(a.entries @ v[:, i], w[i] * v[:, i], atol=1e-12)
    assert abs(abs(v[:, 0] @ np.array([1, -1]) / np.sqrt(2)) - 1) < 1e-12
    assert abs(abs(v[:, 1] @ np.array([1, 1]) / np.sqrt(2)) - 1) < 1e-12


def test_eigh_reconstruction_postcondition(rng):
    for _ in range(10):
        z = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
        a = HermitianOperator((z + z.conj().T) / 2)
        w, v = eigh(a)
        assert np.linalg.norm(v @ np.diag(w) @ v.conj().T - a.entries) <= 1e-9 * max(1, a.norm())
        assert np.linalg.norm(v.conj().T @ v - np.eye(6)) <= 1e-10 * 6


# ---------------------------------------------------------------------------
# range projections


def test_range_projector_examples():
    assert np.allclose(range_projector(diag(1, 2, 0)).entries, np.diag([1.0, 1.0, 0.0]))
    assert np.array_equal(range_projector(HermitianOperator.zero(2)).entries, np.zeros((2, 2)))
    p = range_projector(HermitianOperator([[1.0, 1.0], [1.0, 1.0]]))
    assert np.allclose(p.entries, np.full((2, 2), 0.5))


def test_range_projector_absorbs_operator(rng):
    for _ in range(20):
        z = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
        a = HermitianOperator((z + z.conj().T) / 2)
        p = range_projector(a)
        assert np.linalg.norm(p.entries @ p.entries - p.entries) <= 1e-9 * 5
        assert np.linalg.norm(a.entries @ p.entries - a.entries) <= 1e-8 * a.norm()
        assert np.linalg.norm(p.entries @ a.entries - a.entries) <= 1e-8 * a.norm()


@pytest.mark.parametrize("c", [-2.0, 0.5, 3.0])
def test_range_projector_scale_invariant(rng, c):
    for _ in range(5):
        z = rng.standard_normal((4, 4))
        a = HermitianOperator((z + z.T) / 2 @ np.diag([1, 1, 1, 0]) @ (z + z.T) / 2)
        p1 = range_projector(a)
        p2 = range_projector(a.scaled(c))
        assert np.linalg.norm(p1.entries - p2.entries) <= 1e-9


# ---------------------------------------------------------------------------
# projector lattice


def line_projector(*vec):
    v = np.asarray(vec, dtype=complex)
    v = v / np.linalg.norm(v)
    return Projector(np.outer(v, v.conj()))


def test_proj_meet_examples():
    assert np.allclose(
        proj_meet(Projector(np.diag([1.0, 1, 0])), Projector(np.diag([0.0, 1, 1]))).entries,
        np.diag([0.0, 1.0, 0.0]),
    )
    p = line_projector(1, 0, 0)
    assert np.allclose(proj_meet(p, Projector(np.eye(3))).entries, p.entries)
    met = proj_meet(line_projector(1, 0), line_projector(1, 1))
    assert np.linalg.norm(met.entries) <= 1e-9


def test_proj_join_examples():
    assert np.allclose(
        proj_join(Projector(np.diag([1.0, 0, 0])), Projector(np.diag([0.0, 1, 0]))).entries,
        np.diag([1.0, 1.0, 0.0]),
    )
    p = line_projector(0, 1, 0)
    assert np.allclose(proj_join(p, Projector(np.zeros((3, 3)))).entries, p.entries)
    assert np.allclose(proj_join(line_projector(1, 0), line_projector(1, 1)).entries, np.eye(2))


def _proj_le(p, q):
    return np.linalg.norm(p.entries @ q.entries - p.entries) <= 1e-8


def test_proj_lattice_algebra(rng):
    for _ in range(15):
        p, q, r = (random_projector(rng, 5) for _ in range(3))
        assert op_equal(proj_meet(p, q), proj_meet(q, p))
        assert op_equal(proj_join(p, q), proj_join(q, p))
        assert op_equal(proj_meet(p, p), p)
        assert op_equal(proj_join(p, p), p)
        assert op_equal(proj_meet(proj_meet(p, q), r), proj_meet(p, proj_meet(q, r)))
        assert op_equal(proj_join(proj_join(p, q), r), proj_join(p, proj_join(q, r)))
        assert op_equal(proj_meet(p, proj_join(p, q)), p)
        assert op_equal(proj_join(p, proj_meet(p, q)), p)


def test_proj_meet_join_extremality(rng):
    # constructed overlap: P spans cols 0..2, Q spans cols 2..4 of a common
    # unitary, so their meet is col 2 and their join is cols 0..4
    for _ in range(10):
        z = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
        u, _ = np.linalg.qr(z)
        p = Projector(u[:, 0:3] @ u[:, 0:3].conj().T)
        q = Projector(u[:, 2:5] @ u[:, 2:5].conj().T)
        met = proj_meet(p, q)
        jon = proj_join(p, q)
        expected_meet = Projector(u[:, 2:3] @ u[:, 2:3].conj().T)
        expected_join = Projector(u[:, 0:5] @ u[:, 0:5].conj().T)
        assert op_equal(met, expected_meet)
        assert op_equal(jon, expected_join)
        assert _proj_le(met, p) and _proj_le(met, q)
        assert _proj_le(p, jon) and _proj_le(q, jon)
        for _ in range(20):
            # lower bounds live inside the known intersection
            keep = rng.random() < 0.5
            r = expected_meet if keep else Projector(np.zeros((6, 6)))
            assert _proj_le(r, met)


# ---------------------------------------------------------------------------
# equality and commutation


def test_op_equal_examples():
    a = diag(1, 0)
    assert op_equal(a, a)
    assert not op_equal(diag(1, 0), diag(0, 1))
    assert op_equal(a, a + HermitianOperator.identity(2).scaled(1e-12))
    with pytest.raises(DimMismatch):
        op_equal(a, diag(1, 0, 0))


def test_commutes_examples():
    assert commutes(diag(1, 2), diag(3, 4))
    b = HermitianOperator([[0.0, 1.0], [1.0, 0.0]])
    a = diag(1, 2)
    # commutator oracle: AB - BA = [[0, -1], [1, 0]]
    comm = a.entries @ b.entries - b.entries @ a.entries
    assert np.allclose(comm, [[0, -1], [1, 0]])
    assert not commutes(a, b)
    assert commutes(a, HermitianOperator.identity(2))


# ---------------------------------------------------------------------------
# largest invariant subspace


def test_invariant_subspace_eigenvector_line():
    b = diag(1, 5, 7)
    s0 = Subspace(np.eye(3)[:, :1])
    s = largest_invariant_subspace(b, s0)
    assert s.subspace_dim == 1
    assert np.allclose(np.abs(s.basis[:, 0]), [1, 0, 0])


def test_invariant_subspace_whole_space(rng):
    z = rng.standard_normal((4, 4))
    b = HermitianOperator((z + z.T) / 2)
    s = largest_invariant_subspace(b, Subspace.full(4))
    assert s.subspace_dim == 4


def test_invariant_subspace_collapses_to_zero():
    b = HermitianOperator([[0.0, 1.0], [1.0, 0.0]])
    s0 = Subspace(np.eye(2)[:, :1])
    s = largest_invariant_subspace(b, s0)
    assert s.subspace_dim == 0
    # oracle: b's commuting projectors are O, I, and the two lines (1,±1)/sqrt2;
    # none of their ranges sits inside span(e1) except O
    from conftest import commuting_projector_family

    for p in commuting_projector_family(b):
        inside = np.linalg.norm((np.eye(2) - s0.basis @ s0.basis.conj().T) @ p.entries) <= 1e-9
        if inside:
            assert p.rank == 0


def test_invariant_subspace_contract(rng):
    from starorder.sampling import random_spectrum_hermitian

    for _ in range(10):
        b = random_spectrum_hermitian(rng, 5)
        w, v = eigh(b)
        # s0: three eigenvectors plus one unrelated direction
        extra = rng.standard_normal(5) + 1j * rng.standard_normal(5)
        raw = np.hstack([v[:, :3], extra.reshape(-1, 1)])
        q, _ = np.linalg.qr(raw)
        s0 = Subspace(q[:, :4])
        s = largest_invariant_subspace(b, s0)
        p_s = s.projector()
        p_0 = s0.projector()
        # contained in s0
        assert np.linalg.norm(p_0.entries @ p_s.entries - p_s.entries) <= 1e-8
        # invariant: (I - P) B P = 0
        assert (
            np.linalg.norm((np.eye(5) - p_s.entries) @ b.entries @ p_s.entries)
            <= 1e-7 * max(1, b.norm())
        )
        # commutes with b (reducing subspace)
        assert commutes(b, p_s)
        # any commuting projector inside s0 is inside s: the first three
        # eigenvector lines are exactly the commuting ranges inside s0
        for i in range(3):
            line = v[:, i : i + 1]
            assert np.linalg.norm(p_s.entries @ line - line) <= 1e-7


# ---------------------------------------------------------------------------
# tolerance sensitivity and wire format


def test_rank_sensitive_flags_straddling_eigenvalue():
    a = diag(1.0, 1e-9, 0.0)  # eigenvalue right at the default cutoff region
    assert rank_sensitive([a])
    assert not rank_sensitive([diag(1, 2, 3)])


def test_matrix_json_round_trip(rng):
    a = HermitianOperator([[1.0, 1j], [-1j, 2.0]])
    doc = matrix_to_json(a)
    b = matrix_from_json(doc)
    assert op_equal(a, b)
    # real shorthand
    c = matrix_from_json({"dim": 2, "entries": [[1, 0], [0, 2]]})
    assert op_equal(c, diag(1, 2))


@pytest.mark.parametrize(
    "doc",
    [
        {"entries": []},
        {"entries": [[1, 2]]},
        {"dim": 3, "entries": [[1, 0], [0, 1]]},
        {"entries": [[1, "x"], ["x", 1]]},
        {"entries": [[0, 1], [-1, 0]]},  # not self-adjoint
        "nonsense",
    ],
)
def test_matrix_json_rejects_malformed(doc):
    with pytest.raises(ParseError):
        matrix_from_json(doc)
