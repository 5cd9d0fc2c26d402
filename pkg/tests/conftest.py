"""Shared helpers and brute-force oracles for the test suite."""

import itertools

import numpy as np
import pytest

from starorder.models import RandomVariable, rv_le
from starorder.numerics import HermitianOperator, Projector, eigh


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def diag(*values):
    return HermitianOperator.diagonal(values)


def diag_glb_oracle(a_vals, b_vals):
    """Greatest lower bound of two integer diagonal operators, by enumerating
    every support restriction of the first and keeping the largest one that
    also precedes the second. Exact integer arithmetic throughout."""
    n = len(a_vals)
    f = RandomVariable(tuple(a_vals))
    g = RandomVariable(tuple(b_vals))
    candidates = []
    for mask in range(2**n):
        restricted = RandomVariable(tuple(a_vals[i] if mask >> i & 1 else 0 for i in range(n)))
        if rv_le(restricted, f) and rv_le(restricted, g):
            candidates.append(restricted)
    best = candidates[0]
    for c in candidates[1:]:
        if rv_le(best, c):
            best = c
    assert all(rv_le(c, best) for c in candidates), "oracle: lower bounds not directed"
    return best.values


def commuting_projector_family(b):
    """Every projector commuting with a nondegenerate Hermitian operator:
    the 2^n sums over subsets of its eigenprojectors."""
    w, v = eigh(b)
    assert len(set(np.round(w, 9))) == len(w), "oracle needs a nondegenerate spectrum"
    n = b.dim
    out = []
    for mask in range(2**n):
        cols = [i for i in range(n) if mask >> i & 1]
        u = v[:, cols]
        out.append(Projector(u @ u.conj().T))
    return out


def random_projector(rng, dim, rank=None):
    if rank is None:
        rank = int(rng.integers(0, dim + 1))
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, _ = np.linalg.qr(z)
    u = q[:, :rank]
    return Projector(u @ u.conj().T)


def all_diagonals(dim, values):
    return [HermitianOperator.diagonal(v) for v in itertools.product(values, repeat=dim)]
