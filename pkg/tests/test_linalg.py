from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hullforge.errors import FieldMismatch, ShapeMismatch
from hullforge.field import gf
from hullforge.linalg import (GFMatrix, batch_rank, kernel, rank, rowspace_intersection, rref,
                              solve)


def span(field, rows):
    """All vectors of the row space, as a set of tuples (brute force)."""
    rows = np.asarray(rows, dtype=np.int64).reshape(-1, rows.shape[-1] if hasattr(rows, "shape") else len(rows[0]))
    out = set()
    for coeffs in itertools.product(range(field.q), repeat=rows.shape[0]):
        out.add(tuple(field.dot(np.array([coeffs]), rows)[0].tolist()) if rows.shape[0] else ())
    return out


matrices = st.sampled_from([2, 3, 4, 5, 8, 9]).flatmap(
    lambda q: st.tuples(st.just(q), st.integers(1, 4), st.integers(1, 5)).flatmap(
        lambda t: st.tuples(st.just(t[0]),
                            st.lists(st.lists(st.integers(0, t[0] - 1), min_size=t[2], max_size=t[2]),
                                     min_size=t[1], max_size=t[1]))))


def test_rref_known():
    f = gf(3)
    M = GFMatrix.of(f, [[2, 1, 0], [1, 2, 0], [0, 0, 1]])
    R, r, piv = rref(M)
    assert r == 2
    assert piv == [0, 2]
    assert R.tolist() == [[1, 2, 0], [0, 0, 1]]


def test_matrix_value_semantics():
    f = gf(4)
    A = GFMatrix.of(f, [[1, 2], [3, 1]])
    assert A == GFMatrix.of(f, [[1, 2], [3, 1]])
    assert (A @ GFMatrix.identity(f, 2)) == A
    assert A.T.tolist() == [[1, 3], [2, 1]]
    assert A.conj().tolist() == [[1, 3], [2, 1]]
    assert A[0, 1].rep == 2
    with pytest.raises(ValueError):
        A.a[0, 0] = 0
    with pytest.raises(FieldMismatch):
        A @ GFMatrix.identity(gf(2), 2)
    with pytest.raises(ShapeMismatch):
        A @ GFMatrix.zeros(f, 3, 3)


@settings(max_examples=120, deadline=None)
@given(matrices)
def test_kernel_rank_nullity(t):
    q, rows = t
    f = gf(q)
    M = GFMatrix.of(f, rows)
    K = kernel(M)
    assert rank(M) + K.rows == M.cols
    if K.rows:
        assert not np.any(f.dot(M.a, K.a.T))


@settings(max_examples=80, deadline=None)
@given(matrices, st.data())
def test_intersection_matches_brute_force(t, data):
    q, rows = t
    f = gf(q)
    A = np.array(rows)
    B = np.array(data.draw(st.lists(st.lists(st.integers(0, q - 1), min_size=A.shape[1], max_size=A.shape[1]),
                                    min_size=1, max_size=3)))
    meet = rowspace_intersection(GFMatrix(f, A), GFMatrix(f, B))
    brute = span(f, A) & span(f, B)
    assert len(brute) == q ** meet.rows
    if meet.rows:
        assert span(f, meet.a) == brute


@settings(max_examples=80, deadline=None)
@given(matrices, st.data())
def test_solve(t, data):
    q, rows = t
    f = gf(q)
    A = GFMatrix.of(f, rows)
    x = data.draw(st.lists(st.integers(0, q - 1), min_size=A.rows, max_size=A.rows))
    b = f.dot(np.array([x]), A.a)[0]
    sol = solve(A, b)
    assert sol is not None
    assert f.dot(np.array([[int(v) for v in sol]]), A.a)[0].tolist() == b.tolist()


def test_solve_inconsistent():
    f = gf(2)
    assert solve(GFMatrix.of(f, [[1, 1, 0]]), [1, 0, 0]) is None


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4, 7, 16]), st.integers(0, 2**32 - 1))
def test_batch_rank_matches_rank(q, seed):
    f = gf(q)
    rng = np.random.Generator(np.random.PCG64(seed))
    mats = rng.integers(0, q, size=(30, 3, 4))
    mats[::3, 2] = mats[::3, 0]  # force some rank deficiency
    got = batch_rank(f, mats)
    assert got.tolist() == [rank(GFMatrix(f, m)) for m in mats]
