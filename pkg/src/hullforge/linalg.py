"""Dense linear algebra over one finite field.

Matrices are numpy ``int64`` arrays of element reps wrapped in
:class:`GFMatrix`.  All functions also accept a bare ``(field, array)``
pair through :meth:`GFMatrix.of`.  Reduced row echelon form is the single
canonical form: two row spaces are equal iff their RREFs are equal.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import FieldMismatch, ShapeMismatch
from .field import FieldElement, FieldSpec


class GFMatrix:
    """Immutable dense matrix over ``field``."""

    __slots__ = ("field", "a")

    def __init__(self, field: FieldSpec, data):
        arr = np.array(data, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1) if arr.size else arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ShapeMismatch(f"expected a 2-d array, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"entries out of range for {field!r}")
        arr.setflags(write=False)
        self.field = field
        self.a = arr

    @classmethod
    def of(cls, field: FieldSpec, rows: Sequence[Sequence[int | FieldElement]], cols: int | None = None):
        rows = [[int(x) for x in r] for r in rows]
        if not rows:
            return cls(field, np.zeros((0, cols or 0), dtype=np.int64))
        if len({len(r) for r in rows}) != 1:
            raise ShapeMismatch("ragged rows")
        return cls(field, rows)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int):
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int):
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    def __getitem__(self, ij) -> FieldElement:
        i, j = ij
        return FieldElement(int(self.a[i, j]), self.field)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GFMatrix) and other.field is self.field
                and other.a.shape == self.a.shape and bool(np.array_equal(other.a, self.a)))

    def __hash__(self):
        return hash((self.field.q, self.a.shape, self.a.tobytes()))

    def __matmul__(self, other: "GFMatrix") -> "GFMatrix":
        _same_field(self, other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        return GFMatrix(self.field, self.field.dot(self.a, other.a))

    @property
    def T(self) -> "GFMatrix":
        return GFMatrix(self.field, self.a.T)

    def conj(self) -> "GFMatrix":
        return GFMatrix(self.field, self.field.conj(self.a))

    def tolist(self) -> list[list[int]]:
        return self.a.tolist()

    def __repr__(self) -> str:
        return f"GFMatrix({self.field!r}, {self.a.tolist()})"


def _same_field(*ms: GFMatrix) -> None:
    f = ms[0].field
    for m in ms[1:]:
        if m.field is not f:
            raise FieldMismatch(f"matrices over {f!r} and {m.field!r}")


def rref_array(field: FieldSpec, a: np.ndarray, ncols: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Row-reduce a rep array; returns the nonzero rows and pivot columns.

    Pivots are only searched among the first ``ncols`` columns (all by
    default); row operations always span the full width.
    """
    R = np.array(a, dtype=np.int64, copy=True)
    rows, cols = R.shape
    ncols = cols if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if not nz.size:
            continue
        i = r + nz[0]
        if i != r:
            R[[r, i]] = R[[i, r]]
        if R[r, c] != 1:
            R[r] = field.mul(field.inv(R[r, c]), R[r])
        f = R[:, c].copy()
        f[r] = 0
        hit = np.flatnonzero(f)
        if hit.size:
            R[hit] = field.sub(R[hit], field.mul(f[hit, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    if ncols == cols:
        return R[:r], pivots
    return R, pivots


def rref(M: GFMatrix) -> tuple[GFMatrix, int, list[int]]:
    R, pivots = rref_array(M.field, M.a)
    return GFMatrix(M.field, R.reshape(len(pivots), M.cols)), len(pivots), pivots


def rank(M: GFMatrix) -> int:
    return rref(M)[1]


def kernel_array(field: FieldSpec, a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    cols = a.shape[1]
    R, pivots = rref_array(field, a)
    free = [c for c in range(cols) if c not in set(pivots)]
    K = np.zeros((len(free), cols), dtype=np.int64)
    for t, f in enumerate(free):
        K[t, f] = 1
        for i, pc in enumerate(pivots):
            K[t, pc] = field.neg(R[i, f])
    R2, _ = rref_array(field, K)
    return R2.reshape(-1, cols)


def kernel(M: GFMatrix) -> GFMatrix:
    """Basis (RREF rows) of {x : M x^T = 0}."""
    return GFMatrix(M.field, kernel_array(M.field, M.a))


def intersection_array(field: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Zassenhaus: reduce [[A, A], [B, 0]]; rows with zero left half span the meet."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    n = a.shape[1]
    if b.shape[1] != n:
        raise ShapeMismatch(f"row widths differ: {n} vs {b.shape[1]}")
    top = np.hstack([a, a])
    bottom = np.hstack([b, np.zeros_like(b)])
    R, _ = rref_array(field, np.vstack([top, bottom]).reshape(-1, 2 * n))
    meet = R[~R[:, :n].any(axis=1), n:]
    R2, _ = rref_array(field, meet.reshape(-1, n))
    return R2.reshape(-1, n)


def rowspace_intersection(A: GFMatrix, B: GFMatrix) -> GFMatrix:
    _same_field(A, B)
    if A.cols != B.cols:
        raise ShapeMismatch(f"row widths differ: {A.cols} vs {B.cols}")
    return GFMatrix(A.field, intersection_array(A.field, A.a, B.a))


def solve_array(field: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).ravel()
    rows, cols = a.shape
    if b.size != cols:
        raise ShapeMismatch(f"right-hand side has length {b.size}, expected {cols}")
    aug = np.hstack([a.T, b[:, None]])
    R, pivots = rref_array(field, aug)
    if pivots and pivots[-1] == rows:
        return None
    x = np.zeros(rows, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = R[i, -1]
    return x


def solve(A: GFMatrix, b) -> list[FieldElement] | None:
    """One solution x of x^T A = b (free variables zero), or None."""
    vec = [int(v) for v in b]
    x = solve_array(A.field, A.a, np.array(vec, dtype=np.int64))
    return None if x is None else [FieldElement(int(v), A.field) for v in x]


def batch_rank(field: FieldSpec, mats: np.ndarray) -> np.ndarray:
    """Ranks of a stack of matrices with shape (batch, rows, cols)."""
    M = np.array(mats, dtype=np.int64, copy=True)
    B, r, c = M.shape
    row = np.zeros(B, dtype=np.int64)
    ar = np.arange(r)
    for col in range(c):
        live = row < r
        mask = (M[:, :, col] != 0) & (ar[None, :] >= row[:, None]) & live[:, None]
        idx = np.flatnonzero(mask.any(axis=1))
        if not idx.size:
            continue
        pv = mask[idx].argmax(axis=1)
        pr = row[idx]
        tmp = M[idx, pr].copy()
        M[idx, pr] = M[idx, pv]
        M[idx, pv] = tmp
        piv = M[idx, pr]
        piv = field.mul(field.inv(piv[:, col])[:, None], piv)
        M[idx, pr] = piv
        f = M[idx, :, col].copy()
        f[ar[None, :] <= pr[:, None]] = 0
        M[idx] = field.sub(M[idx], field.mul(f[:, :, None], piv[:, None, :]))
        row[idx] += 1
    return row
