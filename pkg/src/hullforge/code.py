"""Linear codes over a finite field and their dual/hull analysis.

A :class:`LinearCode` is a value: the field, the length and the RREF
generator matrix.  Two codes are equal iff those agree.  Everything that
needs the codewords (distance, weight distribution, full-weight search)
enumerates the message space in lexicographic order and refuses to run
past ``ENUMERATION_LIMIT`` codewords.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .errors import (EmptyLength, FieldMismatch, NoHermitianStructure, NotFullWeight,
                     OddLength, ShapeMismatch, TooLargeToEnumerate)
from .field import FieldElement, FieldSpec
from .linalg import GFMatrix, batch_rank, intersection_array, kernel_array, rref_array

ENUMERATION_LIMIT = 2**24
_BLOCK = 2**16

EUCLIDEAN = "euclidean"
HERMITIAN = "hermitian"


def _kind(kind: str) -> str:
    if kind not in (EUCLIDEAN, HERMITIAN):
        raise ValueError(f"unknown inner product {kind!r}")
    return kind


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d: int | None
    d_dual: int | None
    q: int


@dataclass(frozen=True)
class WeightDistribution:
    counts: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def min_weight(self) -> int | None:
        return next((i for i, a in enumerate(self.counts) if i and a), None)


def _vec(field: FieldSpec, v) -> np.ndarray:
    out = []
    for x in v:
        if isinstance(x, FieldElement) and x.spec is not field:
            raise FieldMismatch(f"vector entry from {x.spec!r}, code over {field!r}")
        out.append(int(x))
    return np.array(out, dtype=np.int64)


class LinearCode:
    """An [n, k] linear code with canonical (RREF) generator matrix."""

    __slots__ = ("field", "n", "gen")

    def __init__(self, field: FieldSpec, n: int, gen: np.ndarray):
        # trusted constructor: gen must already be full-rank RREF
        self.field = field
        self.n = n
        gen = np.asarray(gen, dtype=np.int64).reshape(-1, n)
        gen.setflags(write=False)
        self.gen = gen

    @classmethod
    def from_generator(cls, field: FieldSpec, rows, n: int | None = None) -> "LinearCode":
        if isinstance(rows, GFMatrix):
            if rows.field is not field:
                raise FieldMismatch(f"matrix over {rows.field!r}, expected {field!r}")
            a = rows.a
        else:
            rows = [_vec(field, r) for r in rows]
            if rows:
                if len({len(r) for r in rows}) != 1:
                    raise ShapeMismatch("ragged generator rows")
                a = np.vstack(rows)
            else:
                a = np.zeros((0, n or 0), dtype=np.int64)
        if n is not None and a.shape[1] != n:
            raise ShapeMismatch(f"rows have width {a.shape[1]}, expected {n}")
        width = a.shape[1]
        if width == 0:
            raise EmptyLength("a code needs length >= 1")
        if a.size and (a.min() < 0 or a.max() >= field.q):
            raise ValueError(f"entries out of range for {field!r}")
        R, _ = rref_array(field, a)
        return cls(field, width, R)

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> "LinearCode":
        return cls(field, n, np.zeros((0, n), dtype=np.int64))

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> "LinearCode":
        return cls(field, n, np.eye(n, dtype=np.int64))

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    @property
    def generator_matrix(self) -> GFMatrix:
        return GFMatrix(self.field, self.gen)

    @property
    def size(self) -> int:
        return self.field.q ** self.k

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinearCode) and other.field is self.field and other.n == self.n
                and other.gen.shape == self.gen.shape and bool(np.array_equal(other.gen, self.gen)))

    def __hash__(self):
        return hash((self.field.q, self.n, self.gen.tobytes()))

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}] over {self.field!r})"

    def _same(self, other: "LinearCode") -> None:
        if other.field is not self.field:
            raise FieldMismatch(f"codes over {self.field!r} and {other.field!r}")
        if other.n != self.n:
            raise ShapeMismatch(f"code lengths differ: {self.n} vs {other.n}")

    # -- membership and subspaces -------------------------------------------

    def contains(self, word) -> bool:
        w = _vec(self.field, word)
        if w.size != self.n:
            raise ShapeMismatch(f"word of length {w.size}, code length {self.n}")
        R, _ = rref_array(self.field, np.vstack([self.gen, w[None, :]]))
        return R.shape[0] == self.k

    def is_subcode_of(self, other: "LinearCode") -> bool:
        self._same(other)
        R, _ = rref_array(self.field, np.vstack([other.gen, self.gen]))
        return R.shape[0] == other.k

    def encode(self, message) -> np.ndarray:
        m = _vec(self.field, message)
        if m.size != self.k:
            raise ShapeMismatch(f"message of length {m.size}, dimension {self.k}")
        return self.field.dot(m[None, :], self.gen)[0]

    # -- duals and hulls -------------------------------------------------------

    def dual(self) -> "LinearCode":
        return LinearCode(self.field, self.n, kernel_array(self.field, self.gen))

    def hermitian_dual(self) -> "LinearCode":
        if self.field.q0 is None:
            raise NoHermitianStructure(f"{self.field!r} has no Hermitian structure")
        conj = self.field.conj(kernel_array(self.field, self.gen))
        return LinearCode.from_generator(self.field, conj, self.n) if conj.size else \
            LinearCode.zero(self.field, self.n)

    def dual_of(self, kind: str) -> "LinearCode":
        return self.dual() if _kind(kind) == EUCLIDEAN else self.hermitian_dual()

    def gram(self, kind: str = EUCLIDEAN) -> np.ndarray:
        """G G^T (Euclidean) or G conj(G)^T (Hermitian)."""
        other = self.gen if _kind(kind) == EUCLIDEAN else self.field.conj(self.gen)
        return self.field.dot(self.gen, other.T)

    def hull_dim_gram(self, kind: str = EUCLIDEAN) -> int:
        g = self.gram(kind)
        return self.k - (rref_array(self.field, g)[0].shape[0] if self.k else 0)

    def hull(self, kind: str = EUCLIDEAN) -> tuple["LinearCode", int]:
        """The hull C ∩ C^⊥ (or C ∩ C^⊥h) and its dimension.

        Computed by row-space intersection and cross-checked against
        ``k - rank(Gram)``.
        """
        other = self.dual_of(kind)
        meet = intersection_array(self.field, self.gen, other.gen)
        h = meet.shape[0]
        check = self.hull_dim_gram(kind)
        if h != check:  # pragma: no cover
            raise AssertionError(f"hull dimension mismatch: intersection {h}, gram {check}")
        return LinearCode(self.field, self.n, meet), h

    def hull_dim(self, kind: str = EUCLIDEAN) -> int:
        return self.hull(kind)[1]

    def predicate(self, kind: str) -> bool:
        base, _, inner = kind.partition("hermitian_")
        ip = HERMITIAN if base == "" else EUCLIDEAN
        name = inner if base == "" else kind
        if name not in ("lcd", "self_dual", "self_orthogonal"):
            raise ValueError(f"unknown predicate {kind!r}")
        h = self.hull_dim(ip)
        if name == "lcd":
            return h == 0
        if name == "self_orthogonal":
            return h == self.k
        return h == self.k and self.n == 2 * self.k

    # -- equivalence, shortening, products ------------------------------------

    def scale(self, v) -> "LinearCode":
        """The code v·C for a full-weight vector v."""
        vv = _vec(self.field, v)
        if vv.size != self.n:
            raise ShapeMismatch(f"scaling vector of length {vv.size}, code length {self.n}")
        if np.any(vv == 0):
            raise NotFullWeight("scaling vector has a zero coordinate")
        return LinearCode.from_generator(self.field, self.field.mul(self.gen, vv[None, :]), self.n) \
            if self.k else self

    def permute(self, perm: Sequence[int]) -> "LinearCode":
        """Column permutation: new column j is old column perm[j]."""
        if sorted(perm) != list(range(self.n)):
            raise ShapeMismatch(f"{list(perm)} is not a permutation of range({self.n})")
        if not self.k:
            return self
        return LinearCode.from_generator(self.field, self.gen[:, list(perm)], self.n)

    def shorten(self, i: int) -> "LinearCode":
        """Subcode vanishing at coordinate i, with that coordinate deleted."""
        if not 0 <= i < self.n:
            raise IndexError(f"coordinate {i} out of range for length {self.n}")
        if self.n == 1:
            raise EmptyLength("shortening a length-1 code leaves length 0")
        keep = [j for j in range(self.n) if j != i]
        R, _ = rref_array(self.field, self.gen[:, [i] + keep], ncols=1)
        # after pivoting on column i, at most the first row is nonzero there
        rows = R[1:] if R.shape[0] and R[0, 0] != 0 else R
        sub = rows[:, 1:]
        return LinearCode.from_generator(self.field, sub, self.n - 1) if sub.shape[0] else \
            LinearCode.zero(self.field, self.n - 1)

    def schur_product(self, other: "LinearCode") -> "LinearCode":
        self._same(other)
        if not self.k or not other.k:
            return LinearCode.zero(self.field, self.n)
        prods = self.field.mul(self.gen[:, None, :], other.gen[None, :, :]).reshape(-1, self.n)
        return LinearCode.from_generator(self.field, prods, self.n)

    def conjugate(self) -> "LinearCode":
        """The code C^q0 (coordinatewise conjugation)."""
        if not self.k:
            return self
        return LinearCode.from_generator(self.field, self.field.conj(self.gen), self.n)

    def standard_form(self) -> tuple[list[int], GFMatrix]:
        """Column permutation putting pivots first, and P with permuted generator (I | P)."""
        pivots = [int(np.flatnonzero(row)[0]) for row in self.gen]
        perm = pivots + [j for j in range(self.n) if j not in set(pivots)]
        return perm, GFMatrix(self.field, self.gen[:, perm][:, self.k:])

    # -- enumeration -----------------------------------------------------------

    def _check_size(self, limit: int = ENUMERATION_LIMIT) -> None:
        if self.size > limit:
            raise TooLargeToEnumerate(self.size, limit)

    def codeword_blocks(self, limit: int = ENUMERATION_LIMIT) -> Iterator[np.ndarray]:
        """All codewords in lexicographic message order, as 2-d array blocks.

        The first message symbol is the most significant; the zero word
        comes first.
        """
        self._check_size(limit)
        f, q, k = self.field, self.field.q, self.k
        inner_rows = 0
        while inner_rows < k and q ** (inner_rows + 1) <= _BLOCK:
            inner_rows += 1
        inner_rows = max(inner_rows, min(k, 1))
        split = k - inner_rows
        scalars = np.arange(q, dtype=np.int64)
        block = np.zeros((1, self.n), dtype=np.int64)
        for row in self.gen[split:]:
            mult = f.mul(scalars[:, None], row[None, :])
            block = f.add(block[:, None, :], mult[None, :, :]).reshape(-1, self.n)
        outer = self.gen[:split]
        for msg in itertools.product(range(q), repeat=split):
            if split:
                offset = f.dot(np.array(msg, dtype=np.int64)[None, :], outer)[0]
                yield f.add(block, offset[None, :])
            else:
                yield block

    def codewords(self, limit: int = ENUMERATION_LIMIT) -> np.ndarray:
        return np.vstack(list(self.codeword_blocks(limit)))

    def weight_distribution(self) -> WeightDistribution:
        counts = np.zeros(self.n + 1, dtype=np.int64)
        for block in self.codeword_blocks():
            counts += np.bincount(np.count_nonzero(block, axis=1), minlength=self.n + 1)
        return WeightDistribution(tuple(int(c) for c in counts))

    def min_distance(self) -> int | None:
        """Minimum nonzero weight; None for the zero code."""
        best = None
        for block in self.codeword_blocks():
            w = np.count_nonzero(block, axis=1)
            w = w[w > 0]
            if w.size:
                m = int(w.min())
                best = m if best is None else min(best, m)
                if best == 1:
                    break
        return best

    def dual_weight_distribution(self) -> WeightDistribution:
        """Weight distribution of the dual, enumerating whichever side is smaller."""
        if self.k <= self.n - self.k:
            return macwilliams_transform(self.weight_distribution(), self.field.q)
        return self.dual().weight_distribution()

    def distance(self, which: str = "primal") -> int | None:
        if which == "primal":
            if self.k > self.n - self.k and self.k < self.n:
                return self.dual().dual_weight_distribution().min_weight
            return self.min_distance()
        if which == "dual":
            return self.dual_weight_distribution().min_weight
        raise ValueError(f"unknown side {which!r}")

    def full_weight_codeword(self) -> list[FieldElement] | None:
        for block in self.codeword_blocks():
            hit = np.flatnonzero(np.count_nonzero(block, axis=1) == self.n)
            if hit.size:
                return [FieldElement(int(x), self.field) for x in block[hit[0]]]
        return None

    def is_mds(self, limit: int = 10**6) -> bool:
        """d = n - k + 1, checked as: every k columns of G are independent."""
        if self.k in (0, self.n):
            return True
        combos = list(itertools.islice(itertools.combinations(range(self.n), self.k), limit + 1))
        if len(combos) > limit:
            d = self.distance("primal")
            return d == self.n - self.k + 1
        mats = self.gen[:, np.array(combos)].transpose(1, 0, 2)
        return bool(np.all(batch_rank(self.field, mats) == self.k))

    def params(self) -> CodeParams:
        d = self.distance("primal")
        dd = self.distance("dual")
        return CodeParams(self.n, self.k, d, dd, self.field.q)


def from_generator(field: FieldSpec, rows) -> LinearCode:
    return LinearCode.from_generator(field, rows)


def macwilliams_transform(W: WeightDistribution | Sequence[int], q: int) -> WeightDistribution:
    """Weight distribution of the dual code, via Krawtchouk polynomials (exact)."""
    A = list(W.counts if isinstance(W, WeightDistribution) else W)
    n, size = len(A) - 1, sum(A)
    out = []
    for j in range(n + 1):
        total = 0
        for i, a in enumerate(A):
            if a:
                kj = sum((-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s)
                         for s in range(j + 1))
                total += a * kj
        if total % size:  # pragma: no cover
            raise AssertionError("MacWilliams transform is not integral")
        out.append(total // size)
    return WeightDistribution(tuple(out))


def macwilliams_selfdual_check(W: WeightDistribution | Sequence[int], n2: int, q: int) -> bool:
    """Whether the weight distribution satisfies the self-dual MacWilliams identities.

    For every 0 <= v <= 2n:
        sum_{j<=2n-v} C(2n-j, v) A_j == q^(n-v) * sum_{j<=v} C(2n-j, 2n-v) A_j
    evaluated exactly.  A failure certifies that no equivalent code is
    self-dual; success is only a necessary condition.
    """
    A = list(W.counts if isinstance(W, WeightDistribution) else W)
    if n2 % 2:
        raise OddLength(f"length {n2} is odd")
    if len(A) != n2 + 1:
        raise ShapeMismatch(f"expected {n2 + 1} weight counts, got {len(A)}")
    n = n2 // 2
    if sum(A) != q**n:
        return False
    for v in range(n2 + 1):
        lhs = sum(comb(n2 - j, v) * A[j] for j in range(n2 - v + 1))
        rhs = Fraction(q) ** (n - v) * sum(comb(n2 - j, n2 - v) * A[j] for j in range(v + 1))
        if lhs != rhs:
            return False
    return True
