"""Generalized and twisted Reed-Solomon codes with a prescribed hull.

In characteristic 2 every element is a square, so for a family whose dual
is ``x · C'`` the hull of ``v · C`` is ``C ∩ (x / v^2) · C'`` and ``v`` can
be solved for coordinatewise from any target multiplier ``u = x / v^2``.
The constructions below pick ``u_i = a_i^(k - l)``, which leaves exactly l
common monomials between the two evaluation spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..code import LinearCode
from ..errors import (DuplicatePoints, EvenCharacteristicRequired, NonzeroPointsRequired,
                      NotASubgroup, PreconditionFailed, TheoremCaseViolation)
from ..field import FieldElement, FieldSpec
from ..linalg import kernel_array


def _reps(values) -> list[int]:
    return [int(v) for v in values]


@dataclass(frozen=True)
class GrsSpec:
    field: FieldSpec
    points: tuple[int, ...]
    k: int
    multipliers: tuple[int, ...] | None = None

    def __post_init__(self):
        pts = tuple(_reps(self.points))
        object.__setattr__(self, "points", pts)
        if len(set(pts)) != len(pts):
            raise DuplicatePoints(f"evaluation points repeat: {pts}")
        n = len(pts)
        if self.multipliers is None:
            object.__setattr__(self, "multipliers", (1,) * n)
        else:
            mult = tuple(_reps(self.multipliers))
            if len(mult) != n or 0 in mult:
                raise PreconditionFailed("need one nonzero multiplier per point")
            object.__setattr__(self, "multipliers", mult)
        if not 1 <= self.k <= n or n > self.field.q:
            raise PreconditionFailed(f"need 1 <= k <= n <= q, got k={self.k}, n={n}, q={self.field.q}")

    @property
    def n(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class TrsSpec:
    field: FieldSpec
    points: tuple[int, ...]
    eta: int
    k: int

    def __post_init__(self):
        pts = tuple(_reps(self.points))
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "eta", int(self.eta))
        f = self.field
        if self.eta == 0:
            raise PreconditionFailed("eta must be nonzero")
        s = set(pts)
        if len(s) != len(pts):
            raise DuplicatePoints(f"evaluation points repeat: {pts}")
        if 0 in s or any(int(f.mul(a, b)) not in s for a in s for b in s):
            raise NotASubgroup(f"{sorted(s)} is not a multiplicative subgroup of {f!r}")
        if not 1 <= self.k <= len(pts) - 1:
            raise PreconditionFailed(f"need 1 <= k <= n - 1, got k={self.k}, n={len(pts)}")

    @property
    def n(self) -> int:
        return len(self.points)


def multiplicative_subgroup(field: FieldSpec, n: int) -> tuple[int, ...]:
    """The order-n subgroup of GF(q)^*, listed as powers of its smallest-rep generator's image."""
    if (field.q - 1) % n:
        raise NotASubgroup(f"{n} does not divide {field.q - 1}")
    g = int(field.power(np.array(field.primitive), (field.q - 1) // n))
    return tuple(int(field.power(np.array(g), i)) for i in range(n))


def evaluation_matrix(field: FieldSpec, polys: Sequence[Sequence[int]], points: Sequence[int]) -> np.ndarray:
    """Rows (f(a_1), ..., f(a_n)) for ascending coefficient lists f."""
    pts = np.array(points, dtype=np.int64)
    out = np.zeros((len(polys), len(pts)), dtype=np.int64)
    for r, coeffs in enumerate(polys):
        acc = np.zeros_like(pts)
        for c in reversed(list(coeffs)):
            acc = field.add(field.mul(acc, pts), int(c))
        out[r] = acc
    return out


def _monomials(k: int) -> list[list[int]]:
    return [[0] * i + [1] for i in range(k)]


def grs(spec: GrsSpec) -> LinearCode:
    """v · RS(n, k): rows (v_j a_j^i) for i < k."""
    f = spec.field
    rows = evaluation_matrix(f, _monomials(spec.k), spec.points)
    rows = f.mul(rows, np.array(spec.multipliers, dtype=np.int64)[None, :])
    return LinearCode.from_generator(f, rows, spec.n)


def rs_dual_vector(field: FieldSpec, points: Sequence[int]) -> list[FieldElement]:
    """Full-weight x with V x^T = 0 for the (n-1) x n Vandermonde V; x_1 = 1.

    Then RS(n, k)^⊥ = x · RS(n, n - k) for every k.
    """
    pts = _reps(points)
    if len(set(pts)) != len(pts):
        raise DuplicatePoints(f"evaluation points repeat: {pts}")
    n = len(pts)
    if n < 2:
        raise PreconditionFailed("need at least two points")
    V = evaluation_matrix(field, _monomials(n - 1), pts)
    K = kernel_array(field, V)
    if K.shape[0] != 1 or np.any(K[0] == 0):  # pragma: no cover
        raise AssertionError("Vandermonde kernel is not spanned by a full-weight vector")
    x = field.mul(int(field.inv(int(K[0, 0]))), K[0])
    return [FieldElement(int(a), field) for a in x]


def _sqrt_ratio(field: FieldSpec, x: Sequence[int], u: Sequence[int]) -> list[int]:
    ratio = field.div(np.array(_reps(x)), np.array(_reps(u)))
    return [field.sqrt_rep(int(r)) for r in ratio]


def grs_with_hull(field: FieldSpec, points: Sequence[int], k: int, l: int
                  ) -> tuple[LinearCode, list[FieldElement]]:
    """A GRS code v · RS(n, k) whose Euclidean hull has dimension exactly l."""
    if field.p != 2:
        raise EvenCharacteristicRequired("square roots of arbitrary ratios need characteristic 2")
    pts = _reps(points)
    if 0 in pts:
        raise NonzeroPointsRequired("evaluation points must be nonzero")
    n = len(pts)
    if not 1 <= k < n:
        raise PreconditionFailed(f"need 1 <= k < n, got k={k}, n={n}")
    if not 0 <= l <= min(k, n - k):
        raise PreconditionFailed(f"hull dimension {l} outside [0, {min(k, n - k)}]")
    x = rs_dual_vector(field, pts)
    u = field.power(np.array(pts), k - l)
    v = _sqrt_ratio(field, x, u)
    code = grs(GrsSpec(field, tuple(pts), k, tuple(v)))
    h = code.hull_dim()
    if h != l:  # pragma: no cover
        raise TheoremCaseViolation(f"constructed hull has dimension {h}, expected {l}")
    return code, [FieldElement(a, field) for a in v]


def trs_basis(spec: TrsSpec) -> list[list[int]]:
    """1 + eta x^k, x, ..., x^(k-1)."""
    g0 = [1] + [0] * (spec.k - 1) + [spec.eta]
    return [g0] + _monomials(spec.k)[1:]


def trs(spec: TrsSpec) -> LinearCode:
    rows = evaluation_matrix(spec.field, trs_basis(spec), spec.points)
    return LinearCode.from_generator(spec.field, rows, spec.n)


def trs_dual_family(spec: TrsSpec) -> LinearCode:
    """Evaluation code of 1, x, ..., x^(n-k-2), x^(n-k-1) - eta x^(n-1)."""
    f, n, k = spec.field, spec.n, spec.k
    polys = _monomials(n - k - 1)
    last = [0] * n
    last[n - k - 1] = 1
    last[n - 1] = int(f.sub(last[n - 1], spec.eta))
    polys.append(last)
    return LinearCode.from_generator(f, evaluation_matrix(f, polys, spec.points), n)


def trs_dual(spec: TrsSpec) -> tuple[LinearCode, list[FieldElement]]:
    """The dual family code C' and x with x · C' = trs(spec)^⊥ (checked)."""
    family = trs_dual_family(spec)
    x = rs_dual_vector(spec.field, spec.points)
    if family.scale(x) != trs(spec).dual():  # pragma: no cover
        raise AssertionError("twisted RS dual is not x times the dual family")
    return family, x


def trs_with_hull(spec: TrsSpec, l: int) -> tuple[LinearCode, list[FieldElement]]:
    """A scaled twisted RS code with Euclidean hull of dimension exactly l."""
    f, n, k = spec.field, spec.n, spec.k
    if f.p != 2:
        raise EvenCharacteristicRequired("square roots of arbitrary ratios need characteristic 2")
    if (f.q - 1) % n:
        raise PreconditionFailed(f"n = {n} does not divide q - 1 = {f.q - 1}")
    if 2 * k > n:
        raise PreconditionFailed(f"need k <= n/2, got k={k}, n={n}")
    if not 1 <= l <= k - 2:
        raise PreconditionFailed(f"hull dimension {l} outside [1, {k - 2}]")
    _, x = trs_dual(spec)
    u = f.power(np.array(spec.points), k - l)
    v = _sqrt_ratio(f, x, u)
    code = trs(spec).scale(v)
    h = code.hull_dim()
    if h != l:  # pragma: no cover
        raise TheoremCaseViolation(f"constructed hull has dimension {h}, expected {l}")
    return code, [FieldElement(a, f) for a in v]
