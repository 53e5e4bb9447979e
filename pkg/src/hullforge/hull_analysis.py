"""Largest hull dimension over the scalings v·C of a code.

The hull of v·C is the kernel side of the Gram matrix
G diag(u) G^T (Euclidean, u = v^2) or G diag(u) conj(G)^T (Hermitian,
u = v^(q0+1)), so only u matters.  Multiplying v by a constant does not
change v·C either, so the first coordinate of v is fixed to 1.
"""

from __future__ import annotations

import itertools
import logging
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .code import EUCLIDEAN, HERMITIAN, LinearCode, _kind
from .errors import (EvenCharacteristicRequired, NoHermitianStructure, NotASubcode,
                     PreconditionFailed, SearchSpaceTooLarge, TooLargeToEnumerate)
from .field import FieldElement, FieldSpec
from .linalg import batch_rank

log = logging.getLogger(__name__)

SEARCH_LIMIT = 10**6
_CHUNK_ENTRIES = 1 << 20


@dataclass(frozen=True)
class MaxHullReport:
    best_h: int
    witness_v: tuple[int, ...]
    exhaustive: bool
    candidates_tried: int
    kind: str = EUCLIDEAN

    def witness(self, field: FieldSpec) -> list[FieldElement]:
        return [FieldElement(x, field) for x in self.witness_v]


def _verified(code: LinearCode, kind: str, v, h: int, exhaustive: bool, tried: int) -> MaxHullReport:
    got = code.scale(v).hull_dim(kind)
    if got != h:  # pragma: no cover
        raise AssertionError(f"witness gives hull {got}, search reported {h}")
    return MaxHullReport(h, tuple(int(x) for x in v), exhaustive, tried, kind)


def threads() -> int:
    """Worker count: HULLFORGE_THREADS if set, else the CPU count."""
    env = os.environ.get("HULLFORGE_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            log.warning("ignoring non-integer HULLFORGE_THREADS=%r", env)
    return os.cpu_count() or 1


def class_representatives(field: FieldSpec, kind: str = EUCLIDEAN) -> tuple[np.ndarray, np.ndarray]:
    """(v reps, u values): the smallest v for each attainable u = v^2 or v^(q0+1)."""
    r = np.arange(1, field.q)
    if _kind(kind) == HERMITIAN:
        if field.q0 is None:
            raise NoHermitianStructure(f"{field!r} has no Hermitian structure")
        u = field.power(r, field.q0 + 1)
    else:
        u = field.mul(r, r)
    _, first = np.unique(u, return_index=True)
    first.sort()
    return r[first], u[first]


def search_space_size(code: LinearCode, kind: str = EUCLIDEAN) -> int:
    reps, _ = class_representatives(code.field, kind)
    return len(reps) ** (code.n - 1)


def _outer_products(code: LinearCode, kind: str) -> np.ndarray:
    f, g = code.field, code.gen
    other = g if _kind(kind) == EUCLIDEAN else f.conj(g)
    # shape (n, k, k): column j contributes u_j g_j other_j^T
    return f.mul(g.T[:, :, None], other.T[:, None, :])


def _hull_dims(code: LinearCode, outer: np.ndarray, U: np.ndarray) -> np.ndarray:
    f = code.field
    grams = f.sum(f.mul(U[:, :, None, None], outer[None]), axis=1)
    return code.k - batch_rank(f, grams)


def max_hull_exhaustive(code: LinearCode, kind: str = EUCLIDEAN, limit: int = SEARCH_LIMIT) -> MaxHullReport:
    """Exact maximum hull dimension over all scalings of the code.

    Ties are broken by the lexicographically smallest witness.
    """
    kind = _kind(kind)
    n, k = code.n, code.k
    reps, us = class_representatives(code.field, kind)
    total = len(reps) ** (n - 1)
    if total > limit:
        raise SearchSpaceTooLarge(total, limit)
    ones = [1] * n
    if k == 0:
        return _verified(code, kind, ones, 0, True, 1)
    cap = min(k, n - k)
    outer = _outer_products(code, kind)
    chunk = max(1, _CHUNK_ENTRIES // max(1, n * k * k))
    idx_iter = itertools.product(range(len(reps)), repeat=n - 1)

    def chunks():
        while True:
            block = list(itertools.islice(idx_iter, chunk))
            if not block:
                return
            yield np.array(block, dtype=np.int64).reshape(len(block), n - 1)

    def evaluate(idx: np.ndarray) -> tuple[int, np.ndarray]:
        U = np.hstack([np.ones((idx.shape[0], 1), dtype=np.int64), us[idx]])
        dims = _hull_dims(code, outer, U)
        j = int(np.argmax(dims))
        return int(dims[j]), idx[j]

    best_h, best_idx, tried = -1, None, 0
    with ThreadPoolExecutor(max_workers=threads()) as pool:
        pending = []
        for block in chunks():
            pending.append((block.shape[0], pool.submit(evaluate, block)))
            if len(pending) >= 2 * threads():
                best_h, best_idx, tried = _drain(pending, best_h, best_idx, tried)
                if best_h == cap:
                    break
        if best_h < cap:
            best_h, best_idx, tried = _drain(pending, best_h, best_idx, tried)
        else:
            for _, fut in pending:
                fut.cancel()
    v = [1] + [int(reps[i]) for i in best_idx]
    return _verified(code, kind, v, best_h, True, tried)


def _drain(pending: list, best_h: int, best_idx, tried: int):
    # in submission order, so the first maximum seen is the lexicographically smallest
    while pending:
        size, fut = pending.pop(0)
        h, idx = fut.result()
        tried += size
        if h > best_h:
            best_h, best_idx = h, idx
    return best_h, best_idx, tried


def max_hull_randomized(code: LinearCode, kind: str = EUCLIDEAN, trials: int = 100,
                        seed: int = 0) -> MaxHullReport:
    """Best hull over ``trials`` scalings: all-ones first, then PCG64(seed) draws."""
    if trials < 1:
        raise PreconditionFailed("need at least one trial")
    kind = _kind(kind)
    f, n, k = code.field, code.n, code.k
    ones = np.ones((1, n), dtype=np.int64)
    if k == 0:
        return _verified(code, kind, ones[0], 0, False, 1)
    rng = np.random.Generator(np.random.PCG64(seed))
    V = np.vstack([ones, rng.integers(1, f.q, size=(trials - 1, n))])
    U = f.mul(V, V) if kind == EUCLIDEAN else f.power(V, f.q0 + 1)
    outer = _outer_products(code, kind)
    chunk = max(1, _CHUNK_ENTRIES // max(1, n * k * k))
    dims = np.concatenate([_hull_dims(code, outer, U[i:i + chunk]) for i in range(0, trials, chunk)])
    j = int(np.argmax(dims))
    return _verified(code, kind, V[j], int(dims[j]), False, trials)


def schur_lower_bound(code: LinearCode, sub: LinearCode, kind: str = EUCLIDEAN) -> int | None:
    """dim(sub) as a lower bound on the maximal hull of ``code``, or None.

    Euclidean: a full-weight w in (sub ⋆ sub)^⊥ gives v = sqrt(w) with
    v·sub self-orthogonal.  Hermitian: w is taken in the GF(q0)-subfield
    subcode of (sub ⋆ sub^q0)^⊥ and v is any element with v^(q0+1) = w.
    The resulting bound is only returned after the hull of v·code has been
    checked to reach dim(sub).
    """
    kind = _kind(kind)
    f = code.field
    if not sub.is_subcode_of(code):
        raise NotASubcode("the second code is not contained in the first")
    if sub.k == 0:
        return 0
    if kind == EUCLIDEAN:
        if f.p != 2:
            raise EvenCharacteristicRequired("square roots of arbitrary words need characteristic 2")
        if 2 * code.k > code.n:
            raise PreconditionFailed(f"need k <= n/2, got k={code.k}, n={code.n}")
        target = sub.schur_product(sub).dual()
        try:
            w = target.full_weight_codeword()
        except TooLargeToEnumerate as exc:
            warnings.warn(f"full-weight search skipped: {exc}")
            return None
        if w is None:
            return None
        v = [f.sqrt_rep(int(x)) for x in w]
    else:
        if f.q0 is None:
            raise NoHermitianStructure(f"{f!r} has no Hermitian structure")
        target = sub.schur_product(sub.conjugate()).dual()
        sub_elems = set(int(x) for x in f.subfield_reps(f.q0))
        w = None
        try:
            for block in target.codeword_blocks():
                ok = np.all(np.isin(block, list(sub_elems - {0})), axis=1)
                hit = np.flatnonzero(ok)
                if hit.size:
                    w = block[hit[0]]
                    break
        except TooLargeToEnumerate as exc:
            warnings.warn(f"full-weight search skipped: {exc}")
            return None
        if w is None:
            return None
        r = np.arange(f.q)
        norms = f.power(r, f.q0 + 1)
        v = [int(np.flatnonzero(norms == int(x))[0]) for x in w]
    h = code.scale(v).hull_dim(kind)
    if h < sub.k:
        warnings.warn(f"full-weight word found but the scaled hull has dimension {h} < {sub.k}; "
                      "no bound certified")
        return None
    return sub.k


def zero_sum_reachable(values: set[int], field: FieldSpec, w: int) -> bool:
    """Whether 0 is a sum of exactly w elements drawn (with repetition) from values."""
    reach = {0}
    vals = np.array(sorted(values), dtype=np.int64)
    for _ in range(w):
        cur = np.array(sorted(reach), dtype=np.int64)
        reach = set(int(x) for x in np.unique(field.add(cur[:, None], vals[None, :])))
    return 0 in reach


def dim1_max_hull(code: LinearCode, kind: str = EUCLIDEAN) -> int:
    """Maximal hull of a one-dimensional code, from the weight of its generator.

    The hull of v·<g> is nonzero iff sum_i u_i g_i^2 = 0 for u = v^2, i.e.
    iff 0 is a sum of wt(g) nonzero squares (Euclidean), or of wt(g)
    nonzero elements of GF(q0) (Hermitian).  In even characteristic with
    q >= 4 this is exactly wt(g) >= 2.
    """
    kind = _kind(kind)
    if code.k != 1:
        raise PreconditionFailed(f"need a one-dimensional code, got k={code.k}")
    f = code.field
    w = int(np.count_nonzero(code.gen[0]))
    if w < 2:
        return 0
    _, us = class_representatives(f, kind)
    return int(zero_sum_reachable(set(int(u) for u in us), f, w))


def dim1_rule_weight(code: LinearCode) -> int:
    """The weight-only rule for one-dimensional codes: 1 iff d >= 2."""
    if code.k != 1:
        raise PreconditionFailed(f"need a one-dimensional code, got k={code.k}")
    return int(np.count_nonzero(code.gen[0]) >= 2)
