"""Scaling a self-dual [2n, n] code down to any hull dimension h < n."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from ..code import EUCLIDEAN, HERMITIAN, LinearCode
from ..errors import NoHermitianStructure, NoValidLambda, PreconditionFailed, TheoremCaseViolation
from ..field import FieldElement, FieldSpec


class SelfDualToHull(NamedTuple):
    code: LinearCode
    v: list[FieldElement]
    perm: list[int]


def hull_lambda(field: FieldSpec, kind: str = EUCLIDEAN) -> int:
    """Smallest-rep nonzero lambda with lambda^2 != 1 (or lambda^(q0+1) != 1)."""
    r = np.arange(1, field.q)
    if kind == HERMITIAN:
        if field.q0 is None:
            raise NoHermitianStructure(f"{field!r} has no Hermitian structure")
        ok = field.power(r, field.q0 + 1) != 1
    else:
        ok = field.mul(r, r) != 1
    if not ok.any():
        raise NoValidLambda(f"every nonzero element of {field!r} fails the lambda condition ({kind})")
    return int(r[ok][0])


def selfdual_to_hull(code: LinearCode, h: int, kind: str = EUCLIDEAN) -> SelfDualToHull:
    """Equivalent code with hull of dimension exactly h.

    The code is put in standard form (I | P) by the column permutation
    ``perm``; the first n - h coordinates are then multiplied by lambda.
    The returned code is ``code.permute(perm).scale(v)``.
    """
    pred = "self_dual" if kind == EUCLIDEAN else "hermitian_self_dual"
    if not code.predicate(pred):
        raise PreconditionFailed(f"input is not {pred.replace('_', ' ')}")
    half = code.k
    if not 0 <= h < half:
        raise PreconditionFailed(f"need 0 <= h < {half}, got {h}")
    lam = hull_lambda(code.field, kind)
    perm, _ = code.standard_form()
    v = [lam] * (half - h) + [1] * (code.n - half + h)
    out = code.permute(perm).scale(v)
    got = out.hull_dim(kind)
    if got != h:  # pragma: no cover
        raise TheoremCaseViolation(f"scaled code has hull {got}, expected {h}")
    return SelfDualToHull(out, [FieldElement(x, code.field) for x in v], perm)
