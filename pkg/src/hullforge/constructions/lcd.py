"""From an LCD code over GF(2^s) to an equivalent code with a one-dimensional hull.

Only one coordinate is rescaled (a "lambda-disturbing" of the code).  With
A the generator row that is 1 at the chosen position and B the parity
row nonzero there (value c), write the unit vector
e = w1 A + w2 B + (shortened-code part) + (shortened-dual part).
Reading the chosen coordinate gives w1 + w2 c = 1, and the hull becomes
nonzero exactly when (s - 1) lambda^2 = s with s = w2 c.
"""

from __future__ import annotations

import numpy as np

from ..code import LinearCode
from ..errors import PreconditionFailed, TheoremCaseViolation
from ..field import FieldElement
from ..linalg import rref_array, solve_array


def hypothesis_failures(code: LinearCode, position: int) -> list[str]:
    """Names of the unmet hypotheses at ``position`` (empty when all hold)."""
    f = code.field
    failed = []
    if f.p != 2 or f.q < 4:
        failed.append("field is GF(2^s) with s >= 2")
    if not 0 <= position < code.n:
        return failed + ["position in range"]
    if code.k == 0 or code.k == code.n:
        return failed + ["0 < k < n"]
    dual = code.dual()
    if code.hull_dim() != 0:
        failed.append("code is LCD")
    if not np.all(code.gen.any(axis=0)):
        failed.append("dual distance >= 2")
    if not np.all(dual.gen.any(axis=0)):
        failed.append("distance >= 2")
    if code.n < 2:
        return failed + ["length >= 2"]
    if code.shorten(position).hull_dim() != 0:
        failed.append("shortened code is LCD")
    if dual.shorten(position).hull_dim() != 0:
        failed.append("shortened dual is LCD")
    return failed


def find_position(code: LinearCode) -> int | None:
    """First coordinate at which every hypothesis holds."""
    for i in range(code.n):
        if not hypothesis_failures(code, i):
            return i
    return None


def _split_at(field, gen: np.ndarray, position: int) -> tuple[np.ndarray, np.ndarray]:
    """(row nonzero at position, rows vanishing there) for the row space of gen."""
    n = gen.shape[1]
    order = [position] + [j for j in range(n) if j != position]
    R, _ = rref_array(field, gen[:, order], ncols=1)
    back = np.argsort(order)
    R = R[:, back]
    return R[0], R[1:]


def disturbance_coefficients(code: LinearCode, position: int) -> dict:
    """w1, w2 and c from the decomposition of the unit vector at ``position``."""
    f = code.field
    A, rest_c = _split_at(f, code.gen, position)
    B, rest_d = _split_at(f, code.dual().gen, position)
    basis = np.vstack([A[None, :], B[None, :], rest_c, rest_d])
    e = np.zeros(code.n, dtype=np.int64)
    e[position] = 1
    w = solve_array(f, basis, e)
    if w is None:  # pragma: no cover
        raise TheoremCaseViolation("unit vector outside C + C^perp; code is not LCD")
    return {"w1": int(w[0]), "w2": int(w[1]), "c": int(B[position]), "A": A, "B": B}


def lambda_disturb(code: LinearCode, position: int | None = None
                   ) -> tuple[LinearCode, FieldElement, int]:
    """Rescale one coordinate so the Euclidean hull becomes one-dimensional.

    Returns the new code, lambda and the position used.  With
    ``position=None`` the first coordinate satisfying the hypotheses is
    used.
    """
    f = code.field
    if position is None:
        position = find_position(code)
        if position is None:
            raise PreconditionFailed("no coordinate satisfies all hypotheses: "
                                     + "; ".join(hypothesis_failures(code, 0)))
    failed = hypothesis_failures(code, position)
    if failed:
        raise PreconditionFailed("unmet hypotheses: " + "; ".join(failed))

    co = disturbance_coefficients(code, position)
    w1, w2, c = co["w1"], co["w2"], co["c"]
    if w2 == 0:
        lam = int(f.sub(w1, 1))
    elif w1 == 0:
        t = int(f.sub(f.mul(w2, c), 1))
        if t == 0:
            raise TheoremCaseViolation("w1 = 0 and w2 c = 1")
        lam = int(f.inv(t))
    else:
        s = int(f.mul(w2, c))
        lam = f.sqrt_rep(int(f.div(s, f.sub(s, 1))))
    if not lam:
        raise TheoremCaseViolation(f"lambda = 0 (w1={w1}, w2={w2}, c={c})")

    v = np.ones(code.n, dtype=np.int64)
    v[position] = lam
    out = code.scale(v)
    h = out.hull_dim()
    if h != 1:
        raise TheoremCaseViolation(f"disturbed code has hull dimension {h}, expected 1")
    return out, FieldElement(lam, f), position
