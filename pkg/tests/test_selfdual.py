from __future__ import annotations

import numpy as np
import pytest

from hullforge import LinearCode, gf
from hullforge.constructions.selfdual import hull_lambda, selfdual_to_hull
from hullforge.errors import NoHermitianStructure, NoValidLambda, PreconditionFailed


def identity_pair(q: int, n: int, a: int) -> LinearCode:
    """(I | a I), self-dual when a^2 = -1."""
    I = np.eye(n, dtype=np.int64)
    return LinearCode.from_generator(gf(q), np.hstack([I, a * I]))


def test_lambda_choice():
    assert hull_lambda(gf(4)) == 2
    assert hull_lambda(gf(5)) == 2
    assert hull_lambda(gf(9), "hermitian") == 4  # reps 1, 2, 3 all have norm 1
    with pytest.raises(NoValidLambda):
        hull_lambda(gf(3))
    with pytest.raises(NoValidLambda):
        hull_lambda(gf(2))
    with pytest.raises(NoValidLambda):
        hull_lambda(gf(4), "hermitian")
    with pytest.raises(NoHermitianStructure):
        hull_lambda(gf(8), "hermitian")


@pytest.mark.parametrize("q,a,n", [(4, 1, 3), (5, 2, 3), (13, 5, 4), (16, 1, 4), (8, 1, 3)])
def test_every_hull_dimension(q, a, n):
    C = identity_pair(q, n, a)
    for h in range(n):
        res = selfdual_to_hull(C, h)
        assert res.code.hull_dim() == h
        assert res.code == C.permute(res.perm).scale([x.rep for x in res.v])
        assert (res.code.params().k, res.code.params().d) == (C.k, C.params().d)


def test_hermitian_version():
    f = gf(16)
    # (I | a I) is Hermitian self-dual when a^(q0+1) = -1 = 1
    C = identity_pair(16, 3, 1)
    assert C.predicate("hermitian_self_dual")
    for h in range(3):
        assert selfdual_to_hull(C, h, "hermitian").code.hull_dim("hermitian") == h
    assert f.q0 == 4


def test_preconditions():
    with pytest.raises(PreconditionFailed):
        selfdual_to_hull(identity_pair(5, 2, 1), 0)
    with pytest.raises(PreconditionFailed):
        selfdual_to_hull(identity_pair(5, 2, 2), 2)
