from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hullforge import gf
from hullforge.constructions.rs import (GrsSpec, TrsSpec, grs, grs_with_hull, multiplicative_subgroup,
                                        rs_dual_vector, trs, trs_dual, trs_dual_family, trs_with_hull)
from hullforge.errors import (DuplicatePoints, EvenCharacteristicRequired, NonzeroPointsRequired,
                              NotASubgroup, PreconditionFailed)


def test_rs_is_mds():
    f = gf(8)
    C = grs(GrsSpec(f, tuple(range(1, 8)), 3))
    p = C.params()
    assert (p.n, p.k, p.d, p.d_dual) == (7, 3, 5, 4)
    assert C.is_mds()


@pytest.mark.parametrize("q", [5, 7, 8, 9, 16])
def test_dual_vector_closed_form(q):
    f = gf(q)
    pts = list(range(min(q, 6)))
    x = [e.rep for e in rs_dual_vector(f, pts)]
    # x_i is proportional to prod_{j != i} (a_i - a_j)^-1
    prods = []
    for i, a in enumerate(pts):
        d = 1
        for j, b in enumerate(pts):
            if j != i:
                d = int(f.mul(d, f.sub(a, b)))
        prods.append(int(f.inv(d)))
    scale = int(f.div(x[0], prods[0]))
    assert x == [int(f.mul(scale, p)) for p in prods]
    for k in range(1, len(pts)):
        C = grs(GrsSpec(f, tuple(pts), k))
        assert C.dual() == grs(GrsSpec(f, tuple(pts), len(pts) - k, tuple(x)))


@pytest.mark.parametrize("q,n", [(8, 7), (16, 9), (16, 15), (32, 12)])
def test_grs_with_every_hull(q, n):
    f = gf(q)
    pts = list(range(1, n + 1))
    for k in range(1, n):
        for l in range(0, min(k, n - k) + 1):
            C, v = grs_with_hull(f, pts, k, l)
            assert C.hull_dim() == l
            assert C.hull_dim_gram() == l
            assert C.k == k and len(v) == n


def test_grs_errors():
    f = gf(8)
    with pytest.raises(DuplicatePoints):
        GrsSpec(f, (1, 1, 2), 2)
    with pytest.raises(PreconditionFailed):
        GrsSpec(f, (1, 2), 3)
    with pytest.raises(EvenCharacteristicRequired):
        grs_with_hull(gf(9), [1, 2, 3], 1, 0)
    with pytest.raises(NonzeroPointsRequired):
        grs_with_hull(f, [0, 1, 2], 1, 0)
    with pytest.raises(PreconditionFailed):
        grs_with_hull(f, [1, 2, 3, 4], 2, 3)


def test_subgroup():
    f = gf(64)
    H = multiplicative_subgroup(f, 7)
    assert len(set(H)) == 7 and H[0] == 1
    with pytest.raises(NotASubgroup):
        multiplicative_subgroup(f, 5)
    with pytest.raises(NotASubgroup):
        TrsSpec(f, (1, 2, 3), 1, 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 63), st.integers(1, 5))
def test_trs_dual_identity(eta, k):
    f = gf(64)
    spec = TrsSpec(f, multiplicative_subgroup(f, 7), eta, k)
    family, x = trs_dual(spec)
    C = trs(spec)
    assert family.scale([e.rep for e in x]) == C.dual()
    assert family == trs_dual_family(spec)


def test_trs_non_mds_exactly_on_subgroup():
    # n = 7, k = 3 over GF(64): the twisted code fails to be MDS exactly
    # when eta lies in the length-7 subgroup
    f = gf(64)
    H = multiplicative_subgroup(f, 7)
    bad = {eta for eta in range(1, 64) if not trs(TrsSpec(f, H, eta, 3)).is_mds()}
    assert bad == set(H)


@pytest.mark.parametrize("k,l", [(3, 1), (4, 1), (4, 2)])
def test_trs_with_hull(k, l):
    f = gf(64)
    H = multiplicative_subgroup(f, 9)
    for eta in (2, 5, 17):
        spec = TrsSpec(f, H, eta, k)
        C, v = trs_with_hull(spec, l)
        assert C.hull_dim() == l
        assert C == trs(spec).scale([e.rep for e in v])


def test_scaling_keeps_trs_distance():
    f = gf(64)
    spec = TrsSpec(f, multiplicative_subgroup(f, 9), 5, 3)
    C, _ = trs_with_hull(spec, 1)
    assert C.params().d == trs(spec).params().d


def test_trs_with_hull_ranges():
    f = gf(64)
    spec = TrsSpec(f, multiplicative_subgroup(f, 7), 3, 3)
    with pytest.raises(PreconditionFailed):
        trs_with_hull(spec, 2)
    with pytest.raises(PreconditionFailed):
        trs_with_hull(TrsSpec(f, multiplicative_subgroup(f, 7), 3, 4), 1)


def test_grs_contains_monomial_evaluations():
    f = gf(16)
    spec = GrsSpec(f, (1, 2, 3), 2, (1, 1, 1))
    G = grs(spec)
    rows = np.array([[1, 1, 1], [1, 2, 3]])
    assert G.contains(rows[0]) and G.contains(rows[1])
