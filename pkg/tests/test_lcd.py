from __future__ import annotations

import pytest

from hullforge import LinearCode, gf
from hullforge.acceptance import all_codes
from hullforge.constructions.lcd import (disturbance_coefficients, find_position, hypothesis_failures,
                                         lambda_disturb)
from hullforge.errors import PreconditionFailed


def test_every_eligible_gf4_code_gets_hull_one():
    f = gf(4)
    eligible = 0
    for C in all_codes(f, 4, 2):
        for pos in range(4):
            if hypothesis_failures(C, pos):
                continue
            eligible += 1
            out, lam, used = lambda_disturb(C, pos)
            assert used == pos
            assert out.hull_dim() == 1
            assert lam.rep != 0
            co = disturbance_coefficients(C, pos)
            assert int(f.add(co["w1"], f.mul(co["w2"], co["c"]))) == 1
    assert eligible > 0


def test_auto_position_matches_find_position():
    f = gf(8)
    for C in all_codes(f, 3, 1):
        pos = find_position(C)
        if pos is None:
            with pytest.raises(PreconditionFailed):
                lambda_disturb(C)
        else:
            assert lambda_disturb(C)[2] == pos


def test_hypotheses_are_named():
    C = LinearCode.from_generator(gf(4), [[1, 0, 0]])
    failed = hypothesis_failures(C, 0)
    assert "distance >= 2" not in failed or "dual distance >= 2" in failed
    assert "dual distance >= 2" in failed
    assert hypothesis_failures(LinearCode.from_generator(gf(3), [[1, 1, 1]]), 0)[0].startswith("field")
    with pytest.raises(PreconditionFailed):
        lambda_disturb(C, 0)
