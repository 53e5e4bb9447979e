from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from hullforge import gf
from hullforge.constructions.rs import GrsSpec, grs, grs_with_hull
from hullforge.eaqec import (EaqecParams, NotApplicable, TableRow, Verdict, classify, cor72_from_code,
                             css_from_code, css_from_hull, default_table_rows, family_params,
                             parse_table_rows, singleton_k_max, table_emit)
from hullforge.errors import CodeFileError, NoHermitianStructure, PreconditionFailed

EXPECTED_TABLES = (Path(__file__).parent / "data" / "tables_expected.txt").read_text()


def test_tables_are_frozen():
    assert table_emit(default_table_rows()) == EXPECTED_TABLES
    assert table_emit(default_table_rows()) == table_emit(default_table_rows())


def test_table_singleton_column_matches_formula():
    for row in default_table_rows():
        base = EaqecParams(row.n, row.k, row.d, row.k, row.q0s[0])
        line = [x for x in table_emit([row]).splitlines() if not x.startswith("#")][0]
        assert line.endswith(f"singleton={singleton_k_max(base)}-h")


def test_numeric_table_mode():
    text = table_emit([TableRow(1, 4, 2, 2, (2,))], symbolic=False)
    assert text.splitlines() == ["# Table 1: q^2=4, q=2",
                                 "[[4, 2, 2, 2]]_2\tsingleton=4",
                                 "[[4, 1, 2, 1]]_2\tsingleton=3",
                                 "[[4, 0, 2, 0]]_2\tsingleton=2"]
    assert len(table_emit([TableRow(1, 4, 2, 2, (2,))], symbolic=False, h_range=(1, 1)).splitlines()) == 2


def test_table_parser_errors():
    with pytest.raises(CodeFileError):
        parse_table_rows("4 2\n")
    with pytest.raises(CodeFileError):
        parse_table_rows("table 1 2\n4\n")
    with pytest.raises(PreconditionFailed):
        parse_table_rows("table 1 2\n5 2\n")


@given(st.integers(2, 40).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))).flatmap(
    lambda t: st.tuples(st.just(t), st.integers(0, min(t[1], t[0] - t[1])), st.integers(1, 20),
                        st.integers(1, 20))))
def test_css_outputs_swap_under_duality(t):
    (n, k), h, d, dd = t
    a1, a2 = css_from_hull(n, k, d, dd, h, 4)
    b1, b2 = css_from_hull(n, n - k, dd, d, h, 4)
    assert a1 == b2 and a2 == b1
    assert a1.k + a1.c == n - 2 * h


def test_css_hermitian_field_size():
    a, _ = css_from_hull(6, 3, 4, 4, 1, 16, "hermitian")
    assert a.q == 4
    with pytest.raises(NoHermitianStructure):
        css_from_hull(6, 3, 4, 4, 1, 8, "hermitian")
    with pytest.raises(PreconditionFailed):
        css_from_hull(6, 3, 4, 4, 4, 16)


def test_classification():
    # n + c + 2 - 2d = 5
    assert classify(EaqecParams(7, 5, 3, 2, 8)) == Verdict.MDS
    assert classify(EaqecParams(7, 3, 3, 2, 8)) == Verdict.ALMOST_MDS
    assert classify(EaqecParams(7, 4, 3, 2, 8)) == Verdict.OTHER
    assert classify(EaqecParams(7, 6, 3, 2, 8)) == Verdict.BOUND_VIOLATED
    far = EaqecParams(4, 1, 4, 0, 2)
    assert singleton_k_max(far) is NotApplicable
    assert classify(far) == Verdict.OTHER
    assert str(Verdict.ALMOST_MDS) == "almostMDS"


def test_params_format():
    assert str(EaqecParams(10, 3, 5, 2, 4)) == "[[10, 3, 5, 2]]_4"
    assert str(family_params("cor73", 6, None, 1, 3)) == "[[6, 2, ≥3, 2]]_8"


@pytest.mark.parametrize("s,n", [(3, 7), (4, 10)])
def test_grs_family_end_to_end(s, n):
    for k in range(1, n // 2 + 1):
        for h in range(k + 1):
            derived, code = cor72_from_code(n, k, h, s)
            assert derived == family_params("cor72", n, k, h, s)
            assert classify(derived) == Verdict.MDS
            assert code.hull_dim() == h


def test_family_ranges():
    with pytest.raises(PreconditionFailed):
        family_params("cor72", 8, 2, 1, 3)
    with pytest.raises(PreconditionFailed):
        family_params("cor72", 6, 4, 1, 3)
    with pytest.raises(PreconditionFailed):
        family_params("cor73", 7, None, 1, 3)
    # q + sqrt(4q) - 2 = 11 for q = 8
    assert family_params("cor73", 10, None, 0, 3).n == 10
    with pytest.raises(PreconditionFailed):
        family_params("cor73", 12, None, 0, 3)
    with pytest.raises(PreconditionFailed):
        family_params("nope", 4, 1, 0, 2)


def test_css_from_code_uses_actual_hull():
    f = gf(8)
    C, _ = grs_with_hull(f, list(range(1, 8)), 3, 2)
    first, second = css_from_code(C)
    assert first == EaqecParams(7, 1, 5, 2, 8)
    assert second == EaqecParams(7, 2, 4, 1, 8)
    plain = grs(GrsSpec(f, tuple(range(1, 8)), 3))
    assert css_from_code(plain)[0].k == 3 - plain.hull_dim()
