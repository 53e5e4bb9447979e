from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hullforge import LinearCode, gf
from hullforge.errors import CodeFileError
from hullforge.io import parse_code_file, read_code, serialize_code, write_code

GOOD = """# [4, 2] over GF(4)
2 2 4 2
modulus 1 1 1
1 0 1 0
0 1 0 1
"""


def test_parse_and_serialize():
    C = parse_code_file(GOOD)
    assert C.field is gf(4)
    assert C.gen.tolist() == [[1, 0, 1, 0], [0, 1, 0, 1]]
    assert serialize_code(C) == "2 2 4 2\nmodulus 1 1 1\n1 0 1 0\n0 1 0 1\n"


def test_serialization_is_canonical():
    a = parse_code_file("3 1 3 2\nmodulus 0 1\n2 1 0\n0 0 2\n")
    b = parse_code_file("# same code\n3 1 3 2\nmodulus 0 1\n1 2 1\n1 2 0\n")
    assert serialize_code(a) == serialize_code(b) == "3 1 3 2\nmodulus 0 1\n1 2 0\n0 0 1\n"


def test_zero_code():
    C = parse_code_file("2 1 3 0\nmodulus 1 1\n")
    assert C.k == 0 and C.n == 3


@pytest.mark.parametrize("text,line,col,fragment", [
    ("", 1, None, "empty"),
    ("2 2 4\n", 1, 1, "header"),
    ("4 1 4 2\nmodulus 0 1\n", 1, 1, "not prime"),
    ("2 0 4 2\n", 1, 3, "extension degree"),
    ("2 2 0 0\n", 1, 5, "length"),
    ("2 2 2 3\n", 1, 7, "exceeds"),
    ("2 2 4 2\n", 2, 1, "modulus"),
    ("2 2 4 2\nmod 1 1 1\n", 2, 1, "expected 'modulus'"),
    ("2 2 4 2\nmodulus 1 1\n", 2, 1, "needs 3 coefficients"),
    ("2 2 4 2\nmodulus 1 2 1\n", 2, 11, "not in [0, 2)"),
    ("2 2 4 2\nmodulus 1 0 1\n1 0 0 0\n0 1 0 0\n", 2, 9, "irreducible"),
    ("2 2 4 2\nmodulus 1 1 1\n1 0 1 0\n", 4, None, "expected 2 generator rows"),
    ("2 2 4 2\nmodulus 1 1 1\n1 0 1\n0 1 0 1\n", 3, None, "row 1 has 3 entries"),
    ("2 2 4 2\nmodulus 1 1 1\n1 0 1 0\n0 1 0 4\n", 4, 7, "rep 4"),
    ("2 2 4 2\nmodulus 1 1 1\n1 0 x 0\n0 1 0 1\n", 3, 5, "non-negative"),
])
def test_errors_carry_position(text, line, col, fragment):
    with pytest.raises(CodeFileError) as exc:
        parse_code_file(text)
    assert exc.value.line == line
    assert exc.value.column == col
    assert fragment in str(exc.value)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4, 8, 9, 25]), st.integers(1, 6), st.integers(0, 2**32 - 1), st.data())
def test_round_trip(q, n, seed, data):
    k = data.draw(st.integers(1, n))
    rng = np.random.Generator(np.random.PCG64(seed))
    C = LinearCode.from_generator(gf(q), rng.integers(0, q, size=(k, n)), n)
    text = serialize_code(C)
    D = parse_code_file(text)
    assert D == C
    assert serialize_code(D) == text


def test_file_helpers(tmp_path):
    C = parse_code_file(GOOD)
    path = tmp_path / "c.txt"
    write_code(C, str(path))
    assert read_code(str(path)) == C
