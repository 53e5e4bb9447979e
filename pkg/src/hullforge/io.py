"""Plain-text code files.

::

    # comment lines start with '#'
    p m n k
    modulus c0 c1 ... cm
    <k rows of n integer reps>

The modulus lists ascending coefficients of a monic irreducible polynomial
of degree m over GF(p).  Serialization always writes the RREF generator,
so ``serialize(parse(text))`` is the canonical form of ``text``.
"""

from __future__ import annotations

from .code import LinearCode
from .errors import CodeFileError, HullforgeError
from .field import FieldSpec, is_prime


def _tokens(line: str) -> list[tuple[str, int]]:
    """Whitespace-separated tokens with their 1-based columns."""
    out, i = [], 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def _int(tok: tuple[str, int], lineno: int, what: str) -> int:
    text, col = tok
    if not text.isdigit():
        raise CodeFileError(f"{what}: expected a non-negative decimal integer, got {text!r}", lineno, col)
    return int(text)


def parse_code_file(text: str) -> LinearCode:
    lines = [(i, raw.rstrip()) for i, raw in enumerate(text.split("\n"), 1)]
    body = [(i, _tokens(line)) for i, line in lines if line.strip() and not line.lstrip().startswith("#")]
    if not body:
        raise CodeFileError("empty file: missing 'p m n k' header", 1, None)

    lineno, head = body[0]
    if len(head) != 4:
        raise CodeFileError(f"header must be 'p m n k', found {len(head)} fields", lineno, 1)
    p, m, n, k = (_int(t, lineno, name) for t, name in zip(head, ("p", "m", "n", "k")))
    if not is_prime(p):
        raise CodeFileError(f"characteristic {p} is not prime", lineno, head[0][1])
    if m < 1:
        raise CodeFileError("extension degree m must be >= 1", lineno, head[1][1])
    if n < 1:
        raise CodeFileError("length n must be >= 1", lineno, head[2][1])
    if k > n:
        raise CodeFileError(f"k = {k} exceeds n = {n}", lineno, head[3][1])

    if len(body) < 2:
        raise CodeFileError("missing 'modulus' line", lineno + 1, 1)
    lineno, mod = body[1]
    if mod[0][0] != "modulus":
        raise CodeFileError(f"expected 'modulus', got {mod[0][0]!r}", lineno, mod[0][1])
    if len(mod) != m + 2:
        raise CodeFileError(f"modulus needs {m + 1} coefficients, found {len(mod) - 1}", lineno, mod[0][1])
    coeffs = []
    for tok in mod[1:]:
        c = _int(tok, lineno, "modulus coefficient")
        if c >= max(p, 1):
            raise CodeFileError(f"coefficient {c} not in [0, {p})", lineno, tok[1])
        coeffs.append(c)
    try:
        field = FieldSpec.get(p, m, coeffs)
    except HullforgeError as exc:
        raise CodeFileError(str(exc), lineno, mod[1][1] if len(mod) > 1 else 1) from None

    rows = body[2:]
    if len(rows) != k:
        where = rows[k][0] if len(rows) > k else (rows[-1][0] + 1 if rows else lineno + 1)
        raise CodeFileError(f"expected {k} generator rows, found {len(rows)}", where, None)
    gen = []
    for r, (lineno, toks) in enumerate(rows, 1):
        if len(toks) != n:
            raise CodeFileError(f"row {r} has {len(toks)} entries, expected n = {n}", lineno, None)
        row = []
        for tok in toks:
            v = _int(tok, lineno, f"row {r}")
            if v >= field.q:
                raise CodeFileError(f"row {r}: rep {v} not in [0, {field.q})", lineno, tok[1])
            row.append(v)
        gen.append(row)
    if not gen:
        return LinearCode.zero(field, n)
    return LinearCode.from_generator(field, gen, n)


def serialize_code(code: LinearCode) -> str:
    f = code.field
    lines = [f"{f.p} {f.m} {code.n} {code.k}",
             "modulus " + " ".join(str(c) for c in f.modulus)]
    lines += [" ".join(str(int(x)) for x in row) for row in code.gen]
    return "\n".join(lines) + "\n"


def read_code(path: str) -> LinearCode:
    with open(path, encoding="utf-8") as fh:
        return parse_code_file(fh.read())


def write_code(code: LinearCode, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_code(code))
