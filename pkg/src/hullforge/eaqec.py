"""Entanglement-assisted quantum code parameters from hull dimensions.

A classical [n, k, d] code with an h-dimensional hull gives, through the
CSS construction, EAQEC codes [[n, k - h, d, n - k - h]] and
[[n, n - k - h, d_dual, k - h]].  Hermitian input over GF(q0^2) yields
codes over q0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from importlib import resources
from math import isqrt
from typing import Iterable, Sequence

from .code import EUCLIDEAN, HERMITIAN, LinearCode, _kind
from .errors import CodeFileError, NoHermitianStructure, PreconditionFailed
from .field import gf


class _NotApplicable:
    """Marker for a quantum Singleton bound outside its domain d <= (n+2)/2."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "n/a"

    __str__ = __repr__


NotApplicable = _NotApplicable()


class Verdict(str, enum.Enum):
    MDS = "MDS"
    ALMOST_MDS = "almostMDS"
    OTHER = "other"
    BOUND_VIOLATED = "boundViolated"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class EaqecParams:
    n: int
    k: int
    d: int
    c: int
    q: int
    d_is_bound: bool = False

    def __post_init__(self):
        if self.k < 0 or not 0 <= self.c <= self.n or self.d < 1:
            raise PreconditionFailed(f"invalid EAQEC parameters {self.astuple()}")

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.d, self.c)

    def __str__(self) -> str:
        d = f"≥{self.d}" if self.d_is_bound else str(self.d)
        return f"[[{self.n}, {self.k}, {d}, {self.c}]]_{self.q}"


def css_from_hull(n: int, k: int, d: int, d_dual: int, h: int, q: int,
                  kind: str = EUCLIDEAN) -> tuple[EaqecParams, EaqecParams]:
    """The two CSS outputs of an [n, k, d] code with dual distance d_dual and hull h.

    ``q`` is the order of the code's field; Hermitian outputs live over its
    square root.
    """
    kind = _kind(kind)
    if not 0 <= h <= min(k, n - k):
        raise PreconditionFailed(f"hull dimension {h} outside [0, {min(k, n - k)}]")
    if kind == HERMITIAN:
        q0 = isqrt(q)
        if q0 * q0 != q:
            raise NoHermitianStructure(f"q = {q} is not a square")
        q = q0
    return (EaqecParams(n, k - h, d, n - k - h, q),
            EaqecParams(n, n - k - h, d_dual, k - h, q))


def css_from_code(code: LinearCode, kind: str = EUCLIDEAN) -> tuple[EaqecParams, EaqecParams]:
    """css_from_hull with h, d and d_dual computed from the code itself."""
    p = code.params()
    if p.d is None or p.d_dual is None:
        raise PreconditionFailed("need 0 < k < n for both EAQEC outputs")
    return css_from_hull(p.n, p.k, p.d, p.d_dual, code.hull_dim(kind), p.q, kind)


def singleton_k_max(params: EaqecParams) -> int | _NotApplicable:
    """Largest k allowed by 2d + k <= n + c + 2, when d <= (n+2)/2."""
    if 2 * params.d > params.n + 2:
        return NotApplicable
    return params.n + params.c + 2 - 2 * params.d


def classify(params: EaqecParams) -> Verdict:
    bound = singleton_k_max(params)
    if bound is NotApplicable:
        return Verdict.OTHER
    if params.k > bound:
        return Verdict.BOUND_VIOLATED
    if params.k == bound:
        return Verdict.MDS
    if params.k == bound - 2:
        return Verdict.ALMOST_MDS
    return Verdict.OTHER


# -- tables of codes from Hermitian self-dual inputs ------------------------------

@dataclass(frozen=True)
class TableRow:
    table: int
    n: int
    k: int
    d: int
    q0s: tuple[int, ...]


def parse_table_rows(text: str) -> list[TableRow]:
    """Rows from the "table <id> <q0,q0,...>" / "n d" text format."""
    rows: list[TableRow] = []
    table: tuple[int, tuple[int, ...]] | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "table":
                if len(parts) != 3:
                    raise ValueError("expected 'table <id> <q0 list>'")
                table = (int(parts[1]), tuple(int(x) for x in parts[2].split(",")))
                continue
            if table is None:
                raise ValueError("row before any table header")
            if len(parts) != 2:
                raise ValueError("expected 'n d'")
            n, d = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise CodeFileError(str(exc), lineno, 1) from None
        if n % 2:
            raise PreconditionFailed(f"line {lineno}: odd length {n} cannot be self-dual")
        rows.append(TableRow(table[0], n, n // 2, d, table[1]))
    return rows


def default_table_rows() -> list[TableRow]:
    return parse_table_rows(resources.files("hullforge.data").joinpath("sok2.txt").read_text())


def _minus_h(a: int) -> str:
    return f"{a}-h" if a else "-h"


def _table_header(table: int, q0s: Sequence[int]) -> str:
    q2 = ", ".join(str(q * q) for q in q0s)
    q1 = ", ".join(str(q) for q in q0s)
    return f"# Table {table}: q^2={q2}, q={q1}"


def table_emit(rows: Iterable[TableRow | tuple], symbolic: bool = True,
               h_range: tuple[int, int] | None = None) -> str:
    """EAQEC tables for Hermitian self-dual [n, n/2, d] inputs.

    Symbolic mode prints one line per input with h free,
    ``[[n, k-h, d, k-h]]_q<TAB>singleton=<n+k+2-2d>-h``; numeric mode prints
    one line per (input, q0, h) for h in ``h_range`` (default 0..k).
    """
    out: list[str] = []
    current = None
    for row in rows:
        if not isinstance(row, TableRow):
            n, k, d, q0 = row
            row = TableRow(0, n, k, d, tuple(q0) if isinstance(q0, (tuple, list)) else (q0,))
        if row.n != 2 * row.k:
            raise PreconditionFailed(f"[{row.n}, {row.k}] is not a self-dual shape")
        key = (row.table, row.q0s)
        if key != current:
            current = key
            out.append(_table_header(row.table, row.q0s))
        if symbolic:
            sub = str(row.q0s[0]) if len(row.q0s) == 1 else "q"
            k = row.k
            base = EaqecParams(row.n, k, row.d, k, row.q0s[0])
            bound = singleton_k_max(base)
            col = "n/a" if bound is NotApplicable else _minus_h(bound)
            out.append(f"[[{row.n}, {_minus_h(k)}, {row.d}, {_minus_h(k)}]]_{sub}\tsingleton={col}")
            continue
        lo, hi = h_range if h_range is not None else (0, row.k)
        for q0 in row.q0s:
            for h in range(max(lo, 0), min(hi, row.k) + 1):
                first, _ = css_from_hull(row.n, row.k, row.d, row.d, h, q0 * q0, HERMITIAN)
                out.append(f"{first}\tsingleton={singleton_k_max(first)}")
    return "\n".join(out) + ("\n" if out else "")


# -- corollary families ---------------------------------------------------------------

def family_params(family: str, n: int, k: int | None, h: int, s: int) -> EaqecParams:
    """Parameters of the MDS GRS family ("cor72") or the almost-MDS family ("cor73")."""
    q = 2**s
    if family == "cor72":
        if s < 2:
            raise PreconditionFailed(f"need q = 2^s >= 4, got s={s}")
        if k is None or k < 1:
            raise PreconditionFailed("need k >= 1")
        if 2 * k > n:
            raise PreconditionFailed(f"need k <= n/2, got k={k}, n={n}")
        if n > q - 1:
            raise PreconditionFailed(f"need n <= q - 1 = {q - 1}, got n={n}")
        if not 0 <= h <= k:
            raise PreconditionFailed(f"need 0 <= h <= k = {k}, got h={h}")
        return EaqecParams(n, n - k - h, k + 1, k - h, q)
    if family == "cor73":
        if n % 2:
            raise PreconditionFailed(f"need n even, got n={n}")
        top = q + isqrt(2 ** (s + 2)) - 2
        if not 4 <= n <= top:
            raise PreconditionFailed(f"need 4 <= n <= {top}, got n={n}")
        if not 0 <= h <= n // 2:
            raise PreconditionFailed(f"need 0 <= h <= n/2 = {n // 2}, got h={h}")
        return EaqecParams(n, n // 2 - h, n // 2, n // 2 - h, q, d_is_bound=True)
    raise PreconditionFailed(f"unknown family {family!r}")


def cor72_from_code(n: int, k: int, h: int, s: int) -> tuple[EaqecParams, LinearCode]:
    """Build the GRS code with hull h and derive its second CSS output from the code."""
    from .constructions.rs import grs_with_hull

    family_params("cor72", n, k, h, s)  # range checks
    field = gf(2**s)
    code, _ = grs_with_hull(field, list(range(1, n + 1)), k, h)
    _, second = css_from_code(code)
    return second, code
