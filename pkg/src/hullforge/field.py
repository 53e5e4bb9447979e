"""Exact arithmetic in GF(p^m) for small prime powers.

An element is stored as an integer ``rep`` in ``[0, q)``: the base-p digits
of ``rep`` are the polynomial-basis coefficients, least significant digit
first (the constant term).  Arithmetic is table driven; tables are built
lazily from a log/exp pair over the smallest-rep primitive element.

Unless a modulus is given explicitly, the field uses the lexicographically
smallest monic irreducible polynomial of degree m over GF(p), with
coefficient tuples ``(c0, c1, ..., c_{m-1}, 1)`` compared in ascending
degree order.  :func:`modulus_table` lists the resulting table for every
prime power up to 1024; for example GF(4) uses x^2+x+1 and GF(8) uses
x^3+x^2+1.

When m is even the field carries the Hermitian structure over its subfield
of order ``q0 = p^(m/2)`` and :meth:`FieldSpec.conj` is ``a -> a^q0``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import DivisionByZero, FieldMismatch, HullforgeError, NoHermitianStructure

MAX_ORDER = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m``; raise if q is not a prime power."""
    if q < 2:
        raise HullforgeError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise HullforgeError(f"{q} is not a prime power")
    return p, m


# -- polynomials over GF(p) as ascending coefficient lists -------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        f = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - f * c) % p
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b))
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, mod, p)


def is_irreducible(coeffs: tuple[int, ...] | list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    f = _trim([c % p for c in coeffs])
    m = len(f) - 1
    if m < 1:
        return False
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _pmod(f, list(low) + [1], p):
                return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(p)."""
    if m == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=m):
        cand = tuple(low) + (1,)
        if cand[0] != 0 and is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def modulus_table(limit: int = MAX_ORDER) -> dict[int, tuple[int, ...]]:
    """Map every prime power q <= limit to its default modulus."""
    table = {}
    for q in range(2, limit + 1):
        try:
            p, m = prime_power(q)
        except HullforgeError:
            continue
        table[q] = default_modulus(p, m)
    return table


class FieldSpec:
    """The field GF(p^m) with a fixed modulus.

    Instances are interned: ``FieldSpec.get`` returns the same object for the
    same ``(p, m, modulus)``, so identity comparison is field equality.
    Array-level methods (``add``, ``mul``, ...) accept numpy integer arrays of
    reps and broadcast.
    """

    _cache: dict[tuple, "FieldSpec"] = {}

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.modulus = modulus
        self.q = p**m
        self.q0 = p ** (m // 2) if m % 2 == 0 else None

    @classmethod
    def get(cls, p: int, m: int = 1, modulus=None) -> "FieldSpec":
        if not is_prime(p):
            raise HullforgeError(f"characteristic {p} is not prime")
        if m < 1:
            raise HullforgeError("extension degree must be >= 1")
        if p**m > MAX_ORDER:
            raise HullforgeError(f"field order {p**m} exceeds {MAX_ORDER}")
        if modulus is None:
            modulus = default_modulus(p, m)
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1 or any(not 0 <= c < p for c in modulus):
            raise HullforgeError(f"modulus {modulus} is not a monic degree-{m} polynomial over GF({p})")
        if not is_irreducible(modulus, p):
            raise HullforgeError(f"modulus {modulus} is not irreducible over GF({p})")
        key = (p, m, modulus)
        if key not in cls._cache:
            cls._cache[key] = cls(p, m, modulus)
        return cls._cache[key]

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.modulus == default_modulus(self.p, self.m) else \
            f"GF({self.p}^{self.m}, modulus={self.modulus})"

    def __reduce__(self):
        return (FieldSpec.get, (self.p, self.m, self.modulus))

    # -- table construction --------------------------------------------------

    def _digits(self, rep: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(rep % self.p)
            rep //= self.p
        return out

    def _undigits(self, digits) -> int:
        rep = 0
        for d in reversed(list(digits)):
            rep = rep * self.p + int(d)
        return rep

    def _slow_mul(self, a: int, b: int) -> int:
        prod = _pmulmod(self._digits(a), self._digits(b), list(self.modulus), self.p)
        return self._undigits(prod + [0] * (self.m - len(prod)))

    @cached_property
    def primitive(self) -> int:
        """Smallest rep whose multiplicative order is q - 1."""
        for g in range(1, self.q):
            x, order = g, 1
            while x != 1:
                x = self._slow_mul(x, g)
                order += 1
            if order == self.q - 1:
                return g
        raise AssertionError("no primitive element")  # pragma: no cover

    @cached_property
    def _tables(self):
        q, p = self.q, self.p
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, self.primitive)
        exp[q - 1:] = exp[: q - 1]
        r = np.arange(q)
        mul = exp[(log[:, None] + log[None, :]) % (q - 1)]
        mul[0, :] = 0
        mul[:, 0] = 0
        digits = np.array([self._digits(a) for a in range(q)], dtype=np.int64).reshape(q, self.m)
        weights = p ** np.arange(self.m, dtype=np.int64)
        if p == 2:
            add = np.bitwise_xor.outer(r, r)
        else:
            add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        neg = ((-digits) % p) @ weights
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(-log[1:]) % (q - 1)]
        return exp, log, mul.astype(np.int64), add.astype(np.int64), neg, inv, digits, weights

    @property
    def exp_table(self) -> np.ndarray:
        return self._tables[0]

    @property
    def log_table(self) -> np.ndarray:
        return self._tables[1]

    # -- array arithmetic ----------------------------------------------------

    def add(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self._tables[3][a, b]

    def neg(self, a):
        if self.p == 2:
            return np.asarray(a)
        return self._tables[4][a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        return self._tables[2][a, b]

    def inv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self._tables[5][a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, e: int):
        """Elementwise ``a**e`` with ``0**0 == 1``."""
        a = np.asarray(a)
        exp, log = self._tables[0], self._tables[1]
        if e == 0:
            return np.ones_like(a)
        out = exp[(log[a] * e) % (self.q - 1)]
        return np.where(a == 0, 0, out)

    def conj(self, a):
        if self.q0 is None:
            raise NoHermitianStructure(f"{self!r} has odd extension degree; no subfield of order sqrt(q)")
        return self.power(a, self.q0)

    def sum(self, a, axis=0):
        """Field sum of an array along ``axis``."""
        a = np.asarray(a)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis) if a.shape[axis] else \
                np.zeros(np.delete(a.shape, axis), dtype=np.int64)
        if self.m == 1:
            return a.sum(axis=axis) % self.p
        digits, weights = self._tables[6], self._tables[7]
        return (digits[a].sum(axis=axis) % self.p) @ weights

    def dot(self, a, b):
        """Matrix product of rep arrays (2-d x 2-d)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if a.shape[1] == 0:
            return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        return self.sum(self.mul(a[:, :, None], b[None, :, :]), axis=1)

    # -- element helpers -----------------------------------------------------

    def __call__(self, rep: int) -> "FieldElement":
        rep = int(rep)
        if not 0 <= rep < self.q:
            raise HullforgeError(f"rep {rep} out of range for {self!r}")
        return FieldElement(rep, self)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(r, self) for r in range(self.q)]

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def from_int(self, n: int) -> int:
        """Rep of the integer n viewed in the prime subfield."""
        return n % self.p

    def squares(self) -> np.ndarray:
        return np.unique(self.mul(np.arange(self.q), np.arange(self.q)))

    def sqrt_rep(self, a: int) -> int | None:
        a = int(a)
        if self.p == 2:
            return int(self.power(np.array(a), self.q // 2))
        sq = self.mul(np.arange(self.q), np.arange(self.q))
        hits = np.flatnonzero(sq == a)
        return int(hits[0]) if hits.size else None

    def subfield_reps(self, order: int) -> np.ndarray:
        """Reps of the subfield of the given order (elements with a^order == a)."""
        r = np.arange(self.q)
        return r[self.power(r, order) == r]


def gf(q: int, modulus=None) -> FieldSpec:
    """The field of order q (default modulus unless one is given)."""
    p, m = prime_power(q)
    return FieldSpec.get(p, m, modulus)


@dataclass(frozen=True)
class FieldElement:
    rep: int
    spec: FieldSpec

    def _check(self, other) -> "FieldElement":
        if isinstance(other, int):
            return FieldElement(self.spec.from_int(other), self.spec)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.spec is not self.spec:
            raise FieldMismatch(f"cannot combine elements of {self.spec!r} and {other.spec!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(int(self.spec.add(self.rep, other.rep)), self.spec)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(int(self.spec.sub(self.rep, other.rep)), self.spec)

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        return FieldElement(int(self.spec.neg(self.rep)), self.spec)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(int(self.spec.mul(self.rep, other.rep)), self.spec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if other.rep == 0:
            raise DivisionByZero(f"division by zero in {self.spec!r}")
        return FieldElement(int(self.spec.div(self.rep, other.rep)), self.spec)

    def __rtruediv__(self, other):
        return self._check(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(int(self.spec.power(self.rep, e)), self.spec)

    def inverse(self) -> "FieldElement":
        if self.rep == 0:
            raise DivisionByZero(f"zero has no inverse in {self.spec!r}")
        return FieldElement(int(self.spec.inv(self.rep)), self.spec)

    def conjugate(self) -> "FieldElement":
        return FieldElement(int(self.spec.conj(self.rep)), self.spec)

    def sqrt(self) -> "FieldElement | None":
        r = self.spec.sqrt_rep(self.rep)
        return None if r is None else FieldElement(r, self.spec)

    def __bool__(self) -> bool:
        return self.rep != 0

    def __int__(self) -> int:
        return self.rep

    def __repr__(self) -> str:
        return f"{self.spec!r}({self.rep})"


def ff_arith(a: FieldElement, b: FieldElement, kind: str) -> FieldElement:
    if a.spec is not b.spec:
        raise FieldMismatch(f"cannot combine elements of {a.spec!r} and {b.spec!r}")
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown operation {kind!r}")


def ff_pow(a: FieldElement, e: int) -> FieldElement:
    if e < 0:
        raise ValueError("exponent must be >= 0")
    return a**e


def conjugate(a: FieldElement) -> FieldElement:
    return a.conjugate()


def sqrt_elem(a: FieldElement) -> FieldElement | None:
    """Square root: unique in characteristic 2, smallest rep otherwise, None for non-squares."""
    return a.sqrt()
