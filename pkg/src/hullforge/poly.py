"""Dense univariate polynomials over a finite field."""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .errors import DivisionByZero, FieldMismatch
from .field import FieldElement, FieldSpec


class Poly:
    """Polynomial with ascending coefficient reps; trailing zeros stripped."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: Sequence[int | FieldElement] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        if any(not 0 <= x < field.q for x in c):
            raise ValueError(f"coefficient out of range for {field!r}")
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def x_n_minus(cls, field: FieldSpec, n: int, lam: int | FieldElement) -> "Poly":
        """x^n - lam."""
        c = [0] * (n + 1)
        c[0] = int(field.neg(int(lam)))
        c[n] += 1
        return cls(field, c)

    @classmethod
    def monomial(cls, field: FieldSpec, deg: int, coeff: int = 1) -> "Poly":
        return cls(field, [0] * deg + [coeff])

    @property
    def degree(self) -> float | int:
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> FieldElement:
        return FieldElement(self.coeffs[i] if i < len(self.coeffs) else 0, self.field)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and other.field is self.field and other.coeffs == self.coeffs

    def __hash__(self):
        return hash((self.field.q, self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(reversed(terms))

    def _other(self, other) -> "Poly":
        if isinstance(other, (int, FieldElement)):
            return Poly(self.field, [int(other)])
        if other.field is not self.field:
            raise FieldMismatch(f"polynomials over {self.field!r} and {other.field!r}")
        return other

    def _arr(self, size: int | None = None) -> np.ndarray:
        size = len(self.coeffs) if size is None else size
        a = np.zeros(size, dtype=np.int64)
        a[: len(self.coeffs)] = self.coeffs
        return a

    def __add__(self, other) -> "Poly":
        other = self._other(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, self.field.add(self._arr(size), other._arr(size)))

    def __neg__(self) -> "Poly":
        return Poly(self.field, self.field.neg(self._arr()))

    def __sub__(self, other) -> "Poly":
        return self + (-self._other(other))

    def __mul__(self, other) -> "Poly":
        other = self._other(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.field)
        f = self.field
        prods = f.mul(self._arr()[:, None], other._arr()[None, :])
        out = np.zeros(len(self.coeffs) + len(other.coeffs) - 1, dtype=np.int64)
        for i in range(prods.shape[0]):
            out[i: i + prods.shape[1]] = f.add(out[i: i + prods.shape[1]], prods[i])
        return Poly(f, out)

    __rmul__ = __mul__

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        other = self._other(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        quot = [0] * max(dq + 1, 0)
        inv_lead = int(f.inv(other.lead))
        b = other._arr()
        while len(rem) >= len(other.coeffs) and rem:
            shift = len(rem) - len(other.coeffs)
            c = int(f.mul(rem[-1], inv_lead))
            quot[shift] = c
            seg = np.array(rem[shift:], dtype=np.int64)
            rem[shift:] = f.sub(seg, f.mul(c, b)).tolist()
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(f, quot), Poly(f, rem)

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero()

    def __call__(self, x):
        """Evaluate at a rep, a FieldElement or an array of reps (Horner)."""
        scalar = isinstance(x, (int, FieldElement, np.integer))
        pts = np.atleast_1d(np.asarray(int(x) if scalar else x, dtype=np.int64))
        acc = np.zeros_like(pts)
        for c in reversed(self.coeffs):
            acc = self.field.add(self.field.mul(acc, pts), c)
        if scalar:
            return FieldElement(int(acc[0]), self.field)
        return acc

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return Poly(self.field, self.field.mul(int(self.field.inv(self.lead)), self._arr()))

    def scale_variable(self, eta: int | FieldElement) -> "Poly":
        """p(eta * x)."""
        e = int(eta)
        pw = [1]
        for _ in range(1, len(self.coeffs)):
            pw.append(int(self.field.mul(pw[-1], e)))
        return Poly(self.field, self.field.mul(self._arr(), np.array(pw, dtype=np.int64)))

    def reciprocal(self) -> "Poly":
        """x^deg * p(1/x)."""
        return Poly(self.field, tuple(reversed(self.coeffs)))

    def scalar_mul(self, c: int | FieldElement) -> "Poly":
        return Poly(self.field, self.field.mul(int(c), self._arr()))


def poly_lcm(polys: Sequence[Poly]) -> Poly:
    """Least common multiple (monic) via gcd."""
    out = Poly(polys[0].field, [1])
    for p in polys:
        out = (out * p // poly_gcd(out, p)).monic()
    return out


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()
