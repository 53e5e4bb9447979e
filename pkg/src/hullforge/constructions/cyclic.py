"""Cyclic, constacyclic and BCH codes, and the variable substitutions
x -> -x and x -> eta*x that move between them.

A lambda-constacyclic code of length n is generated by a monic factor g of
x^n - lambda; codeword c(x) corresponds to (c_0, ..., c_{n-1}) and the
generator matrix rows are x^i g(x) for i < n - deg g.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from math import gcd

import numpy as np

from ..code import LinearCode
from ..errors import (HullforgeError, NonDivisor, NotCoprime, NotRootOfUnity,
                      OddCharacteristicRequired, PreconditionFailed)
from ..field import FieldElement, FieldSpec, gf
from ..linalg import rref_array
from ..poly import Poly

log = logging.getLogger(__name__)


def multiplicative_order(q: int, n: int) -> int:
    if gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    if n == 1:
        return 1
    m, x = 1, q % n
    while x != 1:
        x = x * q % n
        m += 1
    return m


def cyclotomic_coset(q: int, n: int, i: int) -> list[int]:
    """Orbit of i under multiplication by q modulo n."""
    if gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    i %= n
    out, x = {i}, i * q % n
    while x not in out:
        out.add(x)
        x = x * q % n
    return sorted(out)


def cyclotomic_cosets(q: int, n: int) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for i in range(n):
        if i not in seen:
            c = cyclotomic_coset(q, n, i)
            seen.update(c)
            out.append(c)
    return out


@lru_cache(maxsize=None)
def subfield_embedding(small: FieldSpec, big: FieldSpec) -> tuple[int, ...]:
    """Reps in ``big`` of the elements of ``small`` (indexed by small rep).

    The image of the generator x of ``small`` is the smallest-rep root of
    small's modulus in ``big``.
    """
    if small.p != big.p or big.m % small.m:
        raise HullforgeError(f"{small!r} is not a subfield of {big!r}")
    mod = Poly(big, small.modulus)
    root = next(r for r in range(big.q) if mod(r).rep == 0)
    images = []
    for a in range(small.q):
        digits = small._digits(a)
        images.append(Poly(big, digits)(root).rep if any(digits) else 0)
    return tuple(images)


def minimal_poly(q: int, n: int, i: int, field: FieldSpec | None = None) -> Poly:
    """Minimal polynomial over GF(q) of beta^i, beta = alpha^((q^m - 1)/n).

    alpha is the smallest-rep primitive element of GF(q^m), m the order of
    q modulo n.
    """
    field = field or gf(q)
    if field.q != q:
        raise HullforgeError(f"field {field!r} does not have order {q}")
    m = multiplicative_order(q, n)
    big = gf(q**m)
    beta = int(big.power(np.array(big.primitive), (big.q - 1) // n))
    prod = Poly(big, [1])
    for j in cyclotomic_coset(q, n, i):
        root = int(big.power(np.array(beta), j))
        prod = prod * Poly(big, [int(big.neg(root)), 1])
    emb = subfield_embedding(field, big)
    back = {r: a for a, r in enumerate(emb)}
    try:
        coeffs = [back[c] for c in prod.coeffs]
    except KeyError:  # pragma: no cover
        raise AssertionError("minimal polynomial coefficient outside the base field")
    return Poly(field, coeffs)


def bch_generator(q: int, n: int, delta: int, b: int, field: FieldSpec | None = None) -> Poly:
    """lcm(m_b, ..., m_{b+delta-2}); exponents are taken modulo n."""
    if gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    if delta < 2:
        raise PreconditionFailed("designed distance must be >= 2")
    field = field or gf(q)
    reps: dict[int, list[int]] = {}
    for i in range(b, b + delta - 1):
        c = cyclotomic_coset(q, n, i % n)
        reps[c[0]] = c
    g = Poly(field, [1])
    for lead in sorted(reps):
        g = g * minimal_poly(q, n, lead, field)
    if g.degree == n:
        log.info("BCH(q=%d, n=%d, delta=%d, b=%d) is degenerate: generator x^n - 1", q, n, delta, b)
    return g


def constacyclic_code(g: Poly, lam: int | FieldElement, n: int) -> LinearCode:
    field = g.field
    lam = int(lam)
    if lam == 0:
        raise PreconditionFailed("lambda must be nonzero")
    if g.is_zero() or not g.divides(Poly.x_n_minus(field, n, lam)):
        raise NonDivisor(f"{g} does not divide x^{n} - {lam}")
    k = n - int(g.degree)
    rows = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        rows[i, i: i + len(g.coeffs)] = g.coeffs
    if k == 0:
        return LinearCode.zero(field, n)
    return LinearCode.from_generator(field, rows, n)


def constacyclic_dual_generator(g: Poly, lam: int | FieldElement, n: int) -> Poly:
    """x^k h(1/x) / h(0) with h = (x^n - lam) / g; generates the dual as a lam^-1-constacyclic code."""
    field = g.field
    full = Poly.x_n_minus(field, n, int(lam))
    h, r = divmod(full, g)
    if not r.is_zero():
        raise NonDivisor(f"{g} does not divide x^{n} - {int(lam)}")
    return h.reciprocal().scalar_mul(int(field.inv(h.coeffs[0])))


def is_constacyclic(code: LinearCode, lam: int | FieldElement) -> bool:
    """Closure of the basis under (c_0..c_{n-1}) -> (lam c_{n-1}, c_0, ..., c_{n-2})."""
    f = code.field
    for row in code.gen:
        shifted = np.roll(row, 1)
        shifted[0] = f.mul(int(lam), int(row[-1]))
        if not code.contains(shifted):
            return False
    return True


def negate_variable(g: Poly, n: int, lam: int = 1) -> tuple[LinearCode, list[FieldElement]]:
    """Code generated by g(-x) together with v = (1, -1, 1, ...) such that it equals v·C_g.

    For a cyclic input the result is negacyclic when n is odd and cyclic when
    n is even.  The hull dimension is preserved since v^2 is all-ones.
    """
    field = g.field
    if field.p == 2:
        raise OddCharacteristicRequired("x -> -x is the identity in characteristic 2")
    code, v = eta_transform(g, int(field.neg(1)), n, lam)
    before = constacyclic_code(g, lam, n).hull_dim()
    if code.hull_dim() != before:  # pragma: no cover
        raise AssertionError("hull dimension changed under a +-1 scaling")
    return code, v


def eta_transform(g: Poly, eta: int | FieldElement, n: int, lam: int | FieldElement = 1
                  ) -> tuple[LinearCode, list[FieldElement]]:
    """v·C for v = (1, eta, ..., eta^(n-1)), checked against the code generated by g(eta x).

    If C is lam-constacyclic then v·C is (lam * eta^-n)-constacyclic.
    """
    field = g.field
    eta, lam = int(eta), int(lam)
    if eta == 0:
        raise NotRootOfUnity("eta must be nonzero")
    eta_n = int(field.power(np.array(eta), n))
    if eta_n not in (1, int(field.neg(1))):
        raise NotRootOfUnity(f"eta^{n} = {eta_n} is not +-1")
    code = constacyclic_code(g, lam, n)
    v = [int(field.power(np.array(eta), i)) for i in range(n)]
    out = code.scale(v)
    new_lam = int(field.mul(lam, field.inv(eta_n)))
    g2 = g.scale_variable(eta).monic()
    if constacyclic_code(g2, new_lam, n) != out:  # pragma: no cover
        raise AssertionError("polynomial and vector forms of the transform disagree")
    return out, [FieldElement(x, field) for x in v]


def transformed_generator(g: Poly, eta: int | FieldElement) -> Poly:
    """Monic form of g(eta x)."""
    return g.scale_variable(int(eta)).monic()


def eta_dual_generator(g: Poly, eta: int | FieldElement, n: int) -> Poly:
    """Generator of the dual of v·C_g (g cyclic): g_perp(x / eta) made monic.

    With h = (x^n - 1)/g and k = deg h this is x^k h(eta/x) / h(0) up to a
    unit, i.e. the dual's generator with the variable scaled by eta^-1.
    """
    field = g.field
    g_perp = constacyclic_dual_generator(g, 1, n)
    return g_perp.scale_variable(int(field.inv(int(eta)))).monic()


def generator_polynomial(code: LinearCode, lam: int | FieldElement = 1) -> Poly:
    """The monic generator g of a lam-constacyclic code (checked).

    Any n - deg g consecutive coordinates of such a code are an information
    set, so reducing with the columns in reverse order leaves g(x) as the
    last row.
    """
    f, n = code.field, code.n
    if code.k == 0:
        return Poly.x_n_minus(f, n, int(lam))
    rev = code.gen[:, ::-1]
    R, _ = rref_array(f, rev)
    g = Poly(f, R[-1][::-1]).monic()
    if constacyclic_code(g, lam, n) != code:
        raise NonDivisor(f"code is not {int(lam)}-constacyclic")
    return g
