"""The acceptance suite: ten end-to-end checks, each returning a pass flag and a detail line.

``run_all`` is what ``hullforge verify`` prints; the test suite runs the
same functions one by one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from importlib import resources
from typing import Callable

import numpy as np

from .code import EUCLIDEAN, HERMITIAN, LinearCode, macwilliams_selfdual_check
from .constructions.cyclic import (bch_generator, constacyclic_code, constacyclic_dual_generator,
                                   eta_dual_generator, eta_transform, is_constacyclic,
                                   negate_variable)
from .constructions.lcd import disturbance_coefficients, hypothesis_failures, lambda_disturb
from .constructions.rs import (GrsSpec, TrsSpec, grs, grs_with_hull, multiplicative_subgroup,
                               trs, trs_dual, trs_with_hull)
from .constructions.selfdual import selfdual_to_hull
from .eaqec import Verdict, classify, cor72_from_code, default_table_rows, family_params, table_emit
from .errors import NoValidLambda, TheoremCaseViolation
from .field import FieldSpec, gf
from .hull_analysis import dim1_max_hull, dim1_rule_weight, max_hull_exhaustive, schur_lower_bound


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}. {self.title}: {self.detail}"


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_code(field: FieldSpec, n: int, k: int, rng: np.random.Generator) -> LinearCode:
    return LinearCode.from_generator(field, rng.integers(0, field.q, size=(k, n)), n)


def brute_force_hull_dim(code: LinearCode, kind: str = EUCLIDEAN) -> int:
    """log_q of |{c in C : c is orthogonal to every generator row}|, by enumeration."""
    f = code.field
    other = code.gen if kind == EUCLIDEAN else f.conj(code.gen)
    count = 0
    for block in code.codeword_blocks():
        ips = f.dot(block, other.T) if code.k else np.zeros((block.shape[0], 0), dtype=np.int64)
        count += int(np.count_nonzero(~ips.any(axis=1)))
    h = 0
    while f.q ** h < count:
        h += 1
    if f.q ** h != count:  # pragma: no cover
        raise AssertionError(f"hull size {count} is not a power of {f.q}")
    return h


def all_codes(field: FieldSpec, n: int, k: int):
    """Every k-dimensional code of length n, once each (all RREF matrices)."""
    q = field.q
    for pivots in itertools.combinations(range(n), k):
        free = [(i, j) for i in range(k) for j in range(pivots[i] + 1, n) if j not in pivots]
        for vals in itertools.product(range(q), repeat=len(free)):
            G = np.zeros((k, n), dtype=np.int64)
            for i, p in enumerate(pivots):
                G[i, p] = 1
            for (i, j), v in zip(free, vals):
                G[i, j] = v
            yield LinearCode(field, n, G)


# -- 1 ------------------------------------------------------------------------------

def criterion_1(count: int = 200, seed: int = 1) -> CriterionResult:
    rng = _rng(seed)
    fields = [gf(q) for q in (2, 3, 4, 8)]
    bad, done, herm = [], 0, 0
    while done < count:
        f = fields[done % len(fields)]
        n = int(rng.integers(2, 11))
        k = int(rng.integers(1, n))
        if f.q ** k > 2**16:
            continue
        code = random_code(f, n, k, rng)
        kinds = [EUCLIDEAN] + ([HERMITIAN] if f.q0 else [])
        for kind in kinds:
            a = code.hull_dim(kind)
            b = code.hull_dim_gram(kind)
            c = brute_force_hull_dim(code, kind)
            herm += kind == HERMITIAN
            if not a == b == c:
                bad.append((f.q, n, code.k, kind, a, b, c))
        done += 1
    return CriterionResult(1, "hull oracle agreement", not bad,
                           f"{done} codes ({herm} Hermitian checks too), {len(bad)} disagreements {bad[:3]}")


# -- 2 ------------------------------------------------------------------------------

def _identity_pair(field: FieldSpec, half: int, a: int = 1) -> LinearCode:
    I = np.eye(half, dtype=np.int64)
    return LinearCode.from_generator(field, np.hstack([I, a * I]), 2 * half)


def hermitian_selfdual_scalar(field: FieldSpec) -> int:
    """Smallest a with a^(q0+1) = -1, so (I | aI) is Hermitian self-dual."""
    r = np.arange(1, field.q)
    return int(r[field.power(r, field.q0 + 1) == field.neg(1)][0])


def criterion_2() -> CriterionResult:
    runs, bad = 0, []
    cases = [(gf(q), EUCLIDEAN) for q in (4, 8, 16)] + [(gf(q), HERMITIAN) for q in (9, 16)]
    for f, kind in cases:
        a = 1 if kind == EUCLIDEAN else hermitian_selfdual_scalar(f)
        for half in (2, 4, 6):
            code = _identity_pair(f, half, a)
            for h in range(half):
                out = selfdual_to_hull(code, h, kind)
                runs += 1
                got = out.code.hull_dim(kind)
                if got != h or out.code != code.permute(out.perm).scale(out.v):
                    bad.append((f.q, kind, 2 * half, h, got))
    try:
        selfdual_to_hull(_identity_pair(gf(4), 2), 0, HERMITIAN)
        fired = False
    except NoValidLambda:
        fired = True
    return CriterionResult(2, "self-dual to any hull", not bad and fired,
                           f"{runs} (code, h) runs exact, {len(bad)} mismatches; "
                           f"GF(4) Hermitian NoValidLambda {'raised' if fired else 'NOT raised'}")


# -- 3 ------------------------------------------------------------------------------

def criterion_3() -> CriterionResult:
    runs, bad = 0, []
    for q, n in ((8, 7), (16, 5), (16, 15)):
        f = gf(q)
        pts = list(range(1, n + 1))
        for k in range(1, n):
            if q**k > 2**20:
                continue
            for l in range(min(k, n - k) + 1):
                code, _ = grs_with_hull(f, pts, k, l)
                runs += 1
                h = code.hull_dim()
                d = code.distance("primal")
                if h != l or d != n - k + 1:
                    bad.append((q, n, k, l, h, d))
    return CriterionResult(3, "GRS codes with every hull dimension", not bad,
                           f"{runs} codes, all hull = l and d = n-k+1 by enumeration; {len(bad)} failures {bad[:3]}")


# -- 4 ------------------------------------------------------------------------------

def criterion_4() -> CriterionResult:
    f = gf(64)
    notes, ok = [], True
    for n in (7, 9):
        S = multiplicative_subgroup(f, n)
        outside = [e for e in range(1, f.q) if e not in S]
        eta = outside[0]
        code, _ = trs_with_hull(TrsSpec(f, S, eta, 3), 1)
        h = code.hull_dim()
        ok &= h == 1
        for k in range(1, n):
            trs_dual(TrsSpec(f, S, eta, k))  # raises if x · C' differs from the kernel dual
        non_mds = [e for e in outside if not trs(TrsSpec(f, S, e, 3)).is_mds()]
        d = trs(TrsSpec(f, S, eta, 3)).distance("primal")
        ok &= not non_mds and d == n - 2
        notes.append(f"n={n}: hull {h}, dual identity for k=1..{n - 1}, "
                     f"{len(outside) - len(non_mds)}/{len(outside)} eta outside subgroup MDS (d={d} at eta={eta})")
    return CriterionResult(4, "twisted RS with hull 1", ok, "; ".join(notes))


# -- 5 ------------------------------------------------------------------------------

def criterion_5() -> CriterionResult:
    f = gf(4)
    met, bad, cases = 0, [], {"general": 0, "w2=0": 0, "w1=0": 0}
    for n in (4, 5):
        for code in all_codes(f, n, 2):
            for pos in range(n):
                if hypothesis_failures(code, pos):
                    continue
                met += 1
                co = disturbance_coefficients(code, pos)
                w1, w2, c = co["w1"], co["w2"], co["c"]
                case = "w2=0" if w2 == 0 else "w1=0" if w1 == 0 else "general"
                cases[case] += 1
                try:
                    out, lam, _ = lambda_disturb(code, pos)
                except TheoremCaseViolation as exc:
                    bad.append((n, code.gen.tolist(), pos, str(exc)))
                    continue
                lam = int(lam)
                if case == "general":
                    s = int(f.mul(w2, c))
                    if int(f.mul(f.sub(s, 1), f.mul(lam, lam))) != s:
                        bad.append((n, code.gen.tolist(), pos, "substitution"))
                if out.hull_dim() != 1:
                    bad.append((n, code.gen.tolist(), pos, "hull"))
                for mu in range(1, f.q):
                    v = np.ones(n, dtype=np.int64)
                    v[pos] = mu
                    if code.scale(v).hull_dim() > 1:
                        bad.append((n, code.gen.tolist(), pos, f"cap at lambda={mu}"))
    ok = met >= 1 and not bad
    return CriterionResult(5, "one-coordinate disturbance of LCD codes", ok,
                           f"{met} (code, position) pairs meet every hypothesis {cases}; "
                           f"{len(bad)} failures {bad[:2]}")


# -- 6 ------------------------------------------------------------------------------

def bch_sweep(q: int, n: int) -> list:
    """Distinct BCH generators over all designed distances and offsets."""
    seen = {}
    for delta in range(2, n + 1):
        for b in range(n):
            g = bch_generator(q, n, delta, b)
            if g.degree < n:
                seen.setdefault(g.coeffs, g)
    return list(seen.values())


def criterion_6() -> CriterionResult:
    q = 3
    f = gf(q)
    minus = int(f.neg(1))
    lcd_codes, bad = 0, []
    for n in (7, 13, 8):
        for g in bch_sweep(q, n):
            C = constacyclic_code(g, 1, n)
            if C.hull_dim() != 0:
                continue
            lcd_codes += 1
            D, v = negate_variable(g, n)
            lam = 1 if n % 2 == 0 else minus
            if not is_constacyclic(D, lam) or D.hull_dim() != 0 or D.params() != C.params():
                bad.append((n, str(g), "negation"))
            for eta in range(1, q):
                if int(f.power(np.array(eta), n)) not in (1, minus):
                    continue
                E, _ = eta_transform(g, eta, n)
                eta_n = int(f.power(np.array(eta), n))
                g2 = g.scale_variable(eta).monic()
                back, _ = eta_transform(g2, int(f.inv(eta)), n, int(f.inv(eta_n)))
                if back != C:
                    bad.append((n, str(g), f"round trip eta={eta}"))
                expected = constacyclic_code(eta_dual_generator(g, eta, n), eta_n, n)
                if expected != E.dual():
                    bad.append((n, str(g), f"dual generator eta={eta}"))
            if constacyclic_code(constacyclic_dual_generator(g, 1, n), 1, n) != C.dual():
                bad.append((n, str(g), "cyclic dual generator"))
    return CriterionResult(6, "x -> -x on LCD cyclic BCH codes", lcd_codes > 0 and not bad,
                           f"{lcd_codes} LCD cyclic codes over GF(3) (n = 7, 13, 8) kept LCD with equal (n, k, d); "
                           f"{len(bad)} failures {bad[:2]}")


# -- 7 ------------------------------------------------------------------------------

def printed_tables() -> str:
    return resources.files("hullforge.data").joinpath("tables_printed.txt").read_text()


def criterion_7() -> CriterionResult:
    ours = table_emit(default_table_rows(), symbolic=True).splitlines()
    theirs = printed_tables().splitlines()
    diffs = [(i + 1, a, b) for i, (a, b) in enumerate(itertools.zip_longest(ours, theirs)) if a != b]
    rows = sum(not line.startswith("#") for line in theirs)
    detail = f"{rows - len(diffs)}/{rows} rows byte-identical"
    if diffs:
        detail += "; differing lines (emitted | printed): " + "; ".join(
            f"{a!r} | {b!r}" for _, a, b in diffs)
    return CriterionResult(7, "EAQEC tables 1-6", not diffs, detail)


# -- 8 ------------------------------------------------------------------------------

def xx_code(field: FieldSpec, n: int) -> LinearCode:
    """{(x, x) : x in GF(q)^n}."""
    return _identity_pair(field, n)


def criterion_8() -> CriterionResult:
    notes, ok = [], True
    for n in (2, 3):
        C = xx_code(gf(4), n)
        b = schur_lower_bound(C, C)
        ok &= b == n
        notes.append(f"(x,x) n={n}: bound {b}")
    f8 = gf(8)
    rs = grs(GrsSpec(f8, range(1, 8), 3))
    sq = rs.schur_product(rs).k
    ok &= sq == 5
    notes.append(f"RS(7,3) Schur square dim {sq}")
    obstruction = LinearCode.from_generator(gf(2), [[1, 1, 1, 0], [0, 0, 0, 1]])
    rejects = not macwilliams_selfdual_check(obstruction.weight_distribution(), 4, 2)
    ham = LinearCode.from_generator(gf(2), [[1, 0, 0, 0, 0, 1, 1, 1], [0, 1, 0, 0, 1, 0, 1, 1],
                                            [0, 0, 1, 0, 1, 1, 0, 1], [0, 0, 0, 1, 1, 1, 1, 0]])
    genuine = [ham, xx_code(gf(4), 3), _identity_pair(gf(5), 2, 2)]
    accepts = all(c.predicate("self_dual") and
                  macwilliams_selfdual_check(c.weight_distribution(), c.n, c.field.q) for c in genuine)
    cap = max_hull_exhaustive(obstruction).best_h
    ok &= rejects and accepts and cap < 2
    notes.append(f"MacWilliams rejects [4,2]_2 obstruction: {rejects} (max hull {cap} < 2); "
                 f"accepts {len(genuine)} self-dual codes: {accepts}")
    return CriterionResult(8, "Schur bound and MacWilliams obstruction", ok, "; ".join(notes))


# -- 9 ------------------------------------------------------------------------------

def _prop21_check(C: LinearCode, kind: str, bad21: list, capbad: list) -> None:
    a = max_hull_exhaustive(C, kind).best_h
    b = max_hull_exhaustive(C.dual_of(kind), kind).best_h
    if a != b:
        bad21.append((C.field.q, kind, C.gen.tolist(), a, b))
    if a > min(C.k, C.n - C.k):
        capbad.append((C.field.q, kind, C.gen.tolist(), a))


# every code of these lengths is checked; larger lengths are sampled
SMALL_FAMILIES = ((3, 5), (4, 4), (5, 3), (7, 3), (9, 3))


def criterion_9(seed: int = 9, per_field: int = 12) -> CriterionResult:
    rng = _rng(seed)
    checked, bad21, capbad = 0, [], []
    for q, top in SMALL_FAMILIES:
        f = gf(q)
        kinds = [EUCLIDEAN] + ([HERMITIAN] if f.q0 else [])
        for n in range(2, top + 1):
            for k in range(1, n):
                for C in all_codes(f, n, k):
                    for kind in kinds:
                        _prop21_check(C, kind, bad21, capbad)
                    checked += 1
    for q in (3, 4, 5, 7):
        f = gf(q)
        made = 0
        while made < per_field:
            n = int(rng.integers(6, 9))
            k = int(rng.integers(1, n))
            if (q - 1) ** (n - 1) > 10**5:
                continue
            _prop21_check(random_code(f, n, k, rng), EUCLIDEAN, bad21, capbad)
            checked += 1
            made += 1
    dim1_total, dim1_mismatch = 0, []
    for q in (3, 4, 5, 7, 8, 9):
        f = gf(q)
        for n in range(1, 6):
            if (q - 1) ** (n - 1) > 10**5:
                continue
            for w in range(1, n + 1):
                g = [1] * w + [0] * (n - w)
                C = LinearCode.from_generator(f, [g])
                exact = max_hull_exhaustive(C).best_h
                dim1_total += 1
                if dim1_max_hull(C) != exact:  # pragma: no cover
                    dim1_mismatch.append((q, n, w, "exact rule", exact))
                if dim1_rule_weight(C) != exact:
                    dim1_mismatch.append((q, n, w, dim1_rule_weight(C), exact))
    ok = not bad21 and not capbad and not dim1_mismatch
    detail = (f"{checked} codes: max(C) = max(dual) failures {len(bad21)}, cap failures {len(capbad)}; "
              f"{dim1_total} one-dimensional codes, weight rule (1 iff d >= 2) disagrees with "
              f"exhaustive search on {len(dim1_mismatch)}")
    if dim1_mismatch:
        detail += " e.g. (q, n, wt, rule, exhaustive) " + ", ".join(map(str, dim1_mismatch[:4]))
    return CriterionResult(9, "maximal hull properties", ok, detail)


# -- 10 -----------------------------------------------------------------------------

def criterion_10() -> CriterionResult:
    runs, bad = 0, []
    for k in range(1, 4):
        for h in range(k + 1):
            got, _ = cor72_from_code(7, k, h, 3)
            want = family_params("cor72", 7, k, h, 3)
            runs += 1
            if got != want or classify(got) is not Verdict.MDS:
                bad.append((k, h, str(got), str(want)))
    return CriterionResult(10, "MDS EAQEC family from constructed GRS codes", not bad,
                           f"{runs} (k, h) pairs over GF(8), n = 7; {len(bad)} mismatches {bad[:2]}")


CRITERIA: list[Callable[[], CriterionResult]] = [
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
]


def run_all(only: list[int] | None = None) -> list[CriterionResult]:
    out = []
    for i, fn in enumerate(CRITERIA, 1):
        if only and i not in only:
            continue
        out.append(fn())
    return out
