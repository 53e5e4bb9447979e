"""Command-line front end.

Codes travel between commands as code files (see :mod:`hullforge.io`);
construct and transform write them to stdout (or ``--out``) with the
transformation data as leading ``#`` comment lines, so every output can be
fed straight back to ``analyze``.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

from . import acceptance
from .code import EUCLIDEAN, HERMITIAN, LinearCode, macwilliams_selfdual_check
from .constructions import cyclic, lcd, rs, selfdual
from .eaqec import (classify, css_from_code, css_from_hull, default_table_rows, family_params,
                    parse_table_rows, singleton_k_max, table_emit)
from .errors import CodeFileError, HullforgeError, PreconditionFailed, TooLargeToEnumerate
from .field import gf
from .hull_analysis import max_hull_exhaustive, max_hull_randomized
from .io import parse_code_file, serialize_code
from .poly import Poly


def _ints(text: str) -> list[int]:
    """'1..7' (inclusive) or '1,2,5' or '1 2 5'."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(t) for t in text.replace(",", " ").split()]


def _read(path: str) -> LinearCode:
    if path == "-":
        return parse_code_file(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_code_file(fh.read())


def _emit(args, code: LinearCode, notes: Sequence[str] = ()) -> None:
    text = "".join(f"# {line}\n" for line in notes) + serialize_code(code)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


_REQUIRED = {
    "grs": ("points", "k"), "trs": ("eta", "k"), "cyclic": ("n", "generator"),
    "negacyclic": ("n", "generator"), "bch": ("n", "delta"),
    "scale": ("v",), "selfdual-to-hull": ("h",), "eta": ("eta",),
}


def _need(args, key: str) -> None:
    missing = [x for x in _REQUIRED.get(key, ()) if getattr(args, x) is None]
    if key == "trs" and args.points is None and args.n is None:
        missing.append("points or n")
    if missing:
        raise PreconditionFailed(f"{key} needs " + ", ".join("--" + m for m in missing))


def _reps(values) -> str:
    return " ".join(str(int(v)) for v in values)


# -- construct ----------------------------------------------------------------------

def cmd_construct(args) -> int:
    fam = args.family
    _need(args, fam)
    f = gf(args.q)
    if fam == "grs":
        pts = _ints(args.points)
        if args.hull is not None:
            code, v = rs.grs_with_hull(f, pts, args.k, args.hull)
            _emit(args, code, [f"GRS n={len(pts)} k={args.k} hull={args.hull}", f"multipliers {_reps(v)}"])
        else:
            mult = _ints(args.multipliers) if args.multipliers else None
            code = rs.grs(rs.GrsSpec(f, tuple(pts), args.k, tuple(mult) if mult else None))
            _emit(args, code, [f"GRS n={len(pts)} k={args.k}"])
    elif fam == "trs":
        pts = tuple(_ints(args.points)) if args.points else rs.multiplicative_subgroup(f, args.n)
        spec = rs.TrsSpec(f, pts, args.eta, args.k)
        if args.hull is not None:
            code, v = rs.trs_with_hull(spec, args.hull)
            _emit(args, code, [f"twisted RS n={spec.n} k={args.k} eta={args.eta} hull={args.hull}",
                               f"points {_reps(pts)}", f"multipliers {_reps(v)}"])
        else:
            _emit(args, rs.trs(spec), [f"twisted RS n={spec.n} k={args.k} eta={args.eta}",
                                       f"points {_reps(pts)}"])
    elif fam in ("cyclic", "negacyclic"):
        lam = 1 if fam == "cyclic" else int(f.neg(1))
        g = Poly(f, _ints(args.generator))
        _emit(args, cyclic.constacyclic_code(g, lam, args.n), [f"{fam} n={args.n} g={g}"])
    elif fam == "bch":
        g = cyclic.bch_generator(args.q, args.n, args.delta, args.b)
        _emit(args, cyclic.constacyclic_code(g, 1, args.n),
              [f"BCH n={args.n} delta={args.delta} b={args.b} g={g}"])
    return 0


# -- analyze ------------------------------------------------------------------------

def cmd_analyze(args) -> int:
    code = _read(args.file)
    f = code.field
    out = [f"field: GF({f.q}) modulus {_reps(f.modulus)}", f"n: {code.n}", f"k: {code.k}"]
    try:
        p = code.params()
        out += [f"d: {p.d if p.d is not None else '-'}", f"d_dual: {p.d_dual if p.d_dual is not None else '-'}"]
    except TooLargeToEnumerate as exc:
        out += [f"d: skipped ({exc})", f"d_dual: skipped ({exc})"]
    kinds = [EUCLIDEAN] + ([HERMITIAN] if f.q0 else [])
    for kind in kinds:
        prefix = "" if kind == EUCLIDEAN else "hermitian_"
        h = code.hull_dim(kind)
        out.append(f"{prefix}hull: {h}")
        for name in ("lcd", "self_orthogonal", "self_dual"):
            out.append(f"{prefix}{name}: {str(code.predicate(prefix + name)).lower()}")
    if code.n % 2 == 0 and code.k == code.n // 2:
        try:
            ok = macwilliams_selfdual_check(code.weight_distribution(), code.n, f.q)
            out.append(f"macwilliams_selfdual: {str(ok).lower()}")
        except TooLargeToEnumerate as exc:
            out.append(f"macwilliams_selfdual: skipped ({exc})")
    else:
        out.append("macwilliams_selfdual: n/a")
    print("\n".join(out))
    return 0


# -- transform ----------------------------------------------------------------------

def cmd_transform(args) -> int:
    op = args.op
    _need(args, op)
    code = _read(args.file)
    if op == "scale":
        v = _ints(args.v)
        _emit(args, code.scale(v), [f"scaled by {_reps(v)}"])
    elif op == "lambda-disturb":
        out, lam, pos = lcd.lambda_disturb(code, args.position)
        _emit(args, out, [f"lambda-disturbed at position {pos} with lambda {int(lam)}"])
    elif op == "selfdual-to-hull":
        res = selfdual.selfdual_to_hull(code, args.h, args.kind)
        _emit(args, res.code, [f"hull {args.h} ({args.kind})", f"permutation {_reps(res.perm)}",
                               f"scaling {_reps(res.v)}"])
    elif op == "negate-variable":
        g = cyclic.generator_polynomial(code, args.lam)
        out, v = cyclic.negate_variable(g, code.n, args.lam)
        _emit(args, out, [f"x -> -x applied to g={g}", f"scaling {_reps(v)}"])
    elif op == "eta":
        g = cyclic.generator_polynomial(code, args.lam)
        out, v = cyclic.eta_transform(g, args.eta, code.n, args.lam)
        _emit(args, out, [f"x -> {args.eta}x applied to g={g}", f"scaling {_reps(v)}"])
    return 0


# -- search -------------------------------------------------------------------------

def cmd_search(args) -> int:
    code = _read(args.file)
    if args.exhaustive:
        rep = max_hull_exhaustive(code, args.kind)
    else:
        rep = max_hull_randomized(code, args.kind, args.trials, args.seed)
    print(f"best_h: {rep.best_h}")
    print(f"witness: {_reps(rep.witness_v)}")
    print(f"exhaustive: {str(rep.exhaustive).lower()}")
    print(f"candidates_tried: {rep.candidates_tried}")
    return 0


# -- eaqec --------------------------------------------------------------------------

def _eaqec_lines(params) -> list[str]:
    return [f"{p}\tsingleton={singleton_k_max(p)}\t{classify(p)}" for p in params]


def cmd_eaqec(args) -> int:
    if args.op == "derive":
        if args.file:
            pair = css_from_code(_read(args.file), args.kind)
        else:
            need = ("n", "k", "d", "d_dual", "h", "q")
            missing = [x for x in need if getattr(args, x) is None]
            if missing:
                raise HullforgeError("derive needs a code file or --" + " --".join(m.replace("_", "-") for m in missing))
            pair = css_from_hull(args.n, args.k, args.d, args.d_dual, args.h, args.q, args.kind)
        print("\n".join(_eaqec_lines(pair)))
    elif args.op == "table":
        if args.input:
            with open(args.input, encoding="utf-8") as fh:
                rows = parse_table_rows(fh.read())
        else:
            rows = default_table_rows()
        sys.stdout.write(table_emit(rows, symbolic=not args.numeric))
    elif args.op == "family":
        p = family_params(args.family, args.n, args.k, args.h, args.s)
        print("\n".join(_eaqec_lines([p])))
    return 0


# -- verify -------------------------------------------------------------------------

def cmd_verify(args) -> int:
    failed = 0
    for res in acceptance.run_all(args.only):
        print(res.line(), flush=True)
        failed += not res.passed
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hullforge", description="Hulls of linear codes and EAQEC parameters.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    def kind_flag(p):
        p.add_argument("--kind", choices=[EUCLIDEAN, HERMITIAN], default=EUCLIDEAN)

    c = sub.add_parser("construct", help="build a code and print it as a code file")
    c.add_argument("family", choices=["grs", "trs", "cyclic", "negacyclic", "bch"])
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--points", help="evaluation points, e.g. 1..7 or 1,2,4")
    c.add_argument("--multipliers", help="GRS column multipliers")
    c.add_argument("--k", type=int)
    c.add_argument("--hull", type=int, help="prescribed Euclidean hull dimension (grs, trs)")
    c.add_argument("--eta", type=int, help="twist coefficient (trs)")
    c.add_argument("--n", type=int, help="length (cyclic, negacyclic, bch; trs subgroup order)")
    c.add_argument("--generator", help="generator polynomial coefficients, ascending")
    c.add_argument("--delta", type=int, help="designed distance (bch)")
    c.add_argument("--b", type=int, default=1, help="first exponent (bch)")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    a = sub.add_parser("analyze", help="parameters, hulls and predicates of a code file")
    a.add_argument("file")
    a.set_defaults(func=cmd_analyze)

    t = sub.add_parser("transform", help="equivalence transforms of a code file")
    t.add_argument("op", choices=["scale", "lambda-disturb", "selfdual-to-hull", "negate-variable", "eta"])
    t.add_argument("file")
    t.add_argument("--v", help="scaling vector")
    t.add_argument("--position", type=int, help="coordinate for lambda-disturb (default: first valid)")
    t.add_argument("--h", type=int, help="target hull dimension")
    t.add_argument("--eta", type=int)
    t.add_argument("--lam", type=int, default=1, help="constacyclic shift constant of the input")
    kind_flag(t)
    t.add_argument("--out")
    t.set_defaults(func=cmd_transform)

    s = sub.add_parser("search", help="maximal hull dimension search")
    s.add_argument("what", choices=["maxhull"])
    s.add_argument("file")
    s.add_argument("--exhaustive", action="store_true")
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    kind_flag(s)
    s.set_defaults(func=cmd_search)

    e = sub.add_parser("eaqec", help="EAQEC parameters, tables and families")
    e.add_argument("op", choices=["derive", "table", "family"])
    e.add_argument("file", nargs="?", help="code file (derive)")
    e.add_argument("--input", help="table rows file (table); default: the shipped rows")
    mode = e.add_mutually_exclusive_group()
    mode.add_argument("--symbolic", action="store_true", help="h left free (default)")
    mode.add_argument("--numeric", action="store_true", help="one line per h")
    e.add_argument("--family", choices=["cor72", "cor73"], default="cor72")
    for name in ("n", "k", "d", "d-dual", "h", "q", "s"):
        e.add_argument(f"--{name}", type=int)
    kind_flag(e)
    e.set_defaults(func=cmd_eaqec)

    v = sub.add_parser("verify", help="run the acceptance suite")
    v.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except CodeFileError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except HullforgeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
