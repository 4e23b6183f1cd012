"""Batch command-line interface.

Every command prints line-oriented ``key: value`` output with stable key
names; ``--structured`` suppresses the advisory ``hint:`` lines.  Exit codes:
0 success, 1 mathematical negative of a predicate (e.g. ``member`` false),
2 usage or parse error, 3 domain error, 4 cap exceeded or undecided.
All numeric I/O is exact.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import algebra, monoid, parsing, poly
from .errors import CapExceededError, DomainError, ParseError, PuiseuxError
from .fields import QQ, PrimeField
from .polyfactor import DEFAULT_DEGREE_CAP

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_UNDECIDED = 4


class _Output:
    def __init__(self, structured: bool):
        self.structured = structured

    def emit(self, key: str, value):
        if value is True or value is False:
            value = "true" if value else "false"
        print(f"{key}: {value}")

    def hint(self, text: str):
        if not self.structured:
            print(f"hint: {text}")


def _parse_field(text: str):
    if text == "Q":
        return QQ
    if text.startswith("Fp:"):
        return PrimeField(int(text[3:]))
    raise DomainError(f"unknown field {text!r}; use Q or Fp:<p>")


def _poly_text(text: str) -> str:
    return sys.stdin.read().strip() if text == "-" else text


def _fmt_bool(flag: bool) -> int:
    return EXIT_OK if flag else EXIT_FALSE


def _fmt_monoid_side(value) -> str:
    if isinstance(value, Fraction):
        return parsing.format_rational(value)
    if isinstance(value, monoid.AllRationals):
        return "all_rationals"
    if isinstance(value, monoid.DensePrime):
        return f"dense_prime({value.p})"
    if isinstance(value, monoid.DenseBiPrime):
        return f"dense_biprime({value.p},{value.q})"
    if isinstance(value, monoid.DenseSquarefree):
        return "dense_squarefree"
    return str(value)


# ---------------------------------------------------------------------------
# command handlers


def _cmd_member(args, out: _Output) -> int:
    M = parsing.parse_monoid(args.monoid)
    x = parsing.parse_rational(args.element)
    result = monoid.contains(M, x)
    out.emit("member", result)
    return _fmt_bool(result)


def _cmd_decompose(args, out: _Output) -> int:
    M = parsing.parse_monoid(args.monoid)
    x = parsing.parse_rational(args.element)
    dec = monoid.decompose(M, x)
    out.emit("integer_part", dec.integer_part)
    for gen, digit in dec.digits:
        out.emit(f"digit[{parsing.format_rational(gen)}]", digit)
    return EXIT_OK


def _cmd_atoms(args, out: _Output) -> int:
    M = parsing.parse_monoid(args.monoid)
    result = monoid.atoms(M)
    out.emit("antimatter", result.antimatter)
    if not result.antimatter:
        out.emit("atoms", ", ".join(parsing.format_rational(a) for a in result.atoms))
        out.emit("tail_atoms", result.tail_atoms)
        if result.tail_atoms:
            out.hint("plus 1/p for every prime p outside the listed denominators")
    return EXIT_OK


def _cmd_divides(args, out: _Output) -> int:
    M = parsing.parse_monoid(args.monoid)
    y = parsing.parse_rational(args.divisor)
    z = parsing.parse_rational(args.element)
    result = monoid.divides(M, y, z)
    out.emit("divides", result)
    return _fmt_bool(result)


def _cmd_factorizations(args, out: _Output) -> int:
    M = parsing.parse_monoid(args.monoid)
    x = parsing.parse_rational(args.element)
    zs = monoid.factorizations(M, x)
    out.emit("element", parsing.format_rational(zs.element))
    out.emit("count", len(zs.factorizations))
    for i, z in enumerate(sorted(zs.factorizations)):
        out.emit(f"factorization[{i}]", ", ".join(parsing.format_rational(a) for a in z))
    out.emit("lengths", ", ".join(str(n) for n in sorted(zs.lengths)))
    return EXIT_OK


def _cmd_monoid_info(args, out: _Output) -> int:
    M = parsing.parse_monoid(args.monoid)
    out.emit("root_closed", monoid.is_root_closed(M))
    out.emit("atomic", monoid.is_atomic(M))
    out.emit("antimatter", monoid.is_antimatter(M))
    out.emit("zero_limit_point", monoid.has_zero_limit_point(M))
    cyclic = monoid.is_isomorphic_to_naturals(M)
    out.emit("half_factorial_algebra", cyclic)
    out.emit("pid_algebra", cyclic)
    out.emit("gp_generator", _fmt_monoid_side(monoid.difference_group_generator(M)))
    return EXIT_OK


def _cmd_content(args, out: _Output) -> int:
    f = parsing.parse_poly(_poly_text(args.poly), QQ)
    out.emit("content", poly.content(f))
    return EXIT_OK


def _cmd_primitive(args, out: _Output) -> int:
    f = parsing.parse_poly(_poly_text(args.poly), QQ)
    result = poly.is_primitive(f)
    out.emit("primitive", result)
    return _fmt_bool(result)


def _cmd_eisenstein(args, out: _Output) -> int:
    f = parsing.parse_poly(_poly_text(args.poly), QQ)
    result = poly.eisenstein_applies(f, args.p)
    out.emit("applies", result)
    if not result and not f.is_zero() and not f.is_constant() and f.trailing_exponent() != 0:
        out.hint("no constant term: X^q_min factors out, so the criterion is inapplicable")
    return _fmt_bool(result)


def _cmd_inflate(args, out: _Output) -> int:
    field = _parse_field(args.field)
    f = parsing.parse_poly(_poly_text(args.poly), field)
    coeffs = poly.inflate(f, args.m)
    inflated = poly.canonicalize([(Fraction(i), c) for i, c in enumerate(coeffs)], field)
    out.emit("polynomial", parsing.format_poly(inflated))
    return EXIT_OK


def _cmd_irreducible(args, out: _Output) -> int:
    field = _parse_field(args.field)
    M = parsing.parse_monoid(args.monoid)
    f = parsing.parse_poly(_poly_text(args.poly), field)
    verdict = algebra.is_irreducible(f, M, K=args.bound, max_degree=args.cap)
    status = {
        algebra.IRREDUCIBLE: "certified",
        algebra.REDUCIBLE: "reducible",
        algebra.UNIT: "unit",
        algebra.UNKNOWN: "unknown",
    }[verdict.status]
    out.emit("status", status)
    out.emit("bound", verdict.bound)
    if verdict.witness is not None:
        out.emit("witness[0]", parsing.format_poly(verdict.witness[0]))
        out.emit("witness[1]", parsing.format_poly(verdict.witness[1]))
    if verdict.status == algebra.UNKNOWN:
        return EXIT_UNDECIDED
    return EXIT_FALSE if verdict.reducible else EXIT_OK


def _cmd_factor(args, out: _Output) -> int:
    field = _parse_field(args.field)
    M = parsing.parse_monoid(args.monoid)
    f = parsing.parse_poly(_poly_text(args.poly), field)
    outcome = algebra.factor_in_algebra(f, M, K=args.bound, D=args.depth, max_degree=args.cap)
    out.emit("status", outcome.status)
    if outcome.status == "unit":
        out.emit("unit", _fmt_coeff(outcome.unit))
        return EXIT_OK
    if outcome.status == "unique_factorization":
        out.emit("unit", _fmt_coeff(outcome.unit))
        for i, atom in enumerate(outcome.atoms):
            out.emit(f"atom[{i}]", parsing.format_poly(atom))
        out.emit("bound", outcome.bound)
        return EXIT_OK
    if outcome.status == "no_atomic_factorization":
        out.emit("depth", outcome.depth)
        out.emit("frobenius_certificate", outcome.frobenius_certificate)
        return EXIT_OK if outcome.frobenius_certificate else EXIT_UNDECIDED
    return EXIT_UNDECIDED  # cap_exceeded


def _fmt_coeff(c) -> str:
    return parsing.format_rational(c) if isinstance(c, Fraction) else str(c)


def _cmd_frobenius_root(args, out: _Output) -> int:
    field = _parse_field(args.field)
    M = parsing.parse_monoid(args.monoid)
    f = parsing.parse_poly(_poly_text(args.poly), field)
    root = algebra.frobenius_pth_root(f, M)
    out.emit("root", parsing.format_poly(root))
    return EXIT_OK


def _cmd_uufd_check(args, out: _Output) -> int:
    field = _parse_field(args.field)
    f = parsing.parse_poly(_poly_text(args.poly), field)
    z1 = [parsing.parse_poly(t.strip(), field) for t in args.factors1.split(";")]
    z2 = [parsing.parse_poly(t.strip(), field) for t in args.factors2.split(";")]
    result = algebra.uufd_check(f, z1, z2, field)
    out.emit("equivalent", result)
    return _fmt_bool(result)


def _cmd_chain_verify(args, out: _Output) -> int:
    M = parsing.parse_monoid(args.monoid)
    chain = [parsing.parse_rational(t) for t in args.elements]
    report = monoid.verify_divisibility_chain(M, chain)
    out.emit("valid", report.ok)
    if not report.ok:
        out.emit("violation_step", report.first_violation)
        out.emit("reason", report.reason)
    return _fmt_bool(report.ok)


# ---------------------------------------------------------------------------
# wiring


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="puiseux",
        description="Exact computation in Puiseux monoids and semigroup algebras",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--structured", action="store_true", help="stable keys only")
        return p

    p = add("member", _cmd_member, "membership x in M")
    p.add_argument("monoid")
    p.add_argument("element")

    p = add("decompose", _cmd_decompose, "canonical digit decomposition")
    p.add_argument("monoid")
    p.add_argument("element")

    p = add("atoms", _cmd_atoms, "atom set of the monoid")
    p.add_argument("monoid")

    p = add("divides", _cmd_divides, "does y divide z in M")
    p.add_argument("monoid")
    p.add_argument("divisor")
    p.add_argument("element")

    p = add("factorizations", _cmd_factorizations, "all atom multisets summing to x")
    p.add_argument("monoid")
    p.add_argument("element")

    p = add("monoid-info", _cmd_monoid_info, "structural predicates of M")
    p.add_argument("monoid")

    p = add("content", _cmd_content, "content of an integer-coefficient element")
    p.add_argument("poly")

    p = add("primitive", _cmd_primitive, "is the content a unit")
    p.add_argument("poly")

    p = add("eisenstein", _cmd_eisenstein, "extended Eisenstein test at a prime")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("poly")

    p = add("inflate", _cmd_inflate, "compose with X^m")
    p.add_argument("--field", default="Q")
    p.add_argument("poly")
    p.add_argument("m", type=int)

    p = add("irreducible", _cmd_irreducible, "bounded irreducibility certification in F[M]")
    p.add_argument("--field", default="Q")
    p.add_argument("--bound", type=int, default=algebra.DEFAULT_INFLATION_BOUND)
    p.add_argument("--cap", type=int, default=DEFAULT_DEGREE_CAP)
    p.add_argument("monoid")
    p.add_argument("poly")

    p = add("factor", _cmd_factor, "factor into certified irreducibles of F[M]")
    p.add_argument("--field", default="Q")
    p.add_argument("--bound", type=int, default=algebra.DEFAULT_INFLATION_BOUND)
    p.add_argument("--depth", type=int, default=algebra.DEFAULT_DEPTH)
    p.add_argument("--cap", type=int, default=DEFAULT_DEGREE_CAP)
    p.add_argument("monoid")
    p.add_argument("poly")

    p = add("frobenius-root", _cmd_frobenius_root, "p-th root under the Frobenius map")
    p.add_argument("--field", required=True, help="Fp:<p>")
    p.add_argument("monoid")
    p.add_argument("poly")

    p = add("uufd-check", _cmd_uufd_check, "compare two factorizations up to units/order")
    p.add_argument("--field", default="Q")
    p.add_argument("poly")
    p.add_argument("factors1", help="semicolon-separated factor list")
    p.add_argument("factors2", help="semicolon-separated factor list")

    p = add("chain-verify", _cmd_chain_verify, "verify a strict divisibility chain")
    p.add_argument("monoid")
    p.add_argument("elements", nargs="+")

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = _Output(args.structured)
    try:
        return args.handler(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except PuiseuxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def console_main() -> None:
    sys.exit(main())
