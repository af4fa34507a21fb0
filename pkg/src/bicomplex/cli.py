"""Command-line front end.

Elements are written either in Cartesian form ``x+y*i+z*j+t*k`` (rational
coefficients; signs and bare units like ``-k`` allowed) or in idempotent
form ``[g1, g2]`` with Gaussian-rational components ``a+b*i``.  Polynomials
use ``X`` with explicit ``*`` and ``^``, e.g. ``X^3 - 2*X^2 + 4*X - 8``.

Exit codes: 0 on success, 1 on usage errors (bad syntax, unknown flags or
descriptors), 2 on domain errors (null cone, non-terminating expansions,
degenerate ideals, factoring a unit).
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .census import (
    Census,
    RootConvergenceError,
    census,
    enumerate_bicomplex_roots,
    gaussian_root_set,
    locus_factors,
    numeric_roots,
)
from .element import BicomplexElement, NullConeError, format_cartesian
from .minpoly import minpoly_bicomplex, quartic_charpoly
from .polys import IntPoly, Poly, content_primitive, cyclotomic, format_poly
from .radix import (
    DigitString,
    GaussBase,
    HypGaussBase,
    HypSplitBase,
    NonTerminationError,
    decode,
    digit_set,
    encode,
)
from .rings import (
    ExtensionDescriptor,
    GAUSSIAN_FIELD,
    QB,
    QH,
    Q_FIELD,
    QuadraticField,
    RationalField,
    UnitInputError,
    UnsupportedRingError,
    discriminant,
    discriminant_by_trace_matrix,
    factor,
    rational_prime_profile,
    unit_group,
)
from .scalars import GaussianRational, format_scalar
from .zeta import DegenerateIdealError, coefficient_table, zeta_partial

DOMAIN_ERRORS = (NullConeError, NonTerminationError, DegenerateIdealError,
                 UnitInputError, RootConvergenceError)


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self) -> str:
        ch = self.peek()
        if ch is None:
            raise ParseError("unexpected end of input", self.pos)
        self.pos += 1
        return ch

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def scan_uint(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected a number", self.pos)
        return int(self.text[start:self.pos])

    def scan_number(self) -> Fraction:
        num = self.scan_uint()
        self.skip_ws()
        if self.peek() == "/":
            self.pos += 1
            self.skip_ws()
            den = self.scan_uint()
            if den == 0:
                raise ParseError("zero denominator", self.pos)
            return Fraction(num, den)
        return Fraction(num)


_STOP = {",", "]", None}


def _parse_combo(sc: _Scanner, units: str) -> dict[str, Fraction]:
    """Sum of signed terms 'q', 'q*u' or 'u' over the given unit letters."""
    coeffs = {u: Fraction(0) for u in units}
    coeffs[""] = Fraction(0)
    first = True
    while True:
        sc.skip_ws()
        if sc.peek() in _STOP:
            if first:
                raise ParseError("empty expression", sc.pos)
            return coeffs
        sign = 1
        if sc.peek() in "+-":
            sign = 1 if sc.take() == "+" else -1
        elif not first:
            raise ParseError("expected '+' or '-'", sc.pos)
        sc.skip_ws()
        ch = sc.peek()
        if ch is not None and ch.isdigit():
            value = sc.scan_number()
            sc.skip_ws()
            if sc.peek() == "*":
                sc.take()
                sc.skip_ws()
                unit = sc.take()
                if unit not in units:
                    raise ParseError(f"unknown unit {unit!r}", sc.pos - 1)
                coeffs[unit] += sign * value
            elif sc.peek() in _STOP or sc.peek() in "+-":
                coeffs[""] += sign * value
            else:
                raise ParseError("expected '*', '+', '-' or end", sc.pos)
        elif ch is not None and ch in units:
            sc.take()
            coeffs[ch] += sign
        else:
            raise ParseError("expected a term", sc.pos)
        first = False


def parse_element(text: str) -> BicomplexElement:
    """Parse either element literal form, with position-reported errors."""
    sc = _Scanner(text)
    sc.skip_ws()
    if sc.peek() == "[":
        sc.take()
        part1 = _parse_combo(sc, "i")
        sc.expect(",")
        part2 = _parse_combo(sc, "i")
        sc.expect("]")
        sc.skip_ws()
        if sc.peek() is not None:
            raise ParseError("trailing input after ']'", sc.pos)
        return BicomplexElement(GaussianRational(part1[""], part1["i"]),
                                GaussianRational(part2[""], part2["i"]))
    coeffs = _parse_combo(sc, "ijk")
    if sc.peek() is not None:
        raise ParseError("trailing input", sc.pos)
    return BicomplexElement.from_cartesian(coeffs[""], coeffs["i"], coeffs["j"], coeffs["k"])


def parse_poly(text: str) -> Poly:
    """Parse a polynomial in X with rational coefficients."""
    sc = _Scanner(text)
    coeffs: dict[int, Fraction] = {}
    first = True
    while True:
        sc.skip_ws()
        if sc.peek() is None:
            if first:
                raise ParseError("empty polynomial", sc.pos)
            break
        sign = 1
        if sc.peek() in "+-":
            sign = 1 if sc.take() == "+" else -1
        elif not first:
            raise ParseError("expected '+' or '-'", sc.pos)
        sc.skip_ws()
        ch = sc.peek()
        value = Fraction(1)
        have_value = False
        if ch is not None and ch.isdigit():
            value = sc.scan_number()
            have_value = True
            sc.skip_ws()
            if sc.peek() == "*":
                sc.take()
                sc.skip_ws()
            elif sc.peek() in ("X", "x"):
                raise ParseError("write coefficient*X with explicit '*'", sc.pos)
        if sc.peek() in ("X", "x"):
            sc.take()
            power = 1
            sc.skip_ws()
            if sc.peek() == "^":
                sc.take()
                sc.skip_ws()
                power = sc.scan_uint()
        elif have_value:
            power = 0
        else:
            raise ParseError("expected a coefficient or X", sc.pos)
        coeffs[power] = coeffs.get(power, Fraction(0)) + sign * value
        first = False
    top = max(coeffs)
    return Poly.of(*[coeffs.get(k, Fraction(0)) for k in range(top + 1)])


def parse_int_poly(text: str) -> IntPoly:
    poly = parse_poly(text)
    if poly.is_zero:
        raise ParseError("the zero polynomial is not allowed here", 0)
    return content_primitive(poly)[1]


# -- descriptor flags ---------------------------------------------------------

def parse_field(text: str) -> RationalField | QuadraticField:
    if text == "Q":
        return Q_FIELD
    if text in ("Qi", "Q(i)"):
        return GAUSSIAN_FIELD
    if text.startswith("Q(sqrt:") and text.endswith(")"):
        return QuadraticField(int(text[len("Q(sqrt:"):-1]))
    raise ParseError(f"unknown field {text!r}; use Q, Qi or Q(sqrt:D)", 0)


def parse_extension(text: str) -> ExtensionDescriptor:
    if text == "Qh":
        return QH
    if text == "QB":
        return QB
    if text.startswith("custom:"):
        parts = text[len("custom:"):].split(",")
        if len(parts) != 2:
            raise ParseError("custom extension needs exactly two fields", 0)
        return ExtensionDescriptor(parse_field(parts[0]), parse_field(parts[1]))
    raise ParseError(f"unknown extension {text!r}; use Qh, QB or custom:K1,K2", 0)


def parse_table_key(text: str):
    """Field or extension names accepted by the counting commands."""
    if text in ("Q",):
        return Q_FIELD
    if text in ("Qi", "Q(i)"):
        return GAUSSIAN_FIELD
    if text == "Qh":
        return QH
    if text == "QB":
        return QB
    raise ParseError(f"unknown coefficient field {text!r}; use Q, Qi, Qh or QB", 0)


def parse_radix_base(text: str):
    kind, _, rest = text.partition(":")
    try:
        if kind == "split":
            return HypSplitBase(int(rest))
        if kind == "jgauss":
            return HypGaussBase(int(rest))
        if kind == "gauss":
            if rest.endswith("+i"):
                return GaussBase(int(rest[:-2]), 1)
            if rest.endswith("-i"):
                return GaussBase(int(rest[:-2]), -1)
    except ValueError as exc:
        raise ParseError(f"bad radix base {text!r}: {exc}", 0) from None
    raise ParseError(
        f"unknown radix base {text!r}; use split:A, jgauss:A or gauss:A+i / gauss:A-i", 0)


# -- output helpers -------------------------------------------------------------

def idempotent_literal(el: BicomplexElement) -> str:
    return f"[{format_scalar(el.c1)}, {format_scalar(el.c2)}]"


def element_payload(el: BicomplexElement) -> dict:
    payload = {"idempotent": idempotent_literal(el)}
    if el.has_cartesian_view:
        payload["cartesian"] = format_cartesian(el.to_cartesian())
    return payload


def _poly_coeff_list(poly: Poly) -> list:
    return [int(c) if c.denominator == 1 else str(c) for c in poly.coeffs]


def _emit(args, text_lines, payload):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# -- subcommand handlers ---------------------------------------------------------

def _cmd_decompose(args) -> int:
    el = parse_element(args.element)
    _emit(args, [idempotent_literal(el)], element_payload(el))
    return 0


def _cmd_conj(args) -> int:
    el = parse_element(args.element).conjugate(args.axis)
    _emit(args, [str(el)], element_payload(el))
    return 0


def _cmd_norm(args) -> int:
    value = parse_element(args.element).norm()
    _emit(args, [str(value)], {"norm": str(value)})
    return 0


def _cmd_minpoly(args) -> int:
    result = minpoly_bicomplex(parse_element(args.element))
    lines = [str(result.poly), f"kind: {result.kind}"]
    payload = {
        "poly": list(result.poly.coeffs),
        "text": str(result.poly),
        "kind": result.kind,
        "components": [list(p.coeffs) for p in result.component_polys],
    }
    _emit(args, lines, payload)
    return 0


def _cmd_charpoly4(args) -> int:
    poly, coeffs = quartic_charpoly(parse_element(args.element))
    lines = [
        format_poly(poly),
        f"4*Re = {coeffs.four_re}",
        f"A = {coeffs.triple_sum}",
        f"B = {coeffs.pair_sum}",
        f"N = {coeffs.norm}",
    ]
    payload = {
        "poly": _poly_coeff_list(poly),
        "text": format_poly(poly),
        "four_re": str(coeffs.four_re),
        "A": str(coeffs.triple_sum),
        "B": str(coeffs.pair_sum),
        "N": str(coeffs.norm),
    }
    _emit(args, lines, payload)
    return 0


def _input_int_poly(args) -> IntPoly:
    if args.cyclotomic is not None:
        return cyclotomic(args.cyclotomic)
    if args.poly is not None:
        return parse_int_poly(args.poly)
    return minpoly_bicomplex(parse_element(args.element)).poly


def _census_payload(c: Census) -> dict:
    return {
        "degree": c.degree,
        "real_roots": c.real_roots,
        "complex_pairs": c.complex_pairs,
        "i_plane": c.i_plane,
        "j_plane": c.j_plane,
        "k_plane": c.k_plane,
        "off_plane": c.off_plane,
        "total": c.total,
    }


def _cmd_census(args) -> int:
    poly = _input_int_poly(args)
    result = census(poly)
    lines = [
        f"polynomial: {poly}",
        f"degree: {result.degree}",
        f"real roots: {result.real_roots}",
        f"i-plane (non-real): {result.i_plane}",
        f"j-plane (non-real): {result.j_plane}",
        f"k-plane (non-real): {result.k_plane}",
        f"off-plane: {result.off_plane}",
        f"total bicomplex roots: {result.total}",
    ]
    _emit(args, lines, _census_payload(result))
    return 0


def _cmd_roots(args) -> int:
    poly = _input_int_poly(args)
    if args.bicomplex:
        mp_components = None
        if args.element is not None:
            mp_components = minpoly_bicomplex(parse_element(args.element)).component_polys
        roots = gaussian_root_set(mp_components if mp_components else [poly])
        if roots is None:
            print("error: roots are not Gaussian rationals; rerun without --bicomplex",
                  file=sys.stderr)
            return 1
        partition = enumerate_bicomplex_roots(roots)
        factors = locus_factors(roots, poly.lead)
        lines = []
        payload = {}
        for name, members, factor_poly in (
                ("real", partition.real, factors.real),
                ("i-plane", partition.plane_i, factors.plane_i),
                ("j-plane", partition.plane_j, factors.plane_j),
                ("k-plane", partition.plane_k, factors.plane_k),
                ("off-plane", partition.generic, factors.generic)):
            shown = ", ".join(idempotent_literal(m) for m in members) or "(none)"
            lines.append(f"{name}: {shown}")
            lines.append(f"{name} factor: {format_poly(factor_poly)}")
            payload[name.replace("-", "_")] = {
                "roots": [idempotent_literal(m) for m in members],
                "factor": _poly_coeff_list(factor_poly),
            }
        _emit(args, lines, payload)
        return 0
    approx = numeric_roots(poly, tol=args.tol)
    lines = [f"{z.real:.12g}{z.imag:+.12g}*i" for z in approx]
    _emit(args, lines, {"roots": [[z.real, z.imag] for z in approx]})
    return 0


def _cmd_factor(args) -> int:
    L = parse_extension(args.L)
    decomposition = factor(parse_element(args.element), L)
    lines = [f"unit {idempotent_literal(decomposition.unit)}"]
    lines += [f"prime {idempotent_literal(p)} ^ {e}" for p, e in decomposition.factors]
    payload = {
        "unit": element_payload(decomposition.unit),
        "factors": [{"prime": element_payload(p), "exponent": e}
                    for p, e in decomposition.factors],
    }
    _emit(args, lines, payload)
    return 0


def _cmd_primes_profile(args) -> int:
    L = parse_extension(args.L)
    profile = rational_prime_profile(args.p, L)
    lines = [
        f"p = {args.p} in {L}: {profile.factor_count} prime factors (with multiplicity)",
        f"semiprime: {'yes' if profile.semiprime else 'no'}",
    ]
    lines += [f"prime {idempotent_literal(p)} ^ {e}"
              for p, e in profile.factorization.factors]
    payload = {
        "p": args.p,
        "factor_count": profile.factor_count,
        "semiprime": profile.semiprime,
        "factors": [{"prime": element_payload(p), "exponent": e}
                    for p, e in profile.factorization.factors],
    }
    _emit(args, lines, payload)
    return 0


def _cmd_units(args) -> int:
    info = unit_group(parse_extension(args.L))
    lines = [
        f"finite: {'yes' if info.finite else 'no'}",
        f"order: {info.order if info.finite else 'infinite'}",
        f"class: {info.unit_class}",
        f"structure: {info.structure}",
    ]
    payload = {
        "finite": info.finite,
        "order": info.order,
        "class": info.unit_class,
        "structure": info.structure,
    }
    if info.infinite_witness is not None:
        lines.append(f"infinite-order unit: {idempotent_literal(info.infinite_witness)}")
        payload["infinite_order_unit"] = idempotent_literal(info.infinite_witness)
    _emit(args, lines, payload)
    return 0


def _cmd_disc(args) -> int:
    L = parse_extension(args.L)
    value = discriminant(L)
    try:
        assert value == discriminant_by_trace_matrix(L)
    except UnsupportedRingError:
        pass  # no common scalar kind: the product formula still applies
    _emit(args, [str(value)], {"discriminant": value})
    return 0


def _cmd_ideal_count(args) -> int:
    table = coefficient_table(parse_table_key(args.K), args.max)
    if args.out:
        with open(args.out, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["n", "a_n"])
            for n, a in enumerate(table.values, start=1):
                writer.writerow([n, a])
    if args.json:
        print(json.dumps(list(table.values)))
    elif not args.out:
        for n, a in enumerate(table.values, start=1):
            print(n, a)
    return 0


def _cmd_zeta(args) -> int:
    value = zeta_partial(parse_table_key(args.K), Fraction(args.s), args.N)
    _emit(args, [f"{value:.12g}"], {"value": value, "s": args.s, "N": args.N})
    return 0


def _cmd_radix_encode(args) -> int:
    base = parse_radix_base(args.base)
    digits = encode(parse_element(args.element), base)
    lines = [f"base {base}", f"digits (msd first): {digits}"]
    payload = {"base": args.base, "digits_lsd_first": list(digits.digits)}
    _emit(args, lines, payload)
    return 0


def _cmd_radix_decode(args) -> int:
    base = parse_radix_base(args.base)
    try:
        msd_digits = [int(d) for d in args.digits.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"bad digit list {args.digits!r}", 0) from None
    if not msd_digits:
        raise ParseError("empty digit list", 0)
    while len(msd_digits) > 1 and msd_digits[0] == 0:
        msd_digits.pop(0)
    value = decode(DigitString(tuple(reversed(msd_digits)), base))
    shown = str(value) if isinstance(base, GaussBase) else idempotent_literal(value)
    _emit(args, [shown], element_payload(value))
    return 0


# -- driver -----------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bicomplex",
                     description="Exact arithmetic of bicomplex algebraic numbers.")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def sub(name, handler, help_text):
        p = subs.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(handler=handler)
        return p

    p = sub("decompose", _cmd_decompose, "idempotent components of an element")
    p.add_argument("element")

    p = sub("conj", _cmd_conj, "conjugate an element along an axis")
    p.add_argument("element")
    p.add_argument("--axis", choices=("i", "j", "k"), required=True)

    p = sub("norm", _cmd_norm, "norm (product with the three conjugates)")
    p.add_argument("element")

    p = sub("minpoly", _cmd_minpoly, "minimal polynomial of an element")
    p.add_argument("element")

    p = sub("charpoly4", _cmd_charpoly4, "quartic characteristic polynomial")
    p.add_argument("element")

    def poly_source(p, with_tol=False):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--poly", help="polynomial literal in X")
        group.add_argument("--element", help="use the element's minimal polynomial")
        group.add_argument("--cyclotomic", type=int, metavar="N",
                           help="use the N-th cyclotomic polynomial")
        if with_tol:
            p.add_argument("--tol", type=float, default=1e-10)

    p = sub("census", _cmd_census, "bicomplex root census of a squarefree polynomial")
    poly_source(p)

    p = sub("roots", _cmd_roots, "numeric roots, or exact bicomplex root loci")
    poly_source(p, with_tol=True)
    p.add_argument("--bicomplex", action="store_true",
                   help="enumerate the n^2 bicomplex roots exactly by locus")

    p = sub("factor", _cmd_factor, "factor an integral element into primes")
    p.add_argument("element")
    p.add_argument("--L", default="QB", help="Qh, QB or custom:K1,K2")

    p = sub("primes-profile", _cmd_primes_profile, "how a rational prime factors")
    p.add_argument("p", type=int)
    p.add_argument("--L", default="QB")

    p = sub("units", _cmd_units, "unit group of the ring of integers")
    p.add_argument("--L", required=True)

    p = sub("disc", _cmd_disc, "discriminant of the extension")
    p.add_argument("--L", required=True)

    p = sub("ideal-count", _cmd_ideal_count, "ideal-count table a(1..N)")
    p.add_argument("--K", required=True, help="Q, Qi, Qh or QB")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--out", help="write the table as CSV (header n,a_n)")

    p = sub("zeta", _cmd_zeta, "truncated zeta sum of a(n)/n^s")
    p.add_argument("--K", required=True, help="Q, Qi, Qh or QB")
    p.add_argument("--s", required=True, help="exponent, s > 1 (fraction allowed)")
    p.add_argument("--N", type=int, required=True)

    p = sub("radix-encode", _cmd_radix_encode, "digit expansion of an integer element")
    p.add_argument("element")
    p.add_argument("--base", required=True, help="split:A, jgauss:A, gauss:A+i or gauss:A-i")

    p = sub("radix-decode", _cmd_radix_decode, "evaluate a digit string (msd first)")
    p.add_argument("--base", required=True)
    p.add_argument("--digits", required=True, help="digits, msd first, space or comma separated")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.handler(args)
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, UnsupportedRingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
