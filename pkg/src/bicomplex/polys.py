"""Dense exact polynomials over the rationals and primitive integer polynomials.

A polynomial is stored as a tuple of coefficients, lowest degree first, so
``Poly.of(-8, 4, -2, 1)`` is ``X^3 - 2*X^2 + 4*X - 8``.  Coefficients of
:class:`Poly` are :class:`fractions.Fraction`; :class:`IntPoly` keeps integer
coefficients and enforces the minimal-polynomial normal form used throughout
this package (primitive, positive leading coefficient).

The zero polynomial is the empty tuple; its degree is undefined and the
operations that need a degree reject it.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction


def _trim(coeffs):
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class Poly:
    """A dense polynomial with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(*coeffs) -> Poly:
        """Build a polynomial from numbers, lowest degree first.

        >>> Poly.of(-1, 0, 1)
        Poly('X^2 - 1')
        """
        return Poly(_trim(tuple(Fraction(c) for c in coeffs)))

    @staticmethod
    def zero() -> Poly:
        return Poly(())

    @staticmethod
    def one() -> Poly:
        return Poly.of(1)

    @staticmethod
    def x_power(k: int, coeff=1) -> Poly:
        """The monomial coeff * X^k."""
        return Poly.of(*([0] * k + [coeff]))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: Poly) -> Poly:
        return Poly(_trim([a + b for a, b in
                           itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=Fraction(0))]))

    def __sub__(self, other: Poly) -> Poly:
        return Poly(_trim([a - b for a, b in
                           itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=Fraction(0))]))

    def __neg__(self) -> Poly:
        return Poly(tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return Poly(_trim([a * other for a in self.coeffs]))
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one()
        square = self
        while n:
            if n & 1:
                result = result * square
            square = square * square
            n >>= 1
        return result

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        """Exact quotient and remainder with deg(remainder) < deg(other)."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero polynomial")
        quot = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 1)
        rem = list(self.coeffs)
        d = other.degree
        inv_lead = 1 / other.lead
        while len(rem) - 1 >= d and _trim(rem):
            rem = list(_trim(rem))
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            c = rem[-1] * inv_lead
            quot[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= c * b
        return Poly(_trim(quot)), Poly(_trim(rem))

    def __call__(self, x):
        """Horner evaluation; works for Fraction and complex arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly(_trim([i * c for i, c in enumerate(self.coeffs)][1:]))

    def monic(self) -> Poly:
        if self.is_zero:
            raise ValueError("zero polynomial cannot be made monic")
        return self * (1 / self.lead)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly('{format_poly(self)}')"


@dataclass(frozen=True)
class IntPoly:
    """A primitive integer polynomial with positive leading coefficient.

    This is the normal form of minimal polynomials: content 1 and positive
    leading coefficient.  The constant polynomial 1 is allowed (it is the
    empty product of factors); the zero polynomial is not.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("IntPoly cannot be the zero polynomial")
        if any(not isinstance(c, int) for c in self.coeffs):
            raise TypeError("IntPoly coefficients must be int")
        if self.coeffs[-1] <= 0:
            raise ValueError("IntPoly leading coefficient must be positive")
        if math.gcd(*self.coeffs) != 1:
            raise ValueError("IntPoly must be primitive")

    @staticmethod
    def of(*coeffs: int) -> IntPoly:
        return IntPoly(_trim(tuple(int(c) for c in coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1]

    def to_poly(self) -> Poly:
        return Poly(tuple(Fraction(c) for c in self.coeffs))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: IntPoly) -> IntPoly:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return content_primitive(self.to_poly() * other.to_poly())[1]

    def __str__(self) -> str:
        return format_poly(self.to_poly())

    def __repr__(self) -> str:
        return f"IntPoly('{format_poly(self.to_poly())}')"


def content_primitive(p: Poly) -> tuple[Fraction, IntPoly]:
    """Split a nonzero rational polynomial as scale * primitive.

    The primitive part has integer coefficients with gcd 1 and a positive
    leading coefficient; the scale carries the sign, so it is positive
    exactly when the input has a positive leading coefficient.

    >>> content_primitive(Poly.of(-2, 0, 2))
    (Fraction(2, 1), IntPoly('X^2 - 1'))
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no content decomposition")
    denom_lcm = 1
    for c in p.coeffs:
        denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in p.coeffs]
    g = math.gcd(*ints)
    if ints[-1] < 0:
        g = -g
    return Fraction(g, denom_lcm), IntPoly(tuple(c // g for c in ints))


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over the rationals (Euclid with primitive reduction)."""
    if p.is_zero and q.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = p, q
    while not b.is_zero:
        _, r = divmod(a, b)
        if not r.is_zero:
            # Re-scale to the integer primitive part to keep coefficients small.
            r = content_primitive(r)[1].to_poly()
        a, b = b, r
    return a.monic()


def is_squarefree(p: IntPoly) -> bool:
    """True when gcd(p, p') is constant, i.e. p has no repeated complex root."""
    if p.degree < 1:
        raise ValueError("squarefreeness is only defined for degree >= 1")
    return poly_gcd(p.to_poly(), p.to_poly().derivative()).degree == 0


def _sign_at_plus_inf(p: Poly) -> int:
    return 1 if p.lead > 0 else -1


def _sign_at_minus_inf(p: Poly) -> int:
    s = _sign_at_plus_inf(p)
    return s if p.degree % 2 == 0 else -s


def _sign_variations(signs) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def sturm_chain(p: IntPoly) -> list[Poly]:
    """The Sturm chain of p, each entry reduced to its integer primitive part.

    Primitive reduction uses a positive scale only, so the sign data the
    chain carries is unchanged while coefficient growth stays controlled.
    """
    chain = [p.to_poly()]
    deriv = p.to_poly().derivative()
    if not deriv.is_zero:
        chain.append(content_primitive(deriv)[1].to_poly())
    while chain[-1].degree > 0:
        _, rem = divmod(chain[-2], chain[-1])
        if rem.is_zero:
            break
        scale, prim = content_primitive(-rem)
        prim_poly = prim.to_poly()
        chain.append(prim_poly if scale > 0 else -prim_poly)
    return chain


def sturm_real_root_count(p: IntPoly) -> int:
    """Exact number of distinct real roots of a squarefree polynomial.

    Counts the drop in sign variations of the Sturm chain between -inf and
    +inf.

    >>> sturm_real_root_count(IntPoly.of(-8, 4, -2, 1))
    1
    """
    if p.degree < 1:
        raise ValueError("root counting needs degree >= 1")
    if not is_squarefree(p):
        raise ValueError("Sturm count requires a squarefree polynomial")
    chain = sturm_chain(p)
    lo = _sign_variations([_sign_at_minus_inf(q) for q in chain])
    hi = _sign_variations([_sign_at_plus_inf(q) for q in chain])
    return lo - hi


@functools.lru_cache(maxsize=None)
def _cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    # X^n - 1 divided by the cyclotomic polynomials of all proper divisors.
    poly = Poly.of(*([-1] + [0] * (n - 1) + [1]))
    for d in range(1, n):
        if n % d == 0:
            poly, rem = divmod(poly, Poly(tuple(Fraction(c) for c in _cyclotomic_coeffs(d))))
            assert rem.is_zero
    return tuple(int(c) for c in poly.coeffs)


def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial.

    >>> cyclotomic(12)
    IntPoly('X^4 - X^2 + 1')
    """
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    return IntPoly(_cyclotomic_coeffs(n))


def format_poly(p: Poly, var: str = "X") -> str:
    """ASCII form with explicit '*' between coefficient and variable."""
    if p.is_zero:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            xk = var if k == 1 else f"{var}^{k}"
            body = xk if mag == 1 else f"{mag}*{xk}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)
