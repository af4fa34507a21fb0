"""Positional digit codecs for hyperbolic and Gaussian integers.

Three base families, each with the digit set {0, ..., |N(q)|-1} forming a
complete residue system modulo the base q:

* split bases q = a*e1 + (a-1)*e2 (a <= -2) acting on all hyperbolic
  integers m*e1 + n*e2, digit chosen by CRT on the residues of the two
  components (mod a and mod a-1);
* hyperbolic Gaussian bases q = a + j (a <= -2) acting on the subring
  Z[j] = {u + v*j}, whose index-2 lattice the expansions cannot leave;
* Gaussian bases q = a + i or a - i (a <= -1) acting on the Gaussian
  integers u + v*i.

Encoding repeatedly strips the unique digit d with q dividing x - d and
replaces x by (x - d)/q.  The digit at each step is forced, so expansions
are unique; inputs whose orbit never reaches zero exist for some bases and
are reported via NonTerminationError (detected either by revisiting a state
or by the 10^4-digit cap), never silently truncated.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .element import BicomplexElement
from .scalars import as_fraction, as_gaussian

ITERATION_CAP = 10_000


class NonTerminationError(ArithmeticError):
    """The digit expansion does not terminate for this input."""


@dataclass(frozen=True)
class HypSplitBase:
    """q = a*e1 + (a-1)*e2 with a <= -2; digit set size a^2 - a = |N(q)|."""

    a: int

    def __post_init__(self):
        if self.a > -2:
            raise ValueError("split bases need a <= -2")

    @property
    def size(self) -> int:
        return self.a * self.a - self.a

    def __str__(self) -> str:
        return f"{self.a}*e1{self.a - 1:+}*e2"


@dataclass(frozen=True)
class HypGaussBase:
    """q = a + j with a <= -2; digit set size a^2 - 1 = |N(q)|."""

    a: int

    def __post_init__(self):
        if self.a > -2:
            raise ValueError("hyperbolic Gaussian bases need a <= -2")

    @property
    def size(self) -> int:
        return self.a * self.a - 1

    def __str__(self) -> str:
        return f"{self.a}+j"


@dataclass(frozen=True)
class GaussBase:
    """q = a + sign*i with a <= -1; digit set size a^2 + 1 = N(q)."""

    a: int
    sign: int

    def __post_init__(self):
        if self.a > -1:
            raise ValueError("Gaussian bases need a <= -1")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def size(self) -> int:
        return self.a * self.a + 1

    def __str__(self) -> str:
        return f"{self.a}{'+' if self.sign > 0 else '-'}i"


RadixBase = HypSplitBase | HypGaussBase | GaussBase


def digit_set(base: RadixBase) -> range:
    return range(base.size)


@dataclass(frozen=True)
class DigitString:
    """Digits least significant first; '0' is the single digit 0."""

    digits: tuple[int, ...]
    base: RadixBase

    def __post_init__(self):
        if not self.digits:
            raise ValueError("a digit string has at least one digit")
        if any(d not in digit_set(self.base) for d in self.digits):
            raise ValueError("digit outside the base's digit set")
        if len(self.digits) > 1 and self.digits[-1] == 0:
            raise ValueError("no leading zero digits")

    def __str__(self) -> str:
        return " ".join(str(d) for d in reversed(self.digits))


def _to_state(x: BicomplexElement, base: RadixBase) -> tuple[int, int]:
    """Coordinates of x in the base's matching ring, validating membership."""
    if isinstance(base, GaussBase):
        g1, g2 = as_gaussian(x.c1), as_gaussian(x.c2)
        if g1 != g2:
            raise ValueError(f"{x} is not a complex number of the i-plane")
        if g1.re.denominator != 1 or g1.im.denominator != 1:
            raise ValueError(f"{x} is not a Gaussian integer")
        return g1.re.numerator, g1.im.numerator
    m, n = as_fraction(x.c1), as_fraction(x.c2)
    if m.denominator != 1 or n.denominator != 1:
        raise ValueError(f"{x} is not a hyperbolic integer")
    m, n = m.numerator, n.numerator
    if isinstance(base, HypSplitBase):
        return m, n
    if (m - n) % 2:
        raise ValueError(f"{x} lies outside Z[j], the ring of the base {base}")
    return (m + n) // 2, (m - n) // 2  # coordinates of u + v*j


def _from_state(state: tuple[int, int], base: RadixBase) -> BicomplexElement:
    u, v = state
    if isinstance(base, GaussBase):
        return BicomplexElement.from_cartesian(u, v, 0, 0)
    if isinstance(base, HypSplitBase):
        return BicomplexElement(Fraction(u), Fraction(v))
    return BicomplexElement.from_cartesian(u, 0, v, 0)


def _digit_and_step(state: tuple[int, int], base: RadixBase) -> tuple[int, tuple[int, int]]:
    """The forced digit of the state and the quotient (state - digit)/q."""
    if isinstance(base, HypSplitBase):
        m, n = state
        q1, q2 = base.a, base.a - 1
        d = _crt(m, abs(q1), n, abs(q2))
        return d, ((m - d) // q1, (n - d) // q2)
    a = base.a
    u, v = state
    if isinstance(base, HypGaussBase):
        # q*conj(q) = a^2 - 1; conj(q) = a - j; a is self-inverse mod a^2-1.
        size = base.size
        d = (u - a * v) % size
        return d, ((a * (u - d) - v) // size, (a * v - (u - d)) // size)
    size = base.size
    s = base.sign
    d = (u - a * s * v) % size
    return d, ((a * (u - d) + s * v) // size, (a * v - s * (u - d)) // size)


def _crt(r1: int, m1: int, r2: int, m2: int) -> int:
    r1 %= m1
    r2 %= m2
    inv = pow(m1, -1, m2)
    return (r1 + m1 * ((r2 - r1) * inv % m2)) % (m1 * m2)


def encode(x: BicomplexElement, base: RadixBase) -> DigitString:
    """The unique finite expansion of x in the base, as digits lsd-first.

    Raises NonTerminationError when the forced-digit orbit of x revisits a
    state or exceeds the iteration cap without reaching zero.
    """
    state = _to_state(x, base)
    if state == (0, 0):
        return DigitString((0,), base)
    digits: list[int] = []
    seen = {state}
    for _ in range(ITERATION_CAP):
        d, state = _digit_and_step(state, base)
        digits.append(d)
        if state == (0, 0):
            return DigitString(tuple(digits), base)
        if state in seen:
            raise NonTerminationError(
                f"expansion of {x} in base {base} cycles (state {state} revisited)")
        seen.add(state)
    raise NonTerminationError(
        f"expansion of {x} in base {base} exceeded {ITERATION_CAP} digits")


def decode(s: DigitString) -> BicomplexElement:
    """Exact Horner evaluation of the digit string at its base."""
    base = s.base
    if isinstance(base, HypSplitBase):
        q1, q2 = base.a, base.a - 1
        m = n = 0
        for d in reversed(s.digits):
            m = m * q1 + d
            n = n * q2 + d
        return _from_state((m, n), base)
    a = base.a
    u = v = 0
    if isinstance(base, HypGaussBase):
        for d in reversed(s.digits):
            # (u + v*j)*(a + j) = (a*u + v) + (u + a*v)*j
            u, v = a * u + v + d, u + a * v
        return _from_state((u, v), base)
    sgn = base.sign
    for d in reversed(s.digits):
        u, v = a * u - sgn * v + d, sgn * u + a * v
    return _from_state((u, v), base)
