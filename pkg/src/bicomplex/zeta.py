"""Ideals, ideal counting and truncated zeta sums for bicomplex extensions.

Ideals decompose componentwise; here they are represented by principal
component generators (the component rings exercised, Z and Z[i], are
principal).  The two degenerate ideals generated by the idempotents are
prime but carry no norm and are excluded from the zeta index set.

Ideal counts: the rationals have one ideal per norm; the Gaussian integers
have r(n)/4 ideals of norm n with r the sum-of-two-squares count given by
Jacobi's divisor formula; counts for an extension are the Dirichlet
convolution of the component counts.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .element import BicomplexElement
from .gaussian import (
    canonical_gaussian_associate,
    gaussian_norm,
    is_gaussian_integer,
    is_gaussian_prime,
)
from .numtheory import divisors, is_prime
from .rings import (
    ExtensionDescriptor,
    Field,
    GAUSSIAN_FIELD,
    QB,
    QH,
    Q_FIELD,
    QuadraticField,
    RationalField,
    UnsupportedRingError,
)
from .scalars import as_fraction, as_gaussian


class DegenerateIdealError(ValueError):
    """Norm (or zeta membership) requested for a zero or degenerate ideal."""


@dataclass(frozen=True)
class ComponentIdeal:
    """An ideal of a component ring: zero, the full ring, or principal."""

    kind: str
    generator: object = None

    ZERO_KIND = "zero"
    FULL_KIND = "full"
    PRINCIPAL_KIND = "principal"

    @staticmethod
    def zero() -> ComponentIdeal:
        return ComponentIdeal(ComponentIdeal.ZERO_KIND)

    @staticmethod
    def full() -> ComponentIdeal:
        return ComponentIdeal(ComponentIdeal.FULL_KIND)

    @staticmethod
    def principal(generator, field: Field) -> ComponentIdeal:
        """The ideal generated by an integral element, normalized: zero and
        unit generators collapse to the zero and full ideals, others are
        replaced by their canonical associate."""
        if isinstance(field, RationalField):
            value = as_fraction(generator)
            if value.denominator != 1:
                raise ValueError(f"{generator} is not integral")
            if value == 0:
                return ComponentIdeal.zero()
            if abs(value) == 1:
                return ComponentIdeal.full()
            return ComponentIdeal(ComponentIdeal.PRINCIPAL_KIND, abs(value))
        if isinstance(field, QuadraticField) and field.D == -1:
            g = as_gaussian(generator)
            if not is_gaussian_integer(g):
                raise ValueError(f"{generator} is not integral")
            if g.is_zero:
                return ComponentIdeal.zero()
            if gaussian_norm(g) == 1:
                return ComponentIdeal.full()
            return ComponentIdeal(ComponentIdeal.PRINCIPAL_KIND,
                                  canonical_gaussian_associate(g)[1])
        raise UnsupportedRingError(f"principal ideals not supported over {field}")

    def norm(self, field: Field) -> int:
        if self.kind == self.ZERO_KIND:
            raise DegenerateIdealError("the zero component ideal has no finite norm")
        if self.kind == self.FULL_KIND:
            return 1
        if isinstance(field, RationalField):
            return int(as_fraction(self.generator))
        return gaussian_norm(as_gaussian(self.generator))

    def is_prime(self, field: Field) -> bool:
        """Prime as a component ideal; the zero ideal is prime (the
        component rings are domains), the full ring is not."""
        if self.kind == self.ZERO_KIND:
            return True
        if self.kind == self.FULL_KIND:
            return False
        if isinstance(field, RationalField):
            return is_prime(int(as_fraction(self.generator)))
        return is_gaussian_prime(as_gaussian(self.generator))


@dataclass(frozen=True)
class BicomplexIdeal:
    a1: ComponentIdeal
    a2: ComponentIdeal
    L: ExtensionDescriptor

    @property
    def is_degenerate(self) -> bool:
        kinds = (self.a1.kind, self.a2.kind)
        return kinds in ((ComponentIdeal.FULL_KIND, ComponentIdeal.ZERO_KIND),
                         (ComponentIdeal.ZERO_KIND, ComponentIdeal.FULL_KIND))


def principal_ideal(element: BicomplexElement, L: ExtensionDescriptor) -> BicomplexIdeal:
    return BicomplexIdeal(ComponentIdeal.principal(element.c1, L.K1),
                          ComponentIdeal.principal(element.c2, L.K2), L)


def ideal_norm(ideal: BicomplexIdeal) -> int:
    """Product of the component ideal norms.

    Undefined (error) when either component is the zero ideal, which covers
    the two degenerate ideals.
    """
    if (ideal.a1.kind == ComponentIdeal.ZERO_KIND
            or ideal.a2.kind == ComponentIdeal.ZERO_KIND):
        raise DegenerateIdealError("zero and degenerate ideals have no norm")
    return ideal.a1.norm(ideal.L.K1) * ideal.a2.norm(ideal.L.K2)


def is_prime_ideal(ideal: BicomplexIdeal) -> bool:
    """Prime iff exactly one component is the full ring and the other is a
    prime component ideal (the zero ideal counts, giving the degenerate
    prime ideals)."""
    full = ComponentIdeal.FULL_KIND
    if ideal.a1.kind == full and ideal.a2.kind != full:
        return ideal.a2.is_prime(ideal.L.K2)
    if ideal.a2.kind == full and ideal.a1.kind != full:
        return ideal.a1.is_prime(ideal.L.K1)
    return False


# -- counting ------------------------------------------------------------------

def jacobi_r(n: int) -> int:
    """Number of Gaussian integers of norm n: four times the difference
    between the divisor counts in classes 1 and 3 mod 4."""
    if n < 1:
        raise ValueError("jacobi_r needs n >= 1")
    ones = sum(1 for d in divisors(n) if d % 4 == 1)
    threes = sum(1 for d in divisors(n) if d % 4 == 3)
    return 4 * (ones - threes)


@dataclass(frozen=True)
class CoefficientTable:
    """Exact counts a(1..N) of ideals by norm, 1-indexed via :meth:`a`."""

    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values or self.values[0] != 1:
            raise ValueError("a(1) must be 1")
        if any(v < 0 for v in self.values):
            raise ValueError("counts must be nonnegative")

    @property
    def N(self) -> int:
        return len(self.values)

    def a(self, n: int) -> int:
        if not 1 <= n <= self.N:
            raise IndexError(f"n={n} outside 1..{self.N}")
        return self.values[n - 1]


def dirichlet_convolve(f: CoefficientTable, g: CoefficientTable) -> CoefficientTable:
    """(f*g)(n) = sum over divisors d of n of f(d) g(n/d), exactly."""
    if f.N != g.N:
        raise ValueError(f"length mismatch: {f.N} != {g.N}")
    n_max = f.N
    out = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        fd = f.values[d - 1]
        if fd == 0:
            continue
        for q in range(1, n_max // d + 1):
            out[d * q] += fd * g.values[q - 1]
    return CoefficientTable(tuple(out[1:]))


def _r_table(n_max: int) -> list[int]:
    acc = [0] * (n_max + 1)
    for d in range(1, n_max + 1, 2):
        chi = 1 if d % 4 == 1 else -1
        for m in range(d, n_max + 1, d):
            acc[m] += chi
    return [4 * v for v in acc]


def coefficient_table(field_or_extension, n_max: int) -> CoefficientTable:
    """Ideal counts a(1..N) for Q, Q(i), the hyperbolic extension or the
    Gaussian-component quartic extension."""
    if n_max < 1:
        raise ValueError("table length must be >= 1")
    k = field_or_extension
    if isinstance(k, RationalField):
        return CoefficientTable((1,) * n_max)
    if isinstance(k, QuadraticField) and k.D == -1:
        r = _r_table(n_max)
        assert all(v % 4 == 0 for v in r[1:])
        return CoefficientTable(tuple(v // 4 for v in r[1:]))
    if k == QH:
        ones = coefficient_table(Q_FIELD, n_max)
        return dirichlet_convolve(ones, ones)
    if k == QB:
        # Convolve the raw sum-of-two-squares counts, then peel off the
        # 16 = 4*4 unit associates; divisibility is asserted, not assumed.
        r = _r_table(n_max)
        out = [0] * (n_max + 1)
        for d in range(1, n_max + 1):
            if r[d] == 0:
                continue
            for q in range(1, n_max // d + 1):
                out[d * q] += r[d] * r[q]
        assert all(v % 16 == 0 for v in out[1:])
        return CoefficientTable(tuple(v // 16 for v in out[1:]))
    raise UnsupportedRingError(f"no coefficient table for {k}")


def zeta_partial(field_or_extension, s, n_max: int) -> float:
    """The truncated Dirichlet sum of a(n)/n^s for s > 1, in floating point.

    Coefficient identities are exact and tested separately; this is only a
    guarded numeric evaluation of the partial sum.
    """
    s = float(s)
    if not s > 1:
        raise ValueError("zeta partial sums need s > 1")
    table = coefficient_table(field_or_extension, n_max)
    return sum(a / n ** s for n, a in enumerate(table.values, start=1) if a)


def brute_force_ideal_count(field: Field, n: int) -> int:
    """Ideals of norm n counted by enumerating canonical generators.

    Supports Q (always exactly one) and Q(i) (lattice points of norm n up
    to unit associates); an independent oracle for the divisor formulas.
    """
    if n < 1:
        raise ValueError("needs n >= 1")
    if isinstance(field, RationalField):
        return 1
    if isinstance(field, QuadraticField) and field.D == -1:
        from .gaussian import gaussian_int
        found = set()
        for a in range(-math.isqrt(n), math.isqrt(n) + 1):
            rest = n - a * a
            b = math.isqrt(rest)
            if b * b != rest:
                continue
            for bb in {b, -b}:
                _, canonical = canonical_gaussian_associate(gaussian_int(a, bb))
                found.add((canonical.re, canonical.im))
        return len(found)
    raise UnsupportedRingError(f"brute-force counting not supported for {field}")
