"""Rings of integers of bicomplex extensions K1*e1 + K2*e2.

The component fields are the rationals or quadratic fields Q(sqrt(D)); the
ring of integers, its discriminant and its unit group all decompose
componentwise.  Unique factorization into prime elements is implemented for
the two principal component rings exercised here, the plain integers and
the Gaussian integers; prime elements are, up to units, e1, e2 and the two
nondegenerate shapes pi*e1 + e2 and e1 + pi*e2 with pi prime in its
component ring.

Elements of an extension are representable as BicomplexElement values
whenever the two component fields embed in one common scalar kind (always
true when at most one component is a proper quadratic field, or when both
are the same one).  Extensions pairing two different quadratic fields still
support the purely numeric operations (discriminant, unit group order).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .element import BicomplexElement, NullConeError
from .gaussian import (
    canonical_gaussian_associate,
    factor_gaussian,
    gaussian_norm,
    is_gaussian_integer,
    is_gaussian_prime,
)
from .numtheory import factorint, is_prime
from .scalars import (
    GaussianRational,
    QuadRational,
    Rational,
    as_fraction,
    as_gaussian,
    is_squarefree_int,
    widen_like,
)


class UnsupportedRingError(ValueError):
    """The operation is not available over this extension's components."""


class UnitInputError(ValueError):
    """Factorization input is a unit."""


@dataclass(frozen=True)
class RationalField:
    @property
    def degree(self) -> int:
        return 1

    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class QuadraticField:
    D: int

    def __post_init__(self):
        if self.D in (0, 1) or not is_squarefree_int(self.D):
            raise ValueError(f"field radicand must be squarefree and not 0 or 1: {self.D}")

    @property
    def degree(self) -> int:
        return 2

    def __str__(self) -> str:
        return "Q(i)" if self.D == -1 else f"Q(sqrt:{self.D})"


Field = RationalField | QuadraticField
Q_FIELD = RationalField()
GAUSSIAN_FIELD = QuadraticField(-1)


@dataclass(frozen=True)
class ExtensionDescriptor:
    K1: Field
    K2: Field

    @property
    def degree(self) -> int:
        return self.K1.degree + self.K2.degree

    def __str__(self) -> str:
        if self == QH:
            return "Qh"
        if self == QB:
            return "QB"
        return f"{self.K1}*e1+{self.K2}*e2"


QH = ExtensionDescriptor(Q_FIELD, Q_FIELD)
QB = ExtensionDescriptor(GAUSSIAN_FIELD, GAUSSIAN_FIELD)


# -- scalars against component fields ---------------------------------------

def quad_parts(scalar, field: Field) -> tuple[Fraction, Fraction]:
    """Write a scalar as a + b*sqrt(D) inside the given field.

    For the rational field b must vanish.  Raises ValueError when the value
    does not lie in the field.
    """
    if isinstance(field, RationalField):
        return as_fraction(scalar), Fraction(0)
    D = field.D
    if isinstance(scalar, Rational):
        return Fraction(scalar), Fraction(0)
    if isinstance(scalar, GaussianRational):
        if scalar.im == 0:
            return scalar.re, Fraction(0)
        if D == -1:
            return scalar.re, scalar.im
    if isinstance(scalar, QuadRational):
        if scalar.b == 0:
            return scalar.a, Fraction(0)
        if scalar.D == D:
            return scalar.a, scalar.b
    raise ValueError(f"{scalar!r} does not lie in {field}")


def scalar_in_field(scalar, field: Field) -> bool:
    try:
        quad_parts(scalar, field)
        return True
    except ValueError:
        return False


def scalar_is_integral(scalar, field: Field) -> bool:
    """Integrality in O_K: an integer for Q, integral trace and norm for
    quadratic fields (covers the half-integer basis when D = 1 mod 4)."""
    a, b = quad_parts(scalar, field)
    if isinstance(field, RationalField):
        return a.denominator == 1
    norm = a * a - field.D * b * b
    return (2 * a).denominator == 1 and norm.denominator == 1


def scalar_field_trace(scalar, field: Field) -> Fraction:
    a, _ = quad_parts(scalar, field)
    return a if isinstance(field, RationalField) else 2 * a


def scalar_field_norm(scalar, field: Field) -> Fraction:
    a, b = quad_parts(scalar, field)
    return a if isinstance(field, RationalField) else a * a - field.D * b * b


def scalar_is_ring_unit(scalar, field: Field) -> bool:
    return scalar_is_integral(scalar, field) and abs(scalar_field_norm(scalar, field)) == 1


def _common_kind_sample(L: ExtensionDescriptor):
    """A scalar of the widest kind both component fields embed into."""
    quads = {K.D for K in (L.K1, L.K2) if isinstance(K, QuadraticField)}
    if not quads:
        return Fraction(0)
    if len(quads) > 1:
        raise UnsupportedRingError(
            f"components of {L} do not embed in one scalar kind")
    D = quads.pop()
    return GaussianRational(0, 0) if D == -1 else QuadRational(D, 0, 0)


def _field_scalar(a: Fraction, b: Fraction, field: Field, like):
    """The value a + b*sqrt(D) of the field, widened to the common kind."""
    if b == 0:
        return widen_like(a, like)
    if isinstance(like, GaussianRational):
        return GaussianRational(a, b)
    return QuadRational(like.D, a, b)


# -- ring of integers --------------------------------------------------------

def is_integral(element: BicomplexElement, L: ExtensionDescriptor) -> bool:
    """Whether both components are algebraic integers of their fields."""
    if not (scalar_in_field(element.c1, L.K1) and scalar_in_field(element.c2, L.K2)):
        raise ValueError(f"{element} does not lie in {L}")
    return (scalar_is_integral(element.c1, L.K1)
            and scalar_is_integral(element.c2, L.K2))


def _integral_basis_parts(field: Field) -> list[tuple[Fraction, Fraction]]:
    if isinstance(field, RationalField):
        return [(Fraction(1), Fraction(0))]
    if field.D % 4 == 1:
        return [(Fraction(1), Fraction(0)), (Fraction(1, 2), Fraction(1, 2))]
    return [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]


def integral_basis(L: ExtensionDescriptor) -> list[BicomplexElement]:
    """A Z-basis of the ring of integers: e1 times a basis of O_K1 followed
    by e2 times a basis of O_K2.  Quadratic components use {1, sqrt(D)} or,
    when D = 1 (mod 4), {1, (1 + sqrt(D))/2}."""
    like = _common_kind_sample(L)
    zero = widen_like(0, like)
    basis = [BicomplexElement(_field_scalar(a, b, L.K1, like), zero)
             for a, b in _integral_basis_parts(L.K1)]
    basis += [BicomplexElement(zero, _field_scalar(a, b, L.K2, like))
              for a, b in _integral_basis_parts(L.K2)]
    return basis


def field_discriminant(field: Field) -> int:
    if isinstance(field, RationalField):
        return 1
    return field.D if field.D % 4 == 1 else 4 * field.D


def discriminant(L: ExtensionDescriptor) -> int:
    """Product of the two component field discriminants."""
    return field_discriminant(L.K1) * field_discriminant(L.K2)


def trace_to_q(element: BicomplexElement, L: ExtensionDescriptor) -> Fraction:
    """Trace of multiplication by the element on L as a Q-vector space."""
    return (scalar_field_trace(element.c1, L.K1)
            + scalar_field_trace(element.c2, L.K2))


def _det_fraction(matrix: list[list[Fraction]]) -> Fraction:
    n = len(matrix)
    m = [row[:] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor:
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def discriminant_by_trace_matrix(L: ExtensionDescriptor) -> int:
    """The determinant of (Tr(b_i * b_j)) over the integral basis.

    An independent route to the discriminant; must agree with
    :func:`discriminant` exactly.
    """
    basis = integral_basis(L)
    matrix = [[trace_to_q(bi * bj, L) for bj in basis] for bi in basis]
    det = _det_fraction(matrix)
    assert det.denominator == 1
    return det.numerator


# -- units --------------------------------------------------------------------

@dataclass(frozen=True)
class UnitGroupInfo:
    finite: bool
    order: int | None
    unit_class: str
    structure: str
    infinite_witness: BicomplexElement | None = None


def _component_unit_order(field: Field) -> int | None:
    if isinstance(field, RationalField):
        return 2
    if field.D > 0:
        return None
    return {-1: 4, -3: 6}.get(field.D, 2)


def pell_fundamental_unit(D: int) -> tuple[int, int]:
    """Smallest (x, y), y > 0, with x^2 - D*y^2 = +-1, via the continued
    fraction of sqrt(D)."""
    if D <= 1:
        raise ValueError("needs D > 1")
    a0 = math.isqrt(D)
    if a0 * a0 == D:
        raise ValueError("D must not be a square")
    m, d, a = 0, 1, a0
    num_prev, num = 1, a0
    den_prev, den = 0, 1
    while num * num - D * den * den not in (1, -1):
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        num_prev, num = num, a * num + num_prev
        den_prev, den = den, a * den + den_prev
    return num, den


def unit_group(L: ExtensionDescriptor) -> UnitGroupInfo:
    """Unit group of O_L: the componentwise product of the field unit groups.

    Finite exactly when both components are Q or imaginary quadratic: class
    C1 (both rational), C2 (one rational, one imaginary quadratic) or C3
    (both imaginary quadratic).  A real quadratic component yields an
    infinite group; a fundamental solution of the Pell equation witnesses a
    unit of infinite order.
    """
    orders = (_component_unit_order(L.K1), _component_unit_order(L.K2))
    if None in orders:
        witness = None
        try:
            like = _common_kind_sample(L)
            slots = []
            for field in (L.K1, L.K2):
                if isinstance(field, QuadraticField) and field.D > 0:
                    x, y = pell_fundamental_unit(field.D)
                    slots.append(_field_scalar(Fraction(x), Fraction(y), field, like))
                else:
                    slots.append(widen_like(1, like))
            witness = BicomplexElement(*slots)
        except UnsupportedRingError:
            pass
        return UnitGroupInfo(False, None, "infinite",
                             "infinite (contains a unit of infinite order)", witness)
    rational_count = sum(isinstance(K, RationalField) for K in (L.K1, L.K2))
    unit_class = {2: "C1", 1: "C2", 0: "C3"}[rational_count]
    return UnitGroupInfo(True, orders[0] * orders[1], unit_class,
                         f"Z/{orders[0]} x Z/{orders[1]}")


def is_unit(element: BicomplexElement, L: ExtensionDescriptor) -> bool:
    return (scalar_is_ring_unit(element.c1, L.K1)
            and scalar_is_ring_unit(element.c2, L.K2))


# -- canonical associates and prime elements ----------------------------------

def _component_ring(field: Field) -> str:
    if isinstance(field, RationalField):
        return "Z"
    if field.D == -1:
        return "Zi"
    raise UnsupportedRingError(f"no element factorization over {field}")


def _canonical_component(scalar, field: Field):
    """unit, normalized with scalar = unit * normalized in O_K."""
    ring = _component_ring(field)
    if ring == "Z":
        value = as_fraction(scalar)
        if value > 0:
            return Fraction(1), value
        return Fraction(-1), -value
    unit, normalized = canonical_gaussian_associate(as_gaussian(scalar))
    return unit, normalized


def canonical_associate(element: BicomplexElement, L: ExtensionDescriptor
                        ) -> tuple[BicomplexElement, BicomplexElement]:
    """Split an invertible integral element as unit * normalized.

    Rational components become positive; Gaussian components are rotated
    into the first quadrant.  The unit is then unique.
    """
    if element.in_null_cone:
        raise NullConeError("null-cone elements have no canonical associate")
    u1, n1 = _canonical_component(element.c1, L.K1)
    u2, n2 = _canonical_component(element.c2, L.K2)
    like = _common_kind_sample(L)

    def lift(s):
        return widen_like(s, like) if isinstance(s, Rational) else s

    return (BicomplexElement(lift(u1), lift(u2)),
            BicomplexElement(lift(n1), lift(n2)))


@dataclass(frozen=True)
class PrimeElementCheck:
    is_prime: bool
    form: str | None  # 'e1', 'e2', 'prime_e1', 'prime_e2'
    irreducible: bool


def _component_class(scalar, field: Field) -> str:
    ring = _component_ring(field)
    if ring == "Z":
        value = as_fraction(scalar)
        if value == 0:
            return "zero"
        if abs(value) == 1:
            return "unit"
        return "prime" if value.denominator == 1 and is_prime(abs(value.numerator)) else "other"
    g = as_gaussian(scalar)
    if g.is_zero:
        return "zero"
    if not is_gaussian_integer(g):
        return "other"
    if gaussian_norm(g) == 1:
        return "unit"
    return "prime" if is_gaussian_prime(g) else "other"


def is_prime_element(element: BicomplexElement, L: ExtensionDescriptor) -> PrimeElementCheck:
    """Classify prime elements: up to a unit they are e1, e2, pi*e1 + e2 or
    e1 + pi*e2.  The idempotents are prime but not irreducible; the two
    nondegenerate shapes are irreducible."""
    class1 = _component_class(element.c1, L.K1)
    class2 = _component_class(element.c2, L.K2)
    table = {
        ("unit", "zero"): ("e1", False),
        ("zero", "unit"): ("e2", False),
        ("prime", "unit"): ("prime_e1", True),
        ("unit", "prime"): ("prime_e2", True),
    }
    if (class1, class2) in table:
        form, irreducible = table[(class1, class2)]
        return PrimeElementCheck(True, form, irreducible)
    return PrimeElementCheck(False, None, False)


# -- unique factorization ------------------------------------------------------

@dataclass(frozen=True)
class BicomplexFactorization:
    unit: BicomplexElement
    factors: tuple[tuple[BicomplexElement, int], ...]

    def recompose(self) -> BicomplexElement:
        result = self.unit
        for prime, exponent in self.factors:
            result = result * prime ** exponent
        return result


def _factor_component(scalar, field: Field):
    """unit plus canonical (prime, exponent) pairs in the component ring."""
    ring = _component_ring(field)
    if ring == "Z":
        value = as_fraction(scalar)
        n = value.numerator
        unit = Fraction(-1) if n < 0 else Fraction(1)
        pairs = [(Fraction(p), e) for p, e in sorted(factorint(n).items())]
        return unit, pairs
    unit, pairs = factor_gaussian(as_gaussian(scalar))
    return unit, list(pairs)


def _prime_sort_key(entry):
    element, _, form = entry
    scalar = element.c1 if form == "prime_e1" else element.c2
    if isinstance(scalar, GaussianRational):
        norm = scalar.norm_sq()
        re, im = scalar.re, scalar.im
    else:
        norm = Fraction(scalar) * Fraction(scalar)
        re, im = Fraction(scalar), Fraction(0)
    return (0 if form == "prime_e1" else 1, norm, re, im)


def factor(element: BicomplexElement, L: ExtensionDescriptor) -> BicomplexFactorization:
    """Unique factorization into canonical primes of the two nondegenerate
    shapes, valid over extensions whose component rings are Z or Z[i].

    Raises NullConeError for elements of zero norm and UnitInputError for
    units; the recomposition unit * prod(prime^exp) is exact.
    """
    for field in (L.K1, L.K2):
        _component_ring(field)
    if not is_integral(element, L):
        raise ValueError(f"{element} is not integral in {L}")
    if element.in_null_cone:
        raise NullConeError("cannot factor an element of zero norm")
    if is_unit(element, L):
        raise UnitInputError(f"{element} is a unit of {L}")

    like = _common_kind_sample(L)
    one = widen_like(1, like)

    def lift(s):
        return widen_like(s, like) if isinstance(s, Rational) else s

    unit1, pairs1 = _factor_component(element.c1, L.K1)
    unit2, pairs2 = _factor_component(element.c2, L.K2)
    entries = [(BicomplexElement(lift(p), one), e, "prime_e1") for p, e in pairs1]
    entries += [(BicomplexElement(one, lift(p)), e, "prime_e2") for p, e in pairs2]
    entries.sort(key=_prime_sort_key)
    return BicomplexFactorization(
        unit=BicomplexElement(lift(unit1), lift(unit2)),
        factors=tuple((el, e) for el, e, _ in entries),
    )


@dataclass(frozen=True)
class PrimeProfile:
    factor_count: int  # prime factors counted with multiplicity
    semiprime: bool
    factorization: BicomplexFactorization


def rational_prime_profile(p: int, L: ExtensionDescriptor) -> PrimeProfile:
    """How a rational prime factors in O_L.

    Over the hyperbolic integers every prime is semiprime; over the
    Gaussian-component ring p = 3 (mod 4) stays semiprime while p = 1
    (mod 4) and p = 2 contribute four prime factors with multiplicity.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    like = _common_kind_sample(L)
    element = BicomplexElement(widen_like(p, like), widen_like(p, like))
    decomposition = factor(element, L)
    count = sum(e for _, e in decomposition.factors)
    return PrimeProfile(count, count == 2, decomposition)
