"""Bicomplex numbers over exact scalars.

A bicomplex number is written on the idempotent basis e1 = (1+j)/2,
e2 = (1-j)/2 as ``c1*e1 + c2*e2``; every ring operation acts componentwise.
The projection onto e1 is fixed here as the ring homomorphism sending
i -> i, j -> +1 (hence k -> i), and the projection onto e2 sends j -> -1
(hence k -> -i).  On Cartesian coordinates x + y*i + z*j + t*k this gives

    c1 = (x+z) + (y+t)*i,      c2 = (x-z) + (y-t)*i.

The three conjugations act on components as: axis i swaps them; axis j
complex-conjugates both; axis k does both at once.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import (
    GaussianRational,
    QuadRational,
    Rational,
    abs_sq,
    as_gaussian,
    format_scalar,
    same_kind,
    scalar_add,
    scalar_conj,
    scalar_div,
    scalar_is_zero,
    scalar_key,
    scalar_mul,
    scalar_neg,
    scalar_sub,
    widen_like,
)

CONJUGATION_AXES = ("i", "j", "k")


class NullConeError(ZeroDivisionError):
    """Raised when inverting (or otherwise requiring invertibility of) a
    bicomplex number with a zero idempotent component."""


@dataclass(frozen=True, eq=False)
class BicomplexElement:
    """A bicomplex number given by its two idempotent components."""

    c1: object
    c2: object

    def __post_init__(self):
        if not same_kind(self.c1, self.c2):
            raise TypeError(
                f"idempotent components must share a scalar kind: {self.c1!r}, {self.c2!r}")
        if isinstance(self.c1, int):
            object.__setattr__(self, "c1", Fraction(self.c1))
        if isinstance(self.c2, int):
            object.__setattr__(self, "c2", Fraction(self.c2))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_cartesian(x, y, z, t) -> BicomplexElement:
        """The element x + y*i + z*j + t*k (rational coordinates)."""
        x, y, z, t = Fraction(x), Fraction(y), Fraction(z), Fraction(t)
        return BicomplexElement(GaussianRational(x + z, y + t),
                                GaussianRational(x - z, y - t))

    @staticmethod
    def from_rational(q) -> BicomplexElement:
        q = Fraction(q)
        return BicomplexElement(q, q)

    # -- views -------------------------------------------------------------

    def to_cartesian(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """Exact inverse of :meth:`from_cartesian`.

        Defined when both components lie in Q(i); quadratic components with
        a radicand other than -1 have no rational Cartesian view.
        """
        g1, g2 = self._gaussian_components()
        two = Fraction(2)
        return ((g1.re + g2.re) / two, (g1.im + g2.im) / two,
                (g1.re - g2.re) / two, (g1.im - g2.im) / two)

    def _gaussian_components(self) -> tuple[GaussianRational, GaussianRational]:
        try:
            return as_gaussian(self.c1), as_gaussian(self.c2)
        except ValueError:
            raise ValueError(f"{self!r} has no Cartesian view") from None

    @property
    def has_cartesian_view(self) -> bool:
        try:
            self._gaussian_components()
            return True
        except ValueError:
            return False

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: BicomplexElement) -> BicomplexElement:
        if not isinstance(other, BicomplexElement):
            return NotImplemented
        return BicomplexElement(scalar_add(self.c1, other.c1), scalar_add(self.c2, other.c2))

    def __sub__(self, other: BicomplexElement) -> BicomplexElement:
        if not isinstance(other, BicomplexElement):
            return NotImplemented
        return BicomplexElement(scalar_sub(self.c1, other.c1), scalar_sub(self.c2, other.c2))

    def __neg__(self) -> BicomplexElement:
        return BicomplexElement(scalar_neg(self.c1), scalar_neg(self.c2))

    def __mul__(self, other: BicomplexElement) -> BicomplexElement:
        if not isinstance(other, BicomplexElement):
            return NotImplemented
        return BicomplexElement(scalar_mul(self.c1, other.c1), scalar_mul(self.c2, other.c2))

    def __pow__(self, n: int) -> BicomplexElement:
        if n < 0:
            return self.invert() ** (-n)
        result = BicomplexElement(_one_like(self.c1), _one_like(self.c2))
        square = self
        while n:
            if n & 1:
                result = result * square
            square = square * square
            n >>= 1
        return result

    def scale(self, q) -> BicomplexElement:
        """Multiply by a plain rational, widened into the component kind."""
        return BicomplexElement(scalar_mul(widen_like(q, self.c1), self.c1),
                                scalar_mul(widen_like(q, self.c2), self.c2))

    def gaussianized(self) -> BicomplexElement:
        """The same element with both components coerced into Q(i)."""
        g1, g2 = self._gaussian_components()
        return BicomplexElement(g1, g2)

    def invert(self) -> BicomplexElement:
        """Componentwise inverse; the null cone is exactly where it fails."""
        if self.in_null_cone:
            raise NullConeError(f"{self} has a zero idempotent component")
        return BicomplexElement(scalar_div(_one_like(self.c1), self.c1),
                                scalar_div(_one_like(self.c2), self.c2))

    @property
    def is_zero(self) -> bool:
        return scalar_is_zero(self.c1) and scalar_is_zero(self.c2)

    @property
    def in_null_cone(self) -> bool:
        return scalar_is_zero(self.c1) or scalar_is_zero(self.c2)

    # -- conjugations and norm ----------------------------------------------

    def conjugate(self, axis: str) -> BicomplexElement:
        """The involution for the given axis in {'i', 'j', 'k'}."""
        if axis == "i":
            return BicomplexElement(self.c2, self.c1)
        if axis == "j":
            return BicomplexElement(scalar_conj(self.c1), scalar_conj(self.c2))
        if axis == "k":
            return BicomplexElement(scalar_conj(self.c2), scalar_conj(self.c1))
        raise ValueError(f"conjugation axis must be one of i, j, k, not {axis!r}")

    def norm(self):
        """The product of the element with its three conjugates.

        Equals |c1*c2|^2: a nonnegative rational for rational, Gaussian and
        imaginary quadratic components, zero exactly on the null cone.  For
        real quadratic components the exact (generally irrational) value is
        returned as a QuadRational.
        """
        return abs_sq(scalar_mul(self.c1, self.c2))

    def coordinate_recovery_check(self) -> bool:
        """Verify the four conjugation averages reproduce (x, y, z, t)."""
        x, y, z, t = self.to_cartesian()
        el = self.gaussianized()
        ci, cj, ck = (el.conjugate(u) for u in CONJUGATION_AXES)
        quarter = Fraction(1, 4)
        checks = [
            ((el + ci + cj + ck).scale(quarter), x),
            ((el + ci - cj - ck).scale(quarter) * I_UNIT.invert(), y),
            ((el - ci + cj - ck).scale(quarter) * J_UNIT.invert(), z),
            ((el - ci - cj + ck).scale(quarter) * K_UNIT.invert(), t),
        ]
        return all(value == BicomplexElement.from_rational(coord) for value, coord in checks)

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, BicomplexElement):
            return NotImplemented
        return ((scalar_key(self.c1), scalar_key(self.c2))
                == (scalar_key(other.c1), scalar_key(other.c2)))

    def __hash__(self):
        return hash((scalar_key(self.c1), scalar_key(self.c2)))

    def __str__(self) -> str:
        if self.has_cartesian_view:
            return format_cartesian(self.to_cartesian())
        return f"[{format_scalar(self.c1)}, {format_scalar(self.c2)}]"

    def __repr__(self) -> str:
        return f"BicomplexElement({self.c1!r}, {self.c2!r})"


def _one_like(scalar):
    if isinstance(scalar, Rational):
        return Fraction(1)
    if isinstance(scalar, GaussianRational):
        return GaussianRational(1, 0)
    return QuadRational(scalar.D, 1, 0)


def format_cartesian(coords) -> str:
    """Canonical Cartesian literal 'x+y*i+z*j+t*k' omitting zero terms."""
    parts = []
    for coord, unit in zip(coords, ("", "i", "j", "k")):
        if coord == 0:
            continue
        mag = abs(coord)
        if unit == "":
            body = str(mag)
        else:
            body = unit if mag == 1 else f"{mag}*{unit}"
        if not parts:
            parts.append(body if coord > 0 else f"-{body}")
        else:
            parts.append(f"+{body}" if coord > 0 else f"-{body}")
    return "".join(parts) if parts else "0"


ZERO = BicomplexElement.from_rational(0)
ONE = BicomplexElement.from_rational(1)
E1 = BicomplexElement(Fraction(1), Fraction(0))
E2 = BicomplexElement(Fraction(0), Fraction(1))
I_UNIT = BicomplexElement.from_cartesian(0, 1, 0, 0)
J_UNIT = BicomplexElement.from_cartesian(0, 0, 1, 0)
K_UNIT = BicomplexElement.from_cartesian(0, 0, 0, 1)
