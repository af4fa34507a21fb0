"""Minimal polynomials of bicomplex numbers with low-degree components.

The minimal polynomial of a bicomplex number is the least-degree primitive
integer polynomial with positive leading coefficient that annihilates it.
Because polynomial evaluation acts componentwise, it is the lcm of the two
component minimal polynomials: equal components polynomials give that common
value, otherwise (the components being irreducible) the product.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .element import BicomplexElement
from .polys import IntPoly, Poly, content_primitive, poly_gcd
from .scalars import (
    GaussianRational,
    QuadRational,
    Rational,
    as_fraction,
    scalar_add,
    scalar_mul,
    widen_like,
)


@dataclass(frozen=True)
class MinPolyResult:
    """Minimal polynomial together with the per-component polynomials.

    ``kind`` is ``"common"`` when both components share one minimal
    polynomial and ``"product"`` when the two (coprime) component
    polynomials are multiplied.
    """

    poly: IntPoly
    kind: str
    component_polys: tuple[IntPoly, IntPoly]


def minpoly_component(scalar) -> IntPoly:
    """Minimal polynomial of a single component scalar.

    Degree 1 for rationals; for a + b*u with b != 0 and u either i or
    sqrt(D), the primitive integer form of X^2 - 2aX + (a^2 - u^2 b^2).
    """
    if isinstance(scalar, Rational):
        return content_primitive(Poly.of(-Fraction(scalar), 1))[1]
    if isinstance(scalar, GaussianRational):
        if scalar.im == 0:
            return minpoly_component(scalar.re)
        a, usq_bsq = scalar.re, -scalar.im * scalar.im
    elif isinstance(scalar, QuadRational):
        if scalar.b == 0:
            return minpoly_component(scalar.a)
        a, usq_bsq = scalar.a, scalar.D * scalar.b * scalar.b
    else:
        raise TypeError(f"not a component scalar: {scalar!r}")
    return content_primitive(Poly.of(a * a - usq_bsq, -2 * a, 1))[1]


def minpoly_bicomplex(element: BicomplexElement) -> MinPolyResult:
    """Minimal polynomial of a bicomplex number, as the component lcm."""
    p1 = minpoly_component(element.c1)
    p2 = minpoly_component(element.c2)
    if p1 == p2:
        return MinPolyResult(p1, "common", (p1, p2))
    g = poly_gcd(p1.to_poly(), p2.to_poly())
    lcm, rem = divmod(p1.to_poly() * p2.to_poly(), g)
    assert rem.is_zero
    return MinPolyResult(content_primitive(lcm)[1], "product", (p1, p2))


def _eval_scalar(poly: Poly, scalar):
    acc = widen_like(0, scalar)
    for c in reversed(poly.coeffs):
        acc = scalar_add(scalar_mul(acc, scalar), widen_like(c, scalar))
    return acc


def eval_at_bicomplex(poly: Poly, element: BicomplexElement) -> BicomplexElement:
    """Componentwise Horner evaluation of a rational polynomial."""
    return BicomplexElement(_eval_scalar(poly, element.c1),
                            _eval_scalar(poly, element.c2))


@dataclass(frozen=True)
class QuarticCoefficients:
    """Symmetric functions of an element and its three conjugates.

    ``four_re`` is their sum (four times the real part), ``pair_sum`` the sum
    of the six pairwise products, ``triple_sum`` the sum of the four triple
    products, and ``norm`` their product.
    """

    four_re: Fraction
    pair_sum: Fraction
    triple_sum: Fraction
    norm: Fraction


def quartic_charpoly(element: BicomplexElement) -> tuple[Poly, QuarticCoefficients]:
    """The monic quartic whose roots are the element and its conjugates.

    For an element with a Cartesian view the four conjugation values have
    rational elementary symmetric functions, so

        P(X) = X^4 - four_re*X^3 + pair_sum*X^2 - triple_sum*X + norm

    annihilates the element, and the minimal polynomial divides it.  For an
    element of the hyperbolic plane or of either complex plane, P is the
    square of the familiar quadratic X^2 - 2*Re*X + z*conj(z).
    """
    el = element.gaussianized()
    conjugates = [el] + [el.conjugate(axis) for axis in ("i", "j", "k")]

    def sym(k: int) -> Fraction:
        total = None
        for combo in itertools.combinations(conjugates, k):
            term = combo[0]
            for factor in combo[1:]:
                term = term * factor
            total = term if total is None else total + term
        value1, value2 = as_fraction(total.c1), as_fraction(total.c2)
        assert value1 == value2
        return value1

    e1, e2, e3, e4 = sym(1), sym(2), sym(3), sym(4)
    poly = Poly.of(e4, -e3, e2, -e1, 1)
    return poly, QuarticCoefficients(four_re=e1, pair_sum=e2, triple_sum=e3, norm=e4)
