import random
from fractions import Fraction

from bicomplex.element import BicomplexElement, J_UNIT
from bicomplex.minpoly import (
    eval_at_bicomplex,
    minpoly_bicomplex,
    minpoly_component,
    quartic_charpoly,
)
from bicomplex.polys import IntPoly, Poly
from bicomplex.scalars import GaussianRational, QuadRational


def random_gaussian_element(rng, span=6):
    return BicomplexElement(
        GaussianRational(rng.randrange(-span, span + 1), rng.randrange(-span, span + 1)),
        GaussianRational(rng.randrange(-span, span + 1), rng.randrange(-span, span + 1)))


def test_minpoly_component_examples():
    assert minpoly_component(Fraction(2)) == IntPoly.of(-2, 1)
    assert minpoly_component(GaussianRational(0, 2)) == IntPoly.of(4, 0, 1)
    half = GaussianRational(Fraction(1, 2), Fraction(1, 2))
    poly = minpoly_component(half)
    assert poly == IntPoly.of(1, -2, 2)
    # (1+i)/2 really is a root
    acc = GaussianRational(0, 0)
    for c in reversed(poly.coeffs):
        acc = acc * half + GaussianRational(c, 0)
    assert acc.is_zero


def test_minpoly_component_rational_fraction():
    assert minpoly_component(Fraction(3, 2)) == IntPoly.of(-3, 2)
    assert minpoly_component(QuadRational(5, 1, 1)) == IntPoly.of(-4, -2, 1)


def test_minpoly_bicomplex_product_example():
    w = BicomplexElement.from_cartesian(1, 1, 1, -1)
    result = minpoly_bicomplex(w)
    assert result.poly == IntPoly.of(-8, 4, -2, 1)
    assert result.kind == "product"
    assert result.component_polys == (IntPoly.of(-2, 1), IntPoly.of(4, 0, 1))
    assert eval_at_bicomplex(result.poly.to_poly(), w).is_zero


def test_minpoly_bicomplex_common_in_i_plane():
    w = BicomplexElement(GaussianRational(0, 1), GaussianRational(0, 1))
    result = minpoly_bicomplex(w)
    assert result.poly == IntPoly.of(1, 0, 1)
    assert result.kind == "common"


def test_minpoly_sqrt2_j_common_outside_i_and_k_planes():
    w = BicomplexElement(QuadRational(2, 0, 1), QuadRational(2, 0, -1))
    result = minpoly_bicomplex(w)
    assert result.poly == IntPoly.of(-2, 0, 1)
    assert result.kind == "common"
    assert w * w == BicomplexElement.from_rational(2)


def test_eval_examples():
    assert eval_at_bicomplex(Poly.of(0, 0, 1), J_UNIT) == BicomplexElement.from_rational(1)
    w = BicomplexElement.from_cartesian(1, 1, 1, -1)
    assert eval_at_bicomplex(Poly.of(-8, 4, -2, 1), w).is_zero
    assert eval_at_bicomplex(Poly.of(0, 1), w) == w


def test_minpoly_is_minimal_over_component_divisors():
    rng = random.Random(41)
    for _ in range(500):
        w = random_gaussian_element(rng)
        result = minpoly_bicomplex(w)
        assert eval_at_bicomplex(result.poly.to_poly(), w).is_zero
        if result.kind == "product":
            for part in result.component_polys:
                assert not eval_at_bicomplex(part.to_poly(), w).is_zero
        else:
            assert result.component_polys[0] == result.component_polys[1]


def test_minpoly_invariant_under_conjugation():
    rng = random.Random(42)
    for _ in range(200):
        w = random_gaussian_element(rng)
        reference = minpoly_bicomplex(w).poly
        for axis in "ijk":
            assert minpoly_bicomplex(w.conjugate(axis)).poly == reference


def test_kind_common_iff_component_or_its_conjugate():
    rng = random.Random(43)
    for _ in range(300):
        w = random_gaussian_element(rng)
        expected = w.c2 in (w.c1, w.c1.conjugate())
        assert (minpoly_bicomplex(w).kind == "common") == expected


def test_quartic_rational_element():
    poly, coeffs = quartic_charpoly(BicomplexElement.from_rational(3))
    assert poly == Poly.of(81, -108, 54, -12, 1)  # (X-3)^4
    assert coeffs.four_re == 12
    assert coeffs.norm == 81


def test_quartic_hyperbolic_element_is_square_of_quadratic():
    poly, _ = quartic_charpoly(J_UNIT)
    assert poly == Poly.of(-1, 0, 1) ** 2
    rng = random.Random(44)
    for _ in range(100):
        m, n = rng.randrange(-9, 10), rng.randrange(-9, 10)
        w = BicomplexElement(Fraction(m), Fraction(n))
        poly, _ = quartic_charpoly(w)
        assert poly == Poly.of(m * n, -(m + n), 1) ** 2
    for _ in range(100):
        a, b = rng.randrange(-9, 10), rng.randrange(-9, 10)
        g = GaussianRational(a, b)
        poly, _ = quartic_charpoly(BicomplexElement(g, g))
        assert poly == Poly.of(a * a + b * b, -2 * a, 1) ** 2


def test_quartic_generic_example():
    w = BicomplexElement.from_cartesian(1, 1, 1, -1)
    poly, coeffs = quartic_charpoly(w)
    assert coeffs.four_re == 4
    assert poly == Poly.of(16, -16, 8, -4, 1)
    quotient, rem = divmod(poly, minpoly_bicomplex(w).poly.to_poly())
    assert rem.is_zero
    assert quotient == Poly.of(-2, 1)


def test_quartic_random_properties():
    rng = random.Random(45)
    for _ in range(500):
        w = random_gaussian_element(rng, span=5)
        poly, coeffs = quartic_charpoly(w)
        assert eval_at_bicomplex(poly, w).is_zero
        mp = minpoly_bicomplex(w)
        quotient, rem = divmod(poly, mp.poly.to_poly())
        assert rem.is_zero
        # when both components share one minimal polynomial, the quartic is
        # a pure power of it
        if mp.kind == "common":
            assert poly == mp.poly.to_poly().monic() ** (4 // mp.poly.degree)
        assert coeffs.four_re == 4 * w.to_cartesian()[0]
        assert coeffs.norm == w.norm()
