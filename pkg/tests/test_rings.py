import itertools
import random
from fractions import Fraction

import pytest

from bicomplex.element import BicomplexElement, J_UNIT, NullConeError, ONE
from bicomplex.rings import (
    ExtensionDescriptor,
    GAUSSIAN_FIELD,
    QB,
    QH,
    Q_FIELD,
    QuadraticField,
    RationalField,
    UnitInputError,
    UnsupportedRingError,
    canonical_associate,
    discriminant,
    discriminant_by_trace_matrix,
    factor,
    integral_basis,
    is_integral,
    is_prime_element,
    is_unit,
    pell_fundamental_unit,
    rational_prime_profile,
    unit_group,
)
from bicomplex.scalars import GaussianRational, QuadRational, is_squarefree_int


def G(re, im=0):
    return GaussianRational(re, im)


def gaussian_element(c1, c2):
    return BicomplexElement(G(*c1) if isinstance(c1, tuple) else G(c1),
                            G(*c2) if isinstance(c2, tuple) else G(c2))


L_EISENSTEIN = ExtensionDescriptor(QuadraticField(-3), RationalField())


def test_is_integral():
    assert is_integral(BicomplexElement(Fraction(3), Fraction(5)), QH)
    assert not is_integral(BicomplexElement(Fraction(1, 2), Fraction(1)), QH)
    omega = BicomplexElement(QuadRational(-3, Fraction(1, 2), Fraction(1, 2)),
                             QuadRational(-3, 1, 0))
    assert is_integral(omega, L_EISENSTEIN)  # trace 1 and norm 1 are integers
    half = BicomplexElement(QuadRational(-3, Fraction(1, 2), 0), QuadRational(-3, 1, 0))
    assert not is_integral(half, L_EISENSTEIN)
    with pytest.raises(ValueError):
        is_integral(BicomplexElement(QuadRational(5, 0, 1), QuadRational(5, 1, 0)), QH)


def test_integral_basis():
    assert integral_basis(QH) == [BicomplexElement(Fraction(1), Fraction(0)),
                                  BicomplexElement(Fraction(0), Fraction(1))]
    assert integral_basis(QB) == [gaussian_element(1, 0), gaussian_element((0, 1), 0),
                                  gaussian_element(0, 1), gaussian_element(0, (0, 1))]
    basis = integral_basis(L_EISENSTEIN)
    assert len(basis) == 3
    assert basis[1].c1 == QuadRational(-3, Fraction(1, 2), Fraction(1, 2))
    assert all(is_integral(b, L_EISENSTEIN) for b in basis)


def test_discriminant_named_extensions():
    assert discriminant(QH) == 1 == discriminant_by_trace_matrix(QH)
    assert discriminant(QB) == 16 == discriminant_by_trace_matrix(QB)
    assert discriminant(L_EISENSTEIN) == -3 == discriminant_by_trace_matrix(L_EISENSTEIN)


def test_discriminant_trace_matrix_sweep():
    squarefree = [d for d in range(-50, 51)
                  if d not in (0, 1) and is_squarefree_int(d)]
    for d in squarefree:
        K = QuadraticField(d)
        for L in (ExtensionDescriptor(K, Q_FIELD), ExtensionDescriptor(Q_FIELD, K),
                  ExtensionDescriptor(K, K)):
            assert discriminant(L) == discriminant_by_trace_matrix(L)


def test_unit_group_finite_classes():
    info = unit_group(QH)
    assert (info.finite, info.order, info.unit_class) == (True, 4, "C1")
    assert info.structure == "Z/2 x Z/2"
    info = unit_group(QB)
    assert (info.finite, info.order, info.unit_class) == (True, 16, "C3")
    assert info.structure == "Z/4 x Z/4"
    info = unit_group(ExtensionDescriptor(QuadraticField(-5), Q_FIELD))
    assert (info.finite, info.order, info.unit_class) == (True, 4, "C2")
    info = unit_group(ExtensionDescriptor(QuadraticField(-3), QuadraticField(-3)))
    assert (info.finite, info.order, info.unit_class) == (True, 36, "C3")


def test_unit_group_infinite_with_witness():
    info = unit_group(ExtensionDescriptor(QuadraticField(2), Q_FIELD))
    assert not info.finite and info.unit_class == "infinite"
    w = info.infinite_witness
    assert w is not None and is_unit(w, ExtensionDescriptor(QuadraticField(2), Q_FIELD))
    assert w.c1 == QuadRational(2, 1, 1)
    # powers stay units and never repeat: infinite order
    powers = {w, w * w, w * w * w}
    assert len(powers) == 3
    assert all(is_unit(p, ExtensionDescriptor(QuadraticField(2), Q_FIELD)) for p in powers)


def test_exhaustive_unit_search_hyperbolic():
    found = {(m, n) for m in range(-10, 11) for n in range(-10, 11)
             if is_unit(BicomplexElement(Fraction(m), Fraction(n)), QH)}
    assert found == {(1, 1), (1, -1), (-1, 1), (-1, -1)}
    elements = {BicomplexElement(Fraction(m), Fraction(n)) for m, n in found}
    assert elements == {ONE, -ONE, J_UNIT, -J_UNIT}


def test_exhaustive_unit_search_gaussian_components():
    component_units = [G(a, b) for a in range(-3, 4) for b in range(-3, 4)
                       if a * a + b * b == 1]
    count = 0
    for a in range(-3, 4):
        for b in range(-3, 4):
            for c in range(-3, 4):
                for d in range(-3, 4):
                    el = gaussian_element((a, b), (c, d))
                    if a * a + b * b <= 10 and c * c + d * d <= 10 and is_unit(el, QB):
                        count += 1
    assert count == 16 == len(component_units) ** 2


def test_is_unit_examples():
    assert is_unit(J_UNIT, QH)
    assert is_unit(gaussian_element((0, 1), -1), QB)
    assert not is_unit(BicomplexElement(Fraction(2), Fraction(1)), QH)


def _quadratic_integers_with_norm_up_to(D, bound):
    """All integral a + b*sqrt(D) with |a^2 - D*b^2| <= bound (half-integer
    coordinates included when D = 1 mod 4)."""
    step = Fraction(1, 2) if D % 4 == 1 else Fraction(1)
    limit = 64
    out = []
    k = -limit
    while k <= limit:
        m = -limit
        while m <= limit:
            a, b = k * step, m * step
            value = QuadRational(D, a, b)
            norm = a * a - D * b * b
            if abs(norm) <= bound and (2 * a).denominator == 1 and norm.denominator == 1:
                if (a.denominator == 1) == (b.denominator == 1):
                    out.append(value)
            m += 1
        k += 1
    return out


def test_unit_group_order_matches_exhaustive_component_search():
    """Finite classes: the search up to component norm 10^3 finds exactly
    the advertised number of units.  Infinite classes: it finds a unit of
    norm +-1 beyond +-1, which has infinite order."""
    expected = {-1: 4, -2: 2, -3: 6, -5: 2, -7: 2, -11: 2}
    for D, order in expected.items():
        units = [u for u in _quadratic_integers_with_norm_up_to(D, 1000)
                 if abs(u.field_norm()) == 1]
        assert len(units) == order, D
        L = ExtensionDescriptor(QuadraticField(D), QuadraticField(D))
        assert unit_group(L).order == order * order
    for D in (2, 3, 5):
        units = [u for u in _quadratic_integers_with_norm_up_to(D, 1000)
                 if abs(u.field_norm()) == 1 and u.b != 0]
        assert units, D
        witness = units[0]
        powers = {witness, witness * witness, witness * witness * witness}
        assert len(powers) == 3
        assert all(abs(p.field_norm()) == 1 for p in powers)


def test_canonical_associate_hyperbolic():
    unit, normalized = canonical_associate(BicomplexElement(Fraction(-3), Fraction(5)), QH)
    assert unit == BicomplexElement(Fraction(-1), Fraction(1))
    assert normalized == BicomplexElement(Fraction(3), Fraction(5))
    assert unit * normalized == BicomplexElement(Fraction(-3), Fraction(5))
    # canonical elements are fixed points
    assert canonical_associate(normalized, QH)[1] == normalized


def test_canonical_associate_gaussian():
    el = gaussian_element((-1, -1), (0, 3))
    unit, normalized = canonical_associate(el, QB)
    assert unit * normalized == el
    assert normalized == gaussian_element((1, 1), 3)
    with pytest.raises(NullConeError):
        canonical_associate(gaussian_element(0, 1), QB)


def test_is_prime_element():
    check = is_prime_element(BicomplexElement(Fraction(2), Fraction(1)), QH)
    assert (check.is_prime, check.form, check.irreducible) == (True, "prime_e1", True)
    check = is_prime_element(BicomplexElement(Fraction(1), Fraction(0)), QH)
    assert (check.is_prime, check.form, check.irreducible) == (True, "e1", False)
    check = is_prime_element(gaussian_element((1, 1), 1), QB)
    assert (check.is_prime, check.form) == (True, "prime_e1")
    check = is_prime_element(gaussian_element(1, (2, -1)), QB)
    assert (check.is_prime, check.form) == (True, "prime_e2")
    for bad in (BicomplexElement(Fraction(2), Fraction(3)),
                BicomplexElement(Fraction(4), Fraction(1)),
                BicomplexElement(Fraction(1), Fraction(1)),
                BicomplexElement(Fraction(0), Fraction(5))):
        assert not is_prime_element(bad, QH).is_prime


def test_factor_hyperbolic_example():
    f = factor(BicomplexElement(Fraction(6), Fraction(35)), QH)
    assert f.unit == ONE
    assert [(p.c1, p.c2, e) for p, e in f.factors] == [
        (2, 1, 1), (3, 1, 1), (1, 5, 1), (1, 7, 1)]
    assert f.recompose() == BicomplexElement(Fraction(6), Fraction(35))


def test_factor_five_in_gaussian_extension():
    five = gaussian_element(5, 5)
    f = factor(five, QB)
    assert f.recompose() == five
    assert len(f.factors) == 4
    forms = [is_prime_element(p, QB).form for p, _ in f.factors]
    assert forms == ["prime_e1", "prime_e1", "prime_e2", "prime_e2"]
    assert {p.c1 for p, _ in f.factors[:2]} == {G(2, 1), G(1, 2)}


def test_factor_three_is_semiprime_in_gaussian_extension():
    f = factor(gaussian_element(3, 3), QB)
    assert [(p.c1, p.c2, e) for p, e in f.factors] == [(G(3), G(1), 1), (G(1), G(3), 1)]


def test_factor_errors():
    with pytest.raises(NullConeError):
        factor(BicomplexElement(Fraction(0), Fraction(5)), QH)
    with pytest.raises(UnitInputError):
        factor(J_UNIT, QH)
    with pytest.raises(UnsupportedRingError):
        factor(BicomplexElement(QuadRational(2, 2, 0), QuadRational(2, 3, 0)),
               ExtensionDescriptor(QuadraticField(2), Q_FIELD))
    with pytest.raises(UnsupportedRingError):
        factor(BicomplexElement(QuadRational(-3, 2, 0), QuadRational(-3, 3, 0)),
               L_EISENSTEIN)
    with pytest.raises(ValueError):
        factor(BicomplexElement(Fraction(1, 2), Fraction(3)), QH)


def _random_hyperbolic(rng):
    def component():
        value = rng.randrange(2, 10 ** 6) * rng.choice((1, -1))
        return Fraction(value)
    return BicomplexElement(component(), component())


def _random_gaussian_integral(rng):
    def component():
        while True:
            a, b = rng.randrange(-1000, 1001), rng.randrange(-1000, 1001)
            if a * a + b * b > 1:
                return G(a, b)
    return BicomplexElement(component(), component())


def test_factor_round_trip_random():
    rng = random.Random(71)
    for _ in range(60):
        el = _random_hyperbolic(rng)
        f = factor(el, QH)
        assert f.recompose() == el
        assert all(is_prime_element(p, QH).is_prime for p, _ in f.factors)
    for _ in range(60):
        el = _random_gaussian_integral(rng)
        f = factor(el, QB)
        assert f.recompose() == el
        assert all(is_prime_element(p, QB).is_prime for p, _ in f.factors)
        assert all(canonical_associate(p, QB)[1] == p for p, _ in f.factors)


def test_factor_unit_invariance():
    rng = random.Random(72)
    hyperbolic_units = [BicomplexElement(Fraction(a), Fraction(b))
                        for a, b in ((1, 1), (1, -1), (-1, 1), (-1, -1))]
    for _ in range(30):
        el = _random_hyperbolic(rng)
        reference = factor(el, QH).factors
        for u in hyperbolic_units:
            assert factor(u * el, QH).factors == reference
    gaussian_units = [gaussian_element((a, b), (c, d))
                      for (a, b), (c, d) in itertools.product(
                          [(1, 0), (0, 1), (-1, 0), (0, -1)], repeat=2)]
    for _ in range(10):
        el = _random_gaussian_integral(rng)
        reference = factor(el, QB).factors
        for u in gaussian_units:
            assert factor(u * el, QB).factors == reference


def test_rational_prime_profiles():
    profile = rational_prime_profile(7, QH)
    assert (profile.factor_count, profile.semiprime) == (2, True)
    assert (rational_prime_profile(5, QB).factor_count,
            rational_prime_profile(5, QB).semiprime) == (4, False)
    assert rational_prime_profile(3, QB).semiprime
    two = rational_prime_profile(2, QB)
    assert (two.factor_count, two.semiprime) == (4, False)
    assert sorted(e for _, e in two.factorization.factors) == [2, 2]
    with pytest.raises(ValueError):
        rational_prime_profile(6, QB)


def test_prime_profile_mod_four_split():
    for p in (5, 13, 17, 29, 997):
        assert rational_prime_profile(p, QB).factor_count == 4
    for p in (3, 7, 11, 19, 991):
        assert rational_prime_profile(p, QB).factor_count == 2


def test_pell_fundamental_unit():
    assert pell_fundamental_unit(2) == (1, 1)
    assert pell_fundamental_unit(46) == (24335, 3588)
    x, y = pell_fundamental_unit(61)
    assert x * x - 61 * y * y in (1, -1) and y > 0
    with pytest.raises(ValueError):
        pell_fundamental_unit(4)


def test_mixed_quadratic_extension_numeric_ops_only():
    L = ExtensionDescriptor(QuadraticField(2), QuadraticField(3))
    assert discriminant(L) == 8 * 12
    info = unit_group(L)
    assert not info.finite
    with pytest.raises(UnsupportedRingError):
        integral_basis(L)
