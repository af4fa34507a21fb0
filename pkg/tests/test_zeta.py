import math
import random
from fractions import Fraction

import pytest

from bicomplex.element import BicomplexElement
from bicomplex.gaussian import exact_gaussian_div, gaussian_int, gaussian_norm
from bicomplex.rings import (
    ExtensionDescriptor,
    GAUSSIAN_FIELD,
    QB,
    QH,
    Q_FIELD,
    QuadraticField,
    RationalField,
    UnsupportedRingError,
    factor,
)
from bicomplex.scalars import GaussianRational
from bicomplex.zeta import (
    BicomplexIdeal,
    CoefficientTable,
    ComponentIdeal,
    DegenerateIdealError,
    brute_force_ideal_count,
    coefficient_table,
    dirichlet_convolve,
    ideal_norm,
    is_prime_ideal,
    jacobi_r,
    principal_ideal,
    zeta_partial,
)


def test_ideal_norm_examples():
    ideal = BicomplexIdeal(ComponentIdeal.principal(2, Q_FIELD),
                           ComponentIdeal.principal(3, Q_FIELD), QH)
    assert ideal_norm(ideal) == 6
    ideal = BicomplexIdeal(ComponentIdeal.principal(gaussian_int(1, 1), GAUSSIAN_FIELD),
                           ComponentIdeal.full(), QB)
    assert ideal_norm(ideal) == 2
    for a1, a2 in (((ComponentIdeal.full()), ComponentIdeal.zero()),
                   (ComponentIdeal.zero(), ComponentIdeal.full()),
                   (ComponentIdeal.zero(), ComponentIdeal.zero()),
                   (ComponentIdeal.zero(), ComponentIdeal.principal(3, Q_FIELD))):
        with pytest.raises(DegenerateIdealError):
            ideal_norm(BicomplexIdeal(a1, a2, QH))


def test_component_ideal_normalization():
    assert ComponentIdeal.principal(-6, Q_FIELD).generator == 6
    assert ComponentIdeal.principal(0, Q_FIELD).kind == ComponentIdeal.ZERO_KIND
    assert ComponentIdeal.principal(-1, Q_FIELD).kind == ComponentIdeal.FULL_KIND
    canon = ComponentIdeal.principal(gaussian_int(0, 3), GAUSSIAN_FIELD)
    assert canon.generator == gaussian_int(3)
    with pytest.raises(UnsupportedRingError):
        ComponentIdeal.principal(1, QuadraticField(-3))


def test_is_prime_ideal():
    full = ComponentIdeal.full()
    assert is_prime_ideal(BicomplexIdeal(full, ComponentIdeal.principal(3, Q_FIELD), QH))
    assert is_prime_ideal(BicomplexIdeal(full, ComponentIdeal.zero(), QH))  # degenerate
    assert is_prime_ideal(BicomplexIdeal(ComponentIdeal.zero(), full, QH))
    assert not is_prime_ideal(BicomplexIdeal(ComponentIdeal.principal(2, Q_FIELD),
                                             ComponentIdeal.principal(3, Q_FIELD), QH))
    assert not is_prime_ideal(BicomplexIdeal(full, full, QH))
    assert not is_prime_ideal(BicomplexIdeal(full, ComponentIdeal.principal(4, Q_FIELD), QH))
    assert is_prime_ideal(BicomplexIdeal(
        ComponentIdeal.principal(gaussian_int(1, 1), GAUSSIAN_FIELD), full, QB))


def test_jacobi_examples():
    assert jacobi_r(1) == 4
    assert jacobi_r(5) == 8
    assert jacobi_r(3) == 0
    assert jacobi_r(2) == 4
    with pytest.raises(ValueError):
        jacobi_r(0)


def test_jacobi_against_lattice_enumeration():
    limit = 500
    counts = [0] * (limit + 1)
    bound = math.isqrt(limit)
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            n = a * a + b * b
            if 1 <= n <= limit:
                counts[n] += 1
    for n in range(1, limit + 1):
        assert jacobi_r(n) == counts[n]


def test_coefficient_table_rational_and_hyperbolic():
    assert coefficient_table(Q_FIELD, 5).values == (1, 1, 1, 1, 1)
    table = coefficient_table(QH, 200)
    for n in range(1, 201):
        assert table.a(n) == sum(1 for d in range(1, n + 1) if n % d == 0)
    assert table.a(6) == 4


def test_gaussian_counts_three_routes_to_ten_thousand():
    """a(n), r(n)/4 and the canonical-generator enumeration agree on 1..10^4."""
    limit = 10 ** 4
    table_i = coefficient_table(GAUSSIAN_FIELD, limit)
    for n in range(1, limit + 1):
        r = jacobi_r(n)
        assert r % 4 == 0
        assert table_i.a(n) == r // 4 == brute_force_ideal_count(GAUSSIAN_FIELD, n)


def test_coefficient_table_gaussian_and_quartic():
    table_i = coefficient_table(GAUSSIAN_FIELD, 300)
    for n in range(1, 301):
        assert table_i.a(n) == jacobi_r(n) // 4
        assert jacobi_r(n) % 4 == 0
    table_b = coefficient_table(QB, 100)
    assert table_b.values[:5] == (1, 2, 0, 3, 4)
    assert table_b.a(2) == 2
    # brute-force pair enumeration over component ideals
    for n in range(1, 101):
        expected = sum(brute_force_ideal_count(GAUSSIAN_FIELD, d)
                       * brute_force_ideal_count(GAUSSIAN_FIELD, n // d)
                       for d in range(1, n + 1) if n % d == 0)
        assert table_b.a(n) == expected


def test_coefficient_table_errors():
    with pytest.raises(UnsupportedRingError):
        coefficient_table(QuadraticField(-3), 10)
    with pytest.raises(ValueError):
        coefficient_table(Q_FIELD, 0)


def test_dirichlet_convolve():
    ones = coefficient_table(Q_FIELD, 12)
    assert dirichlet_convolve(ones, ones).a(12) == 6
    table_i = coefficient_table(GAUSSIAN_FIELD, 200)
    assert dirichlet_convolve(table_i, table_i).values == coefficient_table(QB, 200).values
    rng = random.Random(81)
    for _ in range(20):
        f = CoefficientTable(tuple([1] + [rng.randrange(0, 9) for _ in range(15)]))
        g = CoefficientTable(tuple([1] + [rng.randrange(0, 9) for _ in range(15)]))
        assert dirichlet_convolve(f, g) == dirichlet_convolve(g, f)
    with pytest.raises(ValueError):
        dirichlet_convolve(ones, coefficient_table(Q_FIELD, 5))


def test_coefficient_table_validation():
    with pytest.raises(ValueError):
        CoefficientTable((2, 1))
    with pytest.raises(ValueError):
        CoefficientTable((1, -1))


def test_zeta_partial():
    value = zeta_partial(Q_FIELD, 2, 10 ** 4)
    assert abs(value - math.pi ** 2 / 6) < 1e-3
    hyp = zeta_partial(QH, 2, 10 ** 4)
    assert abs(hyp - (math.pi ** 2 / 6) ** 2) < 2e-3
    assert zeta_partial(Q_FIELD, Fraction(3, 2), 100) > 0
    with pytest.raises(ValueError):
        zeta_partial(Q_FIELD, 1, 100)


def test_brute_force_ideal_count():
    assert brute_force_ideal_count(GAUSSIAN_FIELD, 5) == 2
    assert brute_force_ideal_count(GAUSSIAN_FIELD, 3) == 0
    assert brute_force_ideal_count(GAUSSIAN_FIELD, 25) == 3  # (2+i)^2, (2-i)^2, (5)
    for n in (1, 2, 17, 100):
        assert brute_force_ideal_count(Q_FIELD, n) == 1
    with pytest.raises(UnsupportedRingError):
        brute_force_ideal_count(QuadraticField(2), 5)


def test_factorization_ideal_norm_product():
    rng = random.Random(82)
    for _ in range(40):
        el = BicomplexElement(GaussianRational(rng.randrange(-40, 41), rng.randrange(-40, 41)),
                              GaussianRational(rng.randrange(-40, 41), rng.randrange(-40, 41)))
        if el.in_null_cone or gaussian_norm(el.c1) == 1 or gaussian_norm(el.c2) == 1:
            continue
        decomposition = factor(el, QB)
        total = ideal_norm(principal_ideal(el, QB))
        product = 1
        for prime, exponent in decomposition.factors:
            product *= ideal_norm(principal_ideal(prime, QB)) ** exponent
        assert product == total


# -- brute-force quotient rings for the prime-ideal criterion -------------------

def _rational_residues(m):
    return [Fraction(k) for k in range(m)]


def _gaussian_residues(g):
    norm = gaussian_norm(g)
    reps = []
    for a in range(norm):
        for b in range(norm):
            z = gaussian_int(a, b)
            if any(exact_gaussian_div(z - r, g) is not None for r in reps):
                continue
            reps.append(z)
        if len(reps) == norm:
            break
    assert len(reps) == norm
    return reps


def _residues(component, field):
    if component.kind == ComponentIdeal.FULL_KIND:
        return [Fraction(0)] if isinstance(field, RationalField) else [gaussian_int(0)]
    if isinstance(field, RationalField):
        return _rational_residues(component.norm(field))
    return _gaussian_residues(component.generator)


def _is_zero_in(component, field, value):
    if component.kind == ComponentIdeal.FULL_KIND:
        return True
    if isinstance(field, RationalField):
        return value % component.generator == 0
    return exact_gaussian_div(value, component.generator) is not None


def test_prime_ideal_matches_quotient_domain_property():
    """O_L modulo the ideal is a product of component quotients; primality
    must agree with the product having no zero divisors."""
    candidates = []
    for m in (2, 3, 4, 5, 6):
        candidates.append(BicomplexIdeal(ComponentIdeal.full(),
                                         ComponentIdeal.principal(m, Q_FIELD), QH))
        candidates.append(BicomplexIdeal(ComponentIdeal.principal(m, Q_FIELD),
                                         ComponentIdeal.principal(2, Q_FIELD), QH))
    for gen in (gaussian_int(1, 1), gaussian_int(2, 1), gaussian_int(3), gaussian_int(2, 2),
                gaussian_int(5), gaussian_int(3, 1)):
        candidates.append(BicomplexIdeal(ComponentIdeal.full(),
                                         ComponentIdeal.principal(gen, GAUSSIAN_FIELD), QB))
    for ideal in candidates:
        if ideal_norm(ideal) > 30:
            continue
        fields = (ideal.L.K1, ideal.L.K2)
        reps = [(r1, r2)
                for r1 in _residues(ideal.a1, fields[0])
                for r2 in _residues(ideal.a2, fields[1])]
        assert len(reps) == ideal_norm(ideal)

        def is_zero(pair):
            return (_is_zero_in(ideal.a1, fields[0], pair[0])
                    and _is_zero_in(ideal.a2, fields[1], pair[1]))

        nonzero = [p for p in reps if not is_zero(p)]
        has_zero_divisor = any(is_zero((p[0] * q[0], p[1] * q[1]))
                               for p in nonzero for q in nonzero)
        is_domain = len(nonzero) > 0 and not has_zero_divisor
        assert is_prime_ideal(ideal) == is_domain
