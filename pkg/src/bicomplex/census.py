"""The bicomplex root census of a squarefree integer polynomial.

A degree-n squarefree polynomial has n distinct complex roots and n^2
distinct bicomplex roots, the pairs alpha*e1 + beta*e2 over complex roots
alpha, beta.  The pairs partition into five loci by which conjugations fix
them: real roots, non-real roots of the i-, j- and k-planes, and the rest.
With r real roots and s conjugate pairs (n = r + 2s) the locus sizes are

    r,   2s (i-plane),   r(r-1) (j-plane),   2s (k-plane),   4s(s+r-1),

and the product of X - psi over all n^2 bicomplex roots psi equals the n-th
power of the monic polynomial.  This module computes the census, enumerates
and classifies the bicomplex roots when the complex roots are Gaussian
rationals, builds the five locus factor polynomials exactly, and provides a
floating-point simultaneous-iteration root finder used as a cross-check
oracle only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .element import BicomplexElement
from .polys import IntPoly, Poly, cyclotomic, is_squarefree, sturm_real_root_count
from .scalars import GaussianRational


class RootConvergenceError(ArithmeticError):
    """The numeric root iteration did not converge within its cap."""


@dataclass(frozen=True)
class Census:
    """Locus sizes of the bicomplex root set of a squarefree polynomial."""

    degree: int
    real_roots: int
    complex_pairs: int
    i_plane: int
    j_plane: int
    k_plane: int
    off_plane: int

    def __post_init__(self):
        n, r, s = self.degree, self.real_roots, self.complex_pairs
        if n != r + 2 * s:
            raise ValueError("degree must equal real_roots + 2*complex_pairs")
        expected = (2 * s, r * (r - 1), 2 * s, 4 * s * (s + r - 1))
        got = (self.i_plane, self.j_plane, self.k_plane, self.off_plane)
        if expected != got:
            raise ValueError(f"census counts {got} violate the locus formulas {expected}")
        if n * n != r + self.i_plane + self.j_plane + self.k_plane + self.off_plane:
            raise ValueError("locus sizes do not add up to degree^2")

    @property
    def total(self) -> int:
        return self.degree * self.degree


def census_from_counts(degree: int, real_roots: int) -> Census:
    s, rem = divmod(degree - real_roots, 2)
    if rem:
        raise ValueError("non-real roots must come in conjugate pairs")
    r = real_roots
    return Census(degree, r, s, 2 * s, r * (r - 1), 2 * s, 4 * s * (s + r - 1))


def census(p: IntPoly) -> Census:
    """Census of a squarefree integer polynomial, via the Sturm real count."""
    if p.degree < 1:
        raise ValueError("census needs degree >= 1")
    if not is_squarefree(p):
        raise ValueError("census is defined for squarefree polynomials only")
    return census_from_counts(p.degree, sturm_real_root_count(p))


def census_cyclotomic(n: int) -> Census:
    """Census of the n-th cyclotomic polynomial (n >= 2)."""
    if n < 2:
        raise ValueError("cyclotomic census needs n >= 2")
    return census(cyclotomic(n))


LOCUS_NAMES = ("real", "plane_i", "plane_j", "plane_k", "generic")


@dataclass(frozen=True)
class RootPartition:
    """The n^2 bicomplex roots, classified by fixing conjugations."""

    real: tuple[BicomplexElement, ...]
    plane_i: tuple[BicomplexElement, ...]
    plane_j: tuple[BicomplexElement, ...]
    plane_k: tuple[BicomplexElement, ...]
    generic: tuple[BicomplexElement, ...]

    def all_roots(self) -> tuple[BicomplexElement, ...]:
        return self.real + self.plane_i + self.plane_j + self.plane_k + self.generic

    def sizes(self) -> tuple[int, int, int, int, int]:
        return (len(self.real), len(self.plane_i), len(self.plane_j),
                len(self.plane_k), len(self.generic))


def _check_root_set(roots: tuple[GaussianRational, ...]):
    if len(set(roots)) != len(roots):
        raise ValueError("duplicate roots in root set")
    have = set(roots)
    for root in roots:
        if root.conjugate() not in have:
            raise ValueError(f"root set is not closed under conjugation: {root} unpaired")


def classify_pair(alpha: GaussianRational, beta: GaussianRational) -> str:
    """Locus of alpha*e1 + beta*e2 among the five conjugation classes."""
    if alpha == beta:
        return "real" if alpha.im == 0 else "plane_i"
    if alpha.im == 0 and beta.im == 0:
        return "plane_j"
    if beta == alpha.conjugate():
        return "plane_k"
    return "generic"


def enumerate_bicomplex_roots(roots) -> RootPartition:
    """All pairs alpha*e1 + beta*e2 over a conjugation-closed root set."""
    roots = tuple(roots)
    _check_root_set(roots)
    buckets: dict[str, list[BicomplexElement]] = {name: [] for name in LOCUS_NAMES}
    for alpha in roots:
        for beta in roots:
            buckets[classify_pair(alpha, beta)].append(BicomplexElement(alpha, beta))
    return RootPartition(**{name: tuple(vals) for name, vals in buckets.items()})


@dataclass(frozen=True)
class LocusFactors:
    """The five monic polynomials collecting X - psi over each locus.

    Their product equals the n-th power of the monic input polynomial; an
    empty locus contributes the constant 1.
    """

    real: Poly
    plane_i: Poly
    plane_j: Poly
    plane_k: Poly
    generic: Poly

    def product(self) -> Poly:
        return self.real * self.plane_i * self.plane_j * self.plane_k * self.generic


def _split_roots(roots: tuple[GaussianRational, ...]):
    real = sorted((root.re for root in roots if root.im == 0))
    pairs = sorted(((root.re, root.im) for root in roots if root.im > 0))
    return real, pairs


def locus_factors(roots, lead: int = 1) -> LocusFactors:
    """Exact locus factor polynomials from a conjugation-closed root set.

    ``lead`` is the leading coefficient of the degree-n polynomial whose
    roots these are; the factors themselves are monic, so the full product
    identity reads lead^n * (product over all n^2 roots of X - psi)
    = (lead * prod(X - root))^n.
    """
    roots = tuple(roots)
    _check_root_set(roots)
    if lead <= 0:
        raise ValueError("leading coefficient must be positive")
    real, pairs = _split_roots(roots)
    r, s = len(real), len(pairs)

    real_f = Poly.one()
    for alpha in real:
        real_f = real_f * Poly.of(-alpha, 1)
    pair_f = Poly.one()
    for re, im in pairs:
        pair_f = pair_f * Poly.of(re * re + im * im, -2 * re, 1)

    plane_j = Poly.one() if r == 0 else real_f ** (r - 1)
    if s == 0:
        generic = Poly.one()
    else:
        generic = (real_f ** (2 * s)) * (pair_f ** (r + 2 * (s - 1)))
    return LocusFactors(real=real_f, plane_i=pair_f, plane_j=plane_j,
                        plane_k=pair_f, generic=generic)


def gaussian_root_set(polys) -> list[GaussianRational] | None:
    """Union of the Q(i)-roots of degree <= 2 integer polynomials.

    Returns None when some polynomial does not split over Q(i).
    """
    out: list[GaussianRational] = []
    seen = set()
    for p in polys:
        roots = low_degree_gaussian_roots(p)
        if roots is None:
            return None
        for root in roots:
            if root not in seen:
                seen.add(root)
                out.append(root)
    return out


def sqrt_rational(value: Fraction) -> Fraction | None:
    """Exact positive square root of a nonnegative rational, if it exists."""
    if value < 0:
        raise ValueError("negative value")
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def low_degree_gaussian_roots(p: IntPoly) -> list[GaussianRational] | None:
    """Roots of a degree 1 or 2 integer polynomial inside Q(i), else None."""
    if p.degree == 1:
        c0, c1 = p.coeffs
        return [GaussianRational(Fraction(-c0, c1), 0)]
    if p.degree != 2:
        raise ValueError("only degrees 1 and 2 are supported")
    c0, c1, c2 = (Fraction(c) for c in p.coeffs)
    disc = c1 * c1 - 4 * c2 * c0
    if disc >= 0:
        root = sqrt_rational(disc)
        if root is None:
            return None
        return [GaussianRational((-c1 + root) / (2 * c2), 0),
                GaussianRational((-c1 - root) / (2 * c2), 0)]
    root = sqrt_rational(-disc)
    if root is None:
        return None
    return [GaussianRational(-c1 / (2 * c2), root / (2 * c2)),
            GaussianRational(-c1 / (2 * c2), -root / (2 * c2))]


def numeric_roots(p: IntPoly, tol: float = 1e-10, max_iter: int = 500) -> list[complex]:
    """Approximate complex roots by simultaneous (Durand-Kerner) iteration.

    A floating cross-check oracle only; exact computations never consume its
    output.  Starts from perturbed points near the unit circle and stops when
    the largest update drops below tol, raising RootConvergenceError at the
    iteration cap.
    """
    if not is_squarefree(p):
        raise ValueError("numeric_roots expects a squarefree polynomial")
    n = p.degree
    lead = float(p.lead)
    monic = [float(c) / lead for c in p.coeffs]

    def value(z: complex) -> complex:
        acc = 0j
        for c in reversed(monic):
            acc = acc * z + c
        return acc

    guesses = [complex(0.4, 0.9) ** k for k in range(1, n + 1)]
    for _ in range(max_iter):
        biggest = 0.0
        updated = []
        for i, z in enumerate(guesses):
            denom = 1.0 + 0j
            for j, w in enumerate(guesses):
                if i != j:
                    denom *= (z - w)
            step = value(z) / denom
            biggest = max(biggest, abs(step))
            updated.append(z - step)
        guesses = updated
        if biggest < tol:
            _certify_roots(guesses, value, tol)
            return sorted(guesses, key=lambda z: (round(z.real, 8), round(z.imag, 8)))
    raise RootConvergenceError(f"no convergence after {max_iter} iterations")


def _certify_roots(roots: list[complex], value, tol: float):
    """Residual-smallness and separation heuristic for converged iterates."""
    for i, z in enumerate(roots):
        scale = max(1.0, abs(z)) ** len(roots)
        if abs(value(z)) > 1e6 * tol * scale:
            raise RootConvergenceError(f"residual too large at {z}")
        for w in roots[i + 1:]:
            if abs(z - w) <= 2 * tol:
                raise RootConvergenceError(f"roots {z} and {w} did not separate")


def numeric_real_count(p: IntPoly, realness_tol: float = 1e-8) -> int:
    """Number of approximately real roots reported by the numeric finder."""
    return sum(1 for z in numeric_roots(p) if abs(z.imag) < realness_tol)
