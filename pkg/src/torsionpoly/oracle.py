"""Floating-point cross-checks for the exact torsion polynomials.

The oracle never touches Chebyshev polynomials or the cosine ring.  It
evaluates the torsion values of the acyclic classes directly, expands
``leading * prod(t - r_i)`` in mpmath, and compares coefficient by
coefficient with the exact polynomial.

:func:`locate_roots` goes the other way: starting from the exact integer
polynomial it certifies, by exact sign changes, that each expected root
has a true root within a small relative bracket.
"""

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import LengthMismatch
from .torsion import DEFAULT_PRECISION, enumerate_reps, inverse_torsion_value

try:
    import gmpy2
except ImportError:  # pragma: no cover
    gmpy2 = None


@dataclass(frozen=True)
class RootMultiset:
    roots: tuple
    descriptor: object
    precision: int

    def __len__(self):
        return len(self.roots)


def collect_roots(d, precision=DEFAULT_PRECISION):
    """1/tau for every acyclic class; empty for n = 0."""
    if d.n == 0:
        return RootMultiset((), d, precision)
    roots = tuple(inverse_torsion_value(d, r, precision)
                  for r in enumerate_reps(d) if r.acyclic)
    return RootMultiset(roots, d, precision)


def reconstruct(ms, leading):
    """Ascending coefficients of ``leading * prod(t - r)`` over the multiset."""
    if not leading:
        raise ValueError('leading coefficient must be nonzero')
    with mpmath.workprec(ms.precision):
        coeffs = [mpmath.mpf(leading)]
        for r in sorted(ms.roots):
            nxt = [mpmath.mpf(0)] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i + 1] += c
                nxt[i] -= c * r
            coeffs = nxt
    return coeffs


@dataclass
class CompareReport:
    passed: bool
    max_error: float
    worst_index: int
    errors: list


def compare(exact, approx, rel_tol):
    """Coefficient-wise relative comparison of an exact and an approximate polynomial.

    Zero coefficients are judged by absolute error against
    ``rel_tol * max|coeff|``; their error is reported scaled the same way.
    """
    if rel_tol <= 0:
        raise ValueError('rel_tol must be positive')
    exact = list(exact.coeffs) if hasattr(exact, 'coeffs') else list(exact)
    if len(exact) != len(approx):
        raise LengthMismatch(f'{len(exact)} exact vs {len(approx)} approximate coefficients')
    if not exact:
        return CompareReport(True, 0.0, None, [])
    scale = max(abs(c) for c in exact)
    errors = []
    with mpmath.workprec(DEFAULT_PRECISION):
        for c, a in zip(exact, approx):
            diff = abs(mpmath.mpf(a) - c)
            errors.append(float(diff / (abs(c) if c else scale)))
    worst = max(range(len(errors)), key=errors.__getitem__)
    return CompareReport(errors[worst] <= rel_tol, errors[worst], worst, errors)


def sign_at(poly, x):
    """Exact sign of an integer polynomial at a rational point."""
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    coeffs = poly.coeffs
    if not coeffs:
        return 0
    mpz = gmpy2.mpz if gmpy2 is not None else int
    num, den = mpz(num), mpz(den)
    # homogenized Horner: sum c_j num^j den^(D-j)
    acc = mpz(coeffs[-1])
    dpow = mpz(1)
    for c in reversed(coeffs[:-1]):
        dpow *= den
        acc = acc * num + c * dpow
    return (acc > 0) - (acc < 0)


@dataclass
class RootLocation:
    passed: bool
    located: list
    failures: list
    min_gap: float


def locate_roots(poly, expected, rel_width=1e-7):
    """Certify a distinct real root of ``poly`` near each expected value.

    Each expected root r gets the bracket r(1 -+ w), with w shrunk where
    neighbours are close so brackets stay disjoint.  An exact sign change
    across a bracket proves a root inside it.  If every bracket changes
    sign and the count equals the degree, the roots are exactly located.
    """
    rs = sorted(float(r) for r in expected)
    if len(rs) != poly.degree and not (poly.degree == 0 and not rs):
        return RootLocation(False, [], ['cardinality'], 0.0)
    gaps = [rs[i + 1] - rs[i] for i in range(len(rs) - 1)]
    min_gap = min((g / rs[i + 1] for i, g in enumerate(gaps)), default=float('inf'))
    located, failures = [], []
    for i, r in enumerate(rs):
        half = rel_width * abs(r)
        if i > 0:
            half = min(half, gaps[i - 1] / 3)
        if i < len(gaps):
            half = min(half, gaps[i] / 3)
        if half <= abs(r) * 1e-14:
            failures.append(r)
            continue
        lo, hi = Fraction(r - half), Fraction(r + half)
        if sign_at(poly, lo) * sign_at(poly, hi) < 0:
            located.append((float(lo), float(hi)))
        else:
            failures.append(r)
    return RootLocation(not failures, located, failures, min_gap)
