"""Torsion polynomials of 1/n-surgeries on torus knots.

Surgery with coefficient 1/n on the (p, q)-torus knot gives the Brieskorn
homology sphere Sigma(p, q, N) with N = |pqn + 1|.  Its irreducible
SL(2, C) characters are indexed by triples (a, b, k); those with a and b
odd are acyclic and have torsion

    1/tau = 2 (1 - cos(a pi/p)) (1 - cos(b pi/q)) (1 + cos(pqk pi/N)).

The torsion polynomial sigma_(p,q,n)(t) has exactly these numbers 1/tau as
its roots.  It is assembled as a product over the acyclic pairs (a, b) of

    Y_(n,a,b)(t) = X_n(sqrt(t) / (2 sqrt(C_ab))),   C_ab = (1-cos a pi/p)(1-cos b pi/q),

where X_n is +-(T_{N+1} - T_{N-1}) / (2(x^2 - 1)) when N is odd and T_N
when N is even.  X_n is an even polynomial, so Y is a genuine polynomial
in t whose j-th coefficient is X_n's coefficient of x^{2j} divided by
(4 C_ab)^j.  Everything is exact; the final coefficients are checked to
be rational integers.
"""

import enum
import math
from dataclasses import dataclass, field

import mpmath

from .cyclofield import (FieldContext, NFElement, c_constant, integral_poly_mul,
                         nf_inverse, nfpoly_mul)
from .errors import (BadParameters, DegenerateDenominator, InternalMathError,
                     NonIntegerCoefficient, NonRationalCoefficient, NotAcyclic,
                     NotCoprime, ZeroSurgery)
from .polyalg import IntPoly, chebyshev_T, chebyshev_U, even_part, exact_div

DEFAULT_PRECISION = 128


class ParityCase(enum.Enum):
    P_EVEN_Q_ODD = 'PEvenQOdd'
    P_ODD_Q_EVEN = 'POddQEven'
    BOTH_ODD_N_EVEN = 'BothOddNEven'
    BOTH_ODD_N_ODD = 'BothOddNOdd'
    N_ZERO = 'NZero'


@dataclass(frozen=True)
class SurgeryDescriptor:
    p: int
    q: int
    n: int
    N: int = field(init=False)
    parity_case: ParityCase = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, 'N', abs(self.p * self.q * self.n + 1))
        if self.n == 0:
            case = ParityCase.N_ZERO
        elif self.p % 2 == 0:
            case = ParityCase.P_EVEN_Q_ODD
        elif self.q % 2 == 0:
            case = ParityCase.P_ODD_Q_EVEN
        elif self.n % 2 == 0:
            case = ParityCase.BOTH_ODD_N_EVEN
        else:
            case = ParityCase.BOTH_ODD_N_ODD
        object.__setattr__(self, 'parity_case', case)

    @property
    def brieskorn(self):
        return (self.p, self.q, self.N)

    def shifted(self, dn):
        return SurgeryDescriptor(self.p, self.q, self.n + dn)


def make_descriptor(p, q, n):
    """Validate (p, q, n) and return the surgery descriptor."""
    if p < 2 or q < 2:
        raise BadParameters(f'p and q must be >= 2, got p={p}, q={q}')
    if math.gcd(p, q) != 1:
        raise NotCoprime(f'gcd({p}, {q}) = {math.gcd(p, q)}')
    return SurgeryDescriptor(p, q, n)


@dataclass(frozen=True)
class RepClass:
    a: int
    b: int
    k: int
    trace_x: float
    trace_y: float
    trace_m: float
    acyclic: bool


def enumerate_reps(d):
    """All irreducible classes (a, b, k), in lexicographic order."""
    if d.n == 0:
        raise ZeroSurgery('1/0 surgery is S^3; it has no irreducible classes')
    p, q, n, N = d.p, d.q, d.n, d.N
    reps = []
    for a in range(1, p):
        for b in range(1, q):
            if (a - b) % 2:
                continue
            for k in range(1, N):
                if (k - n * a) % 2:
                    continue
                reps.append(RepClass(
                    a, b, k,
                    trace_x=2 * math.cos(a * math.pi / p),
                    trace_y=2 * math.cos(b * math.pi / q),
                    trace_m=2 * math.cos(k * math.pi / N),
                    acyclic=(a % 2 == 1 and b % 2 == 1),
                ))
    return reps


def acyclic_pairs(d):
    """The pairs (a, b) with 0 < a < p, 0 < b < q, both odd."""
    return [(a, b) for a in range(1, d.p, 2) for b in range(1, d.q, 2)]


def inverse_torsion_value(d, r, precision=DEFAULT_PRECISION):
    """1/tau for an acyclic class, as an mpmath number."""
    if not r.acyclic:
        raise NotAcyclic(f'class {(r.a, r.b, r.k)} is not acyclic')
    with mpmath.workprec(precision + 16):
        pi = mpmath.pi
        last = 1 + mpmath.cos(d.p * d.q * r.k * pi / d.N)
        if abs(last) < 1e-12:
            raise DegenerateDenominator(f'1 + cos(pqk pi/N) vanishes for k={r.k}')
        val = (2 * (1 - mpmath.cos(r.a * pi / d.p)) * (1 - mpmath.cos(r.b * pi / d.q))
               * last)
    with mpmath.workprec(precision):
        return +val


def torsion_value(d, r, precision=DEFAULT_PRECISION):
    """The Reidemeister torsion tau of an acyclic class."""
    inv = inverse_torsion_value(d, r, precision + 8)
    with mpmath.workprec(precision):
        return 1 / inv


def x_polynomial(d):
    """X_n(x): +-(T_{N+1} - T_{N-1}) / (2(x^2 - 1)) for N odd, T_N for N even."""
    if d.n == 0:
        raise ZeroSurgery('X_n is only defined for n != 0')
    N = d.N
    if d.parity_case is ParityCase.BOTH_ODD_N_ODD:
        return chebyshev_T(N)
    diff = chebyshev_T(N + 1) - chebyshev_T(N - 1)
    if any(c % 2 for c in diff.coeffs):
        raise InternalMathError('T_{N+1} - T_{N-1} has an odd coefficient')
    half = IntPoly([c // 2 for c in diff.coeffs])
    quotient = exact_div(half, IntPoly((-1, 0, 1)))
    if quotient != chebyshev_U(N - 1):
        raise InternalMathError('quotient differs from U_{N-1}')
    return quotient if d.n > 0 else -quotient


def _field(d, ctx):
    if ctx is None:
        return FieldContext(d.p, d.q)
    if (ctx.p, ctx.q) != (d.p, d.q):
        raise ValueError(f'context is for (p,q)=({ctx.p},{ctx.q})')
    return ctx


def _check_pair(d, a, b):
    if not (0 < a < d.p and 0 < b < d.q and a % 2 == 1 and b % 2 == 1):
        raise NotAcyclic(f'({a}, {b}) is not an acyclic pair for (p,q)=({d.p},{d.q})')


def substitute(poly, four_c):
    """Coefficients of poly(t / four_c): the j-th one is poly_j * four_c**(-j)."""
    ctx = four_c.ctx
    g, den = nf_inverse(four_c).integral()
    power, pden = [1] + [0] * (ctx.dim - 1), 1
    out = []
    for j, c in enumerate(poly.coeffs):
        if j:
            power = ctx.mul_integral(power, g)
            pden *= den
        out.append(ctx.from_integral([c * x for x in power], pden))
    return out


def y_polynomial(d, a, b, ctx=None):
    """Coefficients (ascending in t) of Y_(n,a,b)(t) as ring elements."""
    ctx = _field(d, ctx)
    _check_pair(d, a, b)
    if d.n == 0:
        return [ctx.one()]
    four_c = 4 * c_constant(ctx, a, b)
    return substitute(even_part(x_polynomial(d)), four_c)


def three_term_D(d, a, b, ctx=None):
    """Coefficients of D(t) = 2 T_m(sqrt(t) / (2 sqrt(C_ab))).

    m = pq when p or q is even and m = 2pq when both are odd.
    """
    ctx = _field(d, ctx)
    _check_pair(d, a, b)
    m = d.p * d.q
    if m % 2:
        m *= 2
    four_c = 4 * c_constant(ctx, a, b)
    return substitute(even_part(2 * chebyshev_T(m)), four_c)


def normalization_value(d):
    """Prescribed value sigma(0) in {+1, -1}."""
    p, q, N = d.p, d.q, d.N
    case = d.parity_case
    if case is ParityCase.N_ZERO:
        return 1
    num = {
        ParityCase.P_EVEN_Q_ODD: (N - 1) * p * (q - 1),
        ParityCase.P_ODD_Q_EVEN: (N - 1) * (p - 1) * q,
        ParityCase.BOTH_ODD_N_EVEN: (N - 1) * (p - 1) * (q - 1),
        ParityCase.BOTH_ODD_N_ODD: N * (p - 1) * (q - 1),
    }[case]
    if num % 8:
        raise InternalMathError(f'normalization exponent {num}/8 is not an integer')
    return -1 if (num // 8) % 2 else 1


def degree_formula(d):
    """Degree of sigma_(p,q,n) predicted from the parity case."""
    p, q, N = d.p, d.q, d.N
    case = d.parity_case
    if case is ParityCase.N_ZERO:
        return 0
    num = {
        ParityCase.P_EVEN_Q_ODD: (N - 1) * p * (q - 1),
        ParityCase.P_ODD_Q_EVEN: (N - 1) * (p - 1) * q,
        ParityCase.BOTH_ODD_N_EVEN: (N - 1) * (p - 1) * (q - 1),
        ParityCase.BOTH_ODD_N_ODD: N * (p - 1) * (q - 1),
    }[case]
    if num % 8:
        raise InternalMathError(f'degree {num}/8 is not an integer')
    return num // 8


@dataclass(frozen=True)
class YFactor:
    """One factor Y_(n,a,b), kept in integral form.

    ``scaled[j]`` equals Y_j * (4C)^E, where E = deg Y and ``scale`` = (4C)^E;
    both are integral ring elements.
    """

    a: int
    b: int
    four_c: NFElement
    scaled: tuple
    scale: NFElement

    @property
    def degree(self):
        return len(self.scaled) - 1

    def coefficients(self):
        inv = nf_inverse(self.scale)
        return [c * inv for c in self.scaled]


@dataclass(frozen=True)
class TorsionPolynomial:
    sigma: IntPoly
    descriptor: SurgeryDescriptor
    factors: tuple
    sign_corrected: bool

    @property
    def degree(self):
        return self.sigma.degree

    @property
    def leading(self):
        return self.sigma.leading

    def scaled(self, factor=4):
        """The polynomial sigma(factor * t)."""
        return IntPoly([c * factor ** j for j, c in enumerate(self.sigma.coeffs)])


def _tree_product(ctx, polys):
    while len(polys) > 1:
        nxt = [integral_poly_mul(ctx, polys[i], polys[i + 1])
               for i in range(0, len(polys) - 1, 2)]
        if len(polys) % 2:
            nxt.append(polys[-1])
        polys = nxt
    return polys[0]


def sigma(d):
    """The torsion polynomial sigma_(p,q,n)(t), exactly.

    The product of the Y factors is formed over integral ring elements
    (each Y multiplied through by (4C)^deg Y), then divided by the product
    of those scales, which must be a rational integer.  Any coefficient
    with an irrational part or a non-integer value is an internal error.
    """
    if d.n == 0:
        return TorsionPolynomial(IntPoly((1,)), d, (), False)
    ctx = FieldContext(d.p, d.q)
    P = even_part(x_polynomial(d))
    E = P.degree
    factors = []
    for a, b in acyclic_pairs(d):
        four_c = 4 * c_constant(ctx, a, b)
        fc, den = four_c.integral()
        if den != 1:
            raise InternalMathError('4C is not integral')
        powers = [[1] + [0] * (ctx.dim - 1)]
        for _ in range(E):
            powers.append(ctx.mul_integral(powers[-1], fc))
        scaled = tuple(tuple(c * x for x in powers[E - j]) for j, c in enumerate(P.coeffs))
        factors.append(YFactor(a, b, four_c,
                               tuple(ctx.from_integral(s) for s in scaled),
                               ctx.from_integral(powers[E])))

    product = _tree_product(ctx, [[[int(c) for c in e.coeffs] for e in f.scaled]
                                  for f in factors])
    total = [1] + [0] * (ctx.dim - 1)
    for f in factors:
        total = ctx.mul_integral(total, [int(c) for c in f.scale.coeffs])
    if any(total[1:]):
        raise NonRationalCoefficient('product of the scales is not rational')
    scale = total[0]

    coeffs = []
    for j, coords in enumerate(product):
        if any(coords[1:]):
            raise NonRationalCoefficient(f'coefficient of t^{j} is irrational')
        c, rem = divmod(coords[0], scale)
        if rem:
            raise NonIntegerCoefficient(f'coefficient of t^{j} is not an integer')
        coeffs.append(c)
    poly = IntPoly(coeffs)

    flip = poly[0] != normalization_value(d)
    if flip:
        poly = -poly
    if poly[0] != normalization_value(d):
        raise InternalMathError(f'sigma(0) = {poly[0]} cannot be normalized')
    if poly.degree != degree_formula(d):
        raise InternalMathError(
            f'degree {poly.degree} differs from predicted {degree_formula(d)}')
    return TorsionPolynomial(poly, d, tuple(factors), flip)


@dataclass
class PairCheck:
    a: int
    b: int
    passed: bool
    first_mismatch: int = None


@dataclass
class ThreeTermReport:
    descriptor: SurgeryDescriptor
    step: int
    checks: list

    @property
    def passed(self):
        return all(c.passed for c in self.checks)


def verify_three_term(d):
    """Check Y_(n+s) = D Y_n - Y_(n-s) exactly for every acyclic pair.

    The step s is 1 when p or q is even and 2 when both are odd.
    """
    step = 1 if (d.p * d.q) % 2 == 0 else 2
    ctx = FieldContext(d.p, d.q)
    up, down = d.shifted(step), d.shifted(-step)
    checks = []
    for a, b in acyclic_pairs(d):
        D = three_term_D(d, a, b, ctx)
        lhs = y_polynomial(up, a, b, ctx)
        rhs = nfpoly_mul(D, y_polynomial(d, a, b, ctx))
        for j, c in enumerate(y_polynomial(down, a, b, ctx)):
            if j < len(rhs):
                rhs[j] = rhs[j] - c
            else:
                rhs.append(-c)
        zero = ctx.zero()
        size = max(len(lhs), len(rhs))
        lhs = lhs + [zero] * (size - len(lhs))
        rhs = rhs + [zero] * (size - len(rhs))
        bad = next((j for j in range(size) if lhs[j] != rhs[j]), None)
        checks.append(PairCheck(a, b, bad is None, bad))
    return ThreeTermReport(d, step, checks)


def grid(pmax, qmax, nmax, include_zero=False):
    """Descriptors for coprime 2 <= p <= pmax, 2 <= q <= qmax, |n| <= nmax."""
    ns = [n for n in range(-nmax, nmax + 1) if include_zero or n]
    return [make_descriptor(p, q, n)
            for p in range(2, pmax + 1) for q in range(2, qmax + 1)
            if math.gcd(p, q) == 1 for n in ns]
