"""Exact arithmetic in Q[u, v] / (m_p(u), m_q(v)).

Here ``u`` stands for 2cos(pi/p) and ``v`` for 2cos(pi/q), and m_p, m_q are
their (monic, integral) minimal polynomials.  Every cosine of a rational
multiple of pi/p or pi/q lives in this ring, and so does every constant
needed to build torsion polynomials.

An element is a ``d_p x d_q`` array of rationals, entry ``(i, j)`` being the
coefficient of ``u**i v**j``.  It is stored flat, row-major.
"""

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .errors import (ContextMismatch, InvalidOrder, NotAConjugate, NotInvertible,
                     OutOfRange)
from .polyalg import IntPoly, chebyshev_T, int_convolve

__all__ = [
    'cyclotomic', 'min_poly_2cos', 'FieldContext', 'NFElement', 'nf_add', 'nf_mul',
    'nf_neg', 'nf_inverse', 'cos_element', 'c_constant', 'numeric_embed',
    'nfpoly_mul', 'integral_poly_mul',
]


@functools.lru_cache(maxsize=None)
def cyclotomic(n):
    """n-th cyclotomic polynomial, by dividing x^n - 1 by the lower ones."""
    if n < 1:
        raise InvalidOrder(f'cyclotomic order must be positive, got {n}')
    num = IntPoly.monomial(n) - 1
    for d in range(1, n):
        if n % d == 0:
            num = _monic_div(num, cyclotomic(d))
    return num


def _monic_div(num, den):
    # exact division by a monic integer polynomial
    rem = list(num.coeffs)
    d = den.coeffs
    dd = len(d) - 1
    quot = [0] * (len(rem) - dd)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + dd]
        quot[k] = c
        if c:
            for i, di in enumerate(d):
                rem[k + i] -= c * di
    assert not any(rem), 'cyclotomic division left a remainder'
    return IntPoly(quot)


@functools.lru_cache(maxsize=None)
def min_poly_2cos(m):
    """Monic integer minimal polynomial of 2cos(pi/m).

    Phi_{2m} is palindromic of degree 2d, so Phi_{2m}(x) / x^d is a
    polynomial in y = x + 1/x.  Using x^k + x^-k = V_k(y) with the
    integral recurrence V_0 = 2, V_1 = y, V_{k+1} = y V_k - V_{k-1}
    gives the answer directly.
    """
    if m < 2:
        raise InvalidOrder(f'order must be >= 2, got {m}')
    phi = cyclotomic(2 * m).coeffs
    d = (len(phi) - 1) // 2
    y = IntPoly((0, 1))
    v_prev, v_cur = IntPoly((2,)), y
    psi = IntPoly((phi[d],))
    for k in range(1, d + 1):
        psi = psi + v_cur * phi[d + k]
        v_prev, v_cur = v_cur, y * v_cur - v_prev
    return psi


def _powers_mod(minpoly, count):
    # coordinates of x^0 .. x^(count-1) modulo a monic polynomial
    d = minpoly.degree
    low = [-c for c in minpoly.coeffs[:-1]]  # x^d == sum low[i] x^i
    rows = []
    cur = [1] + [0] * (d - 1)
    for _ in range(count):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c + top * l for c, l in zip(cur, low)]
    return tuple(rows)


@dataclass(frozen=True)
class FieldContext:
    """The ring Q[u,v]/(m_p(u), m_q(v)) for a fixed pair (p, q)."""

    p: int
    q: int
    m_p: IntPoly = field(init=False, compare=False, repr=False)
    m_q: IntPoly = field(init=False, compare=False, repr=False)
    d_p: int = field(init=False, compare=False, repr=False)
    d_q: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        for m in (self.p, self.q):
            if m < 2:
                raise InvalidOrder(f'order must be >= 2, got {m}')
        set_ = object.__setattr__
        set_(self, 'm_p', min_poly_2cos(self.p))
        set_(self, 'm_q', min_poly_2cos(self.q))
        set_(self, 'd_p', self.m_p.degree)
        set_(self, 'd_q', self.m_q.degree)
        # at least two rows so the generators themselves can be read off
        set_(self, '_red_u', _powers_mod(self.m_p, max(2 * self.d_p - 1, 2)))
        set_(self, '_red_v', _powers_mod(self.m_q, max(2 * self.d_q - 1, 2)))

    @property
    def dim(self):
        return self.d_p * self.d_q

    # constructors

    def element(self, value):
        """Build an element from a scalar or a nested ``[[c_ij]]`` array."""
        if isinstance(value, (int, Fraction)):
            coeffs = [Fraction(0)] * self.dim
            coeffs[0] = Fraction(value)
            return NFElement(self, coeffs)
        rows = [list(r) for r in value]
        coeffs = [Fraction(0)] * self.dim
        for i, row in enumerate(rows):
            for j, c in enumerate(row):
                if i >= self.d_p or j >= self.d_q:
                    if c:
                        raise ValueError('coefficient array exceeds the reduced shape')
                    continue
                coeffs[i * self.d_q + j] = Fraction(c)
        return NFElement(self, coeffs)

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)

    def gen_u(self):
        return self._gen(self._red_u[1], 'u')

    def gen_v(self):
        return self._gen(self._red_v[1], 'v')

    def _gen(self, coords, which):
        out = [0] * self.dim
        for k, c in enumerate(coords):
            if which == 'u':
                out[k * self.d_q] = c
            else:
                out[k] = c
        return NFElement(self, [Fraction(c) for c in out])

    def from_integral(self, ints, den=1):
        return NFElement(self, [Fraction(c, den) for c in ints])

    # integral kernels

    def reduce_full(self, z, rows, cols):
        """Reduce a ``rows x cols`` integer coefficient array into the basis."""
        dp, dq = self.d_p, self.d_q
        red_u, red_v = self._red_u, self._red_v
        w = [[0] * dq for _ in range(rows)]
        for i in range(rows):
            wi = w[i]
            base = i * cols
            for j in range(cols):
                c = z[base + j]
                if c:
                    if j < dq:
                        wi[j] += c
                    else:
                        for j2, r in enumerate(red_v[j]):
                            if r:
                                wi[j2] += c * r
        out = [0] * (dp * dq)
        for i in range(rows):
            wi = w[i]
            if i < dp:
                base = i * dq
                for j2 in range(dq):
                    out[base + j2] += wi[j2]
                continue
            for i2, r in enumerate(red_u[i]):
                if r:
                    base = i2 * dq
                    for j2 in range(dq):
                        if wi[j2]:
                            out[base + j2] += r * wi[j2]
        return out

    def mul_integral(self, a, b):
        """Product of two integral coordinate vectors."""
        dp, dq = self.d_p, self.d_q
        cols = 2 * dq - 1
        z = [0] * ((2 * dp - 1) * cols)
        for i1 in range(dp):
            for j1 in range(dq):
                x = a[i1 * dq + j1]
                if not x:
                    continue
                for i2 in range(dp):
                    base = (i1 + i2) * cols + j1
                    for j2 in range(dq):
                        y = b[i2 * dq + j2]
                        if y:
                            z[base + j2] += x * y
        return self.reduce_full(z, 2 * dp - 1, cols)


class NFElement:
    """Immutable element of a :class:`FieldContext` ring."""

    __slots__ = ('ctx', 'coeffs')

    def __init__(self, ctx, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != ctx.dim:
            raise ValueError(f'expected {ctx.dim} coordinates, got {len(coeffs)}')
        self.ctx = ctx
        self.coeffs = coeffs

    @property
    def matrix(self):
        dq = self.ctx.d_q
        return tuple(self.coeffs[i * dq:(i + 1) * dq] for i in range(self.ctx.d_p))

    def integral(self):
        """Return ``(ints, den)`` with ``self == ints / den`` and ``den > 0`` minimal."""
        den = 1
        for c in self.coeffs:
            if c.denominator != 1:
                den = den * c.denominator // math.gcd(den, c.denominator)
        return [c.numerator * (den // c.denominator) for c in self.coeffs], den

    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError('element is not rational')
        return self.coeffs[0]

    def is_zero(self):
        return not any(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.ctx != self.ctx:
                raise ContextMismatch(f'{self.ctx} vs {other.ctx}')
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.element(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return NFElement(self.ctx, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.ctx, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return NFElement(self.ctx, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.ctx, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, da = self.integral()
        b, db = other.integral()
        return self.ctx.from_integral(self.ctx.mul_integral(a, b), da * db)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.ctx, [a / other for a in self.coeffs])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * nf_inverse(other)

    def __pow__(self, e):
        if e < 0:
            return nf_inverse(self) ** (-e)
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, NFElement):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        terms = []
        dq = self.ctx.d_q
        for k, c in enumerate(self.coeffs):
            if c:
                i, j = divmod(k, dq)
                mono = '*'.join(s for s in (
                    '' if i == 0 else ('u' if i == 1 else f'u^{i}'),
                    '' if j == 0 else ('v' if j == 1 else f'v^{j}')) if s)
                terms.append(f'({c})*{mono}' if mono else f'({c})')
        body = ' + '.join(terms) if terms else '0'
        return f'NFElement[p={self.ctx.p}, q={self.ctx.q}]({body})'

    def embed(self, conj_a=1, conj_b=1, precision=128):
        return numeric_embed(self, conj_a, conj_b, precision)


def nf_add(a, b):
    return a + b


def nf_mul(a, b):
    return a * b


def nf_neg(a):
    return -a


def _solve(matrix, rhs):
    # Gauss-Jordan elimination over Q; matrix is a list of rows
    n = len(matrix)
    aug = [list(row) + [r] for row, r in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise NotInvertible('multiplication operator is singular')
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        row = [x / pv for x in aug[col]]
        aug[col] = row
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], row)]
    return [aug[r][n] for r in range(n)]


def nf_inverse(a):
    """Inverse by solving ``M_a x = 1`` for the multiplication operator ``M_a``."""
    ctx = a.ctx
    n = ctx.dim
    if a.is_rational():
        if not a.coeffs[0]:
            raise NotInvertible('zero is not invertible')
        return ctx.element(1 / a.coeffs[0])
    ints, den = a.integral()
    columns = []
    for k in range(n):
        basis = [0] * n
        basis[k] = 1
        columns.append(ctx.mul_integral(ints, basis))
    matrix = [[Fraction(columns[k][r], den) for k in range(n)] for r in range(n)]
    rhs = [Fraction(1)] + [Fraction(0)] * (n - 1)
    return NFElement(ctx, _solve(matrix, rhs))


def cos_element(ctx, which, numerator):
    """Exact cos(numerator * pi / p) (``which='p'``) or cos(numerator * pi / q)."""
    if which == 'p':
        modulus, half_gen = ctx.p, ctx.gen_u() / 2
    elif which == 'q':
        modulus, half_gen = ctx.q, ctx.gen_v() / 2
    else:
        raise ValueError(f"which must be 'p' or 'q', got {which!r}")
    if not 0 < numerator < modulus:
        raise OutOfRange(f'need 0 < {numerator} < {modulus}')
    acc = ctx.zero()
    for c in reversed(chebyshev_T(numerator).coeffs):
        acc = acc * half_gen + c
    return acc


def c_constant(ctx, a, b):
    """(1 - cos(a pi/p)) (1 - cos(b pi/q)) as an exact ring element."""
    return (1 - cos_element(ctx, 'p', a)) * (1 - cos_element(ctx, 'q', b))


def _check_root(minpoly, x, label):
    if abs(minpoly(x)) >= 1e-9:
        raise NotAConjugate(f'{label} is not a root of its minimal polynomial')


def numeric_embed(a, conj_a=1, conj_b=1, precision=128):
    """Evaluate at u = 2cos(conj_a pi/p), v = 2cos(conj_b pi/q).

    Returns an :class:`mpmath.mpf` carrying ``precision`` significand bits.
    """
    ctx = a.ctx
    with mpmath.workprec(precision + 16):
        u = 2 * mpmath.cos(conj_a * mpmath.pi / ctx.p)
        v = 2 * mpmath.cos(conj_b * mpmath.pi / ctx.q)
        _check_root(ctx.m_p, u, f'2cos({conj_a}pi/{ctx.p})')
        _check_root(ctx.m_q, v, f'2cos({conj_b}pi/{ctx.q})')
        upow = [u ** i for i in range(ctx.d_p)]
        vpow = [v ** j for j in range(ctx.d_q)]
        total = mpmath.mpf(0)
        for k, c in enumerate(a.coeffs):
            if c:
                i, j = divmod(k, ctx.d_q)
                total += mpmath.mpf(c.numerator) / c.denominator * upow[i] * vpow[j]
    with mpmath.workprec(precision):
        return +total


def integral_poly_mul(ctx, a, b):
    """Product of polynomials whose coefficients are integral coordinate vectors.

    Uses one Kronecker substitution over (t, u, v) followed by reduction of
    every t-coefficient modulo (m_p, m_q).
    """
    if not a or not b:
        return []
    dp, dq = ctx.d_p, ctx.d_q
    rows, cols = 2 * dp - 1, 2 * dq - 1
    block = rows * cols

    def flatten(poly):
        flat = [0] * (len(poly) * block)
        for t, coords in enumerate(poly):
            base = t * block
            for i in range(dp):
                for j in range(dq):
                    flat[base + i * cols + j] = coords[i * dq + j]
        return flat

    prod = int_convolve(flatten(a), flatten(b))
    length = len(a) + len(b) - 1
    prod.extend([0] * (length * block - len(prod)))
    return [ctx.reduce_full(prod[t * block:(t + 1) * block], rows, cols)
            for t in range(length)]


def nfpoly_mul(a, b):
    """Product of two polynomials (ascending sequences) with NFElement coefficients."""
    if not a or not b:
        return []
    ctx = a[0].ctx
    for e in list(a) + list(b):
        if e.ctx != ctx:
            raise ContextMismatch(f'{ctx} vs {e.ctx}')

    def clear(poly):
        den = 1
        for e in poly:
            for c in e.coeffs:
                if c.denominator != 1:
                    den = den * c.denominator // math.gcd(den, c.denominator)
        return [[c.numerator * (den // c.denominator) for c in e.coeffs] for e in poly], den

    ia, da = clear(a)
    ib, db = clear(b)
    den = da * db
    return [ctx.from_integral(coords, den) for coords in integral_poly_mul(ctx, ia, ib)]
