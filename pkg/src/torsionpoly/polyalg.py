"""Dense univariate polynomials with exact integer or rational coefficients.

A polynomial ``c_0 + c_1 x + ... + c_d x^d`` is stored as the tuple
``(c_0, c_1, ..., c_d)`` with ``c_d != 0``.  The zero polynomial is the
empty tuple and its degree is ``-math.inf`` (see :data:`DEGREE_OF_ZERO`),
so that ``deg(f*g) == deg(f) + deg(g)`` holds without special cases.

Large products go through Kronecker substitution (:func:`int_convolve`),
which turns a polynomial product into one big-integer product.  When
gmpy2 is importable the big product is delegated to GMP.
"""

import functools
import math
from fractions import Fraction

from .errors import NonIntegerQuotient, NonZeroRemainder, OddCoefficientPresent

try:
    import gmpy2
except ImportError:  # pragma: no cover - exercised only without gmpy2
    gmpy2 = None

DEGREE_OF_ZERO = -math.inf

# below this many coefficient products the schoolbook loop wins
_KRONECKER_THRESHOLD = 256


def _strip(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class _DensePoly:
    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, _DensePoly):
            coeffs = coeffs.coeffs
        elif isinstance(coeffs, (int, Fraction)):
            coeffs = (coeffs,)
        self.coeffs = _strip([self._coerce(c) for c in coeffs])

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    @classmethod
    def _raw(cls, coeffs):
        # trusted constructor: coefficients already of the right type
        obj = object.__new__(cls)
        obj.coeffs = _strip(coeffs)
        return obj

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls([0] * degree + [coeff])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else DEGREE_OF_ZERO

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, _DensePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f'{type(self).__name__}({list(self.coeffs)!r})'

    def __str__(self):
        return self.format('x')

    def format(self, var='x'):
        """Render in descending powers, e.g. ``4x^2 - 6x + 1``."""
        if not self.coeffs:
            return '0'
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = '-' if c < 0 else '+'
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f'{var}^{k}'
                if mag == 1:
                    body = mono
                elif isinstance(mag, Fraction) and mag.denominator != 1:
                    body = f'({mag}){mono}'
                else:
                    body = f'{mag}{mono}'
            if not parts:
                parts.append(body if sign == '+' else '-' + body)
            else:
                parts.append(f'{sign} {body}')
        return ' '.join(parts)

    def _scalar(self, c):
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        return c

    def _promote(self, other):
        # result type of a binary operation
        if isinstance(other, RatPoly) or isinstance(self, RatPoly):
            return RatPoly
        if isinstance(other, Fraction) and other.denominator != 1:
            return RatPoly
        return type(self)

    def __neg__(self):
        return type(self)._raw([-c for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._scalar(other)
            other = (RatPoly if isinstance(other, Fraction) else IntPoly)._raw((other,))
        if not isinstance(other, _DensePoly):
            return NotImplemented
        cls = self._promote(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return cls._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._scalar(other)
            cls = self._promote(other)
            return cls._raw([c * other for c in self.coeffs])
        if not isinstance(other, _DensePoly):
            return NotImplemented
        cls = self._promote(other)
        if cls is IntPoly:
            return cls._raw(int_convolve(self.coeffs, other.coeffs))
        return cls._raw(_schoolbook(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError('negative exponent')
        result = type(self)._raw((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k):
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return type(self)._raw([0] * k + list(self.coeffs))

    def derivative(self):
        return type(self)._raw([k * c for k, c in enumerate(self.coeffs)][1:])


class IntPoly(_DensePoly):
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, int):
            return c
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        if gmpy2 is not None and isinstance(c, type(gmpy2.mpz(0))):
            return int(c)
        raise TypeError(f'integer coefficient expected, got {c!r}')


class RatPoly(_DensePoly):
    """Polynomial with exact rational coefficients (always in lowest terms)."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        return Fraction(c)

    @classmethod
    def _raw(cls, coeffs):
        return super()._raw([Fraction(c) for c in coeffs])

    def to_intpoly(self):
        bad = [c for c in self.coeffs if c.denominator != 1]
        if bad:
            raise NonIntegerQuotient(f'non-integer coefficient {bad[0]}')
        return IntPoly._raw([c.numerator for c in self.coeffs])


def _schoolbook(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _pack(values, width):
    pos = b''.join((v if v > 0 else 0).to_bytes(width, 'little') for v in values)
    neg = b''.join((-v if v < 0 else 0).to_bytes(width, 'little') for v in values)
    return int.from_bytes(pos, 'little') - int.from_bytes(neg, 'little')


def _unpack(value, width, count):
    raw = value.to_bytes(width * count, 'little', signed=True)
    full = 1 << (8 * width)
    half = full >> 1
    out = []
    carry = 0
    for i in range(count):
        c = int.from_bytes(raw[i * width:(i + 1) * width], 'little') + carry
        if c >= half:
            c -= full
            carry = 1
        else:
            carry = 0
        out.append(c)
    return out


def _bigmul(x, y):
    if gmpy2 is not None:
        return int(gmpy2.mpz(x) * gmpy2.mpz(y))
    return x * y


def int_convolve(a, b):
    """Exact product of integer coefficient sequences (ascending order).

    Trailing zeros are kept; the result has length ``len(a) + len(b) - 1``.
    """
    if not a or not b:
        return []
    if len(a) * len(b) <= _KRONECKER_THRESHOLD:
        return _schoolbook(a, b)
    bits_a = max(abs(x) for x in a).bit_length()
    bits_b = max(abs(y) for y in b).bit_length()
    if bits_a == 0 or bits_b == 0:
        return [0] * (len(a) + len(b) - 1)
    bits = bits_a + bits_b + min(len(a), len(b)).bit_length() + 2
    width = (bits + 7) // 8
    prod = _bigmul(_pack(a, width), _pack(b, width))
    return _unpack(prod, width, len(a) + len(b) - 1)


def exact_div(num, den):
    """Return ``q`` with ``q * den == num``, insisting on an integer quotient.

    Raises NonZeroRemainder if ``den`` does not divide ``num`` over the
    rationals and NonIntegerQuotient if it does but the quotient is not
    integral.
    """
    if den.is_zero():
        raise ZeroDivisionError('division by the zero polynomial')
    rem = [Fraction(c) for c in num.coeffs]
    d = den.coeffs
    lead = Fraction(d[-1])
    dd = len(d) - 1
    quot = [Fraction(0)] * max(len(rem) - dd, 0)
    for k in range(len(rem) - 1 - dd, -1, -1):
        c = rem[k + dd] / lead
        quot[k] = c
        if c:
            for i, di in enumerate(d):
                rem[k + i] -= c * di
    if any(rem):
        raise NonZeroRemainder(
            f'{den} does not divide {num}; remainder {RatPoly(rem)}')
    return RatPoly._raw(quot).to_intpoly()


def even_part(p):
    """Return ``P`` with ``P(x**2) == p(x)``; ``p`` must be an even polynomial."""
    odd = [k for k in range(1, len(p.coeffs), 2) if p.coeffs[k]]
    if odd:
        raise OddCoefficientPresent(f'coefficient of x^{odd[0]} is nonzero')
    return type(p)._raw(p.coeffs[::2])


X = IntPoly((0, 1))


@functools.lru_cache(maxsize=None)
def chebyshev_T(l):
    """Chebyshev polynomial of the first kind, ``T_l(cos t) = cos(l t)``."""
    if l < 0:
        raise ValueError('l must be nonnegative')
    prev, cur = IntPoly((1,)), X
    if l == 0:
        return prev
    for _ in range(l - 1):
        prev, cur = cur, IntPoly._raw([0] + [2 * c for c in cur.coeffs]) - prev
    return cur


@functools.lru_cache(maxsize=None)
def chebyshev_U(l):
    """Chebyshev polynomial of the second kind, ``U_0 = 1, U_1 = 2x``."""
    if l < 0:
        raise ValueError('l must be nonnegative')
    prev, cur = IntPoly((1,)), IntPoly((0, 2))
    if l == 0:
        return prev
    for _ in range(l - 1):
        prev, cur = cur, IntPoly._raw([0] + [2 * c for c in cur.coeffs]) - prev
    return cur


def chebyshev_product_identity_check(m, n):
    """True iff ``2 T_m T_n == T_{m+n} + T_{m-n}`` holds coefficient-wise."""
    if not m >= n >= 0:
        raise ValueError('need m >= n >= 0')
    return 2 * chebyshev_T(m) * chebyshev_T(n) == chebyshev_T(m + n) + chebyshev_T(m - n)
