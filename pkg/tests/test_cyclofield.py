import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from torsionpoly.cyclofield import (FieldContext, NFElement, c_constant, cos_element,
                                    cyclotomic, min_poly_2cos, nf_add, nf_inverse,
                                    nf_mul, nf_neg, nfpoly_mul, numeric_embed)
from torsionpoly.errors import (ContextMismatch, InvalidOrder, NotAConjugate,
                                NotInvertible, OutOfRange)
from torsionpoly.polyalg import IntPoly

CONTEXTS = [(2, 3), (4, 3), (3, 5), (5, 7)]
x = sympy.Symbol('x')


def test_min_poly_examples():
    assert min_poly_2cos(3) == IntPoly([-1, 1])
    assert min_poly_2cos(4) == IntPoly([-2, 0, 1])
    assert min_poly_2cos(5) == IntPoly([-1, -1, 1])
    assert min_poly_2cos(2) == IntPoly([0, 1])
    with pytest.raises(InvalidOrder):
        min_poly_2cos(1)


@pytest.mark.parametrize('n', range(1, 41))
def test_cyclotomic_against_sympy(n):
    ref = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
    assert list(cyclotomic(n).coeffs) == [int(c) for c in ref]


@pytest.mark.parametrize('m', range(2, 31))
def test_min_poly_degree_and_root(m):
    mp = min_poly_2cos(m)
    assert mp.degree == sympy.totient(2 * m) // 2
    assert mp.leading == 1
    assert abs(float(mp(2 * math.cos(math.pi / m)))) < 1e-9


@pytest.mark.parametrize('m', [5, 7, 9, 12, 15])
def test_min_poly_against_sympy(m):
    ref = sympy.minimal_polynomial(2 * sympy.cos(sympy.pi / m), x)
    ref = sympy.Poly(ref, x).all_coeffs()[::-1]
    assert list(min_poly_2cos(m).coeffs) == [int(c) for c in ref]


def elements(ctx):
    frac = st.fractions(min_value=-5, max_value=5, max_denominator=7)
    return st.lists(frac, min_size=ctx.dim, max_size=ctx.dim).map(
        lambda cs: NFElement(ctx, cs))


@pytest.mark.parametrize('pq', CONTEXTS)
def test_ring_axioms(pq):
    ctx = FieldContext(*pq)

    @settings(max_examples=200, deadline=None)
    @given(elements(ctx), elements(ctx), elements(ctx))
    def check(a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a + ctx.zero() == a
        assert a * ctx.one() == a
        assert nf_add(a, nf_neg(a)).is_zero()
        emb = float(numeric_embed(a, 1, 1) * numeric_embed(b, 1, 1))
        prod = float(numeric_embed(nf_mul(a, b), 1, 1))
        assert abs(prod - emb) <= 1e-9 * max(1.0, abs(emb))

    check()


@pytest.mark.parametrize('pq', CONTEXTS)
def test_inverse_random(pq):
    ctx = FieldContext(*pq)

    @settings(max_examples=50, deadline=None)
    @given(elements(ctx))
    def check(a):
        assume(not a.is_zero())
        try:
            inv = nf_inverse(a)
        except NotInvertible:
            assume(False)
        assert inv * a == 1

    check()


@pytest.mark.parametrize('pq', CONTEXTS + [(7, 6), (11, 12)])
def test_c_constants_always_invert(pq):
    ctx = FieldContext(*pq)
    for a in range(1, pq[0]):
        for b in range(1, pq[1]):
            c = c_constant(ctx, a, b)
            assert nf_inverse(c) * c == 1


def test_generator_square_in_p4():
    ctx = FieldContext(4, 3)
    u = ctx.gen_u()
    assert u * u == 2


def test_inverse_examples():
    ctx = FieldContext(4, 3)
    u = ctx.gen_u()
    assert nf_inverse(ctx.one()) == 1
    assert nf_inverse(ctx.element(2)) == Fraction(1, 2)
    assert nf_inverse(2 - u) == (2 + u) / 2
    with pytest.raises(NotInvertible):
        nf_inverse(ctx.zero())


def test_context_mismatch():
    a = FieldContext(4, 3).one()
    b = FieldContext(3, 5).one()
    with pytest.raises(ContextMismatch):
        a + b
    with pytest.raises(ContextMismatch):
        a * b


def test_cos_element_examples():
    ctx = FieldContext(4, 3)
    u = ctx.gen_u()
    assert cos_element(ctx, 'p', 1) == u / 2
    c3 = cos_element(ctx, 'p', 3)
    assert c3 == -u / 2
    assert abs(float(numeric_embed(c3)) - math.cos(3 * math.pi / 4)) < 1e-12
    assert cos_element(FieldContext(3, 5), 'p', 1) == Fraction(1, 2)
    with pytest.raises(OutOfRange):
        cos_element(ctx, 'p', 4)
    with pytest.raises(OutOfRange):
        cos_element(ctx, 'q', 0)


@pytest.mark.parametrize('p,q', [(4, 3), (3, 5), (7, 6), (9, 10)])
def test_cos_element_numeric(p, q):
    ctx = FieldContext(p, q)
    for a in range(1, p):
        assert abs(float(numeric_embed(cos_element(ctx, 'p', a)))
                   - math.cos(a * math.pi / p)) < 1e-12
    for b in range(1, q):
        assert abs(float(numeric_embed(cos_element(ctx, 'q', b)))
                   - math.cos(b * math.pi / q)) < 1e-12


def test_c_constant_examples():
    ctx = FieldContext(4, 3)
    u = ctx.gen_u()
    c11 = c_constant(ctx, 1, 1)
    assert c11 == (1 - u / 2) / 2
    direct = (1 - math.cos(math.pi / 4)) * (1 - math.cos(math.pi / 3))
    assert abs(float(numeric_embed(c11)) - direct) < 1e-12
    assert abs(direct - 0.146447) < 1e-6
    direct31 = (1 - math.cos(3 * math.pi / 4)) * (1 - math.cos(math.pi / 3))
    assert abs(float(numeric_embed(c_constant(ctx, 3, 1))) - direct31) < 1e-12
    assert abs(direct31 - 0.853553) < 1e-6
    assert c_constant(FieldContext(2, 3), 1, 1) == Fraction(1, 2)


def test_numeric_embed_examples():
    ctx = FieldContext(4, 3)
    assert numeric_embed(ctx.one(), 3, 1) == 1
    assert abs(float(numeric_embed(ctx.gen_u(), 1, 1)) - math.sqrt(2)) < 1e-12
    assert abs(float(numeric_embed(ctx.gen_u(), 3, 1)) + math.sqrt(2)) < 1e-12
    with pytest.raises(NotAConjugate):
        numeric_embed(ctx.one(), 2, 1)


def test_numeric_embed_precision():
    ctx = FieldContext(4, 3)
    val = numeric_embed(ctx.gen_u(), precision=256)
    assert abs(val ** 2 - 2) < 2 ** -250


@pytest.mark.parametrize('p,q', [(2, 3), (4, 3), (3, 5), (5, 7), (7, 6), (9, 4)])
def test_galois_consistency(p, q):
    ctx = FieldContext(p, q)
    base = c_constant(ctx, 1, 1)
    for a in range(1, p):
        for b in range(1, q):
            if math.gcd(a, 2 * p) != 1 or math.gcd(b, 2 * q) != 1:
                continue
            lhs = numeric_embed(base, a, b)
            rhs = numeric_embed(c_constant(ctx, a, b), 1, 1)
            assert abs(float(lhs - rhs)) < 1e-9


def test_nfpoly_mul_matches_naive():
    ctx = FieldContext(5, 7)
    u, v = ctx.gen_u(), ctx.gen_v()
    a = [u / 3 + 1, v * v - u, ctx.element(Fraction(2, 5)), u * v]
    b = [v - 2, u / 7, ctx.one()] * 10
    naive = [ctx.zero()] * (len(a) + len(b) - 1)
    for i, x_ in enumerate(a):
        for j, y in enumerate(b):
            naive[i + j] = naive[i + j] + x_ * y
    assert nfpoly_mul(a, b) == naive
