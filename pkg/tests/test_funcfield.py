from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from mwsextic.funcfield import (ParseError, RatFunc, RatPoly, ZeroDenominator, format_poly,
                                infinity_chart, parse_poly, parse_ratfunc, poly_gcd, radical_ratio,
                                reduce_pair, verify_3sq_decomposition)

t = sympy.Symbol("t")
coeffs = st.lists(st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20)), max_size=6)
polys = coeffs.map(RatPoly)
nonzero_polys = st.lists(st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20)),
                         max_size=5).map(lambda cs: RatPoly(cs + [Fraction(1)]))


def to_sympy(p: RatPoly):
    return sum(sympy.Rational(c.numerator, c.denominator) * t ** k for k, c in enumerate(p.c))


def from_sympy(e) -> RatPoly:
    cs = sympy.Poly(sympy.expand(e), t).all_coeffs()[::-1] if e != 0 else []
    return RatPoly([Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in cs])


@given(polys, polys)
def test_ring_ops_match_sympy(a, b):
    assert a + b == from_sympy(to_sympy(a) + to_sympy(b))
    assert a - b == from_sympy(to_sympy(a) - to_sympy(b))
    assert a * b == from_sympy(to_sympy(a) * to_sympy(b))


@given(polys, nonzero_polys)
def test_divmod(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.deg < b.deg


@given(nonzero_polys, nonzero_polys)
def test_gcd_matches_sympy(a, b):
    g = poly_gcd(a, b)
    want = sympy.gcd(to_sympy(a), to_sympy(b))
    assert g.monic() == from_sympy(sympy.Poly(want, t).monic().as_expr())


@given(polys, nonzero_polys, nonzero_polys)
def test_ratfunc_field(a, b, c):
    x, y = RatFunc(a, b), RatFunc(b, c)
    assert (x + y) - y == x
    assert (x * y) / y == x


def test_reduce_pair_examples():
    n, d = reduce_pair(parse_poly("t^2-1"), parse_poly("t-1"))
    assert (n, d) == (parse_poly("t+1"), RatPoly.const(1))
    n, d = reduce_pair(parse_poly("2*t"), RatPoly.const(2))
    assert n == parse_poly("t")
    n, d = reduce_pair(RatPoly(), parse_poly("t^3"))
    assert not n and d == RatPoly.const(1)
    with pytest.raises(ZeroDenominator):
        reduce_pair(RatPoly.const(1), RatPoly())


def test_infinity_chart():
    val, k = infinity_chart(RatFunc(parse_poly("-3*t^2")))
    assert val == RatFunc(RatPoly.const(-3)) and k == 0
    val, k = infinity_chart(RatFunc(RatPoly.const(5)))
    assert val == RatFunc(parse_poly("5*t^2")) and k == 0
    val, k = infinity_chart(RatFunc(parse_poly("7*t^4")))
    assert val == RatFunc(RatPoly.const(7), parse_poly("t^2")) and k == 2


def test_3sq_decomposition():
    assert verify_3sq_decomposition(parse_poly("3*t^6+1"), 1, parse_poly("t^3"), RatPoly.const(1))
    assert verify_3sq_decomposition(parse_poly("27*t^6+16"), 1, parse_poly("3*t^3"), RatPoly.const(4))
    assert not verify_3sq_decomposition(parse_poly("t^6+1"), 1, parse_poly("t^3"), RatPoly.const(1))


def _mod_check(P, Q, f, delta):
    return (P - Q * RatPoly(delta)) % f == RatPoly()


def test_radical_ratio_examples():
    f = parse_poly("t^2+3")
    P, Q = radical_ratio(f, [0, 1])
    assert P == Q * parse_poly("t")
    f = parse_poly("t^4-t^2+1")
    P, Q = radical_ratio(f, [-1, 0, 2, 0])
    assert _mod_check(P, Q, f, [-1, 0, 2, 0])
    assert (P * P + Q * Q * 3) % f == RatPoly()
    # (2a^2 - 1)/a, with 1/a = a - a^3 modulo f
    delta = (parse_poly("2*t^2-1") * parse_poly("t-t^3")) % f
    P, Q = radical_ratio(f, list(delta.c))
    assert _mod_check(P, Q, f, list(delta.c))


@given(polys)
def test_format_parse_roundtrip(p):
    assert parse_poly(format_poly(p)) == p


def test_parse_examples():
    assert parse_poly("27*t^6+16") == RatPoly([16, 0, 0, 0, 0, 0, 27])
    assert parse_poly("-t^2 + 1/2*t") == RatPoly([0, Fraction(1, 2), -1])
    assert parse_ratfunc("(t^2+1)/(t-1)") == RatFunc(parse_poly("t^2+1"), parse_poly("t-1"))
    with pytest.raises(ParseError):
        parse_poly("t^x")
    with pytest.raises(ParseError):
        parse_poly("")
