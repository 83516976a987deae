"""Sturm-chain root counting for rational polynomials."""

from fractions import Fraction

from algebroid.polyroots import (
    count_real_roots,
    derivative,
    divmod_poly,
    has_multiple_real_root,
    mul,
    poly_gcd,
)

F = Fraction


def test_divmod():
    # (x^2 - 1) = (x + 1)(x - 1)
    q, r = divmod_poly([F(-1), F(0), F(1)], [F(1), F(1)])
    assert q == [F(-1), F(1)]
    assert r == []


def test_gcd():
    # gcd(x^2 - 1, x^2 - 2x + 1) = x - 1 up to normalization
    g = poly_gcd([F(-1), F(0), F(1)], [F(1), F(-2), F(1)])
    assert g == [F(-1), F(1)]


def test_derivative():
    assert derivative([F(3), F(2), F(5)]) == [F(2), F(10)]
    assert derivative([F(7)]) == []


def test_count_real_roots():
    # x^2 - 2: two real roots
    assert count_real_roots([F(-2), F(0), F(1)]) == 2
    # x^2 + 1: none
    assert count_real_roots([F(1), F(0), F(1)]) == 0
    # x^3 - x = x(x-1)(x+1): three
    assert count_real_roots([F(0), F(-1), F(0), F(1)]) == 3
    # (x - 1)^2: one distinct root even though it is a double root
    assert count_real_roots([F(1), F(-2), F(1)]) == 1
    # degree 0 and linear
    assert count_real_roots([F(5)]) == 0
    assert count_real_roots([F(-3), F(2)]) == 1


def test_count_real_roots_wilkinson_style():
    # product (x - k) for k = 1..6 has exactly six distinct roots
    poly = [F(1)]
    for k in range(1, 7):
        poly = mul(poly, [F(-k), F(1)])
    assert count_real_roots(poly) == 6


def test_has_multiple_real_root():
    assert has_multiple_real_root([F(1), F(-2), F(1)])          # (x-1)^2
    assert not has_multiple_real_root([F(-2), F(0), F(1)])      # x^2 - 2
    # (x^2 + 1)^2 has a repeated factor but no real root
    sq = mul([F(1), F(0), F(1)], [F(1), F(0), F(1)])
    assert not has_multiple_real_root(sq)
