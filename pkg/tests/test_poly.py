from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from pocket_spectra.errors import InvalidInput
from pocket_spectra.poly import Poly, RatFunc, interpolate, poly_gcd, squarefree_decomposition

X = Poly.x()
coeff_lists = st.lists(st.integers(-20, 20), min_size=1, max_size=6)


def test_examples():
    assert (X * X - 2).shift(1) == X * X - 2 * X - 1
    assert (X**3 - 2 * X)(2) == 4
    pts = [(0, 0), (1, -1), (2, 0), (-1, 3)]
    p = interpolate(pts)
    assert all(p(a) == b for a, b in pts)
    assert p == X * X - 2 * X
    with pytest.raises(InvalidInput):
        interpolate([(1, 1), (1, 2)])


def test_text_and_json():
    p = X**3 - 4 * X**2 + 3 * X
    assert str(p) == "x^3 - 4x^2 + 3x"
    assert Poly.from_json(p.to_json()) == p
    half = Poly([Fraction(1, 2), 1])
    assert Poly.from_json(half.to_json()) == half
    assert Poly([]).degree == -1 and Poly([0, 0]).is_zero


@settings(max_examples=60, deadline=None)
@given(coeff_lists, coeff_lists)
def test_ring_laws_against_sympy(a, b):
    x = sympy.Symbol("x")
    pa, pb = Poly(a), Poly(b)
    sa = sum(c * x**i for i, c in enumerate(a))
    sb = sum(c * x**i for i, c in enumerate(b))
    assert Poly([int(c) for c in reversed(sympy.Poly(sa * sb + sa, x).all_coeffs())]) == pa * pb + pa
    if not pb.is_zero:
        q, r = pa.divmod(pb)
        assert q * pb + r == pa and r.degree < pb.degree


@settings(max_examples=40, deadline=None)
@given(coeff_lists, st.integers(-5, 5))
def test_shift_is_substitution(a, c):
    p = Poly(a)
    for t in range(-3, 4):
        assert p.shift(c)(t) == p(t - c)


def test_gcd_and_squarefree():
    f = (X - 1) ** 3 * (X + 2) ** 2 * (X * X - 2)
    assert poly_gcd(f, (X - 1) * (X * X - 2)) == (X - 1) * (X * X - 2)
    parts = dict((m, p) for p, m in squarefree_decomposition(f))
    assert parts[3] == X - 1 and parts[2] == X + 2 and parts[1] == X * X - 2
    with pytest.raises(InvalidInput):
        (X * X).exact_div(X + 1)


def test_ratfunc_canonical_form():
    r = RatFunc(X * X - 1, 2 * X - 2)
    assert r.den == X - 1 or r.den.lead > 0
    assert r == RatFunc(X + 1, Poly.const(2))
    assert RatFunc(X, -X - 1) == RatFunc(-X, X + 1)
    s = RatFunc(1, X) + RatFunc(1, X - 1)
    assert s == RatFunc(2 * X - 1, X * X - X)
    assert s.shift(1)(3) == Fraction(1, 2) + 1
    assert RatFunc.from_json(s.to_json()) == s
    assert (RatFunc(X) / RatFunc(X * X)) == RatFunc(1, X)
