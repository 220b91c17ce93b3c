import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from orelocal import ParseError, PolyRing, QuotientRing, RingMismatchError

R = PolyRing("x,y,z")
x, y, z = R.gens
S = PolyRing("s")
s = S.gen("s")


def test_parse_counts_terms():
    assert len(R.parse("x^4 - y*z").terms) == 2
    assert not R.parse("0").terms
    assert len(S.parse("25*s^2+25*s+6").terms) == 3


def test_parse_rationals_and_parens():
    f = R.parse("(1/2*x + y)^2 - 3/4")
    assert f == mpq(1, 4) * x**2 + x * y + y**2 - mpq(3, 4)


@pytest.mark.parametrize("bad", ["x +", "x ** ", "w", "(x", "x^-1", "2 3"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        R.parse(bad)


def test_arithmetic():
    assert (x + y) * (x - y) == x**2 - y**2
    assert (x + y) * 0 == 0
    assert (5 * s + 2) * (5 * s + 3) == S.parse("25*s^2+25*s+6")


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        x + s


def test_printing_round_trip():
    f = R.parse("3*x^2*y - 1/7*z + 2")
    assert R.parse(str(f)) == f


def test_project():
    Rx = PolyRing("x")
    X = Rx.gen("x")
    assert QuotientRing(Rx, [X**2]).project(X**3 + X) == X
    assert QuotientRing(Rx, []).project(X**3 + X) == X**3 + X
    assert QuotientRing(Rx, [X - 1]).project(X**5) == 1


def test_derivative_and_exact_division():
    f = x**2 * y + 3 * z
    assert f.derivative("x") == 2 * x * y
    assert ((x + y) * (x - z)).divide_exact(x + y) == x - z


coeff = st.fractions(max_denominator=5).filter(lambda q: abs(q) <= 5)
mono = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
polys = st.dictionaries(mono, coeff, max_size=4).map(
    lambda d: R.element({e: mpq(c.numerator, c.denominator) for e, c in d.items()}))


@settings(max_examples=200)
@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == 0
    assert R.parse(str(f)) == f
