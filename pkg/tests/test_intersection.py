from itertools import product

import pytest
from gmpy2 import mpq
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from orelocal import (
    DegRevLex,
    Ideal,
    LeftSubmodule,
    MultiplicativeSetSpec,
    PolyRing,
    QuotientRing,
    TrivialLocalizationError,
    biggest_monomial_ideal,
    eliminate,
    intersect_geometric,
    intersect_monoid,
    intersect_rational,
    meets_set,
    primary_meets_set,
    weyl_algebra,
    zero_in_monoid,
)

R = PolyRing("x,y", DegRevLex())
x, y = R.gens


def Q(*mod):
    return QuotientRing(R, list(mod))


def test_zero_in_monoid_examples():
    assert zero_in_monoid(Q(x * y), [x, y])
    assert not zero_in_monoid(Q(x - 1), [x])
    assert zero_in_monoid(Q(x**3), [x])


def test_biggest_monomial_ideal_examples():
    assert biggest_monomial_ideal(Ideal(R, [x + y])).is_zero()
    assert biggest_monomial_ideal(Ideal(R, [x, y])) == Ideal(R, [x, y])
    assert biggest_monomial_ideal(Ideal(R, [x + y, y**2])) == Ideal(R, [x**2, x * y, y**2])


def test_intersect_monoid_commutative():
    res = intersect_monoid(Ideal(R, [x**2 - y]), [x])
    assert res.empty
    for k in range(7):
        assert not Ideal(R, [x**2 - y]).contains(x**k)
    res = intersect_monoid(Ideal(R, [x**2]), [x])
    assert not res.empty
    assert res.monomials == [(2,)] and res.witnesses == [x**2]


def test_intersect_monoid_weyl():
    A = weyl_algebra()
    X, D = A.gens
    res = intersect_monoid(LeftSubmodule(A, [X * D]), [X])
    assert res.empty
    res = intersect_monoid(LeftSubmodule(A, [X**2 * D, X**3]), [X])
    assert not res.empty
    assert LeftSubmodule(A, [X**2 * D, X**3]).contains(res.witnesses[0])


def test_intersect_geometric_examples():
    p = Ideal(R, [x, y])
    assert intersect_geometric(Ideal(R, [x]), p) == 0
    assert intersect_geometric(Ideal(R, [x + 1]), p) == x + 1
    assert intersect_geometric(Ideal(R, [1]), p) == 1


def test_intersect_rational_examples():
    assert intersect_rational(Ideal(R, [y]), ["x"]) == 0
    w = intersect_rational(Ideal(R, [x**2 + x * y, y]), ["x"])
    assert w == x**2 or w == -(x**2)
    assert intersect_rational(Ideal(R, [1]), ["x"]) == 1


def test_primary_meets_set_examples():
    S = MultiplicativeSetSpec.monoidal(R, [y])
    assert not primary_meets_set(Ideal(R, [x**2]), Ideal(R, [x]), S)
    S = MultiplicativeSetSpec.monoidal(R, [x * y])
    assert primary_meets_set(Ideal(R, [x**2]), Ideal(R, [x]), S)
    assert primary_meets_set(Ideal(R, [x**2]), None, S)
    m = Ideal(R, [x, y])
    S = MultiplicativeSetSpec.geometric(Ideal(R, [x]))
    assert primary_meets_set(m**2, m, S)
    assert S.unchecked == ("primality",)


def test_monoidal_spec_validation():
    with pytest.raises(ValueError):
        MultiplicativeSetSpec.monoidal(Q(x), [x])
    with pytest.raises(ValueError):
        MultiplicativeSetSpec.geometric(Ideal(R, [1]))
    S = MultiplicativeSetSpec.monoidal(R, [x, y])
    assert S.certificate(3 * x**2 * y) == (2, 1)
    assert not S.contains(x + y)


def test_meets_set_dispatch():
    I = Ideal(R, [x * y])
    assert meets_set(I, MultiplicativeSetSpec.monoidal(R, [y])) is None
    assert meets_set(I, MultiplicativeSetSpec.monoidal(R, [x * y])) is not None
    assert meets_set(I, MultiplicativeSetSpec.rational(R, ["x"])) is None


# -- brute-force properties ----------------------------------------------------------

P3 = PolyRing("x,y,z", DegRevLex())
mono3 = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)).filter(lambda e: 0 < sum(e) <= 2)


def _divides(a, b):
    return all(i <= j for i, j in zip(a, b))


def _monomial_ideal_member(f, gens):
    """Membership in a monomial ideal: every term is divisible by a generator."""
    return all(any(_divides(g, e) for g in gens) for e in f.terms)


ALL_MONO3 = [e for e in product(range(3), repeat=3) if 0 < sum(e) <= 2]


@settings(max_examples=200)
@given(st.data())
def test_zero_in_monoid_brute_force(data):
    jgens = data.draw(st.lists(mono3, min_size=1, max_size=3))
    # generators must be non-zero modulo J
    outside = [e for e in ALL_MONO3 if not any(_divides(g, e) for g in jgens)]
    assume(outside)
    fexps = data.draw(st.lists(st.sampled_from(outside), min_size=1, max_size=2))
    scalars = data.draw(st.lists(st.integers(1, 3), min_size=len(fexps), max_size=len(fexps)))
    F = [P3.monomial(e, c) for e, c in zip(fexps, scalars)]
    J = [P3.monomial(e) for e in jgens]
    ring = QuotientRing(P3, J)
    brute = False
    for alpha in product(range(6), repeat=len(F)):
        if sum(alpha) <= 5:
            p = P3.one()
            for f, a in zip(F, alpha):
                p = p * f**a
            if _monomial_ideal_member(p, jgens):
                brute = True
                break
    assert zero_in_monoid(ring, F) == brute


P2 = PolyRing("x,y", DegRevLex())
exp2 = st.tuples(st.integers(0, 2), st.integers(0, 2)).filter(lambda e: sum(e) <= 2)
poly2 = st.dictionaries(exp2, st.integers(-2, 2).filter(bool), min_size=1, max_size=3).map(
    lambda d: P2.element({e: mpq(c) for e, c in d.items()}))


@settings(max_examples=200)
@given(st.lists(poly2, min_size=1, max_size=2))
def test_biggest_monomial_ideal_brute_force(gens):
    L = Ideal(P2, gens)
    M = biggest_monomial_ideal(L)
    mgens = [g for g in M.generators]
    for g in mgens:
        assert len(g.terms) == 1
        assert L.contains(g)
    mexps = [next(iter(g.terms)) for g in mgens]
    for e in product(range(4), repeat=2):
        if sum(e) <= 3:
            brute = L.contains(P2.monomial(e))
            assert brute == any(_divides(m, e) for m in mexps)


@settings(max_examples=200)
@given(st.lists(poly2, min_size=1, max_size=2), st.sampled_from([[P2.gen("x")], [P2.gen("y")],
       [P2.gen("x"), P2.gen("y")], [P2.parse("x + 1")]]))
def test_intersect_monoid_witnesses(gens, F):
    I = Ideal(P2, gens)
    res = intersect_monoid(I, F)
    if res.empty:
        for alpha in product(range(5), repeat=len(F)):
            p = P2.one()
            for f, a in zip(F, alpha):
                p = p * f**a
            assert not I.contains(p)
    else:
        for a, w in zip(res.monomials, res.witnesses):
            p = P2.one()
            for f, k in zip(F, a):
                p = p * f**k
            assert w == p and I.contains(w)


@settings(max_examples=200)
@given(st.lists(poly2, min_size=1, max_size=2), st.sampled_from(["x", "y"]))
def test_rational_and_geometric_witnesses(gens, v):
    I = Ideal(P2, gens)
    w = intersect_rational(I, [v])
    if w:
        assert I.contains(w) and w.support_variables() <= {v}
    else:
        other = [u for u in P2.variables if u != v]
        assert eliminate(I, other).is_zero()
    p = Ideal(P2, [P2.gen(v)])
    g = intersect_geometric(I, p)
    assert bool(g) == any(p.reduce(h) for h in I.generators)
    if g:
        assert g in I.generators


def test_trivial_localization_rejected():
    from orelocal import FractionSpace
    with pytest.raises(TrivialLocalizationError):
        FractionSpace(MultiplicativeSetSpec.monoidal(Q(x * y), [x, y]))
