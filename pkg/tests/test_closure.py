import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orelocal import (
    DecompositionMismatchError,
    DegRevLex,
    Ideal,
    MultiplicativeSetSpec,
    PolyRing,
    PrimaryDecomposition,
    closure_decomp,
    complementary_part,
    intersect_all,
    saturate,
    split_by_element,
    symbolic_power,
)

R = PolyRing("x,y", DegRevLex())
x, y = R.gens


def D(target, *comps):
    return PrimaryDecomposition(Ideal(R, target), [(Ideal(R, q), Ideal(R, p)) for q, p in comps])


def test_closure_examples():
    S = MultiplicativeSetSpec.monoidal(R, [y])
    assert closure_decomp(D([x**2], ([x**2], [x])), S).closure == Ideal(R, [x**2])
    res = closure_decomp(D([x * y], ([x], [x]), ([y], [y])), S)
    assert res.closure == Ideal(R, [x])
    assert not res.closure.is_whole()
    assert res.witness == y and res.met == [1]
    S = MultiplicativeSetSpec.monoidal(R, [x])
    assert closure_decomp(D([x], ([x], [x])), S).closure.is_whole()


def test_complementary_part_examples():
    S = MultiplicativeSetSpec.monoidal(R, [y])
    assert complementary_part(D([x * y], ([x], [x]), ([y], [y])), S) == Ideal(R, [y])
    assert complementary_part(D([x**2], ([x**2], [x])), S).is_whole()
    S = MultiplicativeSetSpec.monoidal(R, [x])
    assert complementary_part(D([x], ([x], [x])), S) == Ideal(R, [x])


def test_wrong_decomposition_rejected():
    with pytest.raises(DecompositionMismatchError):
        D([x * y], ([x], [x]))


def test_symbolic_power_small():
    m = Ideal(R, [x, y])
    assert symbolic_power(Ideal(R, [x]), 3, [Ideal(R, [x])], D([x**3], ([x**3], [x]))) == Ideal(R, [x**3])
    dec = PrimaryDecomposition(m**2, [(m**2, m)])
    assert symbolic_power(m, 2, [m], dec) == m**2


def test_symbolic_power_rejects_wrong_target():
    with pytest.raises(DecompositionMismatchError):
        symbolic_power(Ideal(R, [x]), 2, [Ideal(R, [x])], D([x**3], ([x**3], [x])))


def test_split_examples():
    a, b, n = split_by_element(Ideal(R, [x**2 * y]), x)
    assert (a, b, n) == (Ideal(R, [x**2 * y, x**2]), Ideal(R, [y]), 2)
    assert a.intersect(b) == Ideal(R, [x**2 * y])
    a, b, n = split_by_element(Ideal(R, [y]), x)
    assert a.is_whole() and b == Ideal(R, [y]) and n == 0
    a, b, n = split_by_element(Ideal(R, [x]), x)
    assert a == Ideal(R, [x]) and b.is_whole() and n == 1


# -- properties on decomposable fixtures ---------------------------------------------
#
# Components are primary ideals with known radicals: powers of <x>, <y>, <x - 1>
# and <x, y>-primary monomial ideals <x^a, y^b>.

def _component(kind, a, b):
    if kind == "x":
        return Ideal(R, [x**a]), Ideal(R, [x])
    if kind == "y":
        return Ideal(R, [y**b]), Ideal(R, [y])
    if kind == "x-1":
        return Ideal(R, [(x - 1)**a]), Ideal(R, [x - 1])
    return Ideal(R, [x**a, y**b]), Ideal(R, [x, y])


components = st.tuples(st.sampled_from(["x", "y", "x-1", "m"]), st.integers(1, 3), st.integers(1, 3)).map(
    lambda t: _component(*t))
monoid_gens = st.sampled_from([[x], [y], [x - 1], [x * y], [x, y], [y + 1]])


def _decomp(comps):
    target = intersect_all(R, [Q for Q, _ in comps])
    return PrimaryDecomposition(target, comps)


def _sat(I, gens):
    f = R.one()
    for g in gens:
        f = f * g
    return saturate(I, f)[0]


@settings(max_examples=200)
@given(st.lists(components, min_size=1, max_size=3), monoid_gens)
def test_closure_laws(comps, gens):
    Dc = _decomp(comps)
    I = Dc.target
    S = MultiplicativeSetSpec.monoidal(R, gens)
    res = closure_decomp(Dc, S)
    closure = res.closure
    # agrees with saturation by the product of the generators
    assert closure == _sat(I, gens)
    assert I.issubset(closure)
    for g in closure.generators:
        assert I.contains(res.witness * g)
    assert S.contains(res.witness)
    # idempotence: the surviving components decompose the closure
    kept = [(Q, P) for k, (Q, P) in enumerate(Dc.components) if k not in res.met]
    if kept:
        assert closure_decomp(_decomp(kept), S).closure == closure
    assert closure.intersect(complementary_part(Dc, S)) == I


@settings(max_examples=200)
@given(st.lists(components, min_size=1, max_size=2), st.lists(components, min_size=1, max_size=2), monoid_gens)
def test_finite_intersection_law(c1, c2, gens):
    S = MultiplicativeSetSpec.monoidal(R, gens)
    d1, d2 = _decomp(c1), _decomp(c2)
    both = PrimaryDecomposition(d1.target.intersect(d2.target), c1 + c2)
    lhs = closure_decomp(both, S).closure
    rhs = closure_decomp(d1, S).closure.intersect(closure_decomp(d2, S).closure)
    assert lhs == rhs


@settings(max_examples=200)
@given(st.lists(components, min_size=1, max_size=3), st.sampled_from([x, y, x - 1, x * y, x + y]))
def test_split_identity(comps, q):
    I = _decomp(comps).target
    a, b, n = split_by_element(I, q)
    assert a.intersect(b) == I
    assert b == saturate(I, q)[0]


@settings(max_examples=200)
@given(st.lists(components, min_size=1, max_size=3), st.sampled_from(["x", "y", "x-1"]))
def test_geometric_closure_keeps_components_inside_p(comps, pname):
    p = {"x": Ideal(R, [x]), "y": Ideal(R, [y]), "x-1": Ideal(R, [x - 1])}[pname]
    S = MultiplicativeSetSpec.geometric(p)
    Dc = _decomp(comps)
    res = closure_decomp(Dc, S)
    expected = intersect_all(R, [Q for Q, P in comps if P.issubset(p)])
    assert res.closure == expected
    for g in res.closure.generators:
        assert Dc.target.contains(res.witness * g)
