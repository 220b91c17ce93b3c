import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orelocal import (
    EQUAL,
    GREATER,
    LESS,
    DegRevLex,
    DimensionError,
    Lex,
    ModuleOrder,
    ParseError,
    Weighted,
    antiblock,
    parse_order,
)


def test_lex_first_coordinate_decides():
    assert Lex().compare((1, 0), (0, 5)) == GREATER


def test_degrevlex_tiebreak():
    # x*y vs x^2: same degree, the last variable is smaller in x^2
    assert DegRevLex().compare((1, 1), (2, 0)) == LESS
    assert DegRevLex().compare((0, 3), (1, 1)) == GREATER
    assert DegRevLex().compare((1, 0, 1), (0, 2, 0)) == LESS


def test_antiblock_second_block_first():
    o = antiblock(Lex(), Lex(), 1)
    assert o.compare((1, 0), (0, 1)) == LESS
    assert o.compare((3, 1), (0, 1)) == GREATER
    assert o.project((3, 1)) == (1,)


def test_module_order_position_over_term():
    m = ModuleOrder(Lex(), rank=3)
    assert m.compare((1, (2,)), (2, (0,))) == LESS
    assert m.compare((2, (1,)), (2, (2,))) == LESS
    assert m.compare((3, (0,)), (1, (9,))) == GREATER
    with pytest.raises(DimensionError):
        m.compare((4, (0,)), (1, (0,)))


def test_length_mismatch():
    with pytest.raises(DimensionError):
        Lex().compare((1,), (1, 2))


def test_weighted_uses_weights_then_tiebreak():
    w = Weighted([2, 1], DegRevLex())
    assert w.compare((1, 0), (0, 1)) == GREATER
    assert w.compare((0, 2), (1, 0)) == GREATER  # equal weight, degree decides


@pytest.mark.parametrize("text", [
    "lex", "degrevlex", "dp", "weighted([1,2],lex)", "block(lex,1,degrevlex)",
    "antiblock(degrevlex,degrevlex,1)",
])
def test_parse_round_trip(text):
    o = parse_order(text)
    assert parse_order(o.name) == o


def test_parse_rejects_unknown():
    with pytest.raises(ParseError):
        parse_order("bogus")


exps = st.lists(st.integers(0, 4), min_size=3, max_size=3).map(tuple)
orders = st.sampled_from([Lex(), DegRevLex(), Weighted([1, 2, 3], Lex()), antiblock(Lex(), DegRevLex(), 1)])


@settings(max_examples=200)
@given(orders, exps, exps, exps)
def test_admissible_and_total(o, a, b, c):
    assert o.compare((0, 0, 0), a) in (LESS, EQUAL)
    ab = o.compare(a, b)
    assert ab == -o.compare(b, a)
    assert (ab == EQUAL) == (a == b)
    shifted = o.compare(tuple(x + z for x, z in zip(a, c)), tuple(y + z for y, z in zip(b, c)))
    assert shifted == ab


@settings(max_examples=200)
@given(exps, exps)
def test_antiblock_projection(a, b):
    # strictly larger second-block projection forces a larger monomial
    o = antiblock(DegRevLex(), DegRevLex(), 1)
    second = DegRevLex()
    if second.compare(a[1:], b[1:]) == GREATER:
        assert o.compare(a, b) == GREATER
