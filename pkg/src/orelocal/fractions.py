"""Left fractions ``s^{-1} r`` over a commutative (quotient) polynomial ring,
or over a PBW algebra with central denominators."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError, TrivialLocalizationError, UnsupportedCombinationError
from .groebner import Ideal, ideal_quotient
from .intersection import MultiplicativeSetSpec, meets_set, zero_in_monoid
from .pbw import PBWAlgebra
from .poly import Element, QuotientRing

__all__ = ["OreFraction", "FractionSpace", "frac_add", "frac_mul", "frac_eq", "evaluate_expression"]


class FractionSpace:
    """The localization ``S^{-1} R`` for a multiplicative set ``S``.

    Rejects monoids containing zero, and non-central denominators in PBW
    algebras.
    """

    def __init__(self, S: MultiplicativeSetSpec, pair_cap: int | None = None):
        self.S = S
        self.ring = S.ambient
        self.base = self.ring.base if isinstance(self.ring, QuotientRing) else self.ring
        self.noncommutative = isinstance(self.base, PBWAlgebra) and not self.base.is_commutative
        self.pair_cap = pair_cap
        if S.kind == "monoidal":
            if self.noncommutative:
                for f in S.generators:
                    if not self.base.is_central(f):
                        raise UnsupportedCombinationError(f"denominator generator {f} is not central")
            elif zero_in_monoid(self.ring, S.generators, pair_cap):
                raise TrivialLocalizationError("the monoid contains zero; the localization is trivial")
        elif S.kind == "rational" and self.noncommutative:
            if not self.base.central_block_ok(S.sub_vars):
                raise UnsupportedCombinationError("rational denominators must be central")
        elif S.kind == "geometric" and self.noncommutative:
            raise UnsupportedCombinationError("geometric sets are only supported in commutative rings")

    def __call__(self, den, num) -> "OreFraction":
        return OreFraction(self, self.base.coerce(den), self.base.coerce(num))

    def embed(self, r) -> "OreFraction":
        return self(1, r)

    def parse(self, den: str, num: str) -> "OreFraction":
        return self(self.base.parse(den), self.base.parse(num))

    def reduce(self, f):
        return self.ring.project(f) if isinstance(self.ring, QuotientRing) else f


@dataclass(frozen=True, eq=False)
class OreFraction:
    """The pair ``(den, num)`` read as ``den^{-1} num``."""

    space: FractionSpace
    den: Element
    num: Element

    def __post_init__(self):
        if not self.space.S.contains(self.den):
            raise ValueError(f"{self.den} is not certified to lie in the denominator set")

    def __add__(self, other):
        return frac_add(self, other)

    def __mul__(self, other):
        return frac_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, OreFraction):
            return NotImplemented
        return frac_eq(self, other)

    __hash__ = None

    def normalized(self) -> "OreFraction":
        """Cancel the polynomial gcd in a commutative polynomial domain when the
        reduced denominator is still certified; otherwise return ``self``."""
        sp = self.space
        if sp.noncommutative or isinstance(sp.ring, QuotientRing) or not self.num:
            return self
        from .central import poly_gcd

        g = poly_gcd(self.den, self.num)
        if g.is_constant():
            return self
        den = self.den.divide_exact(g)
        if not sp.S.contains(den):
            return self
        return OreFraction(sp, den, self.num.divide_exact(g))

    def __str__(self):
        return f"({self.den} | {self.num})"

    def __repr__(self):
        return f"OreFraction{self}"


def _check(a: OreFraction, b: OreFraction) -> FractionSpace:
    if a.space is not b.space:
        raise UnsupportedCombinationError("fractions over different localizations")
    return a.space


def frac_add(a: OreFraction, b: OreFraction) -> OreFraction:
    """``(s1, r1) + (s2, r2) = (s2 s1, s2 r1 + s1 r2)`` for commuting or central denominators."""
    sp = _check(a, b)
    return OreFraction(sp, sp.reduce(b.den * a.den), sp.reduce(b.den * a.num + a.den * b.num))


def frac_mul(a: OreFraction, b: OreFraction) -> OreFraction:
    """``(s1, r1) (s2, r2) = (s2 s1, r1 r2)`` for central ``s2``."""
    sp = _check(a, b)
    return OreFraction(sp, sp.reduce(b.den * a.den), sp.reduce(a.num * b.num))


def frac_eq(a: OreFraction, b: OreFraction) -> bool:
    """Equality in ``S^{-1} R``.

    Commutative case: ``d = r1 s2 - r2 s1`` must be killed by some element of
    ``S``, i.e. ``(J : d)`` meets ``S``.  PBW algebras are domains, so there the
    test is ``d = 0``.
    """
    sp = _check(a, b)
    d = sp.reduce(a.num * b.den - b.num * a.den)
    if not d:
        return True
    if sp.noncommutative or not isinstance(sp.ring, QuotientRing):
        return False
    colon = ideal_quotient(Ideal(sp.base, sp.ring.modulus, sp.pair_cap), d)
    if colon.is_whole():
        return True
    return meets_set(colon, _lift_set(sp.S, sp.base), sp.pair_cap) is not None


def _lift_set(S: MultiplicativeSetSpec, base) -> MultiplicativeSetSpec:
    """The same set viewed in the base ring (the colon ideal already contains the modulus)."""
    if S.kind == "monoidal":
        return MultiplicativeSetSpec("monoidal", base, generators=S.generators)
    if S.kind == "geometric":
        prime = Ideal(base, S.prime.lifted_generators())
        return MultiplicativeSetSpec("geometric", base, prime=prime, unchecked=S.unchecked)
    return MultiplicativeSetSpec("rational", base, sub_vars=S.sub_vars)


# -- expression front end ---------------------------------------------------------------

def evaluate_expression(space: FractionSpace, text: str):
    """Evaluate ``(den | num)`` terms joined by ``+``, ``*`` and parentheses.

    A single top-level ``==`` compares two such expressions and returns a
    bool; otherwise the resulting fraction is returned.
    """
    parts = _split_top(text, "==")
    if len(parts) > 2:
        raise ParseError("at most one '==' is allowed")
    values = [_Parser(space, p).run() for p in parts]
    if len(values) == 2:
        return frac_eq(*values)
    return values[0]


def _split_top(text: str, sep: str) -> list[str]:
    out, depth, start, i = [], 0, 0, 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')'")
        elif depth == 0 and text.startswith(sep, i):
            out.append(text[start:i])
            i += len(sep)
            start = i
            continue
        i += 1
    if depth:
        raise ParseError("unbalanced '('")
    out.append(text[start:])
    return out


class _Parser:
    def __init__(self, space: FractionSpace, text: str):
        self.space = space
        self.text = text
        self.pos = 0

    def run(self) -> OreFraction:
        value = self.sum()
        self.skip()
        if self.pos != len(self.text):
            raise ParseError(f"unexpected input at {self.text[self.pos:]!r}")
        return value

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def sum(self) -> OreFraction:
        value = self.product()
        while self.peek() == "+":
            self.pos += 1
            value = frac_add(value, self.product())
        return value

    def product(self) -> OreFraction:
        value = self.atom()
        while self.peek() == "*":
            self.pos += 1
            value = frac_mul(value, self.atom())
        return value

    def atom(self) -> OreFraction:
        if self.peek() != "(":
            raise ParseError(f"expected '(' at {self.text[self.pos:]!r}")
        depth, end = 0, None
        for i in range(self.pos, len(self.text)):
            if self.text[i] == "(":
                depth += 1
            elif self.text[i] == ")":
                depth -= 1
                if depth == 0:
                    end = i
                    break
        if end is None:
            raise ParseError("unbalanced '('")
        inner = self.text[self.pos + 1:end]
        self.pos = end + 1
        bar = _split_top(inner, "|")
        if len(bar) == 2:
            den, num = (s.strip() for s in bar)
            if not den or not num:
                raise ParseError("a fraction needs both a denominator and a numerator")
            return self.space.parse(den, num)
        if len(bar) > 2:
            raise ParseError("a fraction has exactly one '|'")
        return _Parser(self.space, inner).run()
