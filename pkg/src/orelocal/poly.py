"""Sparse polynomials with exact rational coefficients.

``Algebra``/``Element`` hold everything common to commutative rings and PBW
algebras: the term map ``{exponent: mpq}``, printing, parsing and the
ring-independent part of arithmetic.  A subclass only has to say how two
standard monomials multiply (``mul_mono``).
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

from .errors import ParseError, RingMismatchError
from .orderings import DEFAULT_ORDER, MonomialOrder, Rational, parse_order, rational

__all__ = ["Algebra", "Element", "PolyRing", "Polynomial", "QuotientRing", "parse_expression"]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_ONE = mpq(1)
_ZERO = mpq(0)


class Algebra:
    """Common base for :class:`PolyRing` and :class:`~orelocal.pbw.PBWAlgebra`."""

    element_class: type = None
    is_commutative = True

    def __init__(self, variables: Sequence[str], order: MonomialOrder | str | None = None):
        variables = tuple(variables)
        for v in variables:
            if not isinstance(v, str) or not _IDENT.match(v):
                raise ValueError(f"invalid variable name {v!r}")
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        if isinstance(order, str):
            order = parse_order(order)
        self.variables = variables
        self.nvars = len(variables)
        self.order = order or DEFAULT_ORDER
        self.index = {v: i for i, v in enumerate(variables)}
        self.zero_exp = (0,) * self.nvars

    # -- construction -------------------------------------------------------
    def element(self, terms: Mapping[tuple, object] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            c = mpq(c)
            if c:
                if len(e) != self.nvars:
                    raise ValueError(f"exponent {e} has wrong length for {self}")
                clean[tuple(e)] = c
        return self.element_class(self, clean)

    def _from_clean(self, terms: dict):
        return self.element_class(self, terms)

    def zero(self):
        return self.element_class(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = mpq(c)
        return self.element_class(self, {self.zero_exp: c} if c else {})

    def monomial(self, exp: Sequence[int], coeff=1):
        return self.element({tuple(exp): coeff})

    def gen(self, name: str):
        try:
            i = self.index[name]
        except KeyError:
            raise ParseError(f"unknown variable {name!r}; ring has {', '.join(self.variables)}") from None
        e = [0] * self.nvars
        e[i] = 1
        return self.element_class(self, {tuple(e): _ONE})

    @property
    def gens(self):
        return [self.gen(v) for v in self.variables]

    def __call__(self, value):
        return self.coerce(value)

    def coerce(self, value):
        if isinstance(value, Element):
            if value.ring is self:
                return value
            if value.ring == self:
                return self.element_class(self, dict(value.terms))
            raise RingMismatchError(f"element of {value.ring} used in {self}")
        if isinstance(value, str):
            return self.parse(value)
        return self.constant(value)

    def parse(self, text: str):
        return parse_expression(self, text)

    # -- arithmetic hooks ---------------------------------------------------
    def mul_mono(self, a: tuple, b: tuple) -> dict:
        """Product of standard monomials ``x^a * x^b`` as a term map."""
        return {tuple(x + y for x, y in zip(a, b)): _ONE}

    def mul_terms(self, p: dict, q: dict) -> dict:
        out: dict = {}
        if self.is_commutative:
            for ea, ca in p.items():
                for eb, cb in q.items():
                    e = tuple(x + y for x, y in zip(ea, eb))
                    c = out.get(e, _ZERO) + ca * cb
                    if c:
                        out[e] = c
                    else:
                        out.pop(e, None)
            return out
        mul_mono = self.mul_mono
        for ea, ca in p.items():
            for eb, cb in q.items():
                cc = ca * cb
                for e, c in mul_mono(ea, eb).items():
                    v = out.get(e, _ZERO) + cc * c
                    if v:
                        out[e] = v
                    else:
                        out.pop(e, None)
        return out

    def signature(self):
        return (type(self).__name__, self.variables, self.order.name)

    def __eq__(self, other):
        return isinstance(other, Algebra) and self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(self.variables)}; {self.order.name})"


class Element:
    """An element in standard-monomial form ``sum c_a x^a``."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Algebra, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- leading data -------------------------------------------------------
    def lexp(self, order: MonomialOrder | None = None) -> tuple:
        if not self.terms:
            raise ValueError("zero has no leading exponent")
        key = (order or self.ring.order).key
        return max(self.terms, key=key)

    def lc(self, order: MonomialOrder | None = None) -> Rational:
        return self.terms[self.lexp(order)]

    def lm(self, order: MonomialOrder | None = None):
        return self.ring.monomial(self.lexp(order))

    def lt(self, order: MonomialOrder | None = None):
        e = self.lexp(order)
        return self.ring.monomial(e, self.terms[e])

    def sorted_terms(self, order: MonomialOrder | None = None) -> list[tuple[tuple, Rational]]:
        key = (order or self.ring.order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Rational:
        return self.terms.get(self.ring.zero_exp, _ZERO)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def support_variables(self) -> set[str]:
        used = set()
        for e in self.terms:
            used.update(self.ring.variables[i] for i, a in enumerate(e) if a)
        return used

    def monic(self):
        if not self.terms:
            return self
        c = self.lc()
        return self.ring._from_clean({e: v / c for e, v in self.terms.items()})

    # -- arithmetic ---------------------------------------------------------
    def _other(self, other):
        if isinstance(other, Element):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError(f"cannot combine elements of {self.ring} and {other.ring}")
            return other
        if isinstance(other, (int, Rational)) or hasattr(other, "numerator"):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, _ZERO) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return self.ring._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return self.ring._from_clean({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c):
        c = mpq(c)
        if not c:
            return self.ring.zero()
        return self.ring._from_clean({e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Element):
            other = self._other(other)
            if other is NotImplemented:
                return other
            return self.scale(other.constant_value())
        other = self._other(other)
        return self.ring._from_clean(self.ring.mul_terms(self.terms, other.terms))

    def __rmul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other * self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = self.ring.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Rational)):
            return self.terms == ({self.ring.zero_exp: mpq(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- printing -----------------------------------------------------------
    def __str__(self):
        return format_terms(self.ring.variables, self.sorted_terms())

    def __repr__(self):
        return f"{type(self).__name__}({self})"


def format_monomial(variables: Sequence[str], e: tuple) -> str:
    parts = []
    for v, a in zip(variables, e):
        if a == 1:
            parts.append(v)
        elif a > 1:
            parts.append(f"{v}^{a}")
    return "*".join(parts)


def format_terms(variables: Sequence[str], terms: Iterable[tuple[tuple, Rational]]) -> str:
    out = []
    for e, c in terms:
        mono = format_monomial(variables, e)
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{a}*{mono}"
        else:
            body = str(a)
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out) if out else "0"


# -- parser -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<id>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()])|(?P<bad>\S))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        if m.group("num") is not None:
            toks.append(("num", m.group("num").replace(" ", "")))
        elif m.group("id") is not None:
            toks.append(("id", m.group("id")))
        elif m.group("op") is not None:
            toks.append(("op", m.group("op")))
        else:
            bad = m.group("bad")
            if bad == "/":
                raise ParseError(f"division in input is not allowed: {text!r}")
            raise ParseError(f"unexpected character {bad!r} in {text!r}")
    return toks


def parse_expression(ring: Algebra, text: str):
    """Parse ``text`` into an element of ``ring``.

    Grammar: integers and ``p/q`` literals, identifiers, ``+ - * ^ ( )``.
    Products are formed left to right with the ring's own multiplication,
    so ``Dx*x`` in a Weyl algebra expands to ``x*Dx + 1``.
    """
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty expression")
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take():
        nonlocal pos
        pos += 1
        return toks[pos - 1]

    def expr():
        sign = 1
        kind, val = peek()
        if kind == "op" and val in "+-":
            take()
            sign = -1 if val == "-" else 1
        acc = term()
        if sign < 0:
            acc = -acc
        while True:
            kind, val = peek()
            if kind == "op" and val in "+-":
                take()
                t = term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term():
        acc = factor()
        while True:
            kind, val = peek()
            if kind == "op" and val == "*":
                take()
                acc = acc * factor()
            elif kind in ("id", "num") or (kind == "op" and val == "("):
                raise ParseError(f"missing '*' before {val!r} in {text!r}")
            else:
                return acc

    def factor():
        base = atom()
        kind, val = peek()
        if kind == "op" and val == "^":
            take()
            kind, val = take() if pos < len(toks) else (None, "")
            if kind != "num" or "/" in val:
                raise ParseError(f"exponent must be a non-negative integer in {text!r}")
            return base ** int(val)
        return base

    def atom():
        if pos >= len(toks):
            raise ParseError(f"unexpected end of input in {text!r}")
        kind, val = take()
        if kind == "num":
            return ring.constant(rational(val))
        if kind == "id":
            return ring.gen(val)
        if val == "(":
            inner = expr()
            if pos >= len(toks) or take() != ("op", ")"):
                raise ParseError(f"unbalanced parentheses in {text!r}")
            return inner
        if val == "-":
            return -factor()
        raise ParseError(f"unexpected {val!r} in {text!r}")

    result = expr()
    if pos != len(toks):
        raise ParseError(f"unexpected {toks[pos][1]!r} in {text!r}")
    return result


# -- commutative rings -------------------------------------------------------

class Polynomial(Element):
    """Commutative polynomial over QQ."""

    __slots__ = ()

    def derivative(self, var: str | int):
        i = var if isinstance(var, int) else self.ring.index[var]
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return self.ring._from_clean(out)

    def evaluate(self, values: Mapping[str, object]):
        """Substitute rationals (or ring elements) for some variables."""
        return self.substitute(values)

    def substitute(self, values: Mapping[str, object], target: Algebra | None = None):
        """Simultaneous substitution; unmapped variables map to themselves in ``target``."""
        target = target or self.ring
        images = []
        for v in self.ring.variables:
            if v in values:
                images.append(target.coerce(values[v]))
            else:
                images.append(target.gen(v))
        result = target.zero()
        cache: dict = {}
        for e, c in self.terms.items():
            t = target.constant(c)
            for i, a in enumerate(e):
                if a:
                    key = (i, a)
                    if key not in cache:
                        cache[key] = images[i] ** a
                    t = t * cache[key]
            result = result + t
        return result

    def to_ring(self, ring: "PolyRing"):
        """Re-embed into a ring sharing (a superset of) the used variables."""
        idx = [ring.index.get(v) for v in self.ring.variables]
        out = {}
        for e, c in self.terms.items():
            f = [0] * ring.nvars
            for i, a in enumerate(e):
                if a:
                    if idx[i] is None:
                        raise RingMismatchError(f"variable {self.ring.variables[i]} not in {ring}")
                    f[idx[i]] = a
            out[tuple(f)] = c
        return ring._from_clean(out)

    def divide_exact(self, other: "Polynomial") -> "Polynomial":
        """Exact quotient ``self / other``; raises ``ArithmeticError`` on a remainder."""
        other = self._other(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        order = self.ring.order
        le = other.lexp(order)
        lc = other.terms[le]
        rem = dict(self.terms)
        quot = {}
        key = order.key
        while rem:
            e = max(rem, key=key)
            if not all(x >= y for x, y in zip(e, le)):
                raise ArithmeticError(f"{other} does not divide {self}")
            m = tuple(x - y for x, y in zip(e, le))
            c = rem[e] / lc
            quot[m] = c
            for f, d in other.terms.items():
                g = tuple(x + y for x, y in zip(f, m))
                v = rem.get(g, _ZERO) - c * d
                if v:
                    rem[g] = v
                else:
                    rem.pop(g, None)
        return self.ring._from_clean(quot)

    def content_normalized(self):
        """Scale to the primitive integer representative with positive leading coefficient."""
        if not self.terms:
            return self
        from math import gcd, lcm

        den = 1
        for c in self.terms.values():
            den = lcm(den, int(c.denominator))
        ints = {e: int(c * den) for e, c in self.terms.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        if ints[self.lexp()] < 0:
            g = -g
        return self.ring._from_clean({e: mpq(v, g) for e, v in ints.items()})


class PolyRing(Algebra):
    """``QQ[x_1..x_n]`` with a fixed term order."""

    element_class = Polynomial
    is_commutative = True

    def __init__(self, variables: Sequence[str] | str, order: MonomialOrder | str | None = None):
        if isinstance(variables, str):
            variables = [v.strip() for v in variables.split(",") if v.strip()]
        super().__init__(variables, order)

    def with_order(self, order: MonomialOrder | str) -> "PolyRing":
        return PolyRing(self.variables, order)

    def extend(self, new_vars: Sequence[str], front: bool = False, order=None) -> "PolyRing":
        vs = list(new_vars) + list(self.variables) if front else list(self.variables) + list(new_vars)
        return PolyRing(vs, order or self.order)

    def to_dict(self) -> dict:
        return {"vars": list(self.variables), "order": self.order.name}


class QuotientRing:
    """``QQ[x]/J`` with elements represented by Gröbner normal forms."""

    def __init__(self, base: PolyRing, modulus: Iterable = ()):
        self.base = base
        self.modulus = [base.coerce(g) for g in modulus]
        self.modulus = [g for g in self.modulus if g]
        self._gb = None

    @property
    def gb(self):
        if self._gb is None:
            from .groebner import groebner_basis

            self._gb = groebner_basis(self.modulus, self.base.order) if self.modulus else []
        return self._gb

    @property
    def variables(self):
        return self.base.variables

    def project(self, f) -> Polynomial:
        from .groebner import normal_form

        f = self.base.coerce(f)
        if not self.modulus:
            return f
        return normal_form(f, self.gb)

    def is_zero(self, f) -> bool:
        return not self.project(f)

    def equal(self, f, g) -> bool:
        return not self.project(self.base.coerce(f) - self.base.coerce(g))

    def parse(self, text: str) -> Polynomial:
        return self.project(self.base.parse(text))

    def to_dict(self) -> dict:
        d = self.base.to_dict()
        d["quotient"] = [str(g) for g in self.modulus]
        return d

    def __eq__(self, other):
        if not isinstance(other, QuotientRing) or other.base != self.base:
            return False
        return [str(g) for g in self.gb] == [str(g) for g in other.gb]

    def __hash__(self):
        return hash(self.base)

    def __repr__(self):
        return f"QuotientRing({self.base!r} / <{', '.join(map(str, self.modulus))}>)"


PolyRing.element_class = Polynomial
