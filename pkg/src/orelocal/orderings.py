"""Term orders on exponent vectors and their position-over-term extensions.

Every order is realised as a *sort key*: ``order.key(a) < order.key(b)`` iff
``a < b``.  Keys are plain tuples, so comparisons run at C speed and block
compositions are just tuple concatenation.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from gmpy2 import mpq

from .errors import DimensionError, ParseError

__all__ = [
    "Rational",
    "rational",
    "MonomialOrder",
    "Lex",
    "DegRevLex",
    "Weighted",
    "Block",
    "AntiBlock",
    "antiblock",
    "ModuleOrder",
    "parse_order",
    "LESS",
    "EQUAL",
    "GREATER",
    "DEFAULT_ORDER",
]

Rational = type(mpq(0))

LESS, EQUAL, GREATER = -1, 0, 1


def rational(value) -> Rational:
    """Coerce ints, strings like ``"3/4"``, Fractions or mpq to an exact rational."""
    if isinstance(value, str):
        try:
            return mpq(value.strip())
        except ValueError as exc:
            raise ParseError(f"not a rational literal: {value!r}") from exc
    return mpq(value)


def exponent_add(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def exponent_sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def exponent_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


class MonomialOrder:
    """Base class.  Subclasses implement ``_key``; ``key`` adds memoization."""

    name = "?"

    def __init__(self):
        self.key = lru_cache(maxsize=1 << 18)(self._key)

    def _key(self, e: tuple) -> tuple:
        raise NotImplementedError

    def compare(self, a: Sequence[int], b: Sequence[int]) -> int:
        if len(a) != len(b):
            raise DimensionError(f"exponent lengths differ: {len(a)} vs {len(b)}")
        self._check_length(len(a))
        ka, kb = self.key(tuple(a)), self.key(tuple(b))
        return LESS if ka < kb else GREATER if ka > kb else EQUAL

    def _check_length(self, n: int) -> None:
        pass

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"<MonomialOrder {self.name}>"

    def __str__(self):
        return self.name


class Lex(MonomialOrder):
    name = "lex"

    def _key(self, e):
        return e


class DegRevLex(MonomialOrder):
    name = "degrevlex"

    def _key(self, e):
        return (sum(e),) + tuple(-x for x in reversed(e))


class Weighted(MonomialOrder):
    """Weighted degree first, ties broken by ``tiebreak``."""

    def __init__(self, weights: Sequence[int], tiebreak: MonomialOrder | None = None):
        if any(w < 0 for w in weights):
            raise ValueError("weights must be non-negative")
        self.weights = tuple(int(w) for w in weights)
        self.tiebreak = tiebreak or DegRevLex()
        self.name = f"weighted([{','.join(map(str, self.weights))}],{self.tiebreak.name})"
        super().__init__()

    def _check_length(self, n):
        if n != len(self.weights):
            raise DimensionError(f"weight vector has length {len(self.weights)}, exponent {n}")

    def _key(self, e):
        w = 0
        for a, b in zip(self.weights, e):
            w += a * b
        return (w,) + self.tiebreak.key(e)


class Block(MonomialOrder):
    """Elimination order: the first ``split`` variables are compared first."""

    def __init__(self, first: MonomialOrder, split: int, second: MonomialOrder):
        if split < 0:
            raise ValueError("split index must be non-negative")
        self.first, self.split, self.second = first, split, second
        self.name = f"block({first.name},{split},{second.name})"
        super().__init__()

    def _check_length(self, n):
        if n < self.split:
            raise DimensionError(f"exponent of length {n} shorter than split {self.split}")

    def _key(self, e):
        k = self.split
        return (self.first.key(e[:k]), self.second.key(e[k:]))


class AntiBlock(MonomialOrder):
    """``(first, second)`` antiblock order: the block *after* ``split`` decides first.

    Build instances through :func:`antiblock`, which records the split so that
    leading data can be projected onto the second block.
    """

    def __init__(self, first: MonomialOrder, second: MonomialOrder, split: int):
        if split < 0:
            raise ValueError("split index must be non-negative")
        self.first, self.second, self.split = first, second, split
        self.name = f"antiblock({first.name},{second.name},{split})"
        super().__init__()

    def _check_length(self, n):
        if n < self.split:
            raise DimensionError(f"exponent of length {n} shorter than split {self.split}")

    def _key(self, e):
        k = self.split
        return (self.second.key(e[k:]), self.first.key(e[:k]))

    def project(self, e: tuple) -> tuple:
        """Second-block part of an exponent."""
        return e[self.split:]


def antiblock(first: MonomialOrder, second: MonomialOrder, split: int) -> AntiBlock:
    return AntiBlock(first, second, split)


class ModuleOrder:
    """Ascending position-over-term extension of a monomial order.

    Positions are 1-based in the public API, matching the usual ``e_1..e_r``.
    """

    def __init__(self, base: MonomialOrder, rank: int | None = None):
        self.base = base
        self.rank = rank

    @property
    def name(self):
        return f"pot({self.base.name})"

    def key(self, pos: int, e: tuple) -> tuple:
        return (pos, self.base.key(e))

    def compare(self, a: tuple[int, Sequence[int]], b: tuple[int, Sequence[int]]) -> int:
        (i, ea), (j, eb) = a, b
        for p in (i, j):
            if p < 1 or (self.rank is not None and p > self.rank):
                raise DimensionError(f"position {p} out of range 1..{self.rank}")
        if i != j:
            return LESS if i < j else GREATER
        return self.base.compare(ea, eb)

    def __repr__(self):
        return f"<ModuleOrder {self.name}>"


DEFAULT_ORDER = DegRevLex()


def parse_order(text: str) -> MonomialOrder | ModuleOrder:
    """Parse names such as ``lex``, ``block(lex,2,degrevlex)``,
    ``antiblock(degrevlex,lex,1)``, ``weighted([1,2],lex)`` or ``pot(<o>)``."""
    tokens = _tokenize_order(text)
    pos = 0

    def expect(tok):
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != tok:
            raise ParseError(f"expected {tok!r} in order spec {text!r}")
        pos += 1

    def integer():
        nonlocal pos
        if pos >= len(tokens) or not tokens[pos].isdigit():
            raise ParseError(f"expected integer in order spec {text!r}")
        pos += 1
        return int(tokens[pos - 1])

    def order():
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError(f"truncated order spec {text!r}")
        name = tokens[pos]
        pos += 1
        if name in ("lex", "lp"):
            return Lex()
        if name in ("degrevlex", "dp", "grevlex"):
            return DegRevLex()
        if name == "block":
            expect("(")
            a = order()
            expect(",")
            k = integer()
            expect(",")
            b = order()
            expect(")")
            return Block(a, k, b)
        if name == "antiblock":
            expect("(")
            a = order()
            expect(",")
            b = order()
            expect(",")
            k = integer()
            expect(")")
            return antiblock(a, b, k)
        if name == "weighted":
            expect("(")
            expect("[")
            ws = [integer()]
            while tokens[pos] == ",":
                pos += 1
                ws.append(integer())
            expect("]")
            tie = None
            if tokens[pos] == ",":
                pos += 1
                tie = order()
            expect(")")
            return Weighted(ws, tie)
        if name == "pot":
            expect("(")
            inner = order()
            expect(")")
            if isinstance(inner, ModuleOrder):
                raise ParseError("nested pot() is not allowed")
            return ModuleOrder(inner)
        raise ParseError(f"unknown order {name!r}")

    result = order()
    if pos != len(tokens):
        raise ParseError(f"trailing input in order spec {text!r}")
    return result


def _tokenize_order(text: str) -> list[str]:
    out, i = [], 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "(),[]":
            out.append(c)
            i += 1
        elif c.isalnum() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(text[i:j])
            i = j
        else:
            raise ParseError(f"unexpected character {c!r} in order spec {text!r}")
    return out
