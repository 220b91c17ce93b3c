"""Finitely generated left submodules of A^r and their Gröbner bases."""

from __future__ import annotations

from typing import Iterable, Sequence

from .engine import Engine
from .errors import DimensionError, RingMismatchError
from .orderings import ModuleOrder, MonomialOrder
from .poly import Algebra, Element

__all__ = [
    "LeftSubmodule",
    "left_groebner_basis",
    "left_normal_form",
    "to_vec",
    "from_vec",
    "format_vector",
]


def to_vec(vector: Sequence[Element]) -> dict:
    out = {}
    for p, el in enumerate(vector):
        for e, c in el.terms.items():
            out[(p, e)] = c
    return out


def from_vec(algebra: Algebra, v: dict, rank: int) -> tuple:
    comps = [dict() for _ in range(rank)]
    for (p, e), c in v.items():
        comps[p][e] = c
    return tuple(algebra._from_clean(t) for t in comps)


def format_vector(vector: Sequence[Element]) -> str:
    if len(vector) == 1:
        return str(vector[0])
    return "[" + ", ".join(str(c) for c in vector) + "]"


def _base_order(order) -> MonomialOrder:
    if isinstance(order, ModuleOrder):
        return order.base
    return order


class LeftSubmodule:
    """Left submodule of ``A^rank`` given by generators.

    Generators may be passed as elements (rank 1), strings, or sequences of
    those.  Reduced left Gröbner bases are cached per term order.
    """

    def __init__(self, algebra: Algebra, generators: Iterable = (), rank: int | None = None,
                 pair_cap: int | None = None):
        self.algebra = algebra
        vecs = []
        for g in generators:
            if isinstance(g, (Element, str)):
                g = (g,)
            vecs.append(tuple(algebra.coerce(c) for c in g))
        if rank is None:
            rank = len(vecs[0]) if vecs else 1
        for v in vecs:
            if len(v) != rank:
                raise DimensionError(f"generator {format_vector(v)} is not of rank {rank}")
        self.rank = rank
        self.generators = [v for v in vecs if any(c for c in v)]
        self.pair_cap = pair_cap
        self._gb: dict = {}

    # -- Gröbner data -------------------------------------------------------
    def engine(self, order: MonomialOrder | ModuleOrder | None = None) -> Engine:
        return Engine(self.algebra, _base_order(order) or self.algebra.order, self.pair_cap)

    def gb_vecs(self, order=None) -> list[dict]:
        order = _base_order(order) or self.algebra.order
        got = self._gb.get(order.name)
        if got is None:
            got = Engine(self.algebra, order, self.pair_cap).groebner(to_vec(g) for g in self.generators)
            self._gb[order.name] = got
        return got

    def groebner_basis(self, order=None) -> list[tuple]:
        return [from_vec(self.algebra, v, self.rank) for v in self.gb_vecs(order)]

    def reduce(self, vector, order=None, full: bool = True) -> tuple:
        vector = self._coerce_vector(vector)
        eng = self.engine(order)
        r = eng.reduce(to_vec(vector), eng.items(self.gb_vecs(order)), full=full)
        return from_vec(self.algebra, r, self.rank)

    def contains(self, vector) -> bool:
        vector = self._coerce_vector(vector)
        eng = self.engine()
        return not eng.reduce(to_vec(vector), eng.items(self.gb_vecs()))

    __contains__ = contains

    def issubset(self, other: "LeftSubmodule") -> bool:
        self._check_compatible(other)
        return all(other.contains(g) for g in self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def is_whole(self) -> bool:
        """True iff the module is all of ``A^rank``."""
        return all(self.contains(tuple(self.algebra.one() if i == p else self.algebra.zero()
                                       for i in range(self.rank)))
                   for p in range(self.rank))

    def __eq__(self, other):
        if not isinstance(other, LeftSubmodule):
            return NotImplemented
        if other.algebra != self.algebra or other.rank != self.rank:
            return False
        return self.gb_vecs() == other.gb_vecs(self.algebra.order)

    def __hash__(self):
        return hash((self.algebra, self.rank))

    # -- constructions ------------------------------------------------------
    def __add__(self, other: "LeftSubmodule") -> "LeftSubmodule":
        self._check_compatible(other)
        return self._like(self.generators + other.generators)

    def intersect(self, other: "LeftSubmodule") -> "LeftSubmodule":
        """``M ∩ N`` via a doubled module: generators ``(m, m)`` and ``(0, n)``;
        vectors whose upper block vanishes carry the intersection."""
        self._check_compatible(other)
        r = self.rank
        zero = self.algebra.zero()
        gens = [tuple(m) + tuple(m) for m in self.generators]
        gens += [(zero,) * r + tuple(n) for n in other.generators]
        return self._like(self._lower_block(gens, 2 * r, r))

    def _lower_block(self, gens: list[tuple], total: int, keep: int) -> list[tuple]:
        """Generators of ``M ∩ (A^keep ⊕ 0)`` projected to the first ``keep`` slots."""
        eng = self.engine()
        gb = eng.groebner(to_vec(g) for g in gens)
        out = []
        for v in gb:
            if all(p < keep for p, _ in v):
                out.append(from_vec(self.algebra, v, total)[:keep])
        return out

    def _like(self, gens) -> "LeftSubmodule":
        return LeftSubmodule(self.algebra, gens, rank=self.rank, pair_cap=self.pair_cap)

    def _coerce_vector(self, vector) -> tuple:
        if isinstance(vector, (Element, str)):
            vector = (vector,)
        vector = tuple(self.algebra.coerce(c) for c in vector)
        if len(vector) != self.rank:
            raise DimensionError(f"vector of length {len(vector)} in module of rank {self.rank}")
        return vector

    def _check_compatible(self, other: "LeftSubmodule") -> None:
        if other.algebra != self.algebra:
            raise RingMismatchError(f"modules over {self.algebra} and {other.algebra}")
        if other.rank != self.rank:
            raise DimensionError(f"ranks differ: {self.rank} vs {other.rank}")

    # -- printing -----------------------------------------------------------
    def gb_strings(self, order=None) -> list[str]:
        return [format_vector(v) for v in self.groebner_basis(order)]

    def __str__(self):
        return "<" + ", ".join(format_vector(g) for g in self.generators) + ">"

    def __repr__(self):
        return f"LeftSubmodule({self.algebra!r}, rank={self.rank}, {self})"


def left_groebner_basis(module: LeftSubmodule, order=None) -> list[tuple]:
    return module.groebner_basis(order)


def left_normal_form(f, G: Sequence, algebra: Algebra, order=None, full: bool = False) -> tuple:
    """LeftNF of ``f`` with respect to the finite set ``G`` (not necessarily a basis).

    Only leading terms are reduced unless ``full`` is set, so a non-zero
    result has a leading monomial that no ``lm(g)`` divides.
    """
    order = _base_order(order) or algebra.order
    if isinstance(f, (Element, str)):
        f = (f,)
    f = tuple(algebra.coerce(c) for c in f)
    G = [tuple(algebra.coerce(c) for c in ((g,) if isinstance(g, (Element, str)) else g)) for g in G]
    eng = Engine(algebra, order)
    r = eng.reduce(to_vec(f), eng.items([to_vec(g) for g in G]), full=full)
    return from_vec(algebra, r, len(f))

