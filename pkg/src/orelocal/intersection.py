"""Intersecting ideals with multiplicative sets.

Three kinds of multiplicative set are supported: the monoid generated by
finitely many elements, the complement of a prime ideal, and the non-zero
elements of a coordinate subalgebra.  Each test either proves the
intersection empty or produces an element of it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotAGAlgebraError, UnsupportedCombinationError
from .groebner import (
    Ideal,
    RingMap,
    eliminate,
    fresh_names,
    kernel_of_ring_map,
    preimage,
    saturate,
)
from .module import LeftSubmodule
from .orderings import DegRevLex, Weighted
from .pbw import PBWAlgebra, subalgebra_intersect
from .poly import Element, Polynomial, PolyRing, QuotientRing

__all__ = [
    "MultiplicativeSetSpec",
    "MonoidIntersection",
    "zero_in_monoid",
    "biggest_monomial_ideal",
    "intersect_monoid",
    "intersect_geometric",
    "intersect_rational",
    "primary_meets_set",
    "meets_set",
]


def _base(ring):
    return ring.base if isinstance(ring, QuotientRing) else ring


@dataclass(frozen=True)
class MultiplicativeSetSpec:
    """A multiplicative set over ``ambient`` (a polynomial/quotient ring or
    a PBW algebra).

    * ``monoidal``: the monoid generated by ``generators``;
    * ``geometric``: ``R \\ p`` for the caller-asserted prime ``prime``;
    * ``rational``: non-zero elements of ``K[sub_vars]``.
    """

    kind: str
    ambient: object
    generators: tuple = ()
    prime: Ideal | None = None
    sub_vars: tuple = ()
    unchecked: tuple = field(default=())

    @classmethod
    def monoidal(cls, ambient, generators: Sequence) -> "MultiplicativeSetSpec":
        base = _base(ambient)
        gens = tuple(base.coerce(g) for g in generators)
        if not gens:
            raise ValueError("a monoidal set needs at least one generator")
        if isinstance(ambient, QuotientRing):
            if any(ambient.is_zero(g) for g in gens):
                raise ValueError("monoid generators must be non-zero modulo the quotient")
        elif any(not g for g in gens):
            raise ValueError("monoid generators must be non-zero")
        return cls("monoidal", ambient, generators=gens)

    @classmethod
    def geometric(cls, prime: Ideal) -> "MultiplicativeSetSpec":
        if prime.is_whole():
            raise ValueError("the prime ideal must be proper")
        return cls("geometric", prime.ring, prime=prime, unchecked=("primality",))

    @classmethod
    def rational(cls, ambient, sub_vars: Sequence[str]) -> "MultiplicativeSetSpec":
        base = _base(ambient)
        sub = tuple(sub_vars)
        for v in sub:
            if v not in base.index:
                raise ValueError(f"unknown variable {v!r}")
        if isinstance(base, PBWAlgebra):
            idx = sorted(base.index[v] for v in sub)
            for a, b in itertools.combinations(idx, 2):
                if not base._plain[a][b]:
                    raise NotAGAlgebraError("rational sub-variables must commute")
        return cls("rational", ambient, sub_vars=sub)

    def contains(self, s, bound: int | None = None) -> bool:
        """Certify ``s ∈ S`` (monoidal: up to a non-zero scalar, by bounded
        exponent search)."""
        return self.certificate(s, bound) is not None

    def certificate(self, s, bound: int | None = None):
        base = _base(self.ambient)
        s = base.coerce(s)
        quot = self.ambient if isinstance(self.ambient, QuotientRing) else None

        def zero(f):
            return quot.is_zero(f) if quot else not f

        if zero(s):
            return None
        if self.kind == "geometric":
            return () if not self.prime.contains(s) else None
        if self.kind == "rational":
            sub = {base.index[v] for v in self.sub_vars}
            if all(not e[i] for e in s.terms for i in range(base.nvars) if i not in sub):
                return ()
            return None
        gens = self.generators
        if bound is None:
            bound = 2 * max(s.degree(), 1) + 2
        for total in range(bound + 1):
            for alpha in _compositions(total, len(gens)):
                p = base.one()
                for g, a in zip(gens, alpha):
                    if a:
                        p = p * g ** a
                if zero(p):
                    continue
                # s == c * p for a non-zero scalar c
                ps = quot.project(p) if quot else p
                ss = quot.project(s) if quot else s
                if ps.terms.keys() == ss.terms.keys():
                    le = next(iter(ps.terms))
                    c = ss.terms[le] / ps.terms[le]
                    if not (ss - ps.scale(c)):
                        return alpha
        return None


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# -- monoid -------------------------------------------------------------------

def _tag_ring(count: int, taken, order=None) -> PolyRing:
    return PolyRing(fresh_names(taken, "t", count), order)


def zero_in_monoid(ring, F: Sequence, pair_cap: int | None = None, sat_cap: int = 50) -> bool:
    """True iff some product of elements of ``F`` vanishes in ``ring``."""
    base = _base(ring)
    F = [base.coerce(f) for f in F]
    if not F:
        raise ValueError("F must be non-empty")
    T = _tag_ring(len(F), base.variables)
    H = kernel_of_ring_map(RingMap(T, ring, F), pair_cap)
    prod = T.one()
    for t in T.gens:
        prod = prod * t
    M, _ = saturate(H, prod, sat_cap)
    return M.is_whole()


def biggest_monomial_ideal(L: Ideal, pair_cap: int | None = None) -> Ideal:
    """Largest monomial ideal inside ``L`` (plus the modulus), returned in
    ``L``'s ring.

    The Laurent extension ``x_i -> q_i x_i`` is emulated with one pair
    ``q_i, u_i`` per ring variable and the relations ``q_i u_i - 1``.
    """
    base = L.base
    n = base.nvars
    qs = fresh_names(base.variables, "q", n)
    us = fresh_names(set(base.variables) | set(qs), "u", n)
    big = PolyRing(qs + us + list(base.variables), base.order)
    images = {v: big.gen(q) * big.gen(v) for v, q in zip(base.variables, qs)}
    gens = [f.substitute(images, target=big) for f in L.lifted_generators()]
    gens += [big.gen(q) * big.gen(u) - 1 for q, u in zip(qs, us)]
    N = eliminate(Ideal(big, gens, pair_cap or L.pair_cap), qs + us)
    return L._like([g.to_ring(base) for g in N.groebner_basis()])


@dataclass
class MonoidIntersection:
    """Result of intersecting with a finitely generated monoid.

    ``monomials`` are exponent vectors ``alpha`` over the generators and
    ``witnesses`` the corresponding products ``f^alpha``, which lie in the
    ideal.  Both are empty exactly when the intersection is empty.
    """

    empty: bool
    monomials: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    preimage: list = field(default_factory=list)


def _monoid_from_preimage(L: Ideal, kernel: Ideal, F: Sequence, one) -> MonoidIntersection:
    if all(kernel.contains(g) for g in L.generators):
        return MonoidIntersection(True, preimage=list(L.generators))
    R = QuotientRing(kernel.base, kernel.groebner_basis())
    M = biggest_monomial_ideal(Ideal(R, L.generators, L.pair_cap))
    mons = [g for g in M.generators if not R.is_zero(g)]
    if not mons:
        return MonoidIntersection(True, preimage=list(L.generators))
    exps, wits = [], []
    for m in mons:
        (alpha,) = m.terms
        exps.append(alpha)
        w = one
        for f, a in zip(F, alpha):
            if a:
                w = w * f ** a
        wits.append(w)
    return MonoidIntersection(False, exps, wits, list(L.generators))


def intersect_monoid(I, F: Sequence, pair_cap: int | None = None,
                     weight_bound: int = 4) -> MonoidIntersection:
    """``I ∩ [F]`` for an ideal of a (quotient) polynomial ring or a left
    ideal (rank-1 :class:`LeftSubmodule`) of a PBW algebra.

    For PBW algebras the preimage of ``I`` under ``t_i -> f_i`` is computed in
    the algebra ``E`` on ``(t, x)`` in which ``t_i - f_i`` is central
    (``x_j t_i = t_i x_j + [x_j, f_i]``), as ``E<t - f, I> ∩ K[t]``.
    """
    if isinstance(I, Ideal):
        base = I.base
        F = [base.coerce(f) for f in F]
        T = _tag_ring(len(F), base.variables)
        phi = RingMap(T, I.ring, F)
        L = preimage(phi, I.generators, pair_cap or I.pair_cap)
        K = kernel_of_ring_map(phi, pair_cap or I.pair_cap)
        return _monoid_from_preimage(Ideal(T, L.generators), K, F, base.one())
    if not isinstance(I, LeftSubmodule):
        raise TypeError("expected an Ideal or a LeftSubmodule")
    A = I.algebra
    if I.rank != 1:
        raise UnsupportedCombinationError("monoid intersection needs a left ideal (rank 1)")
    F = [A.coerce(f) for f in F]
    for a, b in itertools.combinations(F, 2):
        if a * b != b * a:
            raise UnsupportedCombinationError(f"{a} and {b} do not commute")
    if A.is_commutative and not isinstance(A, PBWAlgebra):
        ring = A
        return intersect_monoid(Ideal(ring, [g[0] for g in I.generators]), F, pair_cap, weight_bound)
    E, t_gens, embed = _preimage_algebra(A, F)
    T = PolyRing([str(v) for v in E.variables[:len(F)]])
    tie = [t - embed(f) for t, f in zip(t_gens, F)]
    keep = E.variables[:len(F)]
    cap = pair_cap or I.pair_cap
    L = subalgebra_intersect(LeftSubmodule(E, tie + [embed(g[0]) for g in I.generators], pair_cap=cap),
                             keep, weight_bound)
    K = subalgebra_intersect(LeftSubmodule(E, tie, pair_cap=cap), keep, weight_bound)
    to_T = lambda el: T._from_clean({e[:len(F)]: c for e, c in el.terms.items()})
    return _monoid_from_preimage(Ideal(T, [to_T(g) for g in L]), Ideal(T, [to_T(g) for g in K]),
                                 F, A.one())


def _preimage_algebra(A: PBWAlgebra, F: Sequence[Element]):
    m = len(F)
    names = fresh_names(A.variables, "t", m)
    n = A.nvars
    pad = lambda e: (0,) * m + tuple(e)
    rels = {(i + m, j + m): (c, {pad(e): v for e, v in d.items()})
            for (i, j), (c, d) in A.relations_dict().items()}
    for i, f in enumerate(F):
        for j, x in enumerate(A.gens):
            comm = x * f - f * x
            if comm:
                rels[(i, j + m)] = (1, {pad(e): v for e, v in comm.terms.items()})
    weights = [max(f.degree(), 1) for f in F] + [1] * n
    order = Weighted(weights, DegRevLex())
    E = PBWAlgebra(names + list(A.variables), rels, order)

    def embed(el):
        return E._from_clean({pad(e): c for e, c in el.terms.items()})
    return E, [E.gen(t) for t in names], embed


# -- geometric and rational ------------------------------------------------------

def intersect_geometric(I: Ideal, p: Ideal) -> Polynomial:
    """A generator of ``I`` outside ``p`` (then it lies in ``I ∩ (R \\ p)``),
    or zero when ``I ⊆ p``."""
    q = Ideal(p.base, p.lifted_generators() + I.modulus, p.pair_cap)
    for h in I.generators:
        if q.reduce(h):
            return h
    return I.base.zero()


def intersect_rational(I: Ideal, sub_vars: Sequence[str]) -> Polynomial:
    """A non-zero element of ``I ∩ K[sub_vars]`` (modulo the quotient) or zero."""
    base = I.base
    sub = list(sub_vars)
    T = PolyRing(sub, base.order)
    phi = RingMap(T, I.ring, [base.gen(v) for v in sub])
    pre = preimage(phi, I.generators, I.pair_cap)
    for w in pre.generators:
        img = phi(w)
        if img:
            return img
    return base.zero()


# -- primary components ------------------------------------------------------------

def primary_meets_set(Q: Ideal, P: Ideal | None, S: MultiplicativeSetSpec) -> bool:
    """Whether the primary ideal ``Q`` (radical ``P``) meets ``S``."""
    if S.kind == "monoidal":
        if P is not None:
            return any(P.contains(s) for s in S.generators)
        return any(Q.radical_contains(s) for s in S.generators)
    R = P if P is not None else Q
    if S.kind == "geometric":
        return not R.issubset(S.prime)
    if S.kind == "rational":
        return bool(intersect_rational(R, S.sub_vars))
    raise ValueError(f"unknown set kind {S.kind!r}")


def meets_set(I: Ideal, S: MultiplicativeSetSpec, pair_cap: int | None = None):
    """Element of ``I ∩ S`` or ``None``, dispatching on the set kind."""
    if S.kind == "monoidal":
        res = intersect_monoid(I, S.generators, pair_cap)
        return None if res.empty else res.witnesses[0]
    if S.kind == "geometric":
        w = intersect_geometric(I, S.prime)
    else:
        w = intersect_rational(I, S.sub_vars)
    return w if w else None
