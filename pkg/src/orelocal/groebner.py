"""Commutative Gröbner toolbox: bases, normal forms, elimination, ideal
operations, syzygies and kernels of polynomial algebra maps."""

from __future__ import annotations

from typing import Iterable, Sequence

from .engine import Engine
from .errors import RingMismatchError
from .module import LeftSubmodule, from_vec
from .orderings import MonomialOrder, Weighted
from .poly import PolyRing, Polynomial, QuotientRing

__all__ = [
    "Ideal",
    "RingMap",
    "groebner_basis",
    "normal_form",
    "is_groebner",
    "eliminate",
    "elimination_order",
    "intersect",
    "ideal_quotient",
    "saturate",
    "kernel_of_ring_map",
    "preimage",
    "syzygy_module",
    "ideal_equal",
    "fresh_names",
]


def _vec(f: Polynomial) -> dict:
    return {(0, e): c for e, c in f.terms.items()}


def _poly(ring: PolyRing, v: dict) -> Polynomial:
    return ring._from_clean({e: c for (_, e), c in v.items()})


def groebner_basis(polys: Iterable[Polynomial], order: MonomialOrder | None = None,
                   pair_cap: int | None = None) -> list[Polynomial]:
    """Reduced (monic, interreduced) Gröbner basis, sorted by ascending leading term."""
    polys = [p for p in polys if p]
    if not polys:
        return []
    ring = polys[0].ring
    eng = Engine(ring, order or ring.order, pair_cap)
    return [_poly(ring, v) for v in eng.groebner(_vec(p) for p in polys)]


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder | None = None) -> Polynomial:
    """Fully reduced remainder of ``f`` modulo ``G``: no term is divisible by any ``lm(g)``."""
    ring = f.ring
    if not G:
        return f
    eng = Engine(ring, order or ring.order)
    return _poly(ring, eng.reduce(_vec(f), eng.items([_vec(g) for g in G if g]), full=True))


def is_groebner(G: Sequence[Polynomial], order: MonomialOrder | None = None) -> bool:
    if not G:
        return True
    ring = G[0].ring
    return Engine(ring, order or ring.order).is_groebner([_vec(g) for g in G])


def elimination_order(ring: PolyRing, drop: Iterable[str], tiebreak: MonomialOrder | None = None) -> Weighted:
    drop = set(drop)
    return Weighted([1 if v in drop else 0 for v in ring.variables], tiebreak or ring.order)


def fresh_names(taken: Iterable[str], stem: str, count: int) -> list[str]:
    taken = set(taken)
    out, k = [], 0
    while len(out) < count:
        name = f"{stem}{k}"
        if name not in taken:
            out.append(name)
        k += 1
    return out


class Ideal:
    """Ideal of ``QQ[x]`` or of a quotient ``QQ[x]/J`` (then generators are
    base-ring representatives and every computation lifts to ``QQ[x]``)."""

    def __init__(self, ring: PolyRing | QuotientRing, generators: Iterable = (), pair_cap: int | None = None):
        if isinstance(ring, QuotientRing):
            self.quotient, self.base = ring, ring.base
        else:
            self.quotient, self.base = None, ring
        self.ring = ring
        self.generators = [g for g in (self.base.coerce(x) for x in generators) if g]
        self.pair_cap = pair_cap
        self._gb: dict = {}

    @property
    def modulus(self) -> list[Polynomial]:
        return self.quotient.modulus if self.quotient else []

    def lifted_generators(self) -> list[Polynomial]:
        return self.generators + self.modulus

    def groebner_basis(self, order: MonomialOrder | None = None) -> list[Polynomial]:
        """Reduced GB of the lifted ideal ``I + J`` in the base ring."""
        order = order or self.base.order
        got = self._gb.get(order.name)
        if got is None:
            got = groebner_basis(self.lifted_generators(), order, self.pair_cap)
            self._gb[order.name] = got
        return got

    gb = groebner_basis

    def reduce(self, f) -> Polynomial:
        return normal_form(self.base.coerce(f), self.groebner_basis())

    def contains(self, f) -> bool:
        return not self.reduce(f)

    __contains__ = contains

    def issubset(self, other: "Ideal") -> bool:
        return all(other.contains(g) for g in self.lifted_generators())

    def is_whole(self) -> bool:
        return self.contains(self.base.one())

    def is_zero(self) -> bool:
        if self.quotient is None:
            return not self.generators
        return all(self.quotient.is_zero(g) for g in self.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    def __hash__(self):
        return hash(self.base)

    def _like(self, gens) -> "Ideal":
        return Ideal(self.ring, gens, self.pair_cap)

    def __add__(self, other: "Ideal") -> "Ideal":
        _check_same(self, other)
        return self._like(self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        _check_same(self, other)
        return self._like([a * b for a in self.generators for b in other.generators])

    def __pow__(self, n: int) -> "Ideal":
        if n < 0:
            raise ValueError("negative ideal power")
        result = self._like([self.base.one()])
        for _ in range(n):
            result = self._like((result * self).minimal_generators())
        return result

    def intersect(self, other: "Ideal") -> "Ideal":
        return intersect(self, other)

    def quotient_by(self, f) -> "Ideal":
        return ideal_quotient(self, f)

    def saturate(self, f) -> tuple["Ideal", int]:
        return saturate(self, f)

    def minimal_generators(self) -> list[Polynomial]:
        """Reduced GB elements not already in the quotient modulus."""
        if self.quotient is None:
            return self.groebner_basis()
        return [g for g in self.groebner_basis() if not self.quotient.is_zero(g)]

    def radical_contains(self, f) -> bool:
        """``f ∈ sqrt(I)`` via ``1 ∈ I + <1 - w f>``."""
        f = self.base.coerce(f)
        (w,) = fresh_names(self.base.variables, "w_", 1)
        big = self.base.extend([w])
        gens = [g.to_ring(big) for g in self.lifted_generators()]
        gens.append(big.one() - big.gen(w) * f.to_ring(big))
        gb = groebner_basis(gens)
        return len(gb) == 1 and gb[0].is_constant()

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.generators) + ">"

    def __repr__(self):
        return f"Ideal({self.ring!r}, {self})"


def _check_same(a: Ideal, b: Ideal) -> None:
    if a.base != b.base or (a.quotient is None) != (b.quotient is None) or (
            a.quotient is not None and a.quotient != b.quotient):
        raise RingMismatchError(f"ideals live in different rings: {a.ring!r} vs {b.ring!r}")


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    """True iff the reduced Gröbner bases (of the lifted ideals) coincide."""
    _check_same(a, b)
    order = a.base.order
    return [g.terms for g in a.groebner_basis(order)] == [g.terms for g in b.groebner_basis(order)]


def eliminate(ideal: Ideal, drop: Iterable[str], pair_cap: int | None = None) -> Ideal:
    """``I ∩ QQ[kept variables]``, returned in the subring of kept variables.

    Uses the weight order ``(deg in dropped vars, ring order)``.
    """
    drop = [v for v in drop]
    base = ideal.base
    for v in drop:
        if v not in base.index:
            raise RingMismatchError(f"cannot eliminate unknown variable {v!r}")
    kept = [v for v in base.variables if v not in set(drop)]
    order = elimination_order(base, drop)
    gb = groebner_basis(ideal.lifted_generators(), order, pair_cap or ideal.pair_cap)
    sub = PolyRing(kept, base.order)
    dropped_idx = [base.index[v] for v in drop]
    out = []
    for g in gb:
        if all(not e[i] for e in g.terms for i in dropped_idx):
            out.append(g.to_ring(sub))
    return Ideal(sub, out)


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """``I ∩ J`` via ``t*I + (1-t)*J`` and elimination of the tag ``t``."""
    _check_same(a, b)
    base = a.base
    (t,) = fresh_names(base.variables, "t_", 1)
    big = base.extend([t], front=True)
    tt = big.gen(t)
    gens = [tt * f.to_ring(big) for f in a.lifted_generators()]
    gens += [(big.one() - tt) * g.to_ring(big) for g in b.lifted_generators()]
    if not gens:
        return a._like([])
    res = eliminate(Ideal(big, gens, a.pair_cap), [t])
    return a._like([g.to_ring(base) for g in res.generators])


def ideal_quotient(ideal: Ideal, f) -> Ideal:
    """``I : f = (I ∩ <f>) / f``."""
    base = ideal.base
    f = base.coerce(f)
    if not f:
        raise ValueError("quotient by zero")
    if ideal.quotient is not None:
        f = ideal.quotient.project(f)
        if not f:
            return ideal._like([base.one()])
    lifted = Ideal(base, ideal.lifted_generators(), ideal.pair_cap)
    meet = intersect(lifted, Ideal(base, [f]))
    gens = [g.divide_exact(f) for g in meet.groebner_basis()]
    return ideal._like(groebner_basis(gens) if ideal.quotient is None else gens)


def saturate(ideal: Ideal, f, cap: int = 50) -> tuple[Ideal, int]:
    """``(I : f^∞, n)`` with ``n`` the first index where ``I : f^n = I : f^(n+1)``."""
    from .errors import ResourceError

    current = ideal
    for n in range(cap + 1):
        nxt = ideal_quotient(current, f)
        if ideal_equal(nxt, current):
            return current, n
        current = nxt
    raise ResourceError(f"saturation did not stabilize within {cap} steps")


class RingMap:
    """``source -> target`` sending the i-th source variable to ``images[i]``.

    ``source``/``target`` may be quotient rings; images are base-ring
    representatives in the target.
    """

    def __init__(self, source: PolyRing | QuotientRing, target: PolyRing | QuotientRing, images: Sequence):
        self.source = source
        self.target = target
        sbase = source.base if isinstance(source, QuotientRing) else source
        tbase = target.base if isinstance(target, QuotientRing) else target
        if len(images) != sbase.nvars:
            raise ValueError(f"{len(images)} images for {sbase.nvars} source variables")
        self.sbase, self.tbase = sbase, tbase
        self.images = [tbase.coerce(f) for f in images]

    def __call__(self, p) -> Polynomial:
        p = self.sbase.coerce(p)
        out = p.substitute(dict(zip(self.sbase.variables, self.images)), target=self.tbase)
        if isinstance(self.target, QuotientRing):
            out = self.target.project(out)
        return out


def preimage(phi: RingMap, ideal_gens: Iterable = (), pair_cap: int | None = None) -> Ideal:
    """``phi^{-1}(L)`` for ``L`` given by target generators (empty: the kernel).

    Builds ``H = <source modulus, target modulus, L, t_i - f_i>`` in the joint
    ring and eliminates the target variables.
    """
    sbase, tbase = phi.sbase, phi.tbase
    tnames = fresh_names(set(sbase.variables) | set(tbase.variables), "y_", tbase.nvars)
    joint = PolyRing(list(tnames) + list(sbase.variables), sbase.order)
    rename = dict(zip(tbase.variables, tnames))
    relabel = PolyRing(tnames, tbase.order)

    def lift_target(f: Polynomial) -> Polynomial:
        return tbase.coerce(f).substitute({v: relabel.gen(rename[v]) for v in tbase.variables},
                                          target=relabel).to_ring(joint)

    gens = []
    if isinstance(phi.source, QuotientRing):
        gens += [h.to_ring(joint) for h in phi.source.modulus]
    if isinstance(phi.target, QuotientRing):
        gens += [lift_target(g) for g in phi.target.modulus]
    gens += [lift_target(g) for g in ideal_gens]
    for v, f in zip(sbase.variables, phi.images):
        gens.append(joint.gen(v) - lift_target(f))
    res = eliminate(Ideal(joint, gens, pair_cap), tnames)
    return Ideal(phi.source, [g.to_ring(sbase) for g in res.generators], pair_cap)


def kernel_of_ring_map(phi: RingMap, pair_cap: int | None = None) -> Ideal:
    """Kernel of a map of (quotients of) polynomial algebras."""
    return preimage(phi, (), pair_cap)


def syzygy_module(v: Sequence[Polynomial], pair_cap: int | None = None) -> LeftSubmodule:
    """Generators of ``{a : sum a_i v_i = 0}`` as a submodule of ``R^k``.

    GB of ``{(e_i, v_i)}`` under ascending POT with the ``v`` slot last (so it
    dominates); basis vectors with a vanishing last slot are the syzygies.
    """
    v = list(v)
    if not v:
        raise ValueError("syzygies of an empty tuple")
    ring = v[0].ring
    k = len(v)
    gens = []
    for i, f in enumerate(v):
        vec = {(i, ring.zero_exp): ring.one().terms[ring.zero_exp]}
        for e, c in f.terms.items():
            vec[(k, e)] = c
        gens.append(vec)
    eng = Engine(ring, ring.order, pair_cap)
    gb = eng.groebner(gens)
    syz = [from_vec(ring, g, k + 1)[:k] for g in gb if all(p < k for p, _ in g)]
    return LeftSubmodule(ring, syz, rank=k, pair_cap=pair_cap)
