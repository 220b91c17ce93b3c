"""Closures of left submodules with respect to central denominator sets.

Quotients ``I : q`` and saturation by central ``q``, the rational closure for
a central block of variables (via an antiblock ordering and the
leading-coefficient candidate), the test whether a geometric closure already
equals the rational one, and iterated closures.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    NonCentralError,
    NotMultipleError,
    ResourceError,
    UnsupportedCombinationError,
)
from .groebner import Ideal, normal_form
from .intersection import MultiplicativeSetSpec
from .closure import intersect_all
from .module import LeftSubmodule
from .orderings import DegRevLex, antiblock
from .pbw import PBWAlgebra, subalgebra_intersect
from .poly import Algebra, Element, Polynomial, PolyRing

__all__ = [
    "CentralElement",
    "ClosureResult",
    "central_quotient",
    "sat_index",
    "split_module",
    "monoidal_central_closure",
    "poly_gcd",
    "squarefree_part",
    "block_algebra",
    "transfer",
    "leading_block_coefficient",
    "central_essential_rational_closure",
    "central_geometric_equality_test",
    "iterated_closure",
]


def _is_central(algebra: Algebra, el: Element) -> bool:
    if algebra.is_commutative:
        return True
    return all(el * g == g * el for g in algebra.gens)


@dataclass(frozen=True)
class CentralElement:
    """An element certified to commute with every generator."""

    value: Element

    @classmethod
    def certify(cls, algebra: Algebra, value) -> "CentralElement":
        value = algebra.coerce(value)
        if not value:
            raise ValueError("central element must be non-zero")
        if not _is_central(algebra, value):
            raise NonCentralError(f"{value} is not central")
        return cls(value)


def _central(algebra, q) -> Element:
    if isinstance(q, CentralElement):
        return algebra.coerce(q.value)
    return CentralElement.certify(algebra, q).value


# -- quotient and saturation --------------------------------------------------------

def central_quotient(I: LeftSubmodule, q) -> LeftSubmodule:
    """``I : q = {f : q f ∈ I}`` for a central ``q``.

    Computed in ``A^(2r)`` from the generators ``(e_i, q e_i)`` and
    ``(0, g)``: basis vectors with a vanishing upper block carry ``I : q``.
    """
    A, r = I.algebra, I.rank
    q = _central(A, q)
    zero = A.zero()
    gens = []
    for i in range(r):
        low = [zero] * r
        high = [zero] * r
        low[i] = A.one()
        high[i] = q
        gens.append(tuple(low) + tuple(high))
    for g in I.generators:
        gens.append((zero,) * r + tuple(g))
    return I._like(I._lower_block(gens, 2 * r, r))


def sat_index(I: LeftSubmodule, q, cap: int = 50) -> tuple[int, LeftSubmodule]:
    """``(n, I : q^n)`` for the first ``n`` with ``I : q^n = I : q^(n+1)``."""
    q = _central(I.algebra, q)
    current = I
    for n in range(cap + 1):
        nxt = central_quotient(current, q)
        if nxt == current:
            return n, current
        current = nxt
    raise ResourceError(f"saturation index exceeds the cap {cap}; raise --sat-cap")


def split_module(I: LeftSubmodule, q, cap: int = 50) -> tuple[LeftSubmodule, LeftSubmodule, int]:
    """``(I + q^n A^r, I : q^n, n)``; for ``n = 0`` the first factor is ``A^r``."""
    A, r = I.algebra, I.rank
    q = _central(A, q)
    n, sat = sat_index(I, q, cap)
    power = q ** n if n else A.one()
    unit = [tuple(power if i == p else A.zero() for i in range(r)) for p in range(r)]
    return I._like(I.generators + unit), sat, n


def monoidal_central_closure(I: LeftSubmodule, F: Sequence, z, cap: int = 50) -> LeftSubmodule:
    """Closure at the monoid generated by ``F`` through a central multiple
    ``z`` of ``f_1 ... f_k``: the saturation ``I : z^∞``."""
    A = I.algebra
    F = [A.coerce(f) for f in F]
    for a, b in itertools.combinations(F, 2):
        if a * b != b * a:
            raise UnsupportedCombinationError(f"{a} and {b} do not commute")
    z = _central(A, z)
    prod = A.one()
    for f in F:
        prod = prod * f
    used = sorted(set().union(z.support_variables(), *(f.support_variables() for f in F)),
                  key=A.index.get)
    if isinstance(A, PBWAlgebra):
        for u, v in itertools.combinations(used, 2):
            i, j = sorted((A.index[u], A.index[v]))
            if not A._plain[i][j]:
                raise NotMultipleError("divisibility can only be certified in a commutative subalgebra")
    sub = PolyRing(used or ["_"])
    try:
        _to_poly(z, sub).divide_exact(_to_poly(prod, sub))
    except ArithmeticError:
        raise NotMultipleError(f"{z} is not a multiple of {prod}") from None
    return sat_index(I, z, cap)[1]


def _to_poly(el: Element, ring: PolyRing) -> Polynomial:
    names = el.ring.variables
    idx = [ring.index.get(v) for v in names]
    out = {}
    for e, c in el.terms.items():
        f = [0] * ring.nvars
        for i, a in enumerate(e):
            if a:
                f[idx[i]] = a
        out[tuple(f)] = c
    return ring._from_clean(out)


# -- squarefree part ------------------------------------------------------------------

def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd.  One-variable inputs use Euclid; otherwise ``f g / lcm`` with
    the lcm generating ``<f> ∩ <g>``."""
    ring = f.ring
    if not f:
        return g.monic() if g else g
    if not g:
        return f.monic()
    support = f.support_variables() | g.support_variables()
    if len(support) <= 1:
        a, b = f, g
        while b:
            a, b = b, normal_form(a, [b.monic()])
        return a.monic()
    meet = Ideal(ring, [f]).intersect(Ideal(ring, [g])).groebner_basis()
    return (f * g).divide_exact(meet[0]).monic()


def squarefree_part(f: Polynomial) -> Polynomial:
    """Product of the distinct irreducible factors of ``f`` (monic), without
    factoring: ``f / gcd(f, df/dx_1, ..., df/dx_n)``, repeated until stable."""
    if f.is_constant():
        raise ValueError("squarefree part of a constant is undefined")
    current = f
    while True:
        g = current
        for v in current.support_variables():
            d = current.derivative(v)
            if d:
                g = poly_gcd(g, d)
        nxt = current.divide_exact(g).monic()
        if nxt == current.monic():
            return nxt
        current = nxt


# -- central block setting -----------------------------------------------------------

def block_algebra(A: Algebra, block: Sequence[str]) -> Algebra:
    """``A`` with the central ``block`` moved to the front and the antiblock
    order ``(degrevlex on block, degrevlex on the rest)``, rest compared first."""
    block = list(block)
    for v in block:
        if v not in A.index:
            raise ValueError(f"unknown block variable {v!r}")
    if isinstance(A, PBWAlgebra) and not A.central_block_ok(block):
        raise NonCentralError(f"the block {', '.join(block)} is not central")
    rest = [v for v in A.variables if v not in block]
    order = antiblock(DegRevLex(), DegRevLex(), len(block))
    if isinstance(A, PBWAlgebra):
        return A.reordered(block + rest, order)
    return PolyRing(block + rest, order)


def transfer(el_or_vec, target: Algebra):
    """Move an element or vector to an algebra on the same variable names."""
    if isinstance(el_or_vec, Element):
        src = el_or_vec.ring
        if src == target:
            return el_or_vec
        perm = [src.index[v] for v in target.variables]
        return target._from_clean({tuple(e[p] for p in perm): c for e, c in el_or_vec.terms.items()})
    return tuple(transfer(c, target) for c in el_or_vec)


def _transfer_module(M: LeftSubmodule, target: Algebra) -> LeftSubmodule:
    if M.algebra == target:
        return M
    return LeftSubmodule(target, [transfer(g, target) for g in M.generators], rank=M.rank,
                         pair_cap=M.pair_cap)


def leading_block_coefficient(vector: Sequence[Element], k: int, order, ring: PolyRing) -> Polynomial:
    """Coefficient in ``K[block]`` of the leading (position, non-block
    exponent) of ``vector``, for an antiblock ``order`` splitting after ``k``."""
    p = max(i for i, c in enumerate(vector) if c)
    comp = vector[p]
    key2 = order.second.key
    top = max((e[k:] for e in comp.terms), key=key2)
    return ring._from_clean({e[:k]: c for e, c in comp.terms.items() if e[k:] == top})


@dataclass
class ClosureResult:
    """Closure at ``K[block] \\ {0}`` with its certificate data.

    ``closure`` lives over ``algebra`` (block first, antiblock order);
    every generator ``g`` satisfies ``candidate^saturation_index * g ∈ I``,
    recorded per generator in ``witnesses``.
    """

    closure: LeftSubmodule
    saturation_index: int
    candidate: Polynomial
    witnesses: list = field(default_factory=list)
    algebra: Algebra | None = None
    input_gb: list = field(default_factory=list)

    def in_algebra(self, A: Algebra) -> LeftSubmodule:
        return _transfer_module(self.closure, A)


def central_essential_rational_closure(I: LeftSubmodule, block: Sequence[str],
                                       sat_cap: int = 50, verify: bool = True) -> ClosureResult:
    """``I^S`` for ``S = K[block] \\ {0}`` with ``block`` central.

    Take a left Gröbner basis under the antiblock order, let ``h`` be the
    squarefree part of the product of the block coefficients of the
    leading terms with respect to the non-block variables, and saturate by
    ``h``.
    """
    block = list(block)
    B = block_algebra(I.algebra, block)
    k = len(block)
    order = B.order
    J = _transfer_module(I, B)
    H = J.groebner_basis()
    ring = PolyRing(block)
    prod = ring.one()
    for g in H:
        lc = leading_block_coefficient(g, k, order, ring)
        if not lc.is_constant():
            prod = prod * squarefree_part(lc)
    if prod.is_constant():
        h, n, sat = ring.one(), 0, J
    else:
        h = squarefree_part(prod)
        n, sat = sat_index(J, _embed_block(h, B), sat_cap)
    closure = sat._like(sat.groebner_basis())
    mult = _embed_block(h, B) ** n
    witnesses = [mult] * len(closure.generators)
    if verify:
        for g in closure.generators:
            if not J.contains(tuple(mult * c for c in g)):
                raise AssertionError("closure witness check failed")
    return ClosureResult(closure, n, h, witnesses, B, H)


def _embed_block(h: Polynomial, B: Algebra) -> Element:
    idx = [B.index[v] for v in h.ring.variables]
    out = {}
    for e, c in h.terms.items():
        f = [0] * B.nvars
        for i, a in zip(idx, e):
            f[i] = a
        out[tuple(f)] = c
    return B._from_clean(out)


def central_geometric_equality_test(I: LeftSubmodule, p: Ideal, block: Sequence[str],
                                    sat_cap: int = 50, weight_bound: int = 4) -> bool:
    """Whether the closure at ``K[block] \\ p`` equals the rational closure,
    i.e. whether ``Ann_B(I^S / I)`` is not contained in the prime ``p``."""
    res = central_essential_rational_closure(I, block, sat_cap)
    B = res.algebra
    J = _transfer_module(I, B)
    ring = PolyRing(list(block))
    p_local = Ideal(ring, [g.to_ring(ring) for g in p.lifted_generators()])
    anns = []
    r = J.rank
    for g in res.closure.generators:
        if J.contains(g):
            continue
        # {a : a g ∈ I} from (1, g) and (0, f) in A^(1+r)
        gens = [(B.one(),) + tuple(g)] + [(B.zero(),) + tuple(f) for f in J.generators]
        ann = [v[0] for v in J._lower_block(gens, 1 + r, 1)]
        keep = subalgebra_intersect(LeftSubmodule(B, ann, pair_cap=J.pair_cap), block, weight_bound)
        anns.append(Ideal(ring, [_to_poly(a, ring) for a in keep]))
    total = intersect_all(ring, anns)
    return not total.issubset(p_local)


def _closure_step(I: LeftSubmodule, S: MultiplicativeSetSpec, sat_cap: int) -> LeftSubmodule:
    A = I.algebra
    if S.kind == "monoidal":
        z = A.one()
        for f in S.generators:
            z = z * A.coerce(transfer(f, A) if isinstance(f, Element) and f.ring != A else f)
        return sat_index(I, z, sat_cap)[1]
    if S.kind == "rational":
        return central_essential_rational_closure(I, S.sub_vars, sat_cap).in_algebra(A)
    raise UnsupportedCombinationError(f"iterated closure does not support {S.kind} sets")


def iterated_closure(I: LeftSubmodule, S1: MultiplicativeSetSpec, S2: MultiplicativeSetSpec,
                     sat_cap: int = 50) -> LeftSubmodule:
    """``(I^S1)^S2``, equal to ``I^(S1 S2)`` for central sets."""
    A = I.algebra
    for S in (S1, S2):
        if S.kind == "monoidal":
            for f in S.generators:
                if not _is_central(A, A.coerce(transfer(f, A) if isinstance(f, Element) and f.ring != A else f)):
                    raise UnsupportedCombinationError("non-central monoid generators do not commute with the other set")
        elif S.kind == "rational":
            if isinstance(A, PBWAlgebra) and not A.central_block_ok(S.sub_vars):
                raise UnsupportedCombinationError("rational set over a non-central block")
        else:
            raise UnsupportedCombinationError(f"iterated closure does not support {S.kind} sets")
    return _closure_step(_closure_step(I, S1, sat_cap), S2, sat_cap)
