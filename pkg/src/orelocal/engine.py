"""Left Buchberger algorithm over submodules of A^r.

Vectors are dicts ``{(pos, exp): mpq}`` with 0-based positions, ordered by
ascending position-over-term: the highest non-zero position carries the
leading term.  ``A`` is anything with ``mul_mono``/``is_commutative``
(a commutative :class:`~orelocal.poly.PolyRing` or a PBW algebra), so the
same code serves ideals, syzygies and noncommutative left modules.
"""

from __future__ import annotations

import heapq
import logging
from typing import Iterable, Sequence

from gmpy2 import mpq

from .errors import ResourceError
from .orderings import DegRevLex, MonomialOrder, Weighted

log = logging.getLogger(__name__)

DEFAULT_PAIR_CAP = 200_000
_ZERO = mpq(0)


def _degree_compatible(order: MonomialOrder) -> bool:
    if isinstance(order, DegRevLex):
        return True
    if isinstance(order, Weighted):
        return all(w > 0 for w in order.weights)
    return False


class _Item:
    __slots__ = ("vec", "pos", "exp", "sugar", "cache")

    def __init__(self, vec, pos, exp, sugar):
        self.vec = vec
        self.pos = pos
        self.exp = exp
        self.sugar = sugar
        self.cache = {}


class Engine:
    """Gröbner computations for one algebra under one module order."""

    def __init__(self, algebra, order: MonomialOrder, pair_cap: int | None = None):
        self.algebra = algebra
        self.order = order
        self.commutative = algebra.is_commutative
        self.pair_cap = DEFAULT_PAIR_CAP if pair_cap is None else pair_cap
        okey = order.key
        self.vkey = lambda pe: (pe[0], okey(pe[1]))
        self.pairs_processed = 0
        # sugar selection for degree-compatible orders, smallest lcm first otherwise
        self.sugar_strategy = _degree_compatible(order)

    # -- basic vector operations --------------------------------------------
    def lead(self, v: dict) -> tuple:
        return max(v, key=self.vkey)

    def mul_mono(self, m: tuple, v: dict) -> dict:
        """Left multiplication ``x^m * v``."""
        if not any(m):
            return dict(v)
        out: dict = {}
        if self.commutative:
            for (p, e), c in v.items():
                out[(p, tuple(a + b for a, b in zip(m, e)))] = c
            return out
        mm = self.algebra.mul_mono
        for (p, e), c in v.items():
            for f, d in mm(m, e).items():
                k = (p, f)
                val = out.get(k, _ZERO) + c * d
                if val:
                    out[k] = val
                else:
                    out.pop(k, None)
        return out

    def _shifted(self, item: _Item, m: tuple) -> dict:
        got = item.cache.get(m)
        if got is None:
            got = self.mul_mono(m, item.vec)
            if len(item.cache) < 512:
                item.cache[m] = got
        return got

    @staticmethod
    def _axpy(h: dict, c, v: dict) -> None:
        """In place ``h -= c * v``."""
        for k, d in v.items():
            val = h.get(k, _ZERO) - c * d
            if val:
                h[k] = val
            else:
                del h[k]

    @staticmethod
    def _degree(v: dict) -> int:
        return max((sum(e) for _, e in v), default=0)

    def _find_divisor(self, basis: Sequence[_Item], pos: int, exp: tuple):
        for it in basis:
            if it.pos == pos:
                ie = it.exp
                for a, b in zip(ie, exp):
                    if a > b:
                        break
                else:
                    return it
        return None

    def reduce(self, v: dict, basis: Sequence[_Item], full: bool = False) -> dict:
        """Left normal form of ``v``.  With ``full`` every term is reduced,
        otherwise only leading terms (the classical LeftNF)."""
        h = dict(v)
        rem: dict = {}
        vkey = self.vkey
        while h:
            lp, le = max(h, key=vkey)
            it = self._find_divisor(basis, lp, le)
            if it is None:
                if not full:
                    break
                rem[(lp, le)] = h.pop((lp, le))
                continue
            m = tuple(a - b for a, b in zip(le, it.exp))
            sh = self._shifted(it, m)
            c = h[(lp, le)] / sh[(lp, le)]
            self._axpy(h, c, sh)
        if full:
            h.update(rem)
        return h

    def monic(self, v: dict) -> dict:
        if not v:
            return v
        c = v[self.lead(v)]
        if c == 1:
            return v
        return {k: d / c for k, d in v.items()}

    def make_item(self, v: dict, sugar: int | None = None) -> _Item:
        v = self.monic(v)
        p, e = self.lead(v)
        return _Item(v, p, e, self._degree(v) if sugar is None else sugar)

    # -- Buchberger ---------------------------------------------------------
    def spoly(self, a: _Item, b: _Item) -> tuple[dict, int]:
        lcm = tuple(x if x > y else y for x, y in zip(a.exp, b.exp))
        ma = tuple(x - y for x, y in zip(lcm, a.exp))
        mb = tuple(x - y for x, y in zip(lcm, b.exp))
        va = self._shifted(a, ma)
        vb = self._shifted(b, mb)
        k = (a.pos, lcm)
        ca, cb = va[k], vb[k]
        s = {kk: d * cb for kk, d in va.items()}
        self._axpy(s, ca, vb)
        sugar = max(a.sugar + sum(ma), b.sugar + sum(mb))
        return s, sugar

    def groebner(self, gens: Iterable[dict], reduced: bool = True) -> list[dict]:
        gens = [g for g in gens if g]
        if not gens:
            return []
        basis: list[_Item] = []
        alive: list[bool] = []
        heap: list = []
        counter = 0

        def add(v: dict, sugar: int):
            nonlocal counter
            it = self.make_item(v, sugar)
            t = len(basis)
            pos, be = it.pos, it.exp
            # Gebauer-Möller: drop old pairs made redundant by the new lead.
            for entry in heap:
                i, j, lcm, st = entry[3:]
                if st[0] and basis[i].pos == pos:
                    if all(x <= y for x, y in zip(be, lcm)):
                        li = tuple(x if x > y else y for x, y in zip(basis[i].exp, be))
                        lj = tuple(x if x > y else y for x, y in zip(basis[j].exp, be))
                        if li != lcm and lj != lcm:
                            st[0] = False
            cand = []
            for i, other in enumerate(basis):
                if alive[i] and other.pos == pos:
                    lcm = tuple(x if x > y else y for x, y in zip(other.exp, be))
                    coprime = all(x == 0 or y == 0 for x, y in zip(other.exp, be))
                    cand.append((lcm, i, coprime))
            keep = []
            by_lcm: dict = {}
            for lcm, i, coprime in cand:
                by_lcm.setdefault(lcm, []).append((i, coprime))
            lcms = list(by_lcm)
            for lcm in lcms:
                if any(o != lcm and all(x <= y for x, y in zip(o, lcm)) for o in lcms):
                    continue
                group = by_lcm[lcm]
                if self.product_criterion and any(cp for _, cp in group):
                    continue
                keep.append((lcm, group[0][0]))
            for lcm, i in keep:
                if self.sugar_strategy:
                    lsug = max(basis[i].sugar + sum(lcm) - sum(basis[i].exp), sugar + sum(lcm) - sum(be))
                    k1, k2 = lsug, sum(lcm)
                else:
                    k1, k2 = self.vkey((pos, lcm)), 0
                counter += 1
                heapq.heappush(heap, (k1, k2, counter, i, t, lcm, [True]))
            # the new lead may make older basis elements redundant as divisors
            for i, other in enumerate(basis):
                if alive[i] and other.pos == pos and all(x <= y for x, y in zip(be, other.exp)):
                    alive[i] = False
            basis.append(it)
            alive.append(True)

        self.product_criterion = self.commutative and max(p for g in gens for p, _ in g) == 0
        for g in sorted(gens, key=lambda v: self.vkey(self.lead(v))):
            h = self.reduce(g, [b for b, a in zip(basis, alive) if a], full=True)
            if h:
                add(h, self._degree(g))
        while heap:
            entry = heapq.heappop(heap)
            if not entry[6][0]:
                continue
            i, j = entry[3], entry[4]
            self.pairs_processed += 1
            if self.pairs_processed > self.pair_cap:
                raise ResourceError(f"pair cap {self.pair_cap} exceeded; raise --pair-cap")
            s, sugar = self.spoly(basis[i], basis[j])
            if not s:
                continue
            # tail reduction keeps lex tails from swelling
            h = self.reduce(s, [b for b, a in zip(basis, alive) if a], full=True)
            if h:
                add(h, sugar)
        live = [b for b, a in zip(basis, alive) if a]
        if not reduced:
            return [b.vec for b in live]
        return self.interreduce([b.vec for b in live], assume_gb=True)

    def interreduce(self, vecs: Sequence[dict], assume_gb: bool = False) -> list[dict]:
        """Minimal, tail-reduced, monic basis sorted by ascending leading term."""
        items = sorted((self.make_item(v) for v in vecs if v), key=lambda it: self.vkey((it.pos, it.exp)))
        minimal: list[_Item] = []
        for it in items:
            if self._find_divisor(minimal, it.pos, it.exp) is None:
                minimal.append(it)
        out = []
        for k, it in enumerate(minimal):
            others = minimal[:k] + minimal[k + 1:]
            v = self.reduce(it.vec, others, full=True)
            out.append(self.monic(v))
        return sorted(out, key=lambda v: self.vkey(self.lead(v)))

    def is_groebner(self, vecs: Sequence[dict]) -> bool:
        """Buchberger criterion: every S-vector reduces to zero."""
        items = [self.make_item(v) for v in vecs if v]
        for a in range(len(items)):
            for b in range(a + 1, len(items)):
                if items[a].pos != items[b].pos:
                    continue
                s, _ = self.spoly(items[a], items[b])
                if self.reduce(s, items):
                    return False
        return True

    def items(self, vecs: Sequence[dict]) -> list[_Item]:
        return [self.make_item(v) for v in vecs if v]
