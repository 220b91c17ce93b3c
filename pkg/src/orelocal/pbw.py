"""G-algebras (PBW algebras): presentation checks, multiplication of standard
monomials by rewriting, presets, and intersection with coordinate subalgebras.

Relations are stored as ``x_j x_i = c_ij x_i x_j + d_ij`` for ``i < j``
(0-based internally, 1-based in spec files).  Omitted pairs commute.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

from .errors import NoPreimageOrderingError, NonCentralError, NotAGAlgebraError
from .module import LeftSubmodule
from .orderings import MonomialOrder, Weighted, parse_order, rational
from .poly import Algebra, Element, PolyRing

__all__ = [
    "PBWAlgebra",
    "PBWElement",
    "weyl_algebra",
    "shift_algebra",
    "qshift_algebra",
    "qweyl_algebra",
    "integration_algebra",
    "polynomial_algebra",
    "preset",
    "subalgebra_intersect",
    "find_elimination_order",
]

_ONE = mpq(1)
_ZERO = mpq(0)


class PBWElement(Element):
    __slots__ = ()

    def commutator(self, other) -> "PBWElement":
        other = self._other(other)
        return self * other - other * self


class PBWAlgebra(Algebra):
    """``K<x_1..x_n | x_j x_i = c_ij x_i x_j + d_ij>`` with a PBW basis.

    ``relations`` maps 0-based pairs ``(i, j)``, ``i < j``, to ``(c, d)`` where
    ``d`` is a term map, element, or string in standard-monomial form.  The
    ordering condition and the non-degeneracy (associativity) conditions are
    verified on construction unless ``check`` is false.
    """

    element_class = PBWElement

    def __init__(self, variables: Sequence[str], relations: Mapping | None = None,
                 order: MonomialOrder | str | None = None, check: bool = True):
        super().__init__(variables, order)
        n = self.nvars
        self.c = [[_ONE] * n for _ in range(n)]
        self.d: list[list[dict]] = [[{} for _ in range(n)] for _ in range(n)]
        scratch = PolyRing(self.variables)
        for (i, j), (c, d) in (relations or {}).items():
            if not (0 <= i < j < n):
                raise NotAGAlgebraError(f"relation index ({i}, {j}) must satisfy 0 <= i < j < {n}")
            c = rational(c)
            if not c:
                raise NotAGAlgebraError(f"c_{i + 1}{j + 1} must be non-zero")
            if isinstance(d, str):
                d = scratch.parse(d).terms
            elif isinstance(d, Element):
                d = dict(d.terms)
            elif d is None:
                d = {}
            else:
                d = {tuple(e): mpq(v) for e, v in dict(d).items() if v}
            self.c[i][j] = c
            self.d[i][j] = d
        self.is_commutative = all(
            self.c[i][j] == 1 and not self.d[i][j] for i in range(n) for j in range(i + 1, n))
        self._plain = [[self.c[i][j] == 1 and not self.d[i][j] for j in range(n)] for i in range(n)]
        self._dzero = [[not self.d[i][j] for j in range(n)] for i in range(n)]
        self.mul_mono = lru_cache(maxsize=1 << 17)(self._mul_mono)
        self._pair = lru_cache(maxsize=None)(self._pair_uncached)
        if check:
            self.check_ordering_condition()
            self.check_nondegeneracy()

    # -- presentation data --------------------------------------------------
    def relation(self, i: int, j: int) -> tuple:
        """``(c_ij, d_ij)`` for 0-based ``i < j``."""
        return self.c[i][j], self.element(self.d[i][j])

    def relations_dict(self) -> dict:
        out = {}
        for i in range(self.nvars):
            for j in range(i + 1, self.nvars):
                if not self._plain[i][j]:
                    out[(i, j)] = (self.c[i][j], dict(self.d[i][j]))
        return out

    def signature(self):
        rel = tuple(sorted((k, str(c), tuple(sorted(d.items()))) for k, (c, d) in self.relations_dict().items()))
        return ("PBWAlgebra", self.variables, self.order.name, rel)

    def ordering_condition_holds(self, order: MonomialOrder) -> bool:
        key = order.key
        n = self.nvars
        for i in range(n):
            for j in range(i + 1, n):
                d = self.d[i][j]
                if d:
                    e = [0] * n
                    e[i] += 1
                    e[j] += 1
                    top = key(tuple(e))
                    if any(key(t) >= top for t in d):
                        return False
        return True

    def check_ordering_condition(self) -> None:
        if not self.ordering_condition_holds(self.order):
            raise NotAGAlgebraError(f"some d_ij is not below x_i x_j under {self.order.name}")

    def check_nondegeneracy(self) -> None:
        n = self.nvars
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    if self._plain[i][j] and self._plain[j][k] and self._plain[i][k]:
                        continue
                    xi, xj, xk = (self._unit(t) for t in (i, j, k))
                    left = self.mul_terms(self.mul_terms({xk: _ONE}, {xj: _ONE}), {xi: _ONE})
                    right = self.mul_terms({xk: _ONE}, self.mul_terms({xj: _ONE}, {xi: _ONE}))
                    if left != right:
                        v = self.variables
                        raise NotAGAlgebraError(
                            f"non-degeneracy condition fails for {v[k]}*{v[j]}*{v[i]}")

    def _unit(self, i: int) -> tuple:
        e = [0] * self.nvars
        e[i] = 1
        return tuple(e)

    # -- multiplication -----------------------------------------------------
    def _mul_mono(self, a: tuple, b: tuple) -> dict:
        n = self.nvars
        j = -1
        for t in range(n - 1, -1, -1):
            if a[t]:
                j = t
                break
        if j < 0:
            return {b: _ONE}
        i = n
        for t in range(n):
            if b[t]:
                i = t
                break
        if i == n:
            return {a: _ONE}
        if j <= i:
            return {tuple(x + y for x, y in zip(a, b)): _ONE}
        # skew-commuting fast path: every crossing pair has d = 0
        coeff = _ONE
        simple = True
        dz, cm = self._dzero, self.c
        for jj in range(i + 1, n):
            if a[jj]:
                for ii in range(i, jj):
                    if b[ii]:
                        if not dz[ii][jj]:
                            simple = False
                            break
                        c = cm[ii][jj]
                        if c != 1:
                            coeff *= c ** (a[jj] * b[ii])
                if not simple:
                    break
        if simple:
            return {tuple(x + y for x, y in zip(a, b)): coeff}
        a_rest = list(a)
        a_rest[j] = 0
        a_rest = tuple(a_rest)
        b_rest = list(b)
        b_rest[i] = 0
        b_rest = tuple(b_rest)
        out: dict = {}
        mul = self.mul_mono
        for t, c in self._pair(j, a[j], i, b[i]).items():
            for u, d in mul(a_rest, t).items():
                cd = c * d
                for w, e in mul(u, b_rest).items():
                    v = out.get(w, _ZERO) + cd * e
                    if v:
                        out[w] = v
                    else:
                        out.pop(w, None)
        return out

    def _pair_uncached(self, j: int, a: int, i: int, b: int) -> dict:
        """``x_j^a * x_i^b`` for ``i < j`` in standard form."""
        n = self.nvars
        c = self.c[i][j]
        d = self.d[i][j]
        zero = (0,) * n

        def mono(pi, pj):
            e = [0] * n
            e[i] = pi
            e[j] = pj
            return tuple(e)

        if c == 1 and len(d) == 1 and zero in d:
            # [x_j, x_i] = delta central: closed Leibniz formula
            delta = d[zero]
            out = {}
            for k in range(min(a, b) + 1):
                out[mono(b - k, a - k)] = mpq(factorial(k) * comb(a, k) * comb(b, k)) * delta ** k
            return out
        mul = self.mul_mono
        out: dict = {}

        def acc(terms, scale):
            for w, e in terms.items():
                v = out.get(w, _ZERO) + scale * e
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)

        if a == 1:
            if b == 1:
                out[mono(1, 1)] = c
                acc(d, _ONE)
                return out
            tail = mono(b - 1, 0)
            acc(mul(mono(1, 1), tail), c)
            for t, dc in d.items():
                acc(mul(t, tail), dc)
            return out
        xj = mono(0, 1)
        for t, tc in self._pair(j, a - 1, i, b).items():
            acc(mul(xj, t), tc)
        return out

    # -- derived algebras ---------------------------------------------------
    def with_order(self, order: MonomialOrder | str) -> "PBWAlgebra":
        if isinstance(order, str):
            order = parse_order(order)
        alg = PBWAlgebra(self.variables, self.relations_dict(), order, check=False)
        alg.check_ordering_condition()
        return alg

    def tensor_commuting(self, new_vars: Sequence[str], front: bool = True,
                         order: MonomialOrder | None = None) -> "PBWAlgebra":
        """Adjoin central commuting variables (e.g. ``A_n[s]``)."""
        k = len(new_vars)
        shift = k if front else 0
        rels = {(i + shift, j + shift): (c, {self._pad(e, k, front): v for e, v in d.items()})
                for (i, j), (c, d) in self.relations_dict().items()}
        vs = list(new_vars) + list(self.variables) if front else list(self.variables) + list(new_vars)
        return PBWAlgebra(vs, rels, order or self.order, check=order is not None)

    @staticmethod
    def _pad(e: tuple, k: int, front: bool) -> tuple:
        return (0,) * k + tuple(e) if front else tuple(e) + (0,) * k

    def reordered(self, new_variables: Sequence[str], order: MonomialOrder | None = None) -> "PBWAlgebra":
        """The same algebra presented with permuted variables.

        Only permutations that keep every non-commuting pair in its original
        relative position are accepted (e.g. moving central variables).
        """
        perm = [self.index[v] for v in new_variables]
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError("new variable list must be a permutation")
        newpos = {old: new for new, old in enumerate(perm)}
        rels = {}
        for (i, j), (c, d) in self.relations_dict().items():
            ni, nj = newpos[i], newpos[j]
            if ni > nj:
                raise NotAGAlgebraError(
                    f"reordering would flip the relation between {self.variables[i]} and {self.variables[j]}")
            rels[(ni, nj)] = (c, {tuple(e[p] for p in perm): v for e, v in d.items()})
        return PBWAlgebra(list(new_variables), rels, order or self.order)

    def is_central(self, el) -> bool:
        el = self.coerce(el)
        return all(not el.commutator(g) for g in self.gens)

    def central_block_ok(self, block: Iterable[str]) -> bool:
        """Structural centrality: block variables commute plainly with everything."""
        idx = [self.index[v] for v in block]
        for b in idx:
            for t in range(self.nvars):
                if t != b:
                    i, j = min(b, t), max(b, t)
                    if not self._plain[i][j]:
                        return False
        return True

    def require_central(self, el) -> PBWElement:
        el = self.coerce(el)
        if not self.is_central(el):
            raise NonCentralError(f"{el} is not central in {self!r}")
        return el

    def to_dict(self) -> dict:
        rels = []
        for (i, j), (c, d) in sorted(self.relations_dict().items()):
            rels.append({"i": i + 1, "j": j + 1, "c": str(c), "d": str(self.element(d))})
        return {"vars": list(self.variables), "order": self.order.name, "relations": rels}


# -- presets -----------------------------------------------------------------

def _names(stem: str, n: int, names=None):
    if names is not None:
        return list(names)
    return [stem] if n == 1 and stem in ("x", "D", "s", "I") else [f"{stem}{k + 1}" for k in range(n)]


def _paired(xs, ys, make, order):
    n = len(xs)
    rels = {}
    for k in range(n):
        rels[(k, n + k)] = make(k, n)
    return PBWAlgebra(list(xs) + list(ys), rels, order)


def weyl_algebra(n: int = 1, xs=None, ds=None, order=None) -> PBWAlgebra:
    """``A_n``: ``D_i x_i = x_i D_i + 1``."""
    xs = _names("x", n, xs)
    ds = ds or ([f"D{v}" for v in xs])
    return _paired(xs, ds, lambda k, n: (1, {(0,) * (2 * n): 1}), order)


def shift_algebra(n: int = 1, xs=None, ss=None, order=None) -> PBWAlgebra:
    """``S_n``: ``s_i x_i = x_i s_i + s_i``."""
    xs = _names("x", n, xs)
    ss = ss or [f"S{v}" for v in xs]

    def make(k, n):
        e = [0] * (2 * n)
        e[n + k] = 1
        return (1, {tuple(e): 1})
    return _paired(xs, ss, make, order)


def qshift_algebra(q, n: int = 1, xs=None, ss=None, order=None) -> PBWAlgebra:
    """``s_i x_i = q x_i s_i``."""
    xs = _names("x", n, xs)
    ss = ss or [f"S{v}" for v in xs]
    return _paired(xs, ss, lambda k, n: (rational(q), {}), order)


def qweyl_algebra(q, n: int = 1, xs=None, ds=None, order=None) -> PBWAlgebra:
    """``D_i x_i = q x_i D_i + 1``."""
    xs = _names("x", n, xs)
    ds = ds or [f"D{v}" for v in xs]
    return _paired(xs, ds, lambda k, n: (rational(q), {(0,) * (2 * n): 1}), order)


def integration_algebra(n: int = 1, xs=None, ints=None, order=None) -> PBWAlgebra:
    """``I_i x_i = x_i I_i + I_i^2``."""
    xs = _names("x", n, xs)
    ints = ints or [f"I{v}" for v in xs]

    def make(k, n):
        e = [0] * (2 * n)
        e[n + k] = 2
        return (1, {tuple(e): 1})
    return _paired(xs, ints, make, order)


def polynomial_algebra(variables: Sequence[str], order=None) -> PBWAlgebra:
    return PBWAlgebra(variables, {}, order)


def preset(name: str, variables: Sequence[str] | None = None, q=None, order=None,
           central: Sequence[str] = ()) -> PBWAlgebra:
    """Named preset; ``variables`` lists the x-variables then the operators.
    ``central`` adjoins commuting variables in front (``A_n[s]``)."""
    name = name.lower()
    if name == "poly":
        alg = polynomial_algebra(variables or ["x"], order)
    else:
        if variables:
            if len(variables) % 2:
                raise ValueError(f"preset {name!r} needs an even number of variables")
            h = len(variables) // 2
            xs, ys = variables[:h], variables[h:]
        else:
            xs, ys = None, None
        n = len(xs) if xs else 1
        if name == "weyl":
            alg = weyl_algebra(n, xs, ys, order)
        elif name == "shift":
            alg = shift_algebra(n, xs, ys, order)
        elif name == "qshift":
            alg = qshift_algebra(q if q is not None else 2, n, xs, ys, order)
        elif name == "qweyl":
            alg = qweyl_algebra(q if q is not None else 2, n, xs, ys, order)
        elif name == "integration":
            alg = integration_algebra(n, xs, ys, order)
        else:
            raise ValueError(f"unknown preset {name!r}")
    if central:
        alg = alg.tensor_commuting(central, front=True)
    return alg


# -- elimination ---------------------------------------------------------------

def find_elimination_order(algebra: PBWAlgebra, drop: Sequence[str], weight_bound: int = 4) -> Weighted:
    """Weight order eliminating ``drop`` that keeps every ``d_ij`` admissible.

    Dropped variables get weights in ``1..weight_bound``, kept ones weight 0,
    ties go to the algebra's own order.  Small weight vectors are tried first.
    """
    drop_idx = [algebra.index[v] for v in drop]
    candidates = sorted(itertools.product(range(1, weight_bound + 1), repeat=len(drop_idx)),
                        key=lambda w: (sum(w), w))
    for ws in candidates:
        full = [0] * algebra.nvars
        for i, w in zip(drop_idx, ws):
            full[i] = w
        order = Weighted(full, algebra.order)
        if algebra.ordering_condition_holds(order):
            return order
    raise NoPreimageOrderingError(
        f"no admissible elimination ordering for {', '.join(drop)} with weights <= {weight_bound}")


def subalgebra_intersect(module: LeftSubmodule, keep: Sequence[str], weight_bound: int = 4) -> list[PBWElement]:
    """Generators of ``I ∩ K<keep>`` for a left ideal ``I`` (rank 1)."""
    algebra = module.algebra
    if module.rank != 1:
        raise ValueError("subalgebra intersection is defined for left ideals (rank 1)")
    keep = list(keep)
    for v in keep:
        if v not in algebra.index:
            raise ValueError(f"unknown variable {v!r}")
    drop = [v for v in algebra.variables if v not in keep]
    if not drop:
        return [g[0] for g in module.groebner_basis()]
    order = find_elimination_order(algebra, drop, weight_bound) if isinstance(algebra, PBWAlgebra) \
        else Weighted([1 if v in drop else 0 for v in algebra.variables], algebra.order)
    gb = module.groebner_basis(order)
    drop_idx = [algebra.index[v] for v in drop]
    return [g[0] for g in gb if all(not e[i] for e in g[0].terms for i in drop_idx)]
