"""Closure at ``K[x, s] \\ {0}`` in ``A_n[s]`` around a pluggable Weyl-closure
step, and annihilators of ``f^s`` built on it.

The Weyl-closure step (closure at ``K(s)[x] \\ {0}`` over the field ``K(s)``)
is not implemented here.  It is supplied as an oracle: any callable taking a
rank-1 :class:`LeftSubmodule` of ``A_n[s]`` (generators with ``K[s]``
coefficients) and returning generators of the closed ideal in the same
representation.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Callable, Sequence

from .central import central_essential_rational_closure
from .errors import OracleContractError, UnsupportedCombinationError
from .groebner import fresh_names, syzygy_module
from .module import LeftSubmodule
from .pbw import PBWAlgebra, weyl_algebra
from .poly import Polynomial, PolyRing

__all__ = [
    "WeylClosureOracle",
    "identity_oracle",
    "TableOracle",
    "module_hash",
    "make_oracle",
    "central_weyl_closure",
    "build_g1",
    "build_g2",
    "ann_fs_algebra",
    "ann_fs",
]

WeylClosureOracle = Callable[[LeftSubmodule], Sequence]


def identity_oracle(module: LeftSubmodule) -> list:
    """Returns its input unchanged (correct whenever the input is already closed)."""
    return [g[0] for g in module.generators]


def module_hash(module: LeftSubmodule) -> str:
    """Stable key for a left ideal: sha256 of its reduced Gröbner basis."""
    text = "\n".join(module.gb_strings())
    return hashlib.sha256(text.encode()).hexdigest()


class TableOracle:
    """Looks answers up in a table of recorded closures.

    ``table`` maps :func:`module_hash` values of the oracle input to output
    generators.  ``entries`` hold ``{"input": [...], "output": [...]}``
    records whose inputs are hashed at query time in the queried algebra.
    """

    def __init__(self, table: dict | None = None, entries: list | None = None):
        self.table = dict(table or {})
        self.entries = list(entries or [])

    @classmethod
    def from_file(cls, path: str | Path) -> "TableOracle":
        data = json.loads(Path(path).read_text())
        if isinstance(data, list):
            return cls(entries=data)
        return cls(table=data.get("table", {}), entries=data.get("entries", []))

    def __call__(self, module: LeftSubmodule) -> list:
        key = module_hash(module)
        if key in self.table:
            return [module.algebra.parse(g) for g in self.table[key]]
        for entry in self.entries:
            src = LeftSubmodule(module.algebra, entry["input"])
            if module_hash(src) == key:
                return [module.algebra.parse(g) for g in entry["output"]]
        raise OracleContractError(f"no table entry for input with hash {key[:12]}")


def make_oracle(spec: str | None) -> WeylClosureOracle:
    """``identity`` or ``table:<file>``."""
    if spec in (None, "", "identity"):
        return identity_oracle
    if spec.startswith("table:"):
        return TableOracle.from_file(spec[len("table:"):])
    raise ValueError(f"unknown oracle {spec!r}; use 'identity' or 'table:<file>'")


def _check_weyl_setting(A, s_vars: Sequence[str]) -> None:
    if not isinstance(A, PBWAlgebra):
        raise UnsupportedCombinationError("expected a Weyl algebra with central parameters")
    if not A.central_block_ok(s_vars):
        raise UnsupportedCombinationError("parameter variables must be central")


def central_weyl_closure(I: LeftSubmodule, oracle: WeylClosureOracle = identity_oracle,
                         s_vars: Sequence[str] = ("s",), sat_cap: int = 50) -> LeftSubmodule:
    """Closure of a left ideal of ``A_n[s]`` at ``K[x, s] \\ {0}``.

    Steps: close at ``K[s] \\ {0}``, hand the result to the oracle, check
    that the oracle output contains its input, and close the ideal generated
    by the output at ``K[s] \\ {0}`` again.  The result is returned over
    ``I``'s algebra.
    """
    A = I.algebra
    s_vars = list(s_vars)
    _check_weyl_setting(A, s_vars)
    first = central_essential_rational_closure(I, s_vars, sat_cap).in_algebra(A)
    out = [A.coerce(g) for g in oracle(first)]
    H = LeftSubmodule(A, out, rank=1, pair_cap=I.pair_cap)
    for g in first.generators:
        if not H.contains(g):
            raise OracleContractError(f"oracle output does not contain the input generator {g[0]}")
    return central_essential_rational_closure(H, s_vars, sat_cap).in_algebra(A)


def ann_fs_algebra(ring: PolyRing, s: str | None = None) -> PBWAlgebra:
    """``A_n[s]`` over the variables of ``ring``, ``s`` first, derivations ``D<x>``."""
    xs = list(ring.variables)
    ds = [f"D{x}" for x in xs]
    taken = set(xs) | set(ds)
    if len(taken) != 2 * len(xs):
        raise ValueError("variable names clash with derivation names")
    s = s or ("s" if "s" not in taken else fresh_names(taken, "s", 1)[0])
    return weyl_algebra(len(xs), xs, ds).tensor_commuting([s])


def _derivations(A: PBWAlgebra, n: int) -> list:
    return list(A.gens[1 + n:1 + 2 * n])


def _lift(f: Polynomial, A: PBWAlgebra):
    """Embed a polynomial in ``x`` (or ``s, x``) into ``A_n[s]``."""
    return A.element({tuple(_spread(f, e, A)): c for e, c in f.terms.items()})


def _spread(f, e, A):
    out = [0] * A.nvars
    for v, a in zip(f.ring.variables, e):
        out[A.index[v]] = a
    return out


def build_g1(f: Polynomial, A: PBWAlgebra | None = None) -> list:
    """``f D_i - (df/dx_i) s`` for every variable."""
    A = A or ann_fs_algebra(f.ring)
    s = A.gens[0]
    return [_lift(f, A) * d - _lift(f.derivative(x), A) * s
            for x, d in zip(f.ring.variables, _derivations(A, f.ring.nvars))]


def build_g2(f: Polynomial, A: PBWAlgebra | None = None) -> list:
    """Order-one operators ``a_0 + sum a_i D_i`` from the syzygies
    ``(a_0, ..., a_n)`` of ``(f, s df/dx_1, ..., s df/dx_n)`` over ``K[s, x]``."""
    if f.is_constant():
        raise ValueError("f must be non-constant")
    A = A or ann_fs_algebra(f.ring)
    s_name = A.variables[0]
    R = PolyRing([s_name] + list(f.ring.variables))
    F = f.to_ring(R)
    s = R.gen(s_name)
    tup = [F] + [s * F.derivative(x) for x in f.ring.variables]
    syz = syzygy_module(tup)
    ds = _derivations(A, f.ring.nvars)
    ops = []
    for vec in syz.generators:
        total = R.zero()
        for a, t in zip(vec, tup):
            total = total + a * t
        if total:
            raise AssertionError("syzygy check failed")
        op = _lift(vec[0], A)
        for a, d in zip(vec[1:], ds):
            op = op + _lift(a, A) * d
        if op:
            ops.append(op)
    return ops


def ann_fs(f: Polynomial | Sequence[Polynomial], oracle: WeylClosureOracle = identity_oracle,
           seed: str = "g2", sat_cap: int = 50, pair_cap: int | None = None) -> LeftSubmodule:
    """``Ann_{D[s]} f^s`` for a single non-constant polynomial ``f``.

    The order-one operators (``seed`` ``g2`` or ``g1``) are closed with
    :func:`central_weyl_closure`; the output is checked to be closed at
    ``K[s] \\ {0}``.
    """
    if isinstance(f, (list, tuple)):
        if len(f) != 1:
            raise UnsupportedCombinationError("only a single factor f is supported")
        f = f[0]
    if f.is_constant():
        raise ValueError("f must be non-constant")
    A = ann_fs_algebra(f.ring)
    gens = build_g2(f, A) if seed == "g2" else build_g1(f, A)
    s = A.variables[0]
    result = central_weyl_closure(LeftSubmodule(A, gens, pair_cap=pair_cap), oracle, [s], sat_cap)
    again = central_essential_rational_closure(result, [s], sat_cap).in_algebra(A)
    if again != result:
        raise OracleContractError("the result is not closed")
    return result
