"""JSON file formats for rings, ideals, algebras, modules and decompositions.

Ring:          {"vars": [...], "order": "...", "quotient": ["<poly>", ...]}
Ideal:         {"ring": <ring>, "generators": ["<poly>", ...]}
Algebra:       {"vars": [...], "order": "...", "preset": "weyl|shift|qweyl|qshift|integration|poly",
                "q": "<rat>", "central": [...],
                "relations": [{"i": 1, "j": 2, "c": "<rat>", "d": "<poly>"}]}
Module:        {"algebra": <algebra>, "rank": r, "generators": ["<el>" | ["<el>", ...], ...]}
Decomposition: {"ring": <ring>, "target": [...], "components": [{"Q": [...], "P": [...]}, ...]}

Nested specs may also be given as paths to JSON files, resolved relative to
the referring file.  Relation indices are 1-based.
"""

from __future__ import annotations

import json
from pathlib import Path

from .closure import PrimaryDecomposition
from .errors import ParseError
from .groebner import Ideal
from .module import LeftSubmodule
from .orderings import ModuleOrder, parse_order
from .pbw import PBWAlgebra, preset
from .poly import PolyRing, QuotientRing

__all__ = [
    "load_json",
    "ring_from_spec",
    "algebra_from_spec",
    "ideal_from_spec",
    "module_from_spec",
    "decomposition_from_spec",
    "ideal_to_spec",
    "module_to_spec",
]


def load_json(path: str | Path) -> dict:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None
    if isinstance(data, dict):
        data.setdefault("__dir__", str(path.parent))
    return data


def _resolve(value, base_dir: str | None):
    if isinstance(value, str):
        p = Path(value)
        if not p.is_absolute() and base_dir:
            p = Path(base_dir) / p
        return load_json(p)
    return value


def _order(text):
    if text is None:
        return None
    order = parse_order(text)
    return order.base if isinstance(order, ModuleOrder) else order


def _require(spec: dict, key: str, what: str):
    if key not in spec:
        raise ParseError(f"{what} spec is missing {key!r}")
    return spec[key]


def ring_from_spec(spec: dict, order_override: str | None = None) -> PolyRing | QuotientRing:
    variables = _require(spec, "vars", "ring")
    ring = PolyRing(variables, _order(order_override or spec.get("order")))
    quotient = spec.get("quotient") or []
    if quotient:
        return QuotientRing(ring, [ring.parse(g) for g in quotient])
    return ring


def algebra_from_spec(spec: dict, order_override: str | None = None) -> PBWAlgebra:
    order = _order(order_override or spec.get("order"))
    central = spec.get("central") or []
    name = spec.get("preset")
    if name:
        return preset(name, spec.get("vars"), spec.get("q"), order, central)
    variables = _require(spec, "vars", "algebra")
    rels = {}
    for rel in spec.get("relations", []):
        i, j = int(rel["i"]) - 1, int(rel["j"]) - 1
        rels[(i, j)] = (rel.get("c", "1"), rel.get("d") or None)
    alg = PBWAlgebra(variables, rels, order)
    if central:
        alg = alg.tensor_commuting(central, front=True, order=order)
    return alg


def ideal_from_spec(spec: dict, ring=None, order_override: str | None = None,
                    pair_cap: int | None = None) -> Ideal:
    if ring is None:
        ring = ring_from_spec(_resolve(_require(spec, "ring", "ideal"), spec.get("__dir__")), order_override)
    base = ring.base if isinstance(ring, QuotientRing) else ring
    gens = [base.parse(g) for g in spec.get("generators", [])]
    return Ideal(ring, gens, pair_cap)


def module_from_spec(spec: dict, algebra=None, order_override: str | None = None,
                     pair_cap: int | None = None) -> LeftSubmodule:
    if algebra is None:
        algebra = algebra_from_spec(_resolve(_require(spec, "algebra", "module"), spec.get("__dir__")),
                                    order_override)
    gens = []
    for g in spec.get("generators", []):
        if isinstance(g, str):
            gens.append((algebra.parse(g),))
        else:
            gens.append(tuple(algebra.parse(c) for c in g))
    rank = spec.get("rank")
    return LeftSubmodule(algebra, gens, rank=rank, pair_cap=pair_cap)


def decomposition_from_spec(spec: dict, ring=None, order_override: str | None = None,
                            pair_cap: int | None = None) -> PrimaryDecomposition:
    if ring is None:
        ring = ring_from_spec(_resolve(_require(spec, "ring", "decomposition"), spec.get("__dir__")),
                              order_override)
    target = Ideal(ring, [_parse(ring, g) for g in _require(spec, "target", "decomposition")], pair_cap)
    comps = []
    for comp in _require(spec, "components", "decomposition"):
        Q = Ideal(ring, [_parse(ring, g) for g in comp["Q"]], pair_cap)
        P = Ideal(ring, [_parse(ring, g) for g in comp["P"]], pair_cap) if comp.get("P") else None
        comps.append((Q, P))
    return PrimaryDecomposition(target, comps)


def _parse(ring, text):
    base = ring.base if isinstance(ring, QuotientRing) else ring
    return base.parse(text)


def ideal_to_spec(ideal: Ideal) -> dict:
    return {"ring": ideal.ring.to_dict(), "generators": [str(g) for g in ideal.groebner_basis()]}


def module_to_spec(module: LeftSubmodule) -> dict:
    gens = [str(v[0]) if module.rank == 1 else [str(c) for c in v] for v in module.groebner_basis()]
    return {"algebra": module.algebra.to_dict(), "rank": module.rank, "generators": gens}
