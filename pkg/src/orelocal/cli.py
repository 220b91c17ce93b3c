"""Command-line front end.

Every command prints a human-readable section followed by a JSON section
(after a ``--- json ---`` line).  Exit status: 0 on success, 1 when the
mathematical answer is empty or false, 2 on errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import io
from .central import (
    central_essential_rational_closure,
    central_geometric_equality_test,
    split_module,
)
from .closure import closure_decomp, complementary_part, split_by_element, symbolic_power
from .engine import DEFAULT_PAIR_CAP
from .errors import OreLocalError
from .fractions import FractionSpace, OreFraction, evaluate_expression
from .groebner import Ideal, RingMap, eliminate, kernel_of_ring_map, normal_form, preimage
from .intersection import (
    MultiplicativeSetSpec,
    biggest_monomial_ideal,
    intersect_geometric,
    intersect_monoid,
    intersect_rational,
    zero_in_monoid,
)
from .module import LeftSubmodule, format_vector, left_normal_form
from .orderings import parse_order
from .pbw import subalgebra_intersect
from .poly import PolyRing, QuotientRing, _tokenize
from .weyl import ann_fs, central_weyl_closure, make_oracle


class Report:
    def __init__(self, command: str):
        self.lines: list[str] = []
        self.data: dict = {"command": command}
        self.status = 0

    def say(self, text: str = "") -> None:
        self.lines.append(text)

    def set(self, **kw) -> None:
        self.data.update(kw)

    def render(self) -> str:
        return "\n".join(self.lines) + "\n--- json ---\n" + json.dumps(self.data, indent=2, sort_keys=True) + "\n"


def _split_list(text: str | None) -> list[str]:
    if not text:
        return []
    return [t.strip() for t in text.split(",") if t.strip()]


def _order_name(order) -> str:
    return order.name


# -- loaders -------------------------------------------------------------------------

def _load_ideal_or_module(args, path: str):
    """A commutative Ideal, or a LeftSubmodule when an algebra is involved."""
    spec = io.load_json(path)
    algebra = None
    if getattr(args, "algebra", None):
        algebra = io.algebra_from_spec(io.load_json(args.algebra), args.order)
    if algebra is not None or "algebra" in spec:
        return io.module_from_spec(spec, algebra, args.order, args.pair_cap)
    return io.ideal_from_spec(spec, None, args.order, args.pair_cap)


def _vector(algebra, text: str, rank: int):
    text = text.strip()
    if text.startswith("["):
        parts = json.loads(text)
        return tuple(algebra.parse(p) for p in parts)
    if rank != 1:
        raise OreLocalError("give vectors as a JSON list of strings")
    return (algebra.parse(text),)


def _set_spec(args, ring) -> MultiplicativeSetSpec:
    base = ring.base if isinstance(ring, QuotientRing) else ring
    kind = args.kind
    if kind in ("monoid", "monoidal"):
        return MultiplicativeSetSpec.monoidal(ring, [base.parse(g) for g in _split_list(args.gens)])
    if kind == "geometric":
        prime = Ideal(ring, [base.parse(g) for g in _split_list(args.prime)])
        return MultiplicativeSetSpec.geometric(prime)
    if kind == "rational":
        return MultiplicativeSetSpec.rational(ring, _split_list(args.sub_vars))
    raise OreLocalError(f"unknown set kind {kind!r}")


def _gb_lines(report: Report, key: str, gens: list[str], title: str) -> None:
    report.say(f"{title} ({len(gens)}):")
    for g in gens:
        report.say(f"  {g}")
    report.set(**{key: gens})


def _block(args, module) -> list[str]:
    block = _split_list(getattr(args, "block", None))
    if block:
        return block
    if getattr(args, "algebra", None):
        spec = io.load_json(args.algebra)
    else:
        outer = io.load_json(args.ideal)
        spec = outer.get("algebra")
        if spec is not None:
            spec = io._resolve(spec, outer.get("__dir__"))
    if isinstance(spec, dict) and spec.get("central"):
        return list(spec["central"])
    raise OreLocalError("no central block given; use --block or a 'central' entry in the algebra file")


# -- commands ------------------------------------------------------------------------------

def cmd_gb(args, rep: Report):
    obj = _load_ideal_or_module(args, args.ideal)
    if isinstance(obj, Ideal):
        order = obj.base.order
        gens = [str(g) for g in obj.groebner_basis(order)]
    else:
        order = obj.algebra.order
        gens = obj.gb_strings()
    rep.set(order=_order_name(order))
    rep.say(f"order: {order.name}")
    _gb_lines(rep, "groebner_basis", gens, "reduced Gröbner basis")


def cmd_nf(args, rep: Report):
    obj = _load_ideal_or_module(args, args.ideal)
    if isinstance(obj, Ideal):
        f = obj.base.parse(args.poly)
        r = normal_form(f, obj.groebner_basis())
        text = str(r)
    else:
        v = _vector(obj.algebra, args.poly, obj.rank)
        if args.top:
            r = left_normal_form(v, obj.groebner_basis(), obj.algebra)
        else:
            r = obj.reduce(v)
        text = format_vector(r)
    rep.say(f"normal form: {text}")
    rep.set(normal_form=text, is_zero=text == "0" or set(text.strip("[]").split(", ")) == {"0"})


def cmd_eliminate(args, rep: Report):
    obj = _load_ideal_or_module(args, args.ideal)
    drop = _split_list(args.drop)
    if isinstance(obj, Ideal):
        res = eliminate(obj, drop)
        gens = [str(g) for g in res.groebner_basis()]
        kept = list(res.base.variables)
    else:
        kept = [v for v in obj.algebra.variables if v not in drop]
        gens = [str(g) for g in subalgebra_intersect(obj, kept, args.weight_bound)]
    rep.say(f"kept variables: {', '.join(kept)}")
    rep.set(kept=kept)
    _gb_lines(rep, "generators", gens, "intersection with the kept subring")


def cmd_kernel(args, rep: Report):
    spec = io.load_json(args.map)
    d = spec.get("__dir__")
    source = io.ring_from_spec(io._resolve(spec["source"], d), args.order)
    target = io.ring_from_spec(io._resolve(spec["target"], d))
    phi = RingMap(source, target, [
        (target.base if isinstance(target, QuotientRing) else target).parse(g) for g in spec["images"]])
    if args.preimage:
        tb = target.base if isinstance(target, QuotientRing) else target
        res = preimage(phi, [tb.parse(g) for g in _split_list(args.preimage)], args.pair_cap)
        title = "preimage"
    else:
        res = kernel_of_ring_map(phi, args.pair_cap)
        title = "kernel"
    _gb_lines(rep, "generators", [str(g) for g in res.groebner_basis()], title)


def cmd_zero_in_monoid(args, rep: Report):
    ring = io.ring_from_spec(io.load_json(args.ring), args.order)
    base = ring.base if isinstance(ring, QuotientRing) else ring
    gens = [base.parse(g) for g in _split_list(args.gens)]
    ans = zero_in_monoid(ring, gens, args.pair_cap, args.sat_cap)
    rep.say("true" if ans else "false")
    rep.set(zero_in_monoid=ans)
    rep.status = 0 if ans else 1


def cmd_biggest_monomial_ideal(args, rep: Report):
    ideal = _load_ideal_or_module(args, args.ideal)
    res = biggest_monomial_ideal(ideal, args.pair_cap)
    _gb_lines(rep, "generators", [str(g) for g in res.generators], "biggest monomial ideal")


def cmd_intersect(args, rep: Report):
    obj = _load_ideal_or_module(args, args.ideal)
    kind = args.kind
    rep.set(kind=kind)
    if kind == "monoid":
        alg = obj.base if isinstance(obj, Ideal) else obj.algebra
        F = [alg.parse(g) for g in _split_list(args.gens)]
        res = intersect_monoid(obj, F, args.pair_cap, args.weight_bound)
        if res.empty:
            rep.say("empty")
            rep.set(empty=True, preimage=[str(g) for g in res.preimage])
            rep.status = 1
            return
        mons = [list(a) for a in res.monomials]
        wits = [str(w) for w in res.witnesses]
        rep.say("monomial generators (exponents over the generators):")
        for a, w in zip(mons, wits):
            rep.say(f"  {a}  ->  {w}")
        rep.set(empty=False, monomials=mons, witnesses=wits)
        return
    if not isinstance(obj, Ideal):
        raise OreLocalError(f"--kind {kind} needs a commutative ideal")
    if kind == "geometric":
        prime = Ideal(obj.ring, [obj.base.parse(g) for g in _split_list(args.prime)])
        w = intersect_geometric(obj, prime)
    elif kind == "rational":
        w = intersect_rational(obj, _split_list(args.sub_vars))
    else:
        raise OreLocalError(f"unknown kind {kind!r}")
    if not w:
        rep.say("empty")
        rep.set(empty=True, witness=None)
        rep.status = 1
    else:
        rep.say(f"witness: {w}")
        rep.set(empty=False, witness=str(w))


def _decomposition(args, ring=None):
    return io.decomposition_from_spec(io.load_json(args.decomp), ring, args.order, args.pair_cap)


def cmd_closure_decomp(args, rep: Report):
    D = _decomposition(args)
    S = _set_spec(args, D.target.ring)
    res = closure_decomp(D, S)
    comp = complementary_part(D, S)
    _gb_lines(rep, "closure", [str(g) for g in res.closure.groebner_basis()], "closure")
    rep.say(f"witness multiplier: {res.witness}")
    _gb_lines(rep, "complementary_part", [str(g) for g in comp.groebner_basis()], "complementary part")
    rep.set(witness=str(res.witness), components_meeting_set=[k + 1 for k in res.met],
            unchecked=list(S.unchecked) + ["primarity"])


def cmd_symbolic_power(args, rep: Report):
    I = _load_ideal_or_module(args, args.ideal)
    D = _decomposition(args, I.ring)
    if args.assoc:
        spec = io.load_json(args.assoc)
        primes = [Ideal(I.ring, [I.base.parse(g) for g in gens]) for gens in spec["primes"]]
    else:
        primes = [I]
    res = symbolic_power(I, args.n, primes, D)
    rep.say(f"n = {args.n}")
    rep.set(n=args.n, order=I.base.order.name)
    _gb_lines(rep, "generators", [str(g) for g in res.groebner_basis()], "symbolic power")


def cmd_split(args, rep: Report):
    obj = _load_ideal_or_module(args, args.ideal)
    if isinstance(obj, Ideal):
        a, b, n = split_by_element(obj, obj.base.parse(args.q), args.sat_cap)
        ga = [str(g) for g in a.groebner_basis()]
        gb = [str(g) for g in b.groebner_basis()]
    else:
        a, b, n = split_module(obj, obj.algebra.parse(args.q), args.sat_cap)
        ga, gb = a.gb_strings(), b.gb_strings()
    rep.say(f"saturation index: {n}")
    rep.set(index=n)
    _gb_lines(rep, "with_power", ga, "<I, q^n>")
    _gb_lines(rep, "quotient", gb, "I : q^n")


def _closure_report(rep: Report, res, key="closure"):
    rep.say(f"order: {res.algebra.order.name}")
    rep.say(f"candidate h: {res.candidate}")
    rep.say(f"saturation index: {res.saturation_index}")
    mult = str(res.witnesses[0]) if res.witnesses else "1"
    rep.say(f"witness multiplier: {mult}")
    rep.set(order=res.algebra.order.name, candidate=str(res.candidate),
            saturation_index=res.saturation_index, witness=mult)
    _gb_lines(rep, key, res.closure.gb_strings(), "closure (Gröbner basis)")


def cmd_central_closure(args, rep: Report):
    M = _load_ideal_or_module(args, args.ideal)
    if isinstance(M, Ideal):
        M = LeftSubmodule(M.base, M.generators, pair_cap=args.pair_cap)
    block = _block(args, M)
    res = central_essential_rational_closure(M, block, args.sat_cap)
    rep.set(block=block)
    _closure_report(rep, res)


def cmd_geometric_equality(args, rep: Report):
    M = _load_ideal_or_module(args, args.ideal)
    if isinstance(M, Ideal):
        M = LeftSubmodule(M.base, M.generators, pair_cap=args.pair_cap)
    block = _block(args, M)
    ring = PolyRing(block)
    prime = Ideal(ring, [ring.parse(g) for g in _split_list(args.prime)])
    ans = central_geometric_equality_test(M, prime, block, args.sat_cap, args.weight_bound)
    rep.say("true" if ans else "false")
    rep.set(equal=ans, block=block, unchecked=["primality"])
    rep.status = 0 if ans else 1


def cmd_frac(args, rep: Report):
    if args.algebra:
        ring = io.algebra_from_spec(io.load_json(args.algebra), args.order)
    elif args.ring:
        ring = io.ring_from_spec(io.load_json(args.ring), args.order)
    else:
        raise OreLocalError("frac needs --ring or --algebra")
    space = FractionSpace(_set_spec(args, ring), args.pair_cap)
    value = evaluate_expression(space, args.expr)
    if isinstance(value, OreFraction):
        if args.normalize:
            value = value.normalized()
        rep.say(f"result: {value}")
        rep.set(denominator=str(value.den), numerator=str(value.num))
    else:
        rep.say("true" if value else "false")
        rep.set(equal=bool(value))
        rep.status = 0 if value else 1


def _ring_from_poly_text(text: str, names: list[str]) -> PolyRing:
    if not names:
        seen = []
        for kind, tok in _tokenize(text):
            if kind == "id" and tok not in seen:
                seen.append(tok)
        names = seen
    return PolyRing(names)


def cmd_ann_fs(args, rep: Report):
    ring = _ring_from_poly_text(args.f, _split_list(args.vars))
    f = ring.parse(args.f)
    oracle = make_oracle(args.oracle)
    res = ann_fs(f, oracle, seed=args.seed, sat_cap=args.sat_cap, pair_cap=args.pair_cap)
    rep.say(f"f = {f}")
    rep.set(f=str(f), algebra=res.algebra.to_dict(), oracle=args.oracle or "identity")
    _gb_lines(rep, "generators", res.gb_strings(), "Ann f^s")


def cmd_central_weyl_closure(args, rep: Report):
    M = _load_ideal_or_module(args, args.ideal)
    block = _block(args, M)
    oracle = make_oracle(args.oracle)
    res = central_weyl_closure(M, oracle, block, args.sat_cap)
    rep.set(block=block, oracle=args.oracle or "identity")
    _gb_lines(rep, "generators", res.gb_strings(), "closure")


COMMANDS = {
    "gb": cmd_gb,
    "nf": cmd_nf,
    "eliminate": cmd_eliminate,
    "kernel": cmd_kernel,
    "zero-in-monoid": cmd_zero_in_monoid,
    "biggest-monomial-ideal": cmd_biggest_monomial_ideal,
    "intersect": cmd_intersect,
    "closure-decomp": cmd_closure_decomp,
    "symbolic-power": cmd_symbolic_power,
    "split": cmd_split,
    "central-closure": cmd_central_closure,
    "geometric-equality": cmd_geometric_equality,
    "frac": cmd_frac,
    "ann-fs": cmd_ann_fs,
    "central-weyl-closure": cmd_central_weyl_closure,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", help="term order, e.g. lex, degrevlex, antiblock(dp,dp,1)")
    common.add_argument("--output", help="write the report to this file instead of stdout")
    common.add_argument("--pair-cap", type=int, default=DEFAULT_PAIR_CAP, help="S-pair guard")
    common.add_argument("--sat-cap", type=int, default=50, help="saturation index guard")
    common.add_argument("--weight-bound", type=int, default=4,
                        help="largest weight tried for noncommutative elimination orders")
    common.add_argument("--timing", action="store_true", help="append the elapsed time to the report")

    p = argparse.ArgumentParser(prog="orelocal", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    def set_args(sp, required=False):
        sp.add_argument("--kind", required=required, choices=["monoid", "geometric", "rational"])
        sp.add_argument("--gens", help="monoid generators, comma separated")
        sp.add_argument("--prime", help="prime ideal generators, comma separated")
        sp.add_argument("--sub-vars", help="sub-variables of a rational set, comma separated")

    sp = add("gb", "reduced (left) Gröbner basis")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--algebra")
    sp = add("nf", "normal form")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--algebra")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--top", action="store_true", help="reduce leading terms only")
    sp = add("eliminate", "intersection with the subring of the remaining variables")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--algebra")
    sp.add_argument("--drop", required=True)
    sp = add("kernel", "kernel (or preimage) of a map of polynomial algebras")
    sp.add_argument("--map", required=True, help='JSON {"source":..., "target":..., "images": [...]}')
    sp.add_argument("--preimage", help="target ideal generators, comma separated")
    sp = add("zero-in-monoid", "does the monoid generated by --gens contain zero")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--gens", required=True)
    sp = add("biggest-monomial-ideal", "largest monomial ideal inside an ideal")
    sp.add_argument("--ideal", required=True)
    sp = add("intersect", "intersect an ideal with a multiplicative set")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--algebra")
    set_args(sp, required=True)
    sp = add("closure-decomp", "local closure from a primary decomposition")
    sp.add_argument("--decomp", required=True)
    set_args(sp, required=True)
    sp = add("symbolic-power", "symbolic power from a decomposition of I^n")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--decomp", required=True)
    sp.add_argument("--assoc", help='JSON {"primes": [[...], ...]}; default: the ideal itself')
    sp = add("split", "split I as <I, q^n> ∩ (I : q^n)")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--algebra")
    sp.add_argument("--q", required=True)
    sp = add("central-closure", "closure at the non-zero elements of a central block")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--algebra")
    sp.add_argument("--block")
    sp = add("geometric-equality", "does the closure at K[block] \\ p equal the rational closure")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--algebra")
    sp.add_argument("--block")
    sp.add_argument("--prime", required=True)
    sp = add("frac", "fraction arithmetic")
    sp.add_argument("action", choices=["eval"])
    sp.add_argument("--ring")
    sp.add_argument("--algebra")
    set_args(sp, required=True)
    sp.add_argument("--expr", required=True, help='e.g. "(x | 1) + (y | 1) == (x*y | x + y)"')
    sp.add_argument("--normalize", action="store_true")
    sp = add("ann-fs", "annihilator of f^s")
    sp.add_argument("--f", required=True)
    sp.add_argument("--vars", help="variable order (default: order of appearance)")
    sp.add_argument("--oracle", default="identity", help="identity or table:<file>")
    sp.add_argument("--seed", choices=["g2", "g1"], default="g2")
    sp = add("central-weyl-closure", "closure at K[x, s] \\ {0} with a Weyl-closure oracle")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--algebra")
    sp.add_argument("--block")
    sp.add_argument("--oracle", default="identity")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = Report(args.command)
    start = time.perf_counter()
    try:
        if args.order:
            parse_order(args.order)
        COMMANDS[args.command](args, rep)
    except (OreLocalError, ValueError, ArithmeticError, KeyError, FileNotFoundError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return 2
    if args.timing:
        rep.say(f"elapsed: {time.perf_counter() - start:.3f} s")
    text = rep.render()
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return rep.status


if __name__ == "__main__":
    raise SystemExit(main())
