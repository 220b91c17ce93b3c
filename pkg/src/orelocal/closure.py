"""Local closures of ideals in commutative rings from primary decompositions,
symbolic powers, and the split ``I = <I, q^n> ∩ (I : q^n)``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import DecompositionMismatchError
from .groebner import Ideal, ideal_equal, saturate
from .intersection import MultiplicativeSetSpec, meets_set, primary_meets_set
from .poly import Polynomial

__all__ = [
    "PrimaryDecomposition",
    "ClosureWithWitness",
    "closure_decomp",
    "complementary_part",
    "symbolic_power",
    "split_by_element",
    "intersect_all",
]


def intersect_all(ring, ideals: Sequence[Ideal], pair_cap: int | None = None) -> Ideal:
    """Intersection of a list of ideals; the whole ring for an empty list."""
    if not ideals:
        return Ideal(ring, [1], pair_cap)
    out = ideals[0]
    for J in ideals[1:]:
        out = out.intersect(J)
    return out


@dataclass
class PrimaryDecomposition:
    """``target = Q_1 ∩ ... ∩ Q_n`` with caller-asserted radicals ``P_i``.

    The intersection is checked against ``target`` on construction; primarity
    and the radicals themselves are not verified.
    """

    target: Ideal
    components: list  # of (Q, P or None)
    verify: bool = True

    def __post_init__(self):
        self.components = [(Q, P) for Q, P in self.components]
        if self.verify:
            meet = intersect_all(self.target.ring, [Q for Q, _ in self.components])
            if not ideal_equal(meet, self.target):
                raise DecompositionMismatchError("the components do not intersect to the target ideal")


@dataclass
class ClosureWithWitness:
    """``closure`` together with a multiplier ``witness`` in ``S`` satisfying
    ``witness * closure ⊆ I`` and the per-component elements it is built from."""

    closure: Ideal
    witness: Polynomial
    component_witnesses: list = field(default_factory=list)
    met: list = field(default_factory=list)


def closure_decomp(D: PrimaryDecomposition, S: MultiplicativeSetSpec) -> ClosureWithWitness:
    """``I^S`` as the intersection of the components that do not meet ``S``."""
    ring = D.target.ring
    kept, met, wits = [], [], []
    witness = D.target.base.one()
    for k, (Q, P) in enumerate(D.components):
        if primary_meets_set(Q, P, S):
            met.append(k)
            w = meets_set(Q, S)
            if w is None:
                raise DecompositionMismatchError(
                    f"component {k + 1} meets S by its radical but no witness was found")
            wits.append(w)
            witness = witness * w
        else:
            kept.append(Q)
    return ClosureWithWitness(intersect_all(ring, kept, D.target.pair_cap), witness, wits, met)


def complementary_part(D: PrimaryDecomposition, S: MultiplicativeSetSpec) -> Ideal:
    """``J`` with ``I = I^S ∩ J``: the intersection of the components meeting ``S``."""
    met = [Q for Q, P in D.components if primary_meets_set(Q, P, S)]
    return intersect_all(D.target.ring, met, D.target.pair_cap)


def symbolic_power(I: Ideal, n: int, assoc_primes: Sequence[Ideal],
                   decomp: PrimaryDecomposition) -> Ideal:
    """``I^(n)`` from the associated primes of ``I`` and a primary
    decomposition of ``I^n``: keep the components whose radical lies in some
    associated prime of ``I``."""
    if n < 1:
        raise ValueError("n must be positive")
    power = I ** n
    if not ideal_equal(decomp.target, power):
        raise DecompositionMismatchError("the decomposition does not decompose I^n")
    kept = []
    for Q, P in decomp.components:
        radical = P if P is not None else Q
        # one containing prime suffices: further intersections with Q change nothing
        if any(radical.issubset(p) for p in assoc_primes):
            kept.append(Q)
    result = intersect_all(I.ring, kept, I.pair_cap)
    if not power.issubset(result):
        raise DecompositionMismatchError("I^n is not contained in the computed symbolic power")
    return result


def split_by_element(I: Ideal, q, cap: int = 50) -> tuple[Ideal, Ideal, int]:
    """``(<I, q^n>, I : q^n, n)`` with ``n`` the saturation index of ``q``.

    For ``n = 0`` the first factor is the whole ring.
    """
    q = I.base.coerce(q)
    sat, n = saturate(I, q, cap)
    if n == 0:
        return I._like([1]), I, 0
    return I._like(I.generators + [q ** n]), sat, n
