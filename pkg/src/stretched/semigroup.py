"""Numerical semigroups H = <g_1, ..., g_k> and their Apery tables.

The ring k[[H]] is recorded entirely by the Apery set of H with respect to
its multiplicity ``e``: ``apery[i]`` is the least element of H congruent to
``i`` mod ``e``.  Everything downstream (ideals, lengths, colons) reduces to
arithmetic on tables of this shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import EmptyGenerators, NotCoprime

__all__ = [
    "NumericalSemigroup",
    "build_semigroup",
    "contains",
    "minimal_generators",
    "brute_force_elements",
    "apery_table",
]


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]
    multiplicity_e: int
    apery: tuple[int, ...]
    frobenius: int
    embdim_mu: int

    @property
    def e(self) -> int:
        return self.multiplicity_e

    def __contains__(self, x: int) -> bool:
        return contains(self, x)

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"


def apery_table(gens: Sequence[int], e: int) -> list[int]:
    """Per-class minima of the monoid generated by ``gens``, modulo ``e``.

    Bellman-Ford style relaxation over the ``e`` residue classes with one
    edge of weight ``g`` per generator.  Unreached classes stay ``None``.
    """
    table: list[int | None] = [None] * e
    table[0] = 0
    steps = [(g % e, g) for g in sorted(set(gens)) if g % e]
    for _ in range(e):
        changed = False
        for i in range(e):
            base = table[i]
            if base is None:
                continue
            for step, g in steps:
                j = i + step
                if j >= e:
                    j -= e
                cand = base + g
                cur = table[j]
                if cur is None or cand < cur:
                    table[j] = cand
                    changed = True
        if not changed:
            break
    return table  # type: ignore[return-value]


def _minimal_from_apery(apery: Sequence[int], e: int) -> tuple[int, ...]:
    nonzero = sorted(w for w in apery if w)
    inside = set(apery)
    mins = [e]
    for w in nonzero:
        # w is decomposable iff w = w1 + w2 with w1, w2 nonzero Apery elements
        if not any((w - w1) in inside and w - w1 > 0 for w1 in nonzero if w1 < w):
            mins.append(w)
    return tuple(sorted(mins))


def build_semigroup(gens: Iterable[int]) -> NumericalSemigroup:
    gens = [int(g) for g in gens]
    if not gens:
        raise EmptyGenerators("at least one generator is required")
    if any(g <= 0 for g in gens):
        raise ValueError(f"generators must be positive integers, got {gens}")
    g0 = reduce(gcd, gens)
    if g0 != 1:
        raise NotCoprime(f"gcd{tuple(sorted(set(gens)))} = {g0}; not a numerical semigroup")
    e = min(gens)
    apery = apery_table(gens, e)
    assert all(a is not None for a in apery)
    mins = _minimal_from_apery(apery, e)
    return NumericalSemigroup(
        generators=mins,
        multiplicity_e=e,
        apery=tuple(apery),
        frobenius=max(apery) - e,
        embdim_mu=len(mins),
    )


def contains(H: NumericalSemigroup, x: int) -> bool:
    return x >= 0 and x >= H.apery[x % H.multiplicity_e]


def minimal_generators(H: NumericalSemigroup) -> tuple[int, ...]:
    return H.generators


def brute_force_elements(gens: Sequence[int], bound: int) -> set[int]:
    """All nonnegative combinations of ``gens`` up to ``bound``, by plain DP.

    Deliberately ignores the Apery machinery; tests use it as the oracle.
    """
    if bound < 0:
        return set()
    reach = [False] * (bound + 1)
    reach[0] = True
    for x in range(1, bound + 1):
        reach[x] = any(g <= x and reach[x - g] for g in gens)
    return {x for x, ok in enumerate(reach) if ok}
