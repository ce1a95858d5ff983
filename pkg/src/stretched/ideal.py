"""Monomial ideals of k[[H]] in threshold form.

An ideal J is a subset of H closed under adding H.  Because e is in H, each
residue class of J mod e is a ray ``t, t+e, t+2e, ...``, so J is stored as
the ``e`` thresholds ``t[i] = min{x in J : x = i mod e}``.  Products are
min-plus cyclic convolutions, sums and intersections are pointwise min and
max, and lengths are (sum of threshold gaps) / e.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import add
from typing import Iterable, Sequence

from .errors import (
    ExponentNotInSemigroup,
    NotSubideal,
    ParentMismatch,
    ShiftNotInSemigroup,
)
from .semigroup import NumericalSemigroup, contains

__all__ = [
    "HIdeal",
    "ideal_from_exponents",
    "unit_ideal",
    "maximal_ideal",
    "multiply",
    "power",
    "powers",
    "module_sum",
    "intersect",
    "colon",
    "shift",
    "is_subideal",
    "equals",
    "contains_element",
    "length_between",
    "colength",
    "ideal_generators",
]


@dataclass(frozen=True)
class HIdeal:
    parent: NumericalSemigroup
    thresholds: tuple[int, ...]

    def __post_init__(self):
        e = self.parent.multiplicity_e
        t = self.thresholds
        if len(t) != e:
            raise ValueError(f"expected {e} thresholds, got {len(t)}")
        for i, x in enumerate(t):
            if x % e != i:
                raise ValueError(f"threshold {x} is not in residue class {i} mod {e}")
            if x < self.parent.apery[i]:
                raise ValueError(f"threshold {x} lies outside H")

    @property
    def v(self) -> int:
        """Least valuation occurring in the ideal."""
        return min(self.thresholds)

    def __contains__(self, x: int) -> bool:
        return contains_element(self, x)

    def __le__(self, other: "HIdeal") -> bool:
        return is_subideal(other, self)

    def __str__(self) -> str:
        return "(" + ",".join(f"u^{g}" for g in ideal_generators(self)) + ")"


def _same_parent(I: HIdeal, J: HIdeal) -> NumericalSemigroup:
    if I.parent is not J.parent and I.parent != J.parent:
        raise ParentMismatch(f"ideals live in different rings {I.parent} and {J.parent}")
    return I.parent


def _make(H: NumericalSemigroup, t: Sequence[int]) -> HIdeal:
    # trusted constructor: skips validation for engine-produced thresholds
    obj = object.__new__(HIdeal)
    object.__setattr__(obj, "parent", H)
    object.__setattr__(obj, "thresholds", tuple(t))
    return obj


def unit_ideal(H: NumericalSemigroup) -> HIdeal:
    return _make(H, H.apery)


def ideal_from_exponents(H: NumericalSemigroup, exps: Iterable[int]) -> HIdeal:
    exps = list(exps)
    if not exps:
        raise ValueError("need at least one exponent")
    e = H.multiplicity_e
    ap = H.apery
    t = [None] * e
    for g in exps:
        if g <= 0 or not contains(H, g):
            raise ExponentNotInSemigroup(f"u^{g} is not a nonunit monomial of k[[{H}]]")
        for i in range(e):
            cand = g + ap[(i - g) % e]
            if t[i] is None or cand < t[i]:
                t[i] = cand
    return _make(H, t)


def maximal_ideal(H: NumericalSemigroup) -> HIdeal:
    return ideal_from_exponents(H, H.generators)


def multiply(I: HIdeal, J: HIdeal) -> HIdeal:
    H = _same_parent(I, J)
    e = H.multiplicity_e
    a = I.thresholds
    b = J.thresholds
    # rev[k] = b[-k mod e]; then b[(c - i) mod e] over i is a rotation of rev
    rev = [b[-k % e] for k in range(e)] * 2
    out = [0] * e
    for c in range(e):
        # window rev[e - c : 2e - c] lists b[(c - i) mod e] for i = 0..e-1
        out[c] = min(map(add, a, rev[e - c : 2 * e - c]))
    return _make(H, out)


def powers(I: HIdeal, n: int) -> list[HIdeal]:
    """[I^0, I^1, ..., I^n]."""
    out = [unit_ideal(I.parent)]
    if n >= 1:
        out.append(I)
    for _ in range(2, n + 1):
        out.append(multiply(out[-1], I))
    return out


def power(I: HIdeal, n: int) -> HIdeal:
    if n < 0:
        raise ValueError("negative power")
    return powers(I, n)[n]


def module_sum(I: HIdeal, J: HIdeal) -> HIdeal:
    H = _same_parent(I, J)
    return _make(H, map(min, I.thresholds, J.thresholds))


def intersect(I: HIdeal, J: HIdeal) -> HIdeal:
    H = _same_parent(I, J)
    return _make(H, map(max, I.thresholds, J.thresholds))


def colon(J: HIdeal, I: HIdeal) -> HIdeal:
    """(J :_A I) = {x in H : x + I is inside J}."""
    H = _same_parent(I, J)
    e = H.multiplicity_e
    tJ = J.thresholds
    tI = I.thresholds
    out = []
    for c in range(e):
        raw = max(tJ[(c + i) % e] - tI[i] for i in range(e))
        out.append(max(raw, H.apery[c]))
    return _make(H, out)


def shift(I: HIdeal, c: int) -> HIdeal:
    """The ideal u^c * I."""
    H = I.parent
    if not contains(H, c):
        raise ShiftNotInSemigroup(f"{c} is not in {H}")
    e = H.multiplicity_e
    t = I.thresholds
    k = c % e
    # new[(i + c) mod e] = t[i] + c
    return _make(H, [t[(j - k) % e] + c for j in range(e)])


def is_subideal(I: HIdeal, J: HIdeal) -> bool:
    """True iff J is contained in I."""
    _same_parent(I, J)
    return all(y >= x for x, y in zip(I.thresholds, J.thresholds))


def equals(I: HIdeal, J: HIdeal) -> bool:
    _same_parent(I, J)
    return I.thresholds == J.thresholds


def contains_element(I: HIdeal, x: int) -> bool:
    return x >= 0 and x >= I.thresholds[x % I.parent.multiplicity_e]


def length_between(I: HIdeal, J: HIdeal) -> int:
    """l_A(I/J) for J inside I."""
    H = _same_parent(I, J)
    gap = 0
    for x, y in zip(I.thresholds, J.thresholds):
        if y < x:
            raise NotSubideal(f"{J} is not contained in {I}")
        gap += y - x
    return gap // H.multiplicity_e


def colength(I: HIdeal) -> int:
    return length_between(unit_ideal(I.parent), I)


def ideal_generators(I: HIdeal) -> tuple[int, ...]:
    """Exponents of the minimal monomial generators of I."""
    H = I.parent
    e = H.multiplicity_e
    t = I.thresholds
    gens = []
    for x in sorted(t):
        # x is redundant iff x - h lies in I for some generator h of H
        if not any(x - h >= t[(x - h) % e] for h in H.generators if h <= x):
            gens.append(x)
    return tuple(gens)
