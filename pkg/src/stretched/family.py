"""A family of stretched one-dimensional rings with prescribed reduction number.

Parameters (b, e, l, {b_n}) give the semigroup

    H = < e, b*e + 1, b_n*e + n  (l+1 <= n <= e-1) >

whose maximal ideal is stretched with n = l, r = max{n < e : b_n > bn-n+1}
(or l), and an explicit Lambda, type and Hilbert polynomial.  This module
builds the rings, predicts their invariants, and re-derives the exponent
identities and memberships behind the construction with the ideal engine.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterator, Mapping, Optional, Union

from .errors import ConstraintViolation
from .filtration import Tower, alpha_beta_lambda
from .ideal import (
    contains_element,
    equals,
    ideal_from_exponents,
    length_between,
    maximal_ideal,
    module_sum,
)
from .semigroup import NumericalSemigroup, build_semigroup

__all__ = [
    "FamilyParams",
    "FamilyPrediction",
    "validate_family",
    "build_family_semigroup",
    "predicted_report",
    "corollary67_params",
    "check_construction_lemmas",
    "iter_family_params",
    "sample_family_params",
]


def _half_up(b: int) -> int:
    return -(-b // 2)


@dataclass(frozen=True)
class FamilyParams:
    b: int
    e: int
    ell: int
    b_values: Mapping[int, int] = field(default_factory=dict)
    fill_note: Optional[str] = None

    def bn(self, n: int) -> int:
        return self.b if n == 1 else self.b_values[n]

    def generator(self, n: int) -> int:
        """Valuation of a_n (a_0 = u^e)."""
        return self.e if n == 0 else self.bn(n) * self.e + n

    @property
    def indices(self) -> list[int]:
        return [1] + list(range(self.ell + 1, self.e))

    @property
    def predicted_r(self) -> int:
        b = self.b
        big = [n for n in range(self.ell + 1, self.e) if self.b_values[n] > b * n - n + 1]
        return max(big + [self.ell])

    def describe(self) -> str:
        bn = ",".join(f"{k}={v}" for k, v in sorted(self.b_values.items()))
        return f"b={self.b} e={self.e} ell={self.ell} bn=[{bn}]"


@dataclass(frozen=True)
class FamilyPrediction:
    n: int
    r: int
    lambda_set: frozenset[int]
    tau: int
    mu: int
    e1: int
    depth_g: int
    hilbert_from: int  # l(A/m^(n+1)) = e(n+1) - e1 holds for n >= this


def validate_family(p: FamilyParams) -> list[str]:
    b, e, ell = p.b, p.e, p.ell
    bad = []
    if b < 2:
        bad.append(f"b >= 2 fails: b = {b}")
    if e < 3:
        bad.append(f"e >= 3 fails: e = {e}")
    if not 2 <= ell <= e - 1:
        bad.append(f"2 <= ell <= e-1 fails: ell = {ell}, e = {e}")
    want = set(range(ell + 1, e))
    if set(p.b_values) != want:
        bad.append(f"b_n must be given exactly for n in {sorted(want)}, got {sorted(p.b_values)}")
        return bad
    if bad:
        return bad
    h = _half_up(b)
    for n in range(ell + 1, e):
        if not h * n + 1 <= p.b_values[n]:
            bad.append(f"ceil(b/2)*n + 1 <= b_n fails at n={n}: {h * n + 1} > {p.b_values[n]}")
    if ell + 1 <= e - 1 and p.b_values[ell + 1] > b * ell + b - 1:
        bad.append(
            f"b_{{ell+1}} <= b*ell + b - 1 fails: b_{ell + 1} = {p.b_values[ell + 1]} > {b * ell + b - 1}"
        )
    for n in range(ell + 1, e - 1):
        if p.b_values[n + 1] > p.b_values[n] + h:
            bad.append(
                f"b_{{n+1}} <= b_n + ceil(b/2) fails at n={n}: "
                f"b_{n + 1} = {p.b_values[n + 1]} > {p.b_values[n]} + {h}"
            )
    return bad


def build_family_semigroup(p: FamilyParams) -> NumericalSemigroup:
    bad = validate_family(p)
    if bad:
        raise ConstraintViolation(bad)
    return build_semigroup([p.generator(n) for n in [0] + p.indices])


def predicted_report(p: FamilyParams) -> FamilyPrediction:
    bad = validate_family(p)
    if bad:
        raise ConstraintViolation(bad)
    b, e, ell = p.b, p.e, p.ell
    r = p.predicted_r
    lam = frozenset(b * n - p.b_values[n] + 1 for n in range(ell + 1, r + 1))
    e1 = e - 1 + comb(ell, 2) + sum(p.b_values[n] - b * n + n - 1 for n in range(ell + 1, r + 1))
    return FamilyPrediction(
        n=ell,
        r=r,
        lambda_set=lam,
        tau=e - ell,
        mu=e - ell + 1,
        e1=e1,
        depth_g=1 if r == ell else 0,
        hilbert_from=max(r - 1, 0),
    )


FillStrategy = Union[str, Callable[[int], int]]


def corollary67_params(
    b: int, e: int, ell: int, s: int, fill_strategy: FillStrategy = "boundary"
) -> FamilyParams:
    """Parameters with r = l + 1 and Lambda = {s}.

    Only b_{l+1} and b_{l+2} are forced; the rest are filled by
    ``fill_strategy``.  "boundary" uses b_n = (b-1)n + 1, the largest value
    that keeps n out of the reduction-number maximum.
    """
    if b < 2 or not 2 <= s <= ell <= e - 3:
        raise ConstraintViolation([f"need b >= 2 and 2 <= s <= ell <= e-3, got b={b}, s={s}, ell={ell}, e={e}"])
    if fill_strategy == "boundary":
        fill = lambda n: (b - 1) * n + 1  # noqa: E731
        note = "b_n = (b-1)n + 1 for n >= ell+3 (boundary fill)"
    elif callable(fill_strategy):
        fill = fill_strategy
        note = "custom fill"
    else:
        raise ValueError(f"unknown fill strategy {fill_strategy!r}")
    bv = {ell + 1: b * (ell + 1) + 1 - s, ell + 2: (b - 1) * (ell + 2) + 1}
    for n in range(ell + 3, e):
        bv[n] = fill(n)
    p = FamilyParams(b, e, ell, bv, fill_note=note if e - 1 >= ell + 3 else None)
    bad = validate_family(p)
    if bad:
        raise ConstraintViolation(bad)
    return p


def check_construction_lemmas(p: FamilyParams) -> dict[str, list[str]]:
    """Re-derive the construction's identities inside the ideal engine.

    Returns ``{check name: failures}``; an empty list means the check passed.
    """
    H = build_family_semigroup(p)
    b, e, ell = p.b, p.e, p.ell
    a1 = b * e + 1
    m = maximal_ideal(H)
    Q = ideal_from_exponents(H, [e])
    t = Tower(m, Q)
    out: dict[str, list[str]] = {}

    # products of two generators a_{n1} a_{n2} rewritten through a and a_k
    ident, in_qm = [], []
    idx = p.indices
    for i, n1 in enumerate(idx):
        for n2 in idx[i:]:
            val = p.generator(n1) + p.generator(n2)
            tot = n1 + n2
            if tot < e:
                if tot not in idx:
                    continue
                k = p.bn(n1) + p.bn(n2) - p.bn(tot)
                rhs = k * e + p.generator(tot)
            else:
                q = tot - e
                k = p.bn(n1) + p.bn(n2) + 1 - b * q
                rhs = k * e + q * a1
                if not 0 <= q <= e - 2:
                    ident.append(f"q={q} out of range for ({n1},{n2})")
            if val != rhs or k < 0:
                ident.append(f"a_{n1} a_{n2}: exponent of a is {k}, values {val} vs {rhs}")
            if (n1, n2) != (1, 1) and not contains_element(t.qi(1), val):
                in_qm.append(f"a_{n1} a_{n2} = u^{val} not in Qm")
    out["generator_products"] = ident
    out["products_in_Qm"] = in_qm

    out["a1_pow_ell_not_in_Q"] = [] if not contains_element(Q, ell * a1) else [f"u^{ell * a1} in Q"]
    q_pow = ideal_from_exponents(H, [(b * e + 1) * e])
    out["a1_pow_e_in_Q_pow"] = [] if contains_element(q_pow, e * a1) else [f"u^{e * a1} not in Q^(be+1)"]

    fails = []
    for n in range(2, e + 1):
        rhs = module_sum(t.qi(n - 1), ideal_from_exponents(H, [n * a1]))
        if not equals(t[n], rhs):
            fails.append(f"m^{n} != Qm^{n - 1} + (a1^{n})")
    out["power_decomposition"] = fails
    out["reduction"] = [] if equals(t[e], t.qi(e - 1)) else ["m^e != Qm^(e-1)"]
    k = length_between(module_sum(t[2], Q), module_sum(t[3], Q))
    out["stretched_length"] = [] if k == 1 else [f"l(m^2+Q/m^3+Q) = {k}"]

    fails = []
    for mm in range(ell + 1, e):
        for n in range(1, mm):
            lhs = p.bn(mm) <= b * mm - n
            rhs = contains_element(t.qi(n), mm * a1)
            if lhs != rhs:
                fails.append(f"m={mm}, n={n}: b_m <= bm-n is {lhs} but a1^m in Qm^n is {rhs}")
    out["membership_criterion"] = fails

    fails = []
    for n in range(ell + 1, e):
        k = b * n - p.bn(n)
        if k < 0 or not contains_element(t.qi(k), n * a1) or contains_element(t.qi(k + 1), n * a1):
            fails.append(f"a1^{n} not of exact order {k} over Q")
        if equals(t[n], t.qi(n - 1)) != (p.bn(n) <= b * n - n + 1):
            fails.append(f"m^{n} = Qm^{n - 1} disagrees with b_{n} <= bn-n+1")
    out["exact_order"] = fails

    _, betas, _, _ = alpha_beta_lambda(m, Q)
    fails = []
    for n in range(ell + 1, p.predicted_r + 1):
        w = b * n - p.bn(n) + 1
        if not (1 <= w <= len(betas) and betas[w - 1]):
            fails.append(f"beta_{w} = 0 (witness index from n={n})")
    out["beta_witnesses"] = fails
    return out


def iter_family_params(max_b: int, max_e: int, min_e: int = 3) -> Iterator[FamilyParams]:
    """Every valid parameter set with b <= max_b and min_e <= e <= max_e."""
    for b in range(2, max_b + 1):
        h = _half_up(b)
        for e in range(min_e, max_e + 1):
            for ell in range(2, e):
                if ell + 1 > e - 1:
                    yield FamilyParams(b, e, ell, {})
                    continue

                def rec(n, bv):
                    if n == e:
                        yield FamilyParams(b, e, ell, dict(bv))
                        return
                    lo = h * n + 1
                    hi = b * ell + b - 1 if n == ell + 1 else bv[n - 1] + h
                    for x in range(lo, hi + 1):
                        bv[n] = x
                        yield from rec(n + 1, bv)
                    bv.pop(n, None)

                yield from rec(ell + 1, {})


def sample_family_params(
    count: int, max_b: int = 4, max_e: int = 15, seed: int = 0, min_e: int = 3
) -> list[FamilyParams]:
    """``count`` distinct valid parameter sets drawn with a seeded RNG."""
    rng = random.Random(seed)
    seen = set()
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 200 * count:
            break
        b = rng.randint(2, max_b)
        e = rng.randint(min_e, max_e)
        ell = rng.randint(2, e - 1)
        h = _half_up(b)
        bv = {}
        for n in range(ell + 1, e):
            lo = h * n + 1
            hi = b * ell + b - 1 if n == ell + 1 else bv[n - 1] + h
            bv[n] = rng.randint(lo, hi)
        key = (b, e, ell, tuple(sorted(bv.items())))
        if key in seen:
            continue
        seen.add(key)
        out.append(FamilyParams(b, e, ell, bv))
    return out
