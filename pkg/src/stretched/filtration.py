"""Invariants of the I-adic filtration relative to a principal reduction.

For a monomial ideal I of k[[H]] with least valuation v, Q = (u^v) is a
minimal reduction.  Since Q is principal, Q*J is just ``shift(J, v)``, which
keeps every quantity below a handful of threshold operations on the powers
of I.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional

from .errors import CapExceeded, InternalInconsistency, UnitIdeal
from .ideal import (
    HIdeal,
    colon,
    ideal_from_exponents,
    intersect,
    is_subideal,
    length_between,
    maximal_ideal,
    module_sum,
    multiply,
    shift,
    unit_ideal,
)

__all__ = [
    "FiltrationReport",
    "Tower",
    "minimal_reduction",
    "reduction_number",
    "nilpotency_index",
    "alpha_beta_lambda",
    "is_stretched",
    "cm_type",
    "depth_assoc_graded",
    "sally_lengths",
    "analyze",
    "stretched_identity_violations",
]


@dataclass(frozen=True)
class FiltrationReport:
    v: int
    r: int
    n: int
    alphas: tuple[int, ...]  # alphas[k-1] = alpha_k, k = 1..r
    betas: tuple[int, ...]  # betas[k-1] = beta_k, k = 1..r
    lambda_set: frozenset[int]
    s_first: Optional[int]
    stretched: bool
    tau: int
    mu_I: int
    depth_g: int
    sally: tuple[int, ...] = field(default=())  # sally[k-1] = l(I^{k+1}/Q^k I)
    colength: int = 0  # l(A/I)
    len_i_i2: int = 0  # l(I/I^2)

    def alpha(self, k: int) -> int:
        return self.alphas[k - 1] if 1 <= k <= len(self.alphas) else 0

    def beta(self, k: int) -> int:
        return self.betas[k - 1] if 1 <= k <= len(self.betas) else 0


def minimal_reduction(I: HIdeal) -> HIdeal:
    if I.thresholds == I.parent.apery:
        raise UnitIdeal("the unit ideal has no parameter reduction")
    return ideal_from_exponents(I.parent, [I.v])


def default_cap(I: HIdeal) -> int:
    return 4 * max(I.parent.multiplicity_e, I.v)


class Tower:
    """Lazily extended list of powers I^0, I^1, ... with Q = (u^v) products."""

    def __init__(self, I: HIdeal, Q: Optional[HIdeal] = None):
        if Q is None:
            Q = minimal_reduction(I)
        if Q.thresholds != shift(unit_ideal(I.parent), Q.v).thresholds:
            raise ValueError("only principal monomial reductions (u^v) are supported")
        self.I = I
        self.Q = Q
        self.v = Q.v
        self._pw = [unit_ideal(I.parent), I]
        self._qi: dict[int, HIdeal] = {}
        self._r: Optional[int] = None

    def __getitem__(self, k: int) -> HIdeal:
        pw = self._pw
        while len(pw) <= k:
            pw.append(multiply(pw[-1], self.I))
        return pw[k]

    def qi(self, k: int) -> HIdeal:
        """Q * I^k."""
        got = self._qi.get(k)
        if got is None:
            got = self._qi[k] = shift(self[k], self.v)
        return got

    def reduction_number(self, cap: Optional[int] = None) -> int:
        if self._r is not None:
            return self._r
        if cap is None:
            cap = default_cap(self.I)
        for n in range(cap + 1):
            if self[n + 1].thresholds == self.qi(n).thresholds:
                self._r = n
                return n
        raise CapExceeded(
            f"I^(n+1) != QI^n for all n <= {cap} (I={self.I}, Q={self.Q}); "
            "the principal reduction should always terminate"
        )


def _tower(I: HIdeal, Q: Optional[HIdeal]) -> Tower:
    return Tower(I, Q)


def reduction_number(I: HIdeal, Q: Optional[HIdeal] = None, cap: Optional[int] = None) -> int:
    return _tower(I, Q).reduction_number(cap)


def _nilpotency(t: Tower, r: int) -> int:
    for n in range(r + 1):
        if is_subideal(t.Q, t[n + 1]):
            return n
    raise InternalInconsistency("I^(r+1) not inside Q")


def nilpotency_index(I: HIdeal, Q: Optional[HIdeal] = None) -> int:
    t = _tower(I, Q)
    return _nilpotency(t, t.reduction_number())


def _abl(t: Tower, r: int):
    alphas, betas = [], []
    s_first = None
    for k in range(1, r + 1):
        top = t[k + 1]
        qik = t.qi(k)
        alphas.append(length_between(top, qik))
        betas.append(length_between(intersect(t.qi(k - 1), top), qik))
        if s_first is None and intersect(t.Q, top).thresholds != qik.thresholds:
            s_first = k
    lam = frozenset(k for k, b in enumerate(betas, start=1) if b)
    return tuple(alphas), tuple(betas), lam, s_first


def alpha_beta_lambda(I: HIdeal, Q: Optional[HIdeal] = None):
    """(alphas, betas, Lambda, s) for k = 1..r; s is None when the
    Valabrega-Valla equalities Q cap I^(k+1) = QI^k hold throughout."""
    t = _tower(I, Q)
    return _abl(t, t.reduction_number())


def _stretched(t: Tower) -> bool:
    if intersect(t.Q, t[2]).thresholds != t.qi(1).thresholds:
        return False
    return length_between(module_sum(t[2], t.Q), module_sum(t[3], t.Q)) == 1


def is_stretched(I: HIdeal, Q: Optional[HIdeal] = None) -> bool:
    return _stretched(_tower(I, Q))


def cm_type(I: HIdeal, Q: Optional[HIdeal] = None) -> int:
    if Q is None:
        Q = minimal_reduction(I)
    return length_between(intersect(colon(Q, I), I), Q)


def depth_assoc_graded(I: HIdeal, Q: Optional[HIdeal] = None) -> int:
    t = _tower(I, Q)
    r = t.reduction_number()
    for k in range(1, r + 1):
        if intersect(t.Q, t[k + 1]).thresholds != t.qi(k).thresholds:
            return 0
    return 1


def _sally(t: Tower, upto: int) -> tuple[int, ...]:
    I = t.I
    return tuple(length_between(t[k + 1], shift(I, k * t.v)) for k in range(1, upto + 1))


def sally_lengths(I: HIdeal, Q: Optional[HIdeal] = None, upto: int = 4) -> tuple[int, ...]:
    return _sally(_tower(I, Q), upto)


def analyze(
    I: HIdeal,
    Q: Optional[HIdeal] = None,
    cap: Optional[int] = None,
    *,
    tower: Optional[Tower] = None,
    check: bool = True,
) -> FiltrationReport:
    t = tower if tower is not None else Tower(I, Q)
    r = t.reduction_number(cap)
    n = _nilpotency(t, r)
    alphas, betas, lam, s_first = _abl(t, r)
    m = maximal_ideal(I.parent)
    rep = FiltrationReport(
        v=t.v,
        r=r,
        n=n,
        alphas=alphas,
        betas=betas,
        lambda_set=lam,
        s_first=s_first,
        stretched=_stretched(t),
        tau=cm_type(I, t.Q),
        mu_I=length_between(I, multiply(m, I)),
        depth_g=0 if s_first is not None else 1,
        sally=_sally(t, r + 1),
        colength=length_between(unit_ideal(I.parent), I),
        len_i_i2=length_between(I, t[2]),
    )
    if check:
        bad = stretched_identity_violations(rep)
        if bad:
            raise InternalInconsistency(f"filtration identities fail for I={I}: " + "; ".join(bad))
    return rep


def stretched_identity_violations(rep: FiltrationReport) -> list[str]:
    """Structural identities every report must satisfy; the stretched ones
    only apply when ``rep.stretched``.  Empty list means all hold."""
    bad = []
    r, n = rep.r, rep.n
    if r < n:
        bad.append(f"r={r} < n={n}")
    if not rep.stretched:
        return bad
    lam = rep.lambda_set
    if len(lam) != r - n:
        bad.append(f"|Lambda|={len(lam)} != r-n={r - n}")
    if rep.alpha(1) != n - 1:
        bad.append(f"alpha_1={rep.alpha(1)} != n-1={n - 1}")
    if any(a < b for a, b in zip(rep.alphas, rep.alphas[1:])):
        bad.append(f"alphas not non-increasing: {rep.alphas}")
    if any(b > 1 for b in rep.betas):
        bad.append(f"some beta_k > 1: {rep.betas}")
    for k in range(1, r):
        want = n - k + sum(rep.betas[:k])
        if rep.alpha(k) != want:
            bad.append(f"alpha_{k}={rep.alpha(k)} != n-k+sum(beta)={want}")
    want = comb(r, 2) - sum(lam) + len(lam)
    if sum(rep.alphas) != want:
        bad.append(f"sum(alpha)={sum(rep.alphas)} != C(r,2)-sum(Lambda)+|Lambda|={want}")
    if r == n + 1 and lam != {rep.s_first}:
        bad.append(f"r=n+1 but Lambda={sorted(lam)} != {{s={rep.s_first}}}")
    return bad
