"""Closed-form Hilbert data for stretched ideals, in arbitrary dimension d.

Two families of closed forms are evaluated from an abstract invariant
profile: the almost-minimal case r = n + 1 (with the exceptional degree s)
and the Cohen-Macaulay case r = n.  Coefficients are extracted from an
h-polynomial by ``e_k = sum_j C(j, k) h_j``, so the closed forms and the
series can be checked against each other and against ring computations.

The case tables for reduction number at most five are stored as data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional, Sequence

from .errors import ProfileMismatch, UnclassifiedCase
from .filtration import FiltrationReport
from .hilbert import HilbertData

__all__ = [
    "binom",
    "StretchedProfile",
    "Prediction",
    "predict_theorem11",
    "predict_cor42",
    "coefficients_from_hpoly",
    "colength_from_hpoly",
    "hilbert_polynomial_value",
    "profile_from_report",
    "CaseSpec",
    "CASE_TABLES",
    "Classification",
    "classify_small_reduction",
    "almost_minimal_violations",
    "cm_criterion_violations",
]


def binom(a: int, b: int) -> int:
    """C(a, b), zero outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class StretchedProfile:
    d: int
    e0: int
    colenI: int
    nI: int
    r: int
    s: Optional[int] = None
    tau: Optional[int] = None
    mu: Optional[int] = None

    def __post_init__(self):
        if self.d < 1 or self.e0 < 1 or self.colenI < 1:
            raise ValueError("need d >= 1, e0 >= 1, l(A/I) >= 1")
        if self.nI < 2 or self.r < self.nI:
            raise ValueError(f"need 2 <= nI <= r, got nI={self.nI}, r={self.r}")
        if self.s is not None and not 2 <= self.s <= self.nI:
            raise ValueError(f"s={self.s} outside 2..nI={self.nI}")


@dataclass(frozen=True)
class Prediction:
    coefficients: tuple[int, ...]  # e_0, e_1, ..., e_d
    hpoly: tuple[int, ...]

    @property
    def e1(self) -> int:
        return self.coefficients[1]


def predict_theorem11(p: StretchedProfile) -> Prediction:
    """Hilbert data forced by stretchedness together with r = n + 1."""
    if p.r != p.nI + 1 or p.s is None:
        raise ProfileMismatch(f"needs r = nI + 1 and s; got r={p.r}, nI={p.nI}, s={p.s}")
    n, s = p.nI, p.s
    coeffs = [p.e0, p.e0 - p.colenI + binom(n + 1, 2) - s + 1]
    coeffs += [binom(n + 2, k + 1) - binom(s, k) for k in range(2, p.d + 1)]
    h = [p.colenI, p.e0 - p.colenI - n + 1] + [0 if i == s else 1 for i in range(2, n + 2)]
    return Prediction(tuple(coeffs[: p.d + 1]), tuple(h))


def predict_cor42(p: StretchedProfile) -> Prediction:
    """Hilbert data of a stretched ideal with r = n (G Cohen-Macaulay)."""
    if p.r != p.nI:
        raise ProfileMismatch(f"needs r = nI; got r={p.r}, nI={p.nI}")
    n = p.nI
    coeffs = [p.e0, p.e0 - p.colenI + binom(n, 2)]
    coeffs += [binom(n + 1, k + 1) for k in range(2, p.d + 1)]
    h = [p.colenI, p.e0 - p.colenI - n + 1] + [1] * (n - 1)
    return Prediction(tuple(coeffs[: p.d + 1]), tuple(h))


def coefficients_from_hpoly(hpoly: Sequence[int], d: int) -> tuple[int, ...]:
    if not hpoly:
        raise ValueError("empty h-polynomial")
    return tuple(sum(binom(j, k) * c for j, c in enumerate(hpoly)) for k in range(d + 1))


def colength_from_hpoly(hpoly: Sequence[int], d: int, n: int) -> int:
    """l(A/I^(n+1)) read off the series h(z)/(1-z)^(d+1) at z^n."""
    return sum(c * binom(n - j + d, d) for j, c in enumerate(hpoly) if j <= n)


def hilbert_polynomial_value(coeffs: Sequence[int], d: int, n: int) -> int:
    return sum((-1) ** k * coeffs[k] * binom(n + d - k, d - k) for k in range(d + 1))


def profile_from_report(rep: FiltrationReport, d: int = 1) -> StretchedProfile:
    s = rep.s_first if rep.r == rep.n + 1 else None
    return StretchedProfile(
        d=d, e0=rep.v, colenI=rep.colength, nI=rep.n, r=rep.r, s=s, tau=rep.tau, mu=rep.mu_I
    )


@dataclass(frozen=True)
class CaseSpec:
    r: int
    lam: frozenset[int]
    n: int
    alphas: tuple[int, ...]  # alpha_1 .. alpha_{r-1}
    e1_offset: int  # e1 = e0 - l(A/I) + offset
    higher: tuple[int, ...]  # e_2, e_3, ... (zero beyond)
    cohen_macaulay: bool

    @property
    def label(self) -> str:
        return f"r{self.r}:lambda={{{','.join(map(str, sorted(self.lam)))}}}"


def _case(r, lam, n, alphas, off, higher, cm):
    return CaseSpec(r, frozenset(lam), n, tuple(alphas), off, tuple(higher), cm)


# keyed by (r, restricted-type-hypothesis)
CASE_TABLES: dict[tuple[int, bool], tuple[CaseSpec, ...]] = {
    (2, False): (_case(2, (), 2, (1,), 1, (1,), True),),
    (3, False): (
        _case(3, (), 3, (2, 1), 3, (4, 1), True),
        _case(3, (2,), 2, (1, 1), 2, (3, 1), False),
    ),
    (4, False): (
        _case(4, (), 4, (3, 2, 1), 6, (10, 5, 1), True),
        _case(4, (2,), 3, (2, 2, 1), 5, (9, 5, 1), False),
        _case(4, (3,), 3, (2, 1, 1), 4, (7, 4, 1), False),
        _case(4, (2, 3), 2, (1, 1, 1), 3, (6, 4, 1), False),
    ),
    (5, True): (
        _case(5, (), 5, (4, 3, 2, 1), 10, (20, 15, 6, 1), True),
        _case(5, (3,), 4, (3, 2, 2, 1), 8, (17, 14, 6, 1), False),
        _case(5, (4,), 4, (3, 2, 1, 1), 7, (14, 11, 5, 1), False),
        _case(5, (3, 4), 3, (2, 1, 1, 1), 5, (11, 10, 5, 1), False),
    ),
}
# a small Cohen-Macaulay type forbids 2 in Lambda
for _r in (2, 3, 4):
    CASE_TABLES[(_r, True)] = tuple(c for c in CASE_TABLES[(_r, False)] if 2 not in c.lam)


@dataclass(frozen=True)
class Classification:
    case: str
    tau_condition: bool
    predictions: dict = field(default_factory=dict)
    match: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.match.values())


def _generic_case(rep: FiltrationReport, p: StretchedProfile) -> Optional[CaseSpec]:
    # r = n or r = n + 1 are covered by the general closed forms
    if rep.r == rep.n:
        pred = predict_cor42(p)
    elif rep.r == rep.n + 1 and rep.s_first is not None:
        pred = predict_theorem11(
            StretchedProfile(p.d, p.e0, p.colenI, p.nI, p.r, rep.s_first, p.tau, p.mu)
        )
    else:
        return None
    alphas = _alpha_pattern(rep.n, rep.r, rep.lambda_set)
    return CaseSpec(
        rep.r,
        rep.lambda_set,
        rep.n,
        alphas,
        pred.e1 - p.e0 + p.colenI,
        tuple(coefficients_from_hpoly(pred.hpoly, rep.r + 1)[2:]),
        rep.r == rep.n,
    )


def _alpha_pattern(n: int, r: int, lam) -> tuple[int, ...]:
    return tuple(n - k + sum(1 for j in lam if j <= k) for k in range(1, r))


def classify_small_reduction(
    rep: FiltrationReport,
    p: Optional[StretchedProfile] = None,
    hilbert: Optional[HilbertData] = None,
) -> Classification:
    """Match a stretched report with r <= 5 against the small-reduction tables."""
    if not rep.stretched:
        raise ProfileMismatch("classification needs a stretched ideal")
    if not 2 <= rep.r <= 5:
        raise ProfileMismatch(f"classification covers 2 <= r <= 5, got r={rep.r}")
    if p is None:
        p = profile_from_report(rep)
    d = p.d
    tau_cond = rep.tau < rep.len_i_i2 - (d + 1) * rep.colength + 1

    table = CASE_TABLES.get((rep.r, tau_cond))
    if table is None:
        # r = 5 without the type hypothesis: only the general closed forms apply
        spec = _generic_case(rep, p)
        if spec is None:
            lam = ",".join(map(str, sorted(rep.lambda_set)))
            return Classification(f"r5:lambda={{{lam}}}:uncovered", tau_cond)
        label = spec.label + ":general"
    else:
        hits = [c for c in table if c.lam == rep.lambda_set]
        if not hits:
            raise UnclassifiedCase(
                f"r={rep.r}, Lambda={sorted(rep.lambda_set)}, tau condition={tau_cond}: "
                f"no case among {[c.label for c in table]}"
            )
        spec = hits[0]
        label = spec.label

    depth = d if spec.cohen_macaulay else d - 1
    e_pred = (p.e0, p.e0 - p.colenI + spec.e1_offset) + tuple(spec.higher)
    predictions = {
        "n": spec.n,
        "alphas": list(spec.alphas),
        "e": list((e_pred + (0,) * d)[: d + 1]),
        "depth_g": depth,
    }
    match = {
        "n": rep.n == spec.n,
        "alphas": tuple(rep.alphas[: rep.r - 1]) == spec.alphas,
        "depth_g": d != 1 or rep.depth_g == depth,
    }
    if hilbert is not None:
        match["e1"] = hilbert.e1 == predictions["e"][1]
    if tau_cond:
        match["small_type_alpha2"] = rep.alpha(2) == rep.alpha(1) - 1
        match["small_type_beta2"] = rep.beta(2) == 0
    return Classification(label, tau_cond, predictions, match)


def almost_minimal_violations(rep: FiltrationReport, hd: HilbertData) -> list[str]:
    """Conclusions owed by a stretched d = 1 ideal with r = n + 1."""
    if not (rep.stretched and rep.r == rep.n + 1):
        return []
    bad = []
    s = rep.s_first
    if s is None:
        return ["r = n + 1 but Q cap I^(k+1) = QI^k for every k"]
    pred = predict_theorem11(profile_from_report(rep))
    if hd.e1 != pred.e1:
        bad.append(f"e1={hd.e1}, closed form gives {pred.e1}")
    if hd.hpoly != pred.hpoly:
        bad.append(f"hpoly={hd.hpoly}, closed form gives {pred.hpoly}")
    if rep.lambda_set != {s}:
        bad.append(f"Lambda={sorted(rep.lambda_set)} != {{{s}}}")
    if rep.depth_g != 0:
        bad.append("depth G should be d - 1 = 0")
    if hd.postulation > max(0, rep.n):
        bad.append(f"postulation {hd.postulation} > n_I = {rep.n}")
    return bad


def cm_criterion_violations(rep: FiltrationReport, hd: Optional[HilbertData] = None) -> list[str]:
    """For stretched ideals: G is Cohen-Macaulay iff r = n, with the
    matching closed-form Hilbert data in that case."""
    if not rep.stretched:
        return []
    bad = []
    if (rep.depth_g == 1) != (rep.r == rep.n):
        bad.append(f"depth G={rep.depth_g} but r={rep.r}, n={rep.n}")
    if hd is not None and rep.r == rep.n:
        pred = predict_cor42(profile_from_report(rep))
        if hd.e1 != pred.e1 or hd.hpoly != pred.hpoly:
            bad.append(f"(e1, h)=({hd.e1}, {hd.hpoly}), closed form gives ({pred.e1}, {pred.hpoly})")
    return bad
