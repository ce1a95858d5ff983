"""Hilbert function, h-polynomial and e_0, e_1 in dimension one."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InternalInconsistency
from .filtration import Tower
from .ideal import HIdeal, colength, length_between, power

__all__ = ["HilbertData", "hilbert_function", "hilbert_data"]


@dataclass(frozen=True)
class HilbertData:
    e0: int
    e1: int
    hpoly: tuple[int, ...]
    postulation: int
    hf: tuple[int, ...]  # hf[n] = l(A/I^(n+1)), n = 0..r+2

    def polynomial(self, n: int) -> int:
        return self.e0 * (n + 1) - self.e1


def hilbert_function(I: HIdeal, n: int) -> int:
    """l_A(A/I^(n+1))."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return colength(power(I, n + 1))


def hilbert_data(
    I: HIdeal,
    Q: Optional[HIdeal] = None,
    *,
    tower: Optional[Tower] = None,
) -> HilbertData:
    t = tower if tower is not None else Tower(I, Q)
    r = t.reduction_number()
    # l(I^n/I^(n+1)) equals v = e0 from n = r on, so the series is finite
    graded = [length_between(t[k], t[k + 1]) for k in range(r + 1)]
    h = [graded[0]] + [graded[k] - graded[k - 1] for k in range(1, r + 1)]
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    e0 = sum(h)
    if e0 != t.v:
        raise InternalInconsistency(f"h(1)={e0} differs from the reduction valuation {t.v}")
    e1_series = sum(j * c for j, c in enumerate(h))
    e1_sally = length_between(I, t.Q) + sum(length_between(t[k + 1], t.qi(k)) for k in range(1, r + 1))
    if e1_series != e1_sally:
        raise InternalInconsistency(
            f"e1 from h-polynomial ({e1_series}) != l(I/Q) + sum alpha_k ({e1_sally}) for I={I}"
        )
    hf = [colength(t[k + 1]) for k in range(r + 3)]
    post = 0
    for n in range(len(hf) - 1, -1, -1):
        if hf[n] != e0 * (n + 1) - e1_series:
            post = n + 1
            break
    return HilbertData(e0=e0, e1=e1_series, hpoly=tuple(h), postulation=post, hf=tuple(hf))
