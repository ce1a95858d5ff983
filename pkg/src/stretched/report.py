"""Structured report documents and their inverse.

Field names are fixed; see the README for the layout.  All values are
plain integers, lists or booleans, so the document survives a JSON round
trip unchanged and ``parse_document`` rebuilds equal dataclasses.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .filtration import FiltrationReport, Tower, analyze
from .formulas import Classification, classify_small_reduction
from .hilbert import HilbertData, hilbert_data
from .ideal import HIdeal, ideal_from_exponents, maximal_ideal
from .semigroup import NumericalSemigroup, build_semigroup

__all__ = [
    "Analysis",
    "run_analysis",
    "to_document",
    "parse_document",
    "dumps",
    "format_table",
    "fmt_set",
]


@dataclass(frozen=True)
class Analysis:
    semigroup: NumericalSemigroup
    ideal: HIdeal
    report: FiltrationReport
    hilbert: HilbertData
    classification: Optional[Classification]


def run_analysis(gens, ideal_exps=None, cap: Optional[int] = None) -> Analysis:
    H = build_semigroup(gens)
    I = ideal_from_exponents(H, ideal_exps) if ideal_exps else maximal_ideal(H)
    t = Tower(I)
    rep = analyze(I, cap=cap, tower=t)
    hd = hilbert_data(I, tower=t)
    cls = classify_small_reduction(rep, hilbert=hd) if rep.stretched and 2 <= rep.r <= 5 else None
    return Analysis(H, I, rep, hd, cls)


def fmt_set(s) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def _classification_doc(c: Optional[Classification]):
    if c is None:
        return None
    return {
        "case": c.case,
        "tau_condition": c.tau_condition,
        "predictions": c.predictions,
        "match": c.match,
    }


def to_document(a: Analysis) -> dict:
    rep, hd, H = a.report, a.hilbert, a.semigroup
    return {
        "semigroup": {
            "generators": list(H.generators),
            "apery": list(H.apery),
            "frobenius": H.frobenius,
            "mu": H.embdim_mu,
        },
        "ideal": {"thresholds": list(a.ideal.thresholds)},
        "filtration": {
            "v": rep.v,
            "r": rep.r,
            "n": rep.n,
            "alphas": list(rep.alphas),
            "betas": list(rep.betas),
            "lambda": sorted(rep.lambda_set),
            "s": rep.s_first,
            "stretched": rep.stretched,
            "tau": rep.tau,
            "depth_g": rep.depth_g,
            "mu_I": rep.mu_I,
            "sally": list(rep.sally),
            "colength": rep.colength,
            "len_I_over_I2": rep.len_i_i2,
        },
        "hilbert": {
            "e0": hd.e0,
            "e1": hd.e1,
            "hpoly": list(hd.hpoly),
            "postulation": hd.postulation,
            "hf": list(hd.hf),
        },
        "classification": _classification_doc(a.classification),
    }


def parse_document(doc: dict) -> tuple[FiltrationReport, HilbertData]:
    """Inverse of ``to_document`` on the filtration and Hilbert parts."""
    f, h = doc["filtration"], doc["hilbert"]
    rep = FiltrationReport(
        v=f["v"],
        r=f["r"],
        n=f["n"],
        alphas=tuple(f["alphas"]),
        betas=tuple(f["betas"]),
        lambda_set=frozenset(f["lambda"]),
        s_first=f["s"],
        stretched=f["stretched"],
        tau=f["tau"],
        mu_I=f["mu_I"],
        depth_g=f["depth_g"],
        sally=tuple(f.get("sally", ())),
        colength=f.get("colength", 0),
        len_i_i2=f.get("len_I_over_I2", 0),
    )
    hd = HilbertData(
        e0=h["e0"],
        e1=h["e1"],
        hpoly=tuple(h["hpoly"]),
        postulation=h["postulation"],
        hf=tuple(h["hf"]),
    )
    return rep, hd


def dumps(doc, indent: Optional[int] = 2) -> str:
    return json.dumps(doc, indent=indent, sort_keys=False)


def format_table(a: Analysis) -> str:
    rep, hd, H = a.report, a.hilbert, a.semigroup
    rows = [
        ("semigroup", str(H)),
        ("apery", " ".join(map(str, H.apery))),
        ("frobenius", H.frobenius),
        ("embedding dim", H.embdim_mu),
        ("ideal", str(a.ideal)),
        ("v = e0", rep.v),
        ("l(A/I)", rep.colength),
        ("r", rep.r),
        ("n", rep.n),
        ("alpha_1..r", " ".join(map(str, rep.alphas))),
        ("beta_1..r", " ".join(map(str, rep.betas))),
        ("Lambda", fmt_set(rep.lambda_set)),
        ("s", "-" if rep.s_first is None else rep.s_first),
        ("stretched", "yes" if rep.stretched else "no"),
        ("tau", rep.tau),
        ("mu(I)", rep.mu_I),
        ("depth G", rep.depth_g),
        ("e1", hd.e1),
        ("h-polynomial", " ".join(map(str, hd.hpoly))),
        ("Hilbert poly", f"{hd.e0}(n+1) - {hd.e1} for n >= {hd.postulation}"),
        ("l(A/I^(n+1))", " ".join(map(str, hd.hf))),
    ]
    if a.classification is not None:
        c = a.classification
        rows.append(("case", c.case + ("" if c.ok else "  MISMATCH")))
    w = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{w}}  {v}" for k, v in rows)
