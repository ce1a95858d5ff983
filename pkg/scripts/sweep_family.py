#!/usr/bin/env python3
"""Sweep the stretched family and compare every member with its prediction.

    python3 scripts/sweep_family.py --count 600 --max-b 4 --max-e 15
    python3 scripts/sweep_family.py --exhaustive --max-b 3 --max-e 9

Prints a mismatch count per invariant and the distribution of (r - n, Lambda).
Exits 2 if any member disagrees with its prediction or fails a lemma check.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from dataclasses import asdict, dataclass

from stretched.family import (
    build_family_semigroup,
    check_construction_lemmas,
    iter_family_params,
    predicted_report,
    sample_family_params,
)
from stretched.filtration import Tower, analyze
from stretched.hilbert import hilbert_data
from stretched.ideal import maximal_ideal


@dataclass
class SweepConfig:
    count: int = 600
    max_b: int = 4
    max_e: int = 15
    min_e: int = 3
    seed: int = 1
    exhaustive: bool = False
    lemmas: bool = True
    json_out: str = ""


def params_for(cfg: SweepConfig):
    if cfg.exhaustive:
        return list(iter_family_params(cfg.max_b, cfg.max_e, cfg.min_e))
    return sample_family_params(cfg.count, cfg.max_b, cfg.max_e, cfg.seed, cfg.min_e)


def sweep(cfg: SweepConfig) -> dict:
    t0 = time.perf_counter()
    mismatches: Counter = Counter()
    shapes: Counter = Counter()
    examples = {}
    ps = params_for(cfg)
    for p in ps:
        pr = predicted_report(p)
        m = maximal_ideal(build_family_semigroup(p))
        t = Tower(m)
        rep, hd = analyze(m, tower=t, check=False), hilbert_data(m, tower=t)
        got = dict(n=rep.n, r=rep.r, lam=rep.lambda_set, tau=rep.tau, mu=rep.mu_I, e1=hd.e1, depth=rep.depth_g)
        want = dict(n=pr.n, r=pr.r, lam=pr.lambda_set, tau=pr.tau, mu=pr.mu, e1=pr.e1, depth=pr.depth_g)
        for k in got:
            if got[k] != want[k]:
                mismatches[k] += 1
                examples.setdefault(k, f"{p.describe()}: computed {got[k]}, predicted {want[k]}")
        if not rep.stretched:
            mismatches["stretched"] += 1
        if cfg.lemmas:
            for name, fails in check_construction_lemmas(p).items():
                if fails:
                    mismatches["lemma:" + name] += 1
                    examples.setdefault("lemma:" + name, f"{p.describe()}: {fails[0]}")
        shapes[(rep.r - rep.n, tuple(sorted(rep.lambda_set)))] += 1
    return dict(
        config=asdict(cfg),
        instances=len(ps),
        seconds=round(time.perf_counter() - t0, 2),
        mismatches=dict(mismatches),
        examples=examples,
        shapes={f"r-n={k[0]} Lambda={{{','.join(map(str, k[1]))}}}": v for k, v in sorted(shapes.items())},
    )


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in asdict(SweepConfig()).items():
        flag = "--" + name.replace("_", "-")
        if isinstance(default, bool):
            ap.add_argument(flag, action="store_true", default=default)
        else:
            ap.add_argument(flag, type=type(default), default=default)
    ap.add_argument("--no-lemmas", dest="lemmas", action="store_false")
    cfg = SweepConfig(**vars(ap.parse_args(argv)))
    out = sweep(cfg)
    print(f"{out['instances']} parameter sets in {out['seconds']}s")
    print("mismatches:", out["mismatches"] or "none")
    for k, v in out["examples"].items():
        print(f"  {k}: {v}")
    print("shapes:")
    for k, v in out["shapes"].items():
        print(f"  {k:<28} {v}")
    if cfg.json_out:
        with open(cfg.json_out, "w") as fh:
            json.dump(out, fh, indent=2)
    return 2 if out["mismatches"] else 0


if __name__ == "__main__":
    sys.exit(main())
