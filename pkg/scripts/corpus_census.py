#!/usr/bin/env python3
"""Census of stretched maximal ideals over a bounded range of semigroups.

    python3 scripts/corpus_census.py --max-e 10 --max-gen 60

Tabulates r - n, Lambda shapes and small-reduction cases, and counts
violations of the closed forms (r = n and r = n + 1), the filtration
identities and the depth criterion.  Exits 2 on any violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from dataclasses import asdict, dataclass

from stretched.filtration import stretched_identity_violations
from stretched.formulas import almost_minimal_violations, classify_small_reduction, cm_criterion_violations
from stretched.search import SearchSpec, run_search


@dataclass
class CensusConfig:
    max_e: int = 8
    max_gen: int = 40
    min_e: int = 3
    filter: str = "stretched"
    workers: int = 0  # 0: take STRETCHED_WORKERS or 1
    json_out: str = ""


def census(cfg: CensusConfig) -> dict:
    t0 = time.perf_counter()
    spec = SearchSpec(cfg.max_e, cfg.max_gen, filter=cfg.filter, min_e=cfg.min_e)
    res = run_search(spec, workers=cfg.workers or None)
    gap, shapes, cases, by_e = Counter(), Counter(), Counter(), Counter()
    violations = Counter()
    first = {}
    for h in res.hits:
        rep, hd = h.report, h.hilbert
        gap[rep.r - rep.n] += 1
        by_e[(h.generators[0], rep.r - rep.n)] += 1
        if rep.lambda_set:
            shapes[tuple(sorted(rep.lambda_set))] += 1
        checks = {
            "identities": stretched_identity_violations(rep),
            "almost_minimal": almost_minimal_violations(rep, hd),
            "depth_criterion": cm_criterion_violations(rep, hd),
        }
        if rep.stretched and 2 <= rep.r <= 5:
            c = classify_small_reduction(rep, hilbert=hd)
            cases[c.case] += 1
            checks["case_table"] = [] if c.ok else [f"{c.case}: {c.match}"]
        for k, v in checks.items():
            if v:
                violations[k] += 1
                first.setdefault(k, f"{h.generators}: {v[0]}")
    return dict(
        config=asdict(cfg),
        enumerated=res.enumerated,
        analyzed=res.analyzed,
        hits=len(res.hits),
        seconds=round(time.perf_counter() - t0, 1),
        r_minus_n=dict(sorted(gap.items())),
        lambda_shapes={"{" + ",".join(map(str, k)) + "}": v for k, v in shapes.most_common(15)},
        cases=dict(sorted(cases.items())),
        max_gap_by_e={e: max(g for (ee, g) in by_e if ee == e) for e in sorted({e for e, _ in by_e})},
        violations=dict(violations),
        first_violation=first,
    )


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in asdict(CensusConfig()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=type(default), default=default)
    cfg = CensusConfig(**vars(ap.parse_args(argv)))
    out = census(cfg)
    print(f"{out['hits']} hits / {out['analyzed']} analyzed / {out['enumerated']} semigroups in {out['seconds']}s")
    print("r - n:", out["r_minus_n"])
    print("max r - n by multiplicity:", out["max_gap_by_e"])
    print("commonest Lambda:", out["lambda_shapes"])
    print("cases (r <= 5):")
    for k, v in out["cases"].items():
        print(f"  {k:<28} {v}")
    print("violations:", out["violations"] or "none")
    for k, v in out["first_violation"].items():
        print(f"  {k}: {v}")
    if cfg.json_out:
        with open(cfg.json_out, "w") as fh:
            json.dump(out, fh, indent=2)
    return 2 if out["violations"] else 0


if __name__ == "__main__":
    sys.exit(main())
