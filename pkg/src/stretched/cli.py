"""Command-line front end.

Exit status: 0 success, 1 input error, 2 verification mismatch,
3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .errors import ConstraintViolation, InputError, InternalInconsistency
from .family import (
    FamilyParams,
    check_construction_lemmas,
    corollary67_params,
    predicted_report,
    validate_family,
)
from .fixtures import FIXTURES, verify_all
from .report import fmt_set, format_table, run_analysis, to_document
from .search import SearchSpec, row_for, run_search

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH, EXIT_INTERNAL = 0, 1, 2, 3


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _assignments(text: str) -> dict[int, int]:
    out = {}
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        k, sep, v = part.partition("=")
        try:
            if not sep:
                raise ValueError
            out[int(k)] = int(v)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected n=b_n pairs such as 4=5,5=6, got {part!r}") from None
    return out


def _emit(obj, as_json: bool, text: str) -> None:
    print(json.dumps(obj, indent=2) if as_json else text)


def cmd_analyze(args) -> int:
    a = run_analysis(args.gens, args.ideal, cap=args.cap)
    _emit(to_document(a), args.json, format_table(a))
    if a.classification is not None and not a.classification.ok:
        return EXIT_MISMATCH
    return EXIT_OK


def _family_params(args) -> FamilyParams:
    if args.cor67:
        if args.s is None:
            raise InputError("--cor67 needs --s")
        return corollary67_params(args.b, args.e, args.ell, args.s, fill_strategy=args.fill)
    p = FamilyParams(args.b, args.e, args.ell, args.bn or {})
    bad = validate_family(p)
    if bad:
        raise ConstraintViolation(bad)
    return p


def cmd_family(args) -> int:
    p = _family_params(args)
    pred = predicted_report(p)
    gens = [p.generator(n) for n in [0] + p.indices]
    a = run_analysis(gens)
    rep, hd = a.report, a.hilbert
    computed = dict(
        n=rep.n, r=rep.r, lambda_set=rep.lambda_set, tau=rep.tau, mu=rep.mu_I, e1=hd.e1, depth_g=rep.depth_g
    )
    predicted = dict(
        n=pred.n, r=pred.r, lambda_set=pred.lambda_set, tau=pred.tau, mu=pred.mu, e1=pred.e1, depth_g=pred.depth_g
    )
    lemmas = check_construction_lemmas(p)
    mismatched = [k for k in predicted if predicted[k] != computed[k]]
    failed = {k: v for k, v in lemmas.items() if v}
    status = EXIT_MISMATCH if mismatched or failed or not rep.stretched else EXIT_OK

    def show(v):
        return sorted(v) if isinstance(v, frozenset) else v

    if args.json:
        doc = {
            "params": {"b": p.b, "e": p.e, "ell": p.ell, "bn": {str(k): v for k, v in sorted(p.b_values.items())}},
            "fill_note": p.fill_note,
            "valid": True,
            "semigroup": list(a.semigroup.generators),
            "predicted": {k: show(v) for k, v in predicted.items()},
            "computed": {k: show(v) for k, v in computed.items()},
            "stretched": rep.stretched,
            "lemmas": lemmas,
            "report": to_document(a),
            "agree": status == EXIT_OK,
        }
        print(json.dumps(doc, indent=2))
        return status

    print(f"params     {p.describe()}")
    if p.fill_note:
        print(f"note       {p.fill_note}")
    print("valid      yes")
    print(f"semigroup  {a.semigroup}")
    print(f"stretched  {'yes' if rep.stretched else 'NO'}")
    print(f"{'':10} {'predicted':>12} {'computed':>12}")
    for k in predicted:
        pv, cv = predicted[k], computed[k]
        if isinstance(pv, frozenset):
            pv, cv = fmt_set(pv), fmt_set(cv)
        flag = "" if k not in mismatched else "  <-- differs"
        print(f"{k:<10} {pv!s:>12} {cv!s:>12}{flag}")
    for name, fails in lemmas.items():
        print(f"lemma {name}: {'ok' if not fails else 'FAILED'}")
        for msg in fails:
            print(f"    {msg}")
    print("agree" if status == EXIT_OK else "FALSIFIED: prediction and computation differ")
    return status


def cmd_search(args) -> int:
    spec = SearchSpec(
        max_e=args.max_e,
        max_gen=args.max_gen,
        max_gens_count=args.max_gens_count,
        filter=args.filter or "",
        limit=args.limit,
        min_e=args.min_e,
    )
    res = run_search(spec, workers=args.workers)
    if args.json:
        rows = []
        for h in res.hits:
            row = row_for(h.generators, h.report, h.hilbert, 0)
            row.pop("frobenius")
            row["lambda"] = sorted(row["lambda"])
            row["generators"] = list(h.generators)
            row["hpoly"] = list(h.hilbert.hpoly)
            rows.append(row)
        print(json.dumps({"enumerated": res.enumerated, "analyzed": res.analyzed, "hits": rows}, indent=2))
        return EXIT_OK
    head = f"{'generators':<32} {'r':>2} {'n':>2} {'Lambda':<10} {'tau':>3} {'dG':>2} {'e0':>3} {'e1':>4}"
    print(head)
    for h in res.hits:
        rep, hd = h.report, h.hilbert
        g = ",".join(map(str, h.generators))
        print(
            f"{g:<32} {rep.r:>2} {rep.n:>2} {fmt_set(rep.lambda_set):<10} {rep.tau:>3} "
            f"{rep.depth_g:>2} {hd.e0:>3} {hd.e1:>4}"
        )
    print(f"# {len(res.hits)} hits, {res.enumerated} semigroups enumerated, {res.analyzed} analyzed")
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    if args.dump_fixtures:
        print(json.dumps([f.to_dict() for f in FIXTURES], indent=2))
        return EXIT_OK
    results = verify_all(args.fixture)
    ok = all(r.passed for r in results)
    if args.json:
        doc = [
            {
                "id": r.fixture.id,
                "passed": r.passed,
                "erratum": r.fixture.erratum,
                "diffs": r.diffs,
                "errata": r.errata,
                "case": None if r.classification is None else r.classification.case,
                "report": {
                    "r": r.report.r,
                    "n": r.report.n,
                    "lambda": sorted(r.report.lambda_set),
                    "tau": r.report.tau,
                    "mu": r.report.mu_I,
                    "depth_g": r.report.depth_g,
                    "e0": r.hilbert.e0,
                    "e1": r.hilbert.e1,
                },
            }
            for r in results
        ]
        print(json.dumps({"passed": ok, "fixtures": doc}, indent=2))
        return EXIT_OK if ok else EXIT_MISMATCH
    for r in results:
        rep, hd = r.report, r.hilbert
        tag = "ok  " if r.passed else "FAIL"
        print(
            f"{tag} {r.fixture.id:<22} r={rep.r} n={rep.n} Lambda={fmt_set(rep.lambda_set)} "
            f"tau={rep.tau} mu={rep.mu_I} e0={hd.e0} e1={hd.e1} depth_G={rep.depth_g}"
        )
        for msg in r.errata:
            print(f"     erratum  {msg}")
        for msg in r.diffs:
            print(f"     diff     {msg}")
    print(f"{sum(r.passed for r in results)}/{len(results)} fixtures match")
    return EXIT_OK if ok else EXIT_MISMATCH


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors (1); argparse would use 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="stretched", description="Invariants of monomial ideals in numerical semigroup rings.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="filtration and Hilbert invariants of one ideal")
    a.add_argument("--gens", type=_int_list, required=True, help="semigroup generators, e.g. 7,15,18,26,27")
    a.add_argument("--ideal", type=_int_list, default=None, help="ideal generator exponents (default: maximal ideal)")
    a.add_argument("--cap", type=int, default=None, help="give up on the reduction number beyond this power")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    f = sub.add_parser("family", help="build a member of the stretched family and compare with its predicted invariants")
    f.add_argument("--b", type=int, required=True)
    f.add_argument("--e", type=int, required=True)
    f.add_argument("--ell", type=int, required=True)
    f.add_argument("--bn", type=_assignments, default=None, help="b_n values as n=b_n pairs, e.g. 4=5,5=6")
    f.add_argument("--cor67", action="store_true", help="derive b_n for r = ell+1 with Lambda = {s}")
    f.add_argument("--s", type=int, default=None)
    f.add_argument("--fill", default="boundary", choices=["boundary"], help="fill rule for the free b_n under --cor67")
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_family)

    s = sub.add_parser("search", help="enumerate semigroups and filter maximal-ideal invariants")
    s.add_argument("--max-e", type=int, required=True)
    s.add_argument("--max-gen", type=int, required=True)
    s.add_argument("--min-e", type=int, default=1)
    s.add_argument("--max-gens-count", type=int, default=None)
    s.add_argument("--filter", default="", help='e.g. "stretched && r == n+1 && e <= 8"')
    s.add_argument("--limit", type=int, default=None)
    s.add_argument("--workers", type=int, default=None, help="worker processes (default: $STRETCHED_WORKERS or 1)")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)

    v = sub.add_parser("verify-paper", help="recompute the worked-example fixtures")
    v.add_argument("--fixture", action="append", default=None, help="fixture id (repeatable)")
    v.add_argument("--dump-fixtures", action="store_true", help="print the fixture registry as JSON")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify_paper)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConstraintViolation as exc:
        print("error: ConstraintViolation", file=sys.stderr)
        for msg in exc.violations:
            print(f"  {msg}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return EXIT_INPUT
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
