"""Exhaustive search over numerical semigroups, filtered by invariants.

Candidates are minimal generating sets ``(e, g_1 < g_2 < ...)`` with every
``g_i`` outside the semigroup generated by the smaller ones, so each
semigroup appears exactly once.  They are produced in lexicographic order
and the search is split into independent chunks keyed by ``(e, g_1)``, so
the output does not depend on the number of workers.

Filters are small conjunctions such as ``stretched && r == n+1 && e <= 8``.
"""

from __future__ import annotations

import ast
import os
import re
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterator, Optional

from .filtration import FiltrationReport, Tower, analyze
from .hilbert import HilbertData, hilbert_data
from .ideal import maximal_ideal
from .semigroup import build_semigroup

__all__ = [
    "SearchSpec",
    "SearchHit",
    "SearchResult",
    "FILTER_NAMES",
    "compile_filter",
    "iter_candidates",
    "maximal_ideal_stretched_fast",
    "run_search",
    "row_for",
    "WORKERS_ENV",
]

WORKERS_ENV = "STRETCHED_WORKERS"

FILTER_NAMES = (
    "e", "mu", "ngens", "frobenius", "v", "r", "n", "s", "tau", "depth_g", "stretched",
    "lambda", "colength", "e0", "e1", "postulation",
)  # fmt: skip


@dataclass(frozen=True)
class SearchSpec:
    max_e: int
    max_gen: int
    max_gens_count: Optional[int] = None
    filter: str = ""
    limit: Optional[int] = None
    min_e: int = 1


@dataclass(frozen=True)
class SearchHit:
    generators: tuple[int, ...]
    report: FiltrationReport
    hilbert: HilbertData


@dataclass
class SearchResult:
    hits: list[SearchHit] = field(default_factory=list)
    enumerated: int = 0
    analyzed: int = 0


class FilterError(ValueError):
    pass


_ALLOWED = (
    ast.Expression, ast.BoolOp, ast.And, ast.Compare, ast.BinOp, ast.Add, ast.Sub,
    ast.UnaryOp, ast.USub, ast.Not, ast.Name, ast.Load, ast.Constant, ast.Set,
    ast.Eq, ast.NotEq, ast.Lt, ast.LtE, ast.Gt, ast.GtE, ast.In, ast.NotIn,
)  # fmt: skip


class _EmptySet(ast.NodeTransformer):
    def visit_Dict(self, node):
        if node.keys:
            raise FilterError("only set literals are allowed")
        return ast.copy_location(ast.Set(elts=[]), node)


_LAMBDA = "Lambda_"  # "lambda" is a Python keyword; renamed before parsing


def _parse_filter(expr: str) -> ast.Expression:
    src = expr.replace("&&", " and ").replace("≤", "<=").replace("≥", ">=").strip()
    src = re.sub(r"\b[Ll]ambda\b", _LAMBDA, src)
    if "||" in src:
        raise FilterError("filters are conjunctions only (use &&)")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise FilterError(f"cannot parse filter {expr!r}: {exc.msg}") from None
    tree = ast.fix_missing_locations(_EmptySet().visit(tree))
    for node in ast.walk(tree):
        if isinstance(node, ast.BoolOp) and not isinstance(node.op, ast.And):
            raise FilterError("filters are conjunctions only (use &&)")
        if not isinstance(node, _ALLOWED):
            raise FilterError(f"unsupported syntax in filter: {type(node).__name__}")
        if isinstance(node, ast.Name) and node.id not in FILTER_NAMES and node.id != _LAMBDA:
            raise FilterError(f"unknown name {node.id!r}; known: {', '.join(FILTER_NAMES)}")
        if isinstance(node, ast.Constant) and not isinstance(node.value, int):
            raise FilterError(f"only integer constants are allowed, got {node.value!r}")
    return tree


def compile_filter(expr: str) -> Callable[[dict], bool]:
    if not expr or not expr.strip():
        return lambda row: True
    code = compile(_parse_filter(expr), "<filter>", "eval")
    return lambda row: bool(eval(code, {"__builtins__": {}}, {**row, _LAMBDA: row["lambda"]}))


def _requires_stretched(expr: str) -> bool:
    if not expr or not expr.strip():
        return False
    body = _parse_filter(expr).body
    terms = body.values if isinstance(body, ast.BoolOp) else [body]
    return any(isinstance(t, ast.Name) and t.id == "stretched" for t in terms)


def row_for(gens, rep: FiltrationReport, hd: HilbertData, frobenius: int) -> dict:
    return {
        "e": gens[0],
        "mu": rep.mu_I,
        "ngens": len(gens),
        "frobenius": frobenius,
        "v": rep.v,
        "r": rep.r,
        "n": rep.n,
        "s": rep.s_first if rep.s_first is not None else 0,
        "tau": rep.tau,
        "depth_g": rep.depth_g,
        "stretched": rep.stretched,
        "lambda": rep.lambda_set,
        "colength": rep.colength,
        "e0": hd.e0,
        "e1": hd.e1,
        "postulation": hd.postulation,
    }


def _add_generator(ap: list[int], g: int, e: int) -> list[int]:
    k = g % e
    out = list(ap)
    # relax along the cycle i -> i + g until stable
    changed = True
    while changed:
        changed = False
        for i in range(e):
            j = (i + k) % e
            c = out[i] + g
            if c < out[j]:
                out[j] = c
                changed = True
    return out


def _chunks(spec: SearchSpec) -> list[tuple[int, int]]:
    chunks = []
    for e in range(max(spec.min_e, 1), spec.max_e + 1):
        if e == 1:
            if spec.max_gen >= 1:
                chunks.append((1, 0))
            continue
        if spec.max_gens_count is not None and spec.max_gens_count < 2:
            continue
        for g1 in range(e + 1, spec.max_gen + 1):
            if g1 % e:
                chunks.append((e, g1))
    return chunks


def _iter_chunk(chunk: tuple[int, int], spec: SearchSpec) -> Iterator[tuple[tuple[int, ...], list[int]]]:
    e, g1 = chunk
    if e == 1:
        yield (1,), [0]
        return
    INF = 1 << 60
    base = [0] + [INF] * (e - 1)
    cap = spec.max_gens_count if spec.max_gens_count is not None else e
    maxg = spec.max_gen

    def dfs(gens, ap, g_gcd):
        if g_gcd == 1:
            yield tuple(gens), ap
        if len(gens) >= cap:
            return
        for g in range(gens[-1] + 1, maxg + 1):
            if g >= ap[g % e]:
                continue  # already in the semigroup
            gens.append(g)
            yield from dfs(gens, _add_generator(ap, g, e), gcd(g_gcd, g))
            gens.pop()

    yield from dfs([e, g1], _add_generator(base, g1, e), gcd(e, g1))


def iter_candidates(spec: SearchSpec) -> Iterator[tuple[tuple[int, ...], list[int]]]:
    """(minimal generators, Apery table) in lexicographic order."""
    for chunk in _chunks(spec):
        yield from _iter_chunk(chunk, spec)


def maximal_ideal_stretched_fast(gens, apery) -> bool:
    """Stretchedness of the maximal ideal read off the Apery set alone.

    An Apery element lies in m^k + Q, Q = (u^e), iff it has a factorization
    of length >= k, so l(m^2+Q/m^3+Q) counts Apery elements whose longest
    factorization has length exactly 2.  Q cap m^2 = Qm always holds for m.
    """
    e = gens[0]
    if e < 3:
        return False
    inside = set(apery)
    others = gens[1:]
    order = {0: 0}
    twos = 0
    for w in sorted(apery)[1:]:
        best = 0
        for g in others:
            if g > w:
                break
            if (w - g) in inside:
                o = order[w - g] + 1
                if o > best:
                    best = o
        order[w] = best
        if best == 2:
            twos += 1
            if twos > 1:
                return False
    return twos == 1


def _search_chunk(args) -> tuple[list[SearchHit], int, int]:
    chunk, spec = args
    pred = compile_filter(spec.filter)
    need_stretched = _requires_stretched(spec.filter)
    hits = []
    enumerated = analyzed = 0
    for gens, ap in _iter_chunk(chunk, spec):
        enumerated += 1
        if need_stretched and not maximal_ideal_stretched_fast(gens, ap):
            continue
        H = build_semigroup(gens)
        m = maximal_ideal(H)
        t = Tower(m)
        rep = analyze(m, tower=t)
        hd = hilbert_data(m, tower=t)
        analyzed += 1
        if pred(row_for(gens, rep, hd, H.frobenius)):
            hits.append(SearchHit(gens, rep, hd))
            if spec.limit is not None and len(hits) >= spec.limit:
                break
    return hits, enumerated, analyzed


def _worker_count(workers: Optional[int]) -> int:
    if workers is None:
        try:
            workers = int(os.environ.get(WORKERS_ENV, "1"))
        except ValueError:
            workers = 1
    return max(1, workers)


def run_search(spec: SearchSpec, workers: Optional[int] = None) -> SearchResult:
    compile_filter(spec.filter)  # fail fast on a bad filter
    if spec.limit is not None and spec.limit <= 0:
        return SearchResult()
    chunks = _chunks(spec)
    jobs = [(c, spec) for c in chunks]
    res = SearchResult()
    nw = _worker_count(workers)

    def consume(stream):
        for hits, en, an in stream:
            res.enumerated += en
            res.analyzed += an
            for h in hits:
                res.hits.append(h)
                if spec.limit is not None and len(res.hits) >= spec.limit:
                    return

    if nw == 1 or len(jobs) < 2:
        consume(map(_search_chunk, jobs))
    else:
        import multiprocessing

        with multiprocessing.Pool(nw) as pool:
            consume(pool.imap(_search_chunk, jobs, chunksize=4))
    return res
