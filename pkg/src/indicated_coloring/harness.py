"""Theorem-replay suites over desk-scale corpora.

Each suite replays one result as exact computations: solver verdicts,
strategy playouts, parameter arithmetic or randomized structural trials.
ResourceLimit verdicts become skip-limit cases, never passes or failures.
Reports are deterministic for a fixed seed and limits; case order is
canonical (sorted by key) regardless of execution order.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import families
from .corpus import graphs_upto
from .expressions import build_expression
from .graph6 import encode_graph6
from .graphs import (
    Graph,
    complement,
    complete_expansion,
    disjoint_union,
    independent_expansion,
    lexicographic_product,
)
from .isomorphism import is_isomorphic
from .parameters import (
    chromatic_number,
    coloring_number,
    degree_stats,
)
from .recognizers import (
    contains_induced,
    expansion_closure_check,
    family_membership_F,
)
from .solver import (
    DEFAULT_LIMITS,
    Limits,
    Outcome,
    ann_wins,
    indicated_chromatic_number,
)
from .strategies import all_ben_lines, product_col_ann


@dataclass(frozen=True)
class SuiteCase:
    key: str
    expected: str
    observed: str
    status: str  # "pass" | "fail" | "skip-limit"
    millis: float = 0.0
    note: Optional[str] = None

    def to_json_dict(self, include_timing: bool = False) -> dict:
        d: dict = {"case": self.key, "expected": self.expected,
                   "observed": self.observed, "status": self.status}
        if self.note:
            d["note"] = self.note
        if include_timing:
            d["millis"] = round(self.millis, 3)
        return d


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    seed: int
    cases: tuple[SuiteCase, ...]
    summary: dict = field(compare=False)

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def to_json_dict(self, include_timing: bool = False) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "cases": [c.to_json_dict(include_timing) for c in self.cases],
            "summary": self.summary,
        }

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_json_dict(include_timing), sort_keys=True, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "case", "expected", "observed", "status", "millis"])
        for c in self.cases:
            w.writerow([self.suite, c.key, c.expected, c.observed, c.status,
                        f"{c.millis:.1f}"])
        return buf.getvalue()


def _finish(suite: str, seed: int, cases: list[SuiteCase]) -> SuiteReport:
    cases = sorted(cases, key=lambda c: c.key)
    summary = {
        "pass": sum(c.status == "pass" for c in cases),
        "fail": sum(c.status == "fail" for c in cases),
        "skip-limit": sum(c.status == "skip-limit" for c in cases),
        "flagged": sum(1 for c in cases if c.note),
        "total": len(cases),
    }
    return SuiteReport(suite, seed, tuple(cases), summary)


def _timed_case(key: str, expected: str, run: Callable[[], tuple[str, str]],
                note: Optional[str] = None) -> SuiteCase:
    t0 = time.monotonic()
    observed, status = run()
    return SuiteCase(key, expected, observed, status,
                     (time.monotonic() - t0) * 1000.0, note)


def _outcome_case(key: str, graph: Graph, k: int, expect: Outcome,
                  limits: Limits) -> SuiteCase:
    def run():
        v = ann_wins(graph, k, limits)
        if v.outcome is Outcome.RESOURCE_LIMIT:
            return v.outcome.value, "skip-limit"
        return v.outcome.value, "pass" if v.outcome is expect else "fail"
    return _timed_case(key, expect.value, run)


# -- individual suites ---------------------------------------------------

_COL_BOUND_PAIRS = (("P2", "P2"), ("P3", "P2"), ("P4", "P2"),
                    ("C5", "P2"), ("P2", "P3"), ("K3", "P2"))


def _suite_col_bound(corpus: dict, limits: Limits, seed: int) -> list[SuiteCase]:
    cases = []
    for gx, hx in corpus.get("pairs", _COL_BOUND_PAIRS):
        g, h = build_expression(gx), build_expression(hx)
        k = coloring_number(g) * coloring_number(h)
        prod = lexicographic_product(g, h)
        cases.append(_outcome_case(
            f"{gx}[{hx}]/solver@k={k}", prod, k, Outcome.ANN_WINS, limits))

        def run(g=g, h=h, k=k, prod=prod):
            bad, lines = all_ben_lines(prod, k, product_col_ann(g, h))
            if bad is None:
                return f"ann wins all {lines} lines", "pass"
            return f"losing line {bad.to_json_dict()}", "fail"
        cases.append(_timed_case(
            f"{gx}[{hx}]/product-col-all-lines@k={k}", "ann wins every Ben line", run))
    return cases


_COL_GAP_PAIRS = (("K2", "C5"), ("K3", "C5"), ("K4", "C5"))


def _suite_col_gap(corpus: dict, limits: Limits, seed: int) -> list[SuiteCase]:
    cases = []
    gaps = []
    for gx, hx in corpus.get("pairs", _COL_GAP_PAIRS):
        g, h = build_expression(gx), build_expression(hx)
        delta_h = degree_stats(h)[0]
        bound = (coloring_number(g) - 1) * (h.n - 1 - delta_h)
        gap = (coloring_number(lexicographic_product(g, h))
               - coloring_number(g) * coloring_number(h))
        gaps.append((gx, gap))
        status = "pass" if gap >= bound else "fail"
        cases.append(SuiteCase(
            f"col-gap({gx}[{hx}])", f"gap >= {bound}", f"gap = {gap}", status))
    observed = ", ".join(f"{gx}: {gap}" for gx, gap in gaps)
    increasing = all(gaps[i][1] < gaps[i + 1][1] for i in range(len(gaps) - 1))
    cases.append(SuiteCase(
        "col-gap/strictly-increasing", "gaps strictly increase", observed,
        "pass" if increasing else "fail"))
    return cases


_REDUCTION_G = ("P3", "P4", "K3", "paw", "C5")
_REDUCTION_H = ("P2", "P3", "C4")


def _suite_reduction(corpus: dict, limits: Limits, seed: int) -> list[SuiteCase]:
    cases = []
    for gx in corpus.get("gs", _REDUCTION_G):
        for hx in corpus.get("hs", _REDUCTION_H):
            g, h = build_expression(gx), build_expression(hx)
            if g.n * h.n > limits.max_vertices:
                continue
            prod = lexicographic_product(g, h)
            gk2 = lexicographic_product(g, families.complete(2))
            lo = chromatic_number(gk2)
            hi = coloring_number(g) * coloring_number(h)
            for k in range(lo, hi + 1):
                def run(prod=prod, gk2=gk2, k=k):
                    a = ann_wins(prod, k, limits)
                    b = ann_wins(gk2, k, limits)
                    if not (a.decided and b.decided):
                        return "resource limit", "skip-limit"
                    obs = f"G[H]={a.outcome.value}, G[K2]={b.outcome.value}"
                    return obs, "pass" if a.outcome is b.outcome else "fail"
                cases.append(_timed_case(
                    f"{gx}[{hx}]@k={k}", "same verdict as G[K2]", run))
    return cases


_UNION_PAIRS = (("P3", "K3"), ("P4", "P3"), ("C5", "K1"), ("C5", "P4"),
                ("K4", "K3"), ("C4", "C5"), ("P5", "K2"), ("paw", "P3"),
                ("K1,3", "K3"), ("C6", "K3"))


def _suite_union(corpus: dict, limits: Limits, seed: int) -> list[SuiteCase]:
    cases = []
    for gx, hx in corpus.get("pairs", _UNION_PAIRS):
        g, h = build_expression(gx), build_expression(hx)

        def run(g=g, h=h):
            r1 = indicated_chromatic_number(g, limits=limits)
            r2 = indicated_chromatic_number(h, limits=limits)
            ru = indicated_chromatic_number(disjoint_union(g, h), limits=limits)
            if r1.unknown or r2.unknown or ru.unknown:
                return "resource limit", "skip-limit"
            want = max(r1.chi_i, r2.chi_i)
            obs = f"chi_i(union) = {ru.chi_i} (parts {r1.chi_i}, {r2.chi_i})"
            return obs, "pass" if ru.chi_i == want else "fail"
        cases.append(_timed_case(f"{gx}+{hx}", "chi_i = max of parts", run))
    return cases


def _suite_f_family(corpus: dict, limits: Limits, seed: int) -> list[SuiteCase]:
    graphs: list[tuple[str, Graph]]
    if "graphs" in corpus:
        graphs = [(gx, build_expression(gx)) for gx in corpus["graphs"]]
    else:
        max_n = corpus.get("max_n", 6)
        graphs = [(f"g6:{encode_graph6(g)}", g) for g in graphs_upto(max_n)]
    cases = []
    for key, g in graphs:
        report = family_membership_F(g)
        if not report.admitted:
            continue

        def run(g=g, report=report):
            res = indicated_chromatic_number(g, limits=limits)
            lo, hi = res.k_range
            full = set(range(lo, hi + 1))
            if res.unknown:
                return "resource limit", "skip-limit"
            obs = f"winning set {sorted(res.winning_set)} on [{lo},{hi}]"
            ok = res.winning_set == full
            return obs, "pass" if ok else "fail"
        cases.append(_timed_case(
            f"{key} via {report.admitted_by[0]}", "entire [chi,col] winning", run))
    return cases


_BIPARTITE_EXPANSION = (("P2", 2), ("P3", 2), ("P4", 2), ("C4", 2),
                        ("P2", 3), ("P3", 3))


def _suite_bipartite_expansion(corpus: dict, limits: Limits,
                               seed: int) -> list[SuiteCase]:
    cases = []
    for gx, m in corpus.get("cases", _BIPARTITE_EXPANSION):
        g = build_expression(gx)
        expanded = complete_expansion(g, [m])

        def run(expanded=expanded, m=m):
            chi = chromatic_number(expanded)
            if chi != 2 * m:
                return f"chi = {chi}", "fail"
            v = ann_wins(expanded, 2 * m, limits)
            if v.outcome is Outcome.RESOURCE_LIMIT:
                return "resource limit", "skip-limit"
            if v.outcome is Outcome.ANN_WINS:
                return f"chi_i = {2 * m}", "pass"
            return f"ben wins at k = {2 * m}", "fail"
        cases.append(_timed_case(
            f"K[{gx}]({m},...,{m})", f"chi_i = 2m = {2 * m}", run))
    return cases


def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def _suite_complement_duality(corpus: dict, limits: Limits,
                              seed: int) -> list[SuiteCase]:
    rng = random.Random(seed)
    trials = corpus.get("trials", 50)
    cases = []
    for t in range(trials):
        n = rng.randint(1, 5)
        g = _random_graph(rng, n, rng.uniform(0.2, 0.8))
        sizes = [rng.randint(1, 2) for _ in range(n)]

        def run(g=g, sizes=sizes):
            lhs = complement(independent_expansion(g, sizes))
            rhs = complete_expansion(complement(g), sizes)
            ok = is_isomorphic(lhs, rhs)
            return "isomorphic" if ok else "NOT isomorphic", "pass" if ok else "fail"
        cases.append(_timed_case(
            f"trial-{t:03d} g6:{encode_graph6(g)} sizes={sizes}",
            "co(I[G]) iso K[co(G)]", run))
    return cases


def _closure_pattern_pool() -> list[tuple[str, Graph]]:
    chair = Graph(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
    return [
        ("P3", families.path(3)), ("P4", families.path(4)),
        ("P5", families.path(5)), ("K1,3", families.star(3)),
        ("K1,4", families.star(4)), ("chair", chair),
        ("C4", families.cycle(4)), ("C5", families.cycle(5)),
        ("C6", families.cycle(6)),
        ("co(P4)", complement(families.path(4))),
        ("co(P5)", complement(families.path(5))),
        ("co(P6)", complement(families.path(6))),
    ]


def _suite_closure(corpus: dict, limits: Limits, seed: int) -> list[SuiteCase]:
    rng = random.Random(seed)
    trials = corpus.get("trials", 200)
    pool = _closure_pattern_pool()
    cases = []
    for t in range(trials):
        pname, pattern = pool[rng.randrange(len(pool))]
        g = None
        for _ in range(300):
            n = rng.randint(3, 6)
            cand = _random_graph(rng, n, rng.uniform(0.1, 0.7))
            if contains_induced(cand, pattern) is None:
                g = cand
                break
        if g is None:  # pattern-free sample not found; trivially regenerate
            g = Graph(3)
        sizes = [rng.randint(1, 3) for _ in range(g.n)]
        while sum(sizes) > 14:
            sizes[sizes.index(max(sizes))] -= 1

        def run(g=g, pattern=pattern, sizes=sizes):
            res = expansion_closure_check(g, pattern, sizes)
            if res.closed:
                return "closed", "pass"
            return f"counterexample {list(res.counterexample)}", "fail"
        cases.append(_timed_case(
            f"trial-{t:03d} {pname} on g6:{encode_graph6(g)} sizes={sizes}",
            "expansion stays pattern-free", run))
    return cases


_LIFT_CASES = (
    ("P2", (2, 1), (2, 1, 2)),
    ("P2", (2, 2), (1, 2, 2, 1)),
    ("P3", (2, 1, 1), (1, 2, 1, 1)),
    ("P3", (1, 2, 1), (2, 1, 1, 2)),
    ("C4", (2, 1, 1, 1), (1, 1, 2, 1, 1)),
    ("K2", (1, 2), (2, 2, 1)),
)


def _suite_lift(corpus: dict, limits: Limits, seed: int) -> list[SuiteCase]:
    cases = []
    for gx, a_sizes, b_sizes in corpus.get("cases", _LIFT_CASES):
        g = build_expression(gx)
        inner = independent_expansion(g, list(a_sizes))
        lifted = complete_expansion(inner, list(b_sizes))
        # maximal complete expansion of g: biggest block size per original vertex
        offsets = []
        off = 0
        for a in a_sizes:
            offsets.append(off)
            off += a
        maximal = complete_expansion(
            g, [max(b_sizes[offsets[i]:offsets[i] + a_sizes[i]])
                for i in range(g.n)])
        lo = chromatic_number(lifted)
        hi = min(coloring_number(lifted), lo + 2)
        for k in range(lo, hi + 1):
            def run(maximal=maximal, lifted=lifted, k=k):
                prem = ann_wins(maximal, k, limits)
                if prem.outcome is Outcome.RESOURCE_LIMIT:
                    return "resource limit", "skip-limit"
                if prem.outcome is not Outcome.ANN_WINS:
                    return "premise false (maximal form not ann-won)", "pass"
                concl = ann_wins(lifted, k, limits)
                if concl.outcome is Outcome.RESOURCE_LIMIT:
                    return "resource limit", "skip-limit"
                obs = f"K[I[G]] {concl.outcome.value} given K[G] ann"
                return obs, "pass" if concl.outcome is Outcome.ANN_WINS else "fail"
            cases.append(_timed_case(
                f"K[I[{gx}]{list(a_sizes)}]{list(b_sizes)}@k={k}",
                "ann wins lift when ann wins maximal form", run))
    return cases


def _suite_monotonicity_audit(corpus: dict, limits: Limits,
                              seed: int) -> list[SuiteCase]:
    if "graphs" in corpus:
        graphs = [(gx, build_expression(gx)) for gx in corpus["graphs"]]
    else:
        max_n = corpus.get("max_n", 6)
        graphs = [(f"g6:{encode_graph6(g)}", g) for g in graphs_upto(max_n)]
    cases = []
    for key, g in graphs:
        t0 = time.monotonic()
        res = indicated_chromatic_number(g, limits=limits)
        millis = (time.monotonic() - t0) * 1000.0
        lo, hi = res.k_range
        obs = f"winning {sorted(res.winning_set)} on [{lo},{hi}]"
        if res.unknown:
            cases.append(SuiteCase(key, "winning set reported",
                                   obs + f" unknown {sorted(res.unknown)}",
                                   "skip-limit", millis))
            continue
        # flag (never fail) any non-interval winning set: research-notable
        note = None if res.is_interval() else \
            "NON-INTERVAL winning set: research-notable"
        cases.append(SuiteCase(key, "winning set reported", obs, "pass",
                               millis, note))
    return cases


SUITES: dict[str, Callable[[dict, Limits, int], list[SuiteCase]]] = {
    "col-bound": _suite_col_bound,
    "col-gap": _suite_col_gap,
    "reduction": _suite_reduction,
    "union": _suite_union,
    "f-family": _suite_f_family,
    "bipartite-expansion": _suite_bipartite_expansion,
    "complement-duality": _suite_complement_duality,
    "closure": _suite_closure,
    "lift": _suite_lift,
    "monotonicity-audit": _suite_monotonicity_audit,
}


def run_suite(name: str, corpus: Optional[dict] = None,
              limits: Limits = DEFAULT_LIMITS, seed: int = 0) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(
            f"unknown suite {name!r}; available: {', '.join(sorted(SUITES))}")
    cases = SUITES[name](corpus or {}, limits, seed)
    return _finish(name, seed, cases)
