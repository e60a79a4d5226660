"""Graph-family recognition with re-checkable certificates.

Covers the structural classes the strategy theorems quantify over
(bipartite, chordal, cograph, complete multipartite, complement of
bipartite), induced-subgraph freeness for the named small patterns, the
compound family clauses, and the expansion-closure check for trees, cycles
and path complements.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import families
from .graphs import Graph, GraphError, complement, complete_expansion
from .isomorphism import is_isomorphic

MAX_PATTERN = 6


def contains_induced(g: Graph, pattern: Graph) -> Optional[tuple[int, ...]]:
    """Injective map pattern->g preserving adjacency and non-adjacency, or
    None.  Deterministic: pattern vertices are matched most-constrained
    first, host candidates in ascending order."""
    if pattern.n > MAX_PATTERN:
        raise GraphError(
            f"contains_induced: pattern has {pattern.n} > {MAX_PATTERN} vertices"
        )
    if pattern.n > g.n:
        return None
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < pattern.n:
        pool = [v for v in range(pattern.n) if v not in placed]
        v = max(pool, key=lambda u: (len(pattern.neighbors(u) & placed),
                                     pattern.degree(u), -u))
        order.append(v)
        placed.add(v)
    assignment: dict[int, int] = {}
    used = [False] * g.n

    def extend(i: int) -> bool:
        if i == pattern.n:
            return True
        pv = order[i]
        pdeg = pattern.degree(pv)
        for hv in range(g.n):
            if used[hv] or g.degree(hv) < pdeg:
                continue
            ok = True
            for pu, hu in assignment.items():
                if pattern.has_edge(pv, pu) != g.has_edge(hv, hu):
                    ok = False
                    break
            if not ok:
                continue
            assignment[pv] = hv
            used[hv] = True
            if extend(i + 1):
                return True
            del assignment[pv]
            used[hv] = False
        return False

    if extend(0):
        return tuple(assignment[v] for v in range(pattern.n))
    return None


def verify_embedding(g: Graph, pattern: Graph, emb: Sequence[int]) -> bool:
    """Re-check an induced embedding independently of the search."""
    if len(emb) != pattern.n or len(set(emb)) != pattern.n:
        return False
    for u in range(pattern.n):
        for v in range(u + 1, pattern.n):
            if pattern.has_edge(u, v) != g.has_edge(emb[u], emb[v]):
                return False
    return True


# -- structural recognizers with certificates ---------------------------


def bipartition(g: Graph) -> Optional[tuple[list[int], list[int]]]:
    """BFS 2-coloring; (part0, part1) or None when an odd cycle exists."""
    color: dict[int, int] = {}
    for s in range(g.n):
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return (
        sorted(v for v, c in color.items() if c == 0),
        sorted(v for v, c in color.items() if c == 1),
    )


def perfect_elimination_order(g: Graph) -> Optional[list[int]]:
    """Maximum cardinality search; returns a PEO iff the graph is chordal."""
    if g.n == 0:
        return []
    weight = [0] * g.n
    visited = [False] * g.n
    mcs: list[int] = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not visited[u]),
                key=lambda u: (weight[u], -u))
        visited[v] = True
        mcs.append(v)
        for w in g.neighbors(v):
            if not visited[w]:
                weight[w] += 1
    peo = list(reversed(mcs))
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [w for w in g.neighbors(v) if pos[w] > pos[v]]
        for i in range(len(later)):
            for j in range(i + 1, len(later)):
                if not g.has_edge(later[i], later[j]):
                    return None
    return peo


def multipartite_parts(g: Graph) -> Optional[list[list[int]]]:
    """Independent parts certifying complete-multipartiteness, or None.
    A graph is complete multipartite iff its complement is a disjoint union
    of cliques (the parts)."""
    co = complement(g)
    parts = []
    for comp in co.components():
        for i in range(len(comp)):
            for j in range(i + 1, len(comp)):
                if not co.has_edge(comp[i], comp[j]):
                    return None
        parts.append(comp)
    return parts


def true_twin_classes(g: Graph) -> list[list[int]]:
    """Vertex classes with identical closed neighborhoods (always cliques)."""
    buckets: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        buckets.setdefault(g.neighbors(v) | {v}, []).append(v)
    return sorted(buckets.values(), key=lambda c: c[0])


def false_twin_classes(g: Graph) -> list[list[int]]:
    """Vertex classes with identical open neighborhoods (independent sets)."""
    buckets: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        buckets.setdefault(g.neighbors(v), []).append(v)
    return sorted(buckets.values(), key=lambda c: c[0])


def _quotient(g: Graph, classes: list[list[int]]) -> Graph:
    reps = [c[0] for c in classes]
    idx = {r: i for i, r in enumerate(reps)}
    edges = [
        (idx[a], idx[b])
        for ai, a in enumerate(reps)
        for b in reps[ai + 1:]
        if g.has_edge(a, b)
    ]
    return Graph(len(reps), edges)


def complete_expansion_shape(g: Graph, base: Graph) -> Optional[list[list[int]]]:
    """If g is a complete expansion of ``base`` (blocks = true-twin classes),
    return the blocks; otherwise None."""
    classes = true_twin_classes(g)
    if len(classes) != base.n:
        return None
    if is_isomorphic(_quotient(g, classes), base):
        return classes
    return None


def independent_expansion_shape(g: Graph, base: Graph) -> Optional[list[list[int]]]:
    """Blocks if g is an independent expansion of ``base`` (false twins)."""
    classes = false_twin_classes(g)
    if len(classes) != base.n:
        return None
    if is_isomorphic(_quotient(g, classes), base):
        return classes
    return None


# -- the class report ----------------------------------------------------

PATTERNS: dict[str, Graph] = {
    "p5": families.path(5),
    "c4": families.cycle(4),
    "c5": families.cycle(5),
    "c6": families.cycle(6),
    "p6": families.path(6),
    "k3": families.complete(3),
    "k4": families.complete(4),
    "paw": families.paw(),
    "kite": families.kite(),
    "bull": families.bull(),
    "dart": families.dart(),
    "claw": families.claw(),
    "p5bar": families.p5_complement(),
    "cop2p3": families.p2_p3_union_complement(),
}


@dataclass(frozen=True)
class TagResult:
    value: bool
    witness: Optional[dict] = None

    def to_json_dict(self) -> dict:
        d: dict = {"value": self.value}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass(frozen=True)
class ClassReport:
    n: int
    tags: dict[str, TagResult] = field(compare=False)

    def __getitem__(self, tag: str) -> TagResult:
        return self.tags[tag]

    def to_json_dict(self) -> dict:
        return {"n": self.n,
                "tags": {t: r.to_json_dict() for t, r in sorted(self.tags.items())}}


def classify(g: Graph) -> ClassReport:
    """Membership flags with certificates: structure positives carry their
    certificate, induced-subgraph negatives carry the embedding found."""
    tags: dict[str, TagResult] = {}

    parts = bipartition(g)
    tags["bipartite"] = TagResult(parts is not None,
                                  {"parts": list(parts)} if parts else None)
    peo = perfect_elimination_order(g)
    tags["chordal"] = TagResult(peo is not None,
                                {"peo": peo} if peo is not None else None)
    co_parts = bipartition(complement(g))
    tags["complement-of-bipartite"] = TagResult(
        co_parts is not None, {"parts": list(co_parts)} if co_parts else None)
    mparts = multipartite_parts(g)
    tags["complete-multipartite"] = TagResult(
        mparts is not None, {"parts": mparts} if mparts else None)

    for name, pattern in PATTERNS.items():
        emb = contains_induced(g, pattern)
        tags[f"{name}-free"] = TagResult(
            emb is None, {"embedding": list(emb)} if emb else None)

    p4 = contains_induced(g, families.path(4))
    tags["cograph"] = TagResult(p4 is None,
                                {"embedding": list(p4)} if p4 else None)
    tags["triangle-free"] = tags["k3-free"]
    return ClassReport(g.n, tags)


# -- the F family of the strategy theorems -------------------------------

F_CLAUSES = (
    "bipartite",
    "chordal",
    "cograph",
    "p5-k3-free",
    "p5-paw-free",
    "complement-of-bipartite",
    "p5-k4-kite-bull-free",
    "p6-c5-p5bar-claw-free-with-c6",
    "complete-expansion-of-c5",
    "p5-c4-free",
    "p5-cop2p3-p5bar-dart-free-with-c5",
)


@dataclass(frozen=True)
class FamilyReport:
    clauses: dict[str, bool] = field(compare=False)
    admitted_by: tuple[str, ...] = ()

    @property
    def admitted(self) -> bool:
        return bool(self.admitted_by)

    def to_json_dict(self) -> dict:
        return {"clauses": dict(sorted(self.clauses.items())),
                "admitted_by": list(self.admitted_by),
                "admitted": self.admitted}


def family_membership_F(g: Graph) -> FamilyReport:
    """Which clauses of the k-indicated-colorable-from-chi family admit g.

    Connectivity-qualified clauses apply only to connected graphs; a
    disconnected graph is additionally admitted when every component is
    (union semantics)."""
    report = classify(g)
    free = lambda *names: all(report.tags[f"{p}-free"].value for p in names)
    connected = g.is_connected()
    clauses: dict[str, bool] = {
        "bipartite": report.tags["bipartite"].value,
        "chordal": report.tags["chordal"].value,
        "cograph": report.tags["cograph"].value,
        "p5-k3-free": free("p5", "k3"),
        "p5-paw-free": free("p5", "paw"),
        "complement-of-bipartite": report.tags["complement-of-bipartite"].value,
        "p5-k4-kite-bull-free": free("p5", "k4", "kite", "bull"),
        "p6-c5-p5bar-claw-free-with-c6": (
            connected and free("p6", "c5", "p5bar", "claw")
            and not report.tags["c6-free"].value),
        "complete-expansion-of-c5": (
            complete_expansion_shape(g, families.cycle(5)) is not None),
        "p5-c4-free": free("p5", "c4"),
        "p5-cop2p3-p5bar-dart-free-with-c5": (
            connected and free("p5", "cop2p3", "p5bar", "dart")
            and not report.tags["c5-free"].value),
    }
    if not connected and g.n > 0:
        comps = [g.induced_subgraph(c) for c in g.components()]
        clauses["union-of-f-components"] = all(
            family_membership_F(c).admitted for c in comps)
    admitted = tuple(name for name, ok in clauses.items() if ok)
    return FamilyReport(clauses, admitted)


# -- expansion closure (trees / cycles / path complements) ---------------


def _is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.is_connected() and g.edge_count() == g.n - 1


def _is_path(g: Graph) -> bool:
    return _is_tree(g) and all(g.degree(v) <= 2 for v in range(g.n))


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.is_connected() and all(g.degree(v) == 2 for v in range(g.n))


def pattern_shape(pattern: Graph) -> Optional[str]:
    """"tree" (>= 3 vertices), "cycle" (length >= 4) or "co-path" (>= 4
    vertices), the shapes the closure proposition covers; None otherwise."""
    if _is_cycle(pattern) and pattern.n >= 4:
        return "cycle"
    if _is_tree(pattern) and pattern.n >= 3:
        return "tree"
    if pattern.n >= 4 and _is_path(complement(pattern)):
        return "co-path"
    return None


@dataclass(frozen=True)
class ClosureCheck:
    closed: bool
    shape: str
    expanded_n: int
    counterexample: Optional[tuple[int, ...]] = None

    def to_json_dict(self) -> dict:
        d = {"closed": self.closed, "shape": self.shape,
             "expanded_n": self.expanded_n}
        if self.counterexample is not None:
            d["counterexample"] = list(self.counterexample)
        return d


def expansion_closure_check(g: Graph, pattern: Graph,
                            sizes: Sequence[int]) -> ClosureCheck:
    """Build K[g](sizes) and search for an induced copy of ``pattern``.

    Preconditions (violations are input errors, not closure failures):
    the pattern is a tree on >= 3 vertices, a cycle of length >= 4 or the
    complement of a path on >= 4 vertices, and g is pattern-free."""
    shape = pattern_shape(pattern)
    if shape is None:
        raise GraphError(
            "pattern must be a tree (>=3), a cycle (>=4) or a path complement (>=4)")
    if contains_induced(g, pattern) is not None:
        raise GraphError("base graph is not pattern-free")
    expanded = complete_expansion(g, sizes)
    emb = contains_induced(expanded, pattern)
    return ClosureCheck(emb is None, shape, expanded.n, emb)
