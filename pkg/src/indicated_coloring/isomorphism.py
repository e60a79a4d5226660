"""Exact isomorphism testing and canonical forms at desk scale."""

from __future__ import annotations

from itertools import permutations

from .graphs import Graph
from .parameters import SizeBoundExceeded

ISO_BOUND = 12


def _wl_colors(graphs: list[Graph]) -> list[list[int]]:
    """Joint 1-WL refinement: per-vertex integer colors, ranked over the
    union of all inputs so colors are comparable across graphs."""
    colors = [[g.degree(v) for v in range(g.n)] for g in graphs]
    distinct = len({c for cs in colors for c in cs})
    while True:
        sigs = [
            [
                (colors[gi][v], tuple(sorted(colors[gi][w] for w in g.neighbors(v))))
                for v in range(g.n)
            ]
            for gi, g in enumerate(graphs)
        ]
        palette = sorted({s for gs in sigs for s in gs})
        rank = {s: i for i, s in enumerate(palette)}
        colors = [[rank[s] for s in gs] for gs in sigs]
        if len(palette) == distinct:
            return colors
        distinct = len(palette)


def is_isomorphic(g1: Graph, g2: Graph, bound: int = ISO_BOUND) -> bool:
    """Exact isomorphism via refinement pruning plus backtracking matching."""
    if g1.n > bound or g2.n > bound:
        raise SizeBoundExceeded(
            f"is_isomorphic: inputs exceed bound {bound} ({g1.n}, {g2.n} vertices)"
        )
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    sig1, sig2 = _wl_colors([g1, g2])
    if sorted(sig1) != sorted(sig2):
        return False
    n = g1.n
    # match vertices of g1 in an order that keeps the partial map connected
    order: list[int] = []
    placed: set[int] = set()
    remaining = set(range(n))
    while remaining:
        anchored = [v for v in remaining if g1.neighbors(v) & placed]
        pool = anchored or list(remaining)
        v = max(pool, key=lambda u: (g1.degree(u), -u))
        order.append(v)
        placed.add(v)
        remaining.remove(v)
    mapping: dict[int, int] = {}
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or sig1[v] != sig2[w]:
                continue
            ok = True
            for u, mu in mapping.items():
                if g1.has_edge(v, u) != g2.has_edge(w, mu):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if extend(i + 1):
                return True
            del mapping[v]
            used[w] = False
        return False

    return extend(0)


def canonical_form(g: Graph) -> tuple[int, int]:
    """(n, code): code is the minimum upper-triangle bit encoding over all
    relabelings compatible with the refinement partition.

    Equal canonical forms iff isomorphic.  Meant for enumeration and
    exhaustive corpora (n up to ~8).
    """
    n = g.n
    if n == 0:
        return (0, 0)
    (sig,) = _wl_colors([g])
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(sig[v], []).append(v)
    ordered_cells = [cells[key] for key in sorted(cells)]
    best: int | None = None
    edges = g.edges()
    for perm in _cell_permutations(ordered_cells):
        pos = {v: i for i, v in enumerate(perm)}
        code = 0
        for u, v in edges:
            i, j = pos[u], pos[v]
            if i > j:
                i, j = j, i
            code |= 1 << (j * (j - 1) // 2 + i)
        if best is None or code < best:
            best = code
    return (n, best)


def _cell_permutations(cells: list[list[int]]):
    """All vertex orders listing cells in canonical order, vertices permuted
    freely within each cell."""

    def rec(i: int, prefix: list[int]):
        if i == len(cells):
            yield prefix
            return
        for p in permutations(cells[i]):
            yield from rec(i + 1, prefix + list(p))

    yield from rec(0, [])


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative (relabeled copy) of g's isomorphism class."""
    n, code = canonical_form(g)
    edges = []
    for j in range(1, n):
        for i in range(j):
            if code >> (j * (j - 1) // 2 + i) & 1:
                edges.append((i, j))
    return Graph(n, edges)
