"""Exhaustive desk-scale corpora: all graphs on n vertices up to isomorphism.

Built by extending each (n-1)-vertex representative with one new vertex in
every possible way and deduplicating on canonical form.  Cached per process;
n = 7 (1044 graphs) is the intended ceiling.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import Graph
from .isomorphism import canonical_form, canonical_graph

EXPECTED_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
EXPECTED_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """Canonical representatives of every graph on exactly n vertices."""
    if n < 1:
        raise ValueError("corpus needs n >= 1")
    if n == 1:
        return (Graph(1),)
    out: dict[tuple[int, int], Graph] = {}
    for g in all_graphs(n - 1):
        base_edges = g.edges()
        for mask in range(1 << (n - 1)):
            edges = base_edges + [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
            cand = Graph(n, edges)
            key = canonical_form(cand)
            if key not in out:
                out[key] = canonical_graph(cand)
    return tuple(out[k] for k in sorted(out))


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in all_graphs(n) if g.is_connected())


def graphs_upto(n: int, connected: bool = True) -> list[Graph]:
    src = connected_graphs if connected else all_graphs
    out: list[Graph] = []
    for m in range(1, n + 1):
        out.extend(src(m))
    return out
