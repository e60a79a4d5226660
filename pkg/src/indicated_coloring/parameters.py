"""Exact structural parameters: degrees, degeneracy/coloring number, clique
number and chromatic number.

Everything here is exact at desk scale.  The clique and chromatic solvers
refuse graphs above a configurable vertex bound instead of approximating.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError

DESK_SCALE_BOUND = 32


class SizeBoundExceeded(GraphError):
    """Input larger than the configured exact-computation bound."""


def _require_nonempty(g: Graph, what: str) -> None:
    if g.n == 0:
        raise GraphError(f"{what} is undefined for the empty graph")


def degree_stats(g: Graph) -> tuple[int, int]:
    """(min degree, max degree)."""
    _require_nonempty(g, "degree")
    degs = [g.degree(v) for v in range(g.n)]
    return min(degs), max(degs)


def degeneracy_order(g: Graph) -> list[int]:
    """Reverse min-degree peeling order.

    Repeatedly remove a minimum-degree vertex (ties: lowest index) and
    return the removal sequence reversed, so every vertex has back degree
    at most degeneracy(G) among the vertices before it.
    """
    _require_nonempty(g, "degeneracy order")
    alive = set(range(g.n))
    deg = {v: g.degree(v) for v in alive}
    removed = []
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        removed.append(v)
        alive.remove(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
    removed.reverse()
    return removed


def degeneracy(g: Graph) -> int:
    """max over the peeling of the degree at removal time."""
    _require_nonempty(g, "degeneracy")
    alive = set(range(g.n))
    deg = {v: g.degree(v) for v in alive}
    best = 0
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        best = max(best, deg[v])
        alive.remove(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
    return best


def coloring_number(g: Graph) -> int:
    """col(G) = 1 + degeneracy, via min-degree peeling."""
    return 1 + degeneracy(g)


def back_degrees(g: Graph, order: list[int]) -> list[int]:
    """Back degree of each vertex of ``order`` w.r.t. the prefix before it."""
    pos = {v: i for i, v in enumerate(order)}
    return [sum(1 for w in g.neighbors(v) if pos[w] < pos[v]) for v in order]


def clique_number(g: Graph, bound: int = DESK_SCALE_BOUND) -> int:
    """Exact omega via branch and bound over candidate sets (bitmask form)."""
    _require_nonempty(g, "clique number")
    if g.n > bound:
        raise SizeBoundExceeded(f"clique_number: {g.n} vertices exceeds bound {bound}")
    masks = g.adjacency_masks()
    best = 1

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            expand(size + 1, cand & masks[v])

    expand(0, (1 << g.n) - 1)
    return best


def _k_colorable(g: Graph, k: int, order: list[int]) -> bool:
    """Backtracking k-colorability; new colors introduced in index order."""
    masks = g.adjacency_masks()
    color_masks = [0] * k

    def assign(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        vb = 1 << v
        limit = min(k, used + 1)
        for c in range(limit):
            if color_masks[c] & masks[v]:
                continue
            color_masks[c] |= vb
            if assign(i + 1, max(used, c + 1)):
                return True
            color_masks[c] &= ~vb
        return False

    return assign(0, 0)


def chromatic_number(g: Graph, bound: int = DESK_SCALE_BOUND) -> int:
    """Exact chi: clique lower bound, greedy/col upper bound, backtracking
    k-colorability in between."""
    _require_nonempty(g, "chromatic number")
    if g.n > bound:
        raise SizeBoundExceeded(f"chromatic_number: {g.n} vertices exceeds bound {bound}")
    if g.edge_count() == 0:
        return 1
    lo = clique_number(g, bound)
    order = degeneracy_order(g)
    hi = _greedy_color_count(g, order)
    for k in range(lo, hi):
        if _k_colorable(g, k, sorted(range(g.n), key=lambda v: -g.degree(v))):
            return k
    return hi


def _greedy_color_count(g: Graph, order: list[int]) -> int:
    color: dict[int, int] = {}
    for v in order:
        taken = {color[w] for w in g.neighbors(v) if w in color}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
    return 1 + max(color.values())


@dataclass(frozen=True)
class ParamReport:
    """delta, Delta, omega, chi, col for one graph.

    The constructor enforces the chain omega <= chi <= col <= Delta + 1;
    a violation means a solver bug, not bad input.
    """

    delta: int
    Delta: int
    omega: int
    chi: int
    col: int

    def __post_init__(self):
        if not (self.omega <= self.chi <= self.col <= self.Delta + 1):
            raise AssertionError(f"parameter chain violated: {self}")

    def to_json_dict(self) -> dict:
        return {
            "delta": self.delta,
            "Delta": self.Delta,
            "omega": self.omega,
            "chi": self.chi,
            "col": self.col,
        }


def param_report(g: Graph, bound: int = DESK_SCALE_BOUND) -> ParamReport:
    d, dd = degree_stats(g)
    return ParamReport(
        delta=d,
        Delta=dd,
        omega=clique_number(g, bound),
        chi=chromatic_number(g, bound),
        col=coloring_number(g),
    )
