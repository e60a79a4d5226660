"""Named graph families and the small forbidden-pattern graphs.

Canonical numbering, relied on by tests and golden orders:

* paths and cycles are numbered along the walk (``0-1-...-(n-1)``);
* complete multipartite parts are numbered part by part, so the star
  K_{1,t} has its center at vertex 0;
* the five-vertex patterns (paw, kite, bull, dart, ...) use the explicit
  edge lists below.
"""

from __future__ import annotations

from typing import Sequence

from .graphs import Graph, GraphError, complement, disjoint_union


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"P_n requires n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"C_n requires n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"K_n requires n >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise GraphError(f"invalid multipartite parts {parts}")
    bounds = [0]
    for p in parts:
        bounds.append(bounds[-1] + p)
    n = bounds[-1]
    edges = []
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            for u in range(bounds[a], bounds[a + 1]):
                for v in range(bounds[b], bounds[b + 1]):
                    edges.append((u, v))
    return Graph(n, edges)


def star(t: int) -> Graph:
    """K_{1,t}: center 0, leaves 1..t."""
    if t < 1:
        raise GraphError(f"K_{{1,t}} requires t >= 1, got {t}")
    return complete_multipartite([1, t])


def paw() -> Graph:
    """Triangle 0,1,2 plus pendant 3 attached to 2."""
    return Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def diamond() -> Graph:
    """K4 minus one edge; apexes 0,1 (degree 3), rim 2,3."""
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def kite() -> Graph:
    """Diamond plus a pendant at a rim (degree-2) vertex; degrees 3,3,3,2,1."""
    return Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (3, 4)])


def dart() -> Graph:
    """Diamond plus a pendant at an apex (degree-3) vertex; degrees 4,3,2,2,1."""
    return Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4)])


def bull() -> Graph:
    """Triangle 0,1,2 with pendants 3-0 and 4-1."""
    return Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])


def claw() -> Graph:
    return star(3)


def p5_complement() -> Graph:
    return complement(path(5))


def p2_p3_union_complement() -> Graph:
    """Complement of P2 u P3 (5 vertices, 7 edges)."""
    return complement(disjoint_union(path(2), path(3)))


_NAMED = {
    "paw": paw,
    "kite": kite,
    "dart": dart,
    "bull": bull,
    "claw": claw,
    "diamond": diamond,
    "p5bar": p5_complement,
    "cop2p3": p2_p3_union_complement,
}


def family_generator(name: str, params: Sequence[int] = ()) -> Graph:
    """Build a family member by tag: "P"/"C"/"K" with sizes, "star" with t,
    or one of the named small graphs (paw, kite, bull, dart, claw, diamond,
    p5bar, cop2p3)."""
    tag = name.strip().lower()
    if tag in _NAMED:
        if params:
            raise GraphError(f"{name} takes no parameters")
        return _NAMED[tag]()
    if tag == "p":
        return path(_one(name, params))
    if tag == "c":
        return cycle(_one(name, params))
    if tag == "k":
        if len(params) == 1:
            return complete(params[0])
        return complete_multipartite(params)
    if tag == "star":
        return star(_one(name, params))
    raise GraphError(f"unknown family tag {name!r}")


def _one(name: str, params: Sequence[int]) -> int:
    if len(params) != 1:
        raise GraphError(f"{name} expects exactly one parameter, got {list(params)}")
    return params[0]
