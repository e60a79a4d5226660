"""Immutable simple undirected graphs and the constructions used everywhere else.

Vertices are integers ``0..n-1``.  Every construction returns a new value;
nothing here mutates a graph after it is built, so graphs are safe to share
between concurrent workers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union


class GraphError(ValueError):
    """Raised for malformed graph inputs (bad endpoints, self-loops, ...)."""


class Graph:
    """A simple finite undirected graph with set-based adjacency.

    Optional per-vertex ``labels`` carry provenance (product coordinates,
    expansion origins).  Labels are annotations only: equality and hashing
    look at the vertex count and edge set alone.
    """

    __slots__ = ("n", "_adj", "_masks", "labels", "_hash")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Optional[Sequence[str]] = None,
    ):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) has an endpoint outside [0,{n})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(s) for s in adj)
        masks = []
        for s in adj:
            m = 0
            for w in s:
                m |= 1 << w
            masks.append(m)
        self._masks = tuple(masks)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise GraphError("label count must equal vertex count")
        self.labels = labels
        self._hash = hash((n, frozenset(self.edges())))

    # -- basic queries -------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks (bit v set iff v is a neighbor)."""
        return self._masks

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(s) for s in self._adj))

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``, renumbered in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise GraphError("induced vertex list contains duplicates")
        edges = [
            (index[u], index[v])
            for u in vertices
            for v in self._adj[u]
            if v in index and index[u] < index[v]
        ]
        labels = None
        if self.labels is not None:
            labels = [self.labels[v] for v in vertices]
        return Graph(len(vertices), edges, labels)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by minimum."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = []
            stack = [s]
            seen[s] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # -- value semantics -----------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    # -- JSON form -------------------------------------------------------

    def to_json_dict(self) -> dict:
        d: dict = {"n": self.n, "edges": [[u, v] for u, v in self.edges()]}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @staticmethod
    def from_json_dict(d: dict) -> "Graph":
        try:
            n = d["n"]
            edges = [(int(u), int(v)) for u, v in d["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed graph JSON: {exc}") from exc
        labels = d.get("labels")
        return Graph(n, edges, labels)

    @staticmethod
    def from_json(text: str) -> "Graph":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"not valid JSON: {exc}") from exc
        return Graph.from_json_dict(d)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validating constructor: duplicate edges collapse, self-loops reject."""
    return Graph(n, edges)


def complement(g: Graph) -> Graph:
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """g1 followed by g2 with g2's vertex ids shifted by g1.n."""
    off = g1.n
    edges = g1.edges() + [(u + off, v + off) for u, v in g2.edges()]
    return Graph(g1.n + g2.n, edges)


def lexicographic_product(g: Graph, h: Graph) -> Graph:
    """G[H]: (x1,y1) ~ (x2,y2) iff x1~x2 in G, or x1=x2 and y1~y2 in H.

    Vertex (x, y) is encoded row-major as ``x*h.n + y`` and labeled "(x,y)"
    so solver moves can be mapped back to copies and layers.
    """
    if g.n == 0 or h.n == 0:
        raise GraphError("lexicographic product requires nonempty operands")
    nh = h.n
    edges = []
    for x1 in range(g.n):
        base = x1 * nh
        for y1, y2 in h.edges():
            edges.append((base + y1, base + y2))
        for x2 in g.neighbors(x1):
            if x2 < x1:
                continue
            for y1 in range(nh):
                for y2 in range(nh):
                    edges.append((base + y1, x2 * nh + y2))
    labels = [f"({x},{y})" for x in range(g.n) for y in range(nh)]
    return Graph(g.n * nh, edges, labels)


def product_coords(v: int, h_size: int) -> tuple[int, int]:
    """Inverse of the row-major product encoding: v -> (copy, layer)."""
    return divmod(v, h_size)


# -- expansions --------------------------------------------------------

Replacement = Union[tuple[str, int], Graph]


@dataclass(frozen=True)
class ExpansionSpec:
    """Replace each base vertex i by a graph H_i, joining H_i and H_j
    completely whenever the base has the edge ij.

    Replacements are either ("complete", m) / ("independent", m) shorthands
    or explicit graphs.  Shorthand sizes must be >= 1.
    """

    base: Graph
    replacements: tuple[Replacement, ...]

    def __post_init__(self):
        if len(self.replacements) != self.base.n:
            raise GraphError(
                f"expected {self.base.n} replacements, got {len(self.replacements)}"
            )
        for r in self.replacements:
            if isinstance(r, Graph):
                if r.n < 1:
                    raise GraphError("replacement graphs must be nonempty")
            else:
                kind, m = r
                if kind not in ("complete", "independent"):
                    raise GraphError(f"unknown replacement kind {kind!r}")
                if m < 1:
                    raise GraphError(f"replacement size must be >= 1, got {m}")

    def replacement_graph(self, i: int) -> Graph:
        r = self.replacements[i]
        if isinstance(r, Graph):
            return r
        kind, m = r
        if kind == "complete":
            return Graph(m, [(a, b) for a in range(m) for b in range(a + 1, m)])
        return Graph(m)


def expansion(spec: ExpansionSpec) -> Graph:
    """Build the expansion; block V_i occupies a contiguous id range in base
    order, and vertices are labeled "v<i>:<j>" (base vertex i, copy j)."""
    blocks: list[range] = []
    edges: list[tuple[int, int]] = []
    labels: list[str] = []
    offset = 0
    for i in range(spec.base.n):
        hi = spec.replacement_graph(i)
        blocks.append(range(offset, offset + hi.n))
        for u, v in hi.edges():
            edges.append((offset + u, offset + v))
        labels.extend(f"v{i}:{j}" for j in range(hi.n))
        offset += hi.n
    for i, j in spec.base.edges():
        for u in blocks[i]:
            for v in blocks[j]:
                edges.append((u, v))
    return Graph(offset, edges, labels)


def _uniform(kind: str, sizes: Sequence[int], n: int) -> tuple[Replacement, ...]:
    if len(sizes) == 1 and n != 1:
        sizes = [sizes[0]] * n
    return tuple((kind, m) for m in sizes)


def complete_expansion(g: Graph, sizes: Sequence[int]) -> Graph:
    """K[G](m1..mn); a single size broadcasts to every vertex."""
    return expansion(ExpansionSpec(g, _uniform("complete", sizes, g.n)))


def independent_expansion(g: Graph, sizes: Sequence[int]) -> Graph:
    """I[G](m1..mn); a single size broadcasts to every vertex."""
    return expansion(ExpansionSpec(g, _uniform("independent", sizes, g.n)))
