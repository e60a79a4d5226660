"""Constructive Ann strategies and adversarial Ben opponents.

All policies are immutable after construction and derive their move from the
game state alone (the state's history is enough to recompute any simulation),
so concurrent playouts against one policy are safe.

Ann policies here are color-symmetric: renaming colors in a state permutes
nothing observable to them.  The exhaustive Ben-line traversal relies on
that to prune unused colors down to one representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .families import complete
from .graphs import Graph, lexicographic_product
from .parameters import chromatic_number, coloring_number, degeneracy_order
from .solver import (
    DEFAULT_LIMITS,
    GameState,
    Limits,
    Outcome,
    Policy,
    PolicyError,
    SolverAnnPolicy,
    Searcher,
    Transcript,
    blocked_vertices,
    extract_policy,
    state_class_masks,
)


@dataclass(frozen=True)
class ProductCoords:
    """Position of a product vertex: copy index in G, layer index in H."""

    copy: int
    layer: int

    def encode(self, h_size: int) -> int:
        return self.copy * h_size + self.layer

    @staticmethod
    def decode(v: int, h_size: int) -> "ProductCoords":
        return ProductCoords(*divmod(v, h_size))


class DegeneracyAnnPolicy(Policy):
    """Present vertices in reverse min-degree peeling order; wins whenever
    k >= col(G).  Stateless in Ben's replies."""

    side = "ann"
    name = "degeneracy"

    def __init__(self, graph: Graph):
        self.graph = graph
        self.order = degeneracy_order(graph)

    def choose(self, state: GameState, presented: Optional[int] = None) -> int:
        if state.graph != self.graph:
            raise PolicyError("policy bound to a different graph")
        for v in self.order:
            if state.colors[v] is None:
                return v
        raise PolicyError("no uncolored vertex to present")


class ProductColAnnPolicy(Policy):
    """Winning strategy for G[H] at k >= col(G)*col(H).

    Phase 1 walks the copies H_u in degeneracy order of G; inside a copy it
    presents layers in degeneracy order of H until Ben has used col(H)
    distinct colors within that copy (or the copy runs out).  Phase 2
    presents all remaining vertices copy by copy in the same residual order.
    The phase is re-derived from the coloring, so the policy is a pure
    function of the state.
    """

    side = "ann"
    name = "product-col"

    def __init__(self, g: Graph, h: Graph):
        self.g = g
        self.h = h
        self.product = lexicographic_product(g, h)
        self.order_g = degeneracy_order(g)
        self.order_h = degeneracy_order(h)
        self.col_g = coloring_number(g)
        self.col_h = coloring_number(h)

    def choose(self, state: GameState, presented: Optional[int] = None) -> int:
        if state.graph != self.product:
            raise PolicyError("policy bound to a different product graph")
        if state.k < self.col_g * self.col_h:
            raise PolicyError(
                f"product-col requires k >= col(G)col(H) = {self.col_g * self.col_h}, "
                f"got k={state.k}"
            )
        nh = self.h.n
        for u in self.order_g:
            seen = set()
            nxt = None
            for v in self.order_h:
                c = state.colors[u * nh + v]
                if c is None:
                    if nxt is None:
                        nxt = u * nh + v
                else:
                    seen.add(c)
            if len(seen) < self.col_h and nxt is not None:
                return nxt
        for u in self.order_g:
            for v in self.order_h:
                if state.colors[u * nh + v] is None:
                    return u * nh + v
        raise PolicyError("no uncolored vertex to present")


class ReductionAnnPolicy(Policy):
    """Lift a winning strategy for G[K_l] to G[H] when chi(H)=chi_i(H)=l.

    Simulates the outer strategy on G[K_l]: each outer presentation into the
    copy of u drives presentations inside H_u (via the H strategy) until Ben
    introduces a color new to that copy, which is fed back to the outer game
    as Ben's reply.  After the outer simulation completes, the remaining
    vertices of each copy are presented by continuing the H strategy with
    whatever palette the copy still has available.
    """

    side = "ann"
    name = "reduction"

    def __init__(self, g: Graph, h: Graph, st_outer: Policy, st_h: Policy, ell: int):
        if st_outer.side != "ann" or st_h.side != "ann":
            raise PolicyError("reduction needs Ann-side outer and H strategies")
        if ell < 1:
            raise PolicyError(f"l must be >= 1, got {ell}")
        chi_h = chromatic_number(h)
        if chi_h != ell:
            raise PolicyError(f"l mismatch: chi(H) = {chi_h}, declared l = {ell}")
        self.g = g
        self.h = h
        self.ell = ell
        self.st_outer = st_outer
        self.st_h = st_h
        self.product = lexicographic_product(g, h)
        self.outer_graph = lexicographic_product(g, complete(ell))

    def choose(self, state: GameState, presented: Optional[int] = None) -> int:
        if state.graph != self.product:
            raise PolicyError("policy bound to a different product graph")
        replay = _ReductionReplay(self, state.k)
        for v, c in state.history:
            expected = replay.next_vertex()
            if expected != v:
                raise PolicyError(
                    f"history presents {v} where this policy would present {expected}"
                )
            replay.feed(v, c)
        return replay.next_vertex()


class _ReductionReplay:
    """Deterministic reconstruction of the reduction simulation from a move
    history."""

    def __init__(self, pol: ReductionAnnPolicy, k: int):
        self.pol = pol
        self.k = k
        self.nh = pol.h.n
        self.colors: list[Optional[int]] = [None] * pol.product.n
        self.outer = GameState.new(pol.outer_graph, k)
        # per copy: actual color -> 1-based first-appearance index
        self.copy_map: list[dict[int, int]] = [dict() for _ in range(pol.g.n)]
        self.pending: Optional[tuple[int, int, int]] = None  # (copy, outer vertex, target)

    def _h_state(self, r: int, palette: int) -> GameState:
        mapping = self.copy_map[r]
        base = r * self.nh
        mapped = tuple(
            mapping[c] if (c := self.colors[base + v]) is not None else None
            for v in range(self.nh)
        )
        return GameState(self.pol.h, palette, mapped)

    def _copy_available(self, r: int) -> list[int]:
        taken = set()
        for s in self.pol.g.neighbors(r):
            base = s * self.nh
            for v in range(self.nh):
                c = self.colors[base + v]
                if c is not None:
                    taken.add(c)
        return [c for c in range(1, self.k + 1) if c not in taken]

    def next_vertex(self) -> int:
        pol = self.pol
        if self.pending is None and not self.outer.is_complete():
            ov = pol.st_outer.choose(self.outer)
            r = ov // pol.ell
            self.pending = (r, ov, len(self.copy_map[r]) + 1)
        if self.pending is not None:
            r = self.pending[0]
            vh = pol.st_h.choose(self._h_state(r, pol.ell))
            return r * self.nh + vh
        for r in range(pol.g.n):
            base = r * self.nh
            if any(self.colors[base + v] is None for v in range(self.nh)):
                palette = len(self._copy_available(r))
                vh = pol.st_h.choose(self._h_state(r, palette))
                return base + vh
        raise PolicyError("no uncolored vertex to present")

    def feed(self, v: int, c: int) -> None:
        r = v // self.nh
        self.colors[v] = c
        mapping = self.copy_map[r]
        if c not in mapping:
            mapping[c] = len(mapping) + 1
        if self.pending is not None and self.pending[0] == r:
            _, ov, target = self.pending
            if len(mapping) >= target:
                # Ben's new color inside the copy answers the outer move
                self.outer = self.outer.apply(ov, c)
                self.pending = None


class OptimalBenPolicy(Policy):
    """Minimax-optimal color choice: wins whenever the position is
    Ben-winning; ties broken by lowest color after reducing unused colors
    to the single lowest representative."""

    side = "ben"
    name = "optimal"

    def __init__(self, graph: Graph, k: int, limits: Limits = DEFAULT_LIMITS):
        self.graph = graph
        self.k = k
        self._searcher = Searcher(graph, k, limits)

    def choose(self, state: GameState, presented: Optional[int] = None) -> int:
        if presented is None:
            raise PolicyError("Ben needs the presented vertex")
        if state.graph != self.graph or state.k != self.k:
            raise PolicyError("policy bound to a different game")
        candidates = _candidate_colors(state, presented)
        if not candidates:
            raise PolicyError(f"presented vertex {presented} has no proper color")
        for c in candidates:
            child = state.apply(presented, c)
            if not self._searcher.value(state_class_masks(child)):
                return c
        return candidates[0]


class HeuristicBenPolicy(Policy):
    """Cheap adversary for graphs beyond exact-solve limits.

    Prefers the proper color creating the most blocked vertices, then the
    most one-color-left vertices; remaining ties go to the lowest color.
    The scoring leaves no residual choice, so play is deterministic; the
    seed is kept as part of the policy identity for the CLI interface.
    """

    side = "ben"

    def __init__(self, seed: int = 0):
        self.seed = seed
        self.name = f"heuristic:{seed}"

    def choose(self, state: GameState, presented: Optional[int] = None) -> int:
        if presented is None:
            raise PolicyError("Ben needs the presented vertex")
        candidates = _candidate_colors(state, presented)
        if not candidates:
            raise PolicyError(f"presented vertex {presented} has no proper color")
        best = None
        best_score = None
        for c in candidates:
            child = state.apply(presented, c)
            blocked = 0
            nearly = 0
            for v in child.uncolored():
                left = len(child.available_colors(v))
                if left == 0:
                    blocked += 1
                elif left == 1:
                    nearly += 1
            score = (blocked, nearly, -c)
            if best_score is None or score > best_score:
                best_score = score
                best = c
        return best


def _candidate_colors(state: GameState, v: int) -> list[int]:
    """Proper colors at v, unused ones reduced to the lowest representative."""
    avail = state.available_colors(v)
    used = state.used_colors()
    out = [c for c in avail if c in used]
    fresh = [c for c in avail if c not in used]
    if fresh:
        out.append(min(fresh))
    out.sort()
    return out


# -- factories matching the published strategy names --------------------


def degeneracy_ann(graph: Graph) -> DegeneracyAnnPolicy:
    return DegeneracyAnnPolicy(graph)


def product_col_ann(g: Graph, h: Graph) -> ProductColAnnPolicy:
    return ProductColAnnPolicy(g, h)


def reduction_ann(g: Graph, h: Graph, st_outer: Policy, st_h: Policy,
                  ell: int) -> ReductionAnnPolicy:
    return ReductionAnnPolicy(g, h, st_outer, st_h, ell)


def optimal_ben(graph: Graph, k: int, limits: Limits = DEFAULT_LIMITS) -> OptimalBenPolicy:
    return OptimalBenPolicy(graph, k, limits)


def heuristic_ben(seed: int = 0) -> HeuristicBenPolicy:
    return HeuristicBenPolicy(seed)


def make_reduction_ann(g: Graph, h: Graph,
                       limits: Limits = DEFAULT_LIMITS) -> ReductionAnnPolicy:
    """Convenience wiring: solver-backed outer and H strategies with
    l = chi(H), verifying chi_i(H) = l."""
    ell = chromatic_number(h)
    from .solver import ann_wins

    verdict = ann_wins(h, ell, limits)
    if verdict.outcome is not Outcome.ANN_WINS:
        raise PolicyError(
            f"H is not {ell}-indicated colorable ({verdict.outcome.value}); "
            "chi_i(H) = chi(H) is required"
        )
    st_outer = SolverAnnPolicy(lexicographic_product(g, complete(ell)), limits)
    st_h = extract_policy(h, ell, limits)
    return ReductionAnnPolicy(g, h, st_outer, st_h, ell)


# -- name-based policy resolution (CLI / play service) -------------------

ANN_POLICY_NAMES = ("degeneracy", "product-col", "reduction", "optimal")
BEN_POLICY_NAMES = ("optimal", "heuristic:<seed>")


def make_ann_policy(name: str, graph: Graph, k: int,
                    limits: Limits = DEFAULT_LIMITS,
                    factors: Optional[tuple[Graph, Graph]] = None) -> Policy:
    """Resolve an Ann policy by its published name.  ``factors`` supplies
    (G, H) when the game graph was built as a lexicographic product, which
    product-col and reduction require."""
    if name == "degeneracy":
        return degeneracy_ann(graph)
    if name == "optimal":
        return extract_policy(graph, k, limits)
    if name in ("product-col", "reduction"):
        if factors is None:
            raise PolicyError(
                f"{name} needs a product graph G[H]; build the game from a "
                "product expression")
        g, h = factors
        if lexicographic_product(g, h) != graph:
            raise PolicyError("factors do not multiply to the game graph")
        if name == "product-col":
            return product_col_ann(g, h)
        return make_reduction_ann(g, h, limits)
    raise PolicyError(
        f"unknown Ann policy {name!r}; choose from {', '.join(ANN_POLICY_NAMES)}")


def make_ben_policy(name: str, graph: Graph, k: int,
                    limits: Limits = DEFAULT_LIMITS) -> Policy:
    """Resolve a Ben policy by its published name."""
    if name == "optimal":
        return optimal_ben(graph, k, limits)
    if name == "heuristic" or name.startswith("heuristic:"):
        seed = 0
        if ":" in name:
            try:
                seed = int(name.split(":", 1)[1])
            except ValueError:
                raise PolicyError(f"bad heuristic seed in {name!r}")
        return heuristic_ben(seed)
    raise PolicyError(
        f"unknown Ben policy {name!r}; choose from {', '.join(BEN_POLICY_NAMES)}")


# -- exhaustive verification of a fixed Ann policy ----------------------


def all_ben_lines(graph: Graph, k: int, ann: Policy) -> tuple[Optional[Transcript], int]:
    """Traverse every Ben line against a fixed (color-symmetric) Ann policy.

    Unused colors are reduced to one representative per reply.  Returns the
    first losing transcript (None if Ann wins every line) and the number of
    completed lines."""
    if ann.side != "ann":
        raise ValueError("all_ben_lines verifies Ann policies")
    lines = 0

    def rec(state: GameState) -> Optional[Transcript]:
        nonlocal lines
        if state.is_complete():
            lines += 1
            return None
        v = ann.choose(state)
        if state.colors[v] is not None:
            raise PolicyError(f"policy presented colored vertex {v}")
        candidates = _candidate_colors(state, v)
        if not candidates:
            lines += 1
            return Transcript(k, state.history, Outcome.BEN_WINS, v)
        for c in candidates:
            child = state.apply(v, c)
            blocked = blocked_vertices(child)
            if blocked:
                lines += 1
                return Transcript(k, child.history, Outcome.BEN_WINS, min(blocked))
            bad = rec(child)
            if bad is not None:
                return bad
        return None

    return rec(GameState.new(graph, k)), lines
