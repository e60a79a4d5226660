"""The indicated-coloring game: states, exact adversarial solving, policy
extraction and game playback.

Ann presents an uncolored vertex, Ben gives it a proper color from a fixed
palette {1..k}.  Ann wins when the whole graph is colored; Ben wins the
moment a block vertex appears (an uncolored vertex whose colored neighbors
already carry all k colors).

The solver computes the exact minimax value.  States are memoized on a
canonical key that quotients out color-name permutations, and Ben's replies
are canonically reduced to one representative per unused color; both are
sound because the game value depends on the coloring only through its
partition into color classes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .graphs import Graph
from .parameters import SizeBoundExceeded, chromatic_number, coloring_number


class Outcome(Enum):
    ANN_WINS = "ann"
    BEN_WINS = "ben"
    RESOURCE_LIMIT = "resource-limit"


class PolicyError(RuntimeError):
    """A strategy was asked something outside its contract."""


class IllegalMoveError(RuntimeError):
    """A policy produced an illegal move; names the offending side."""

    def __init__(self, side: str, message: str):
        super().__init__(f"{side}: {message}")
        self.side = side


class LimitExceeded(Exception):
    """Internal signal: a search limit tripped (never a wrong answer)."""


@dataclass(frozen=True)
class Limits:
    max_states: int = 5_000_000
    max_millis: int = 300_000
    max_vertices: int = 12

    def __post_init__(self):
        if self.max_states <= 0 or self.max_millis <= 0 or self.max_vertices <= 0:
            raise ValueError(f"limits must be positive: {self}")


DEFAULT_LIMITS = Limits()


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    states: int
    memo_hits: int
    millis: float

    @property
    def ann_wins(self) -> bool:
        return self.outcome is Outcome.ANN_WINS

    @property
    def decided(self) -> bool:
        return self.outcome is not Outcome.RESOURCE_LIMIT


# -- game state --------------------------------------------------------


@dataclass(frozen=True)
class GameState:
    """Partial proper coloring plus the move history that produced it."""

    graph: Graph
    k: int
    colors: tuple[Optional[int], ...]
    history: tuple[tuple[int, int], ...] = ()

    @staticmethod
    def new(graph: Graph, k: int) -> "GameState":
        if k < 1:
            raise ValueError(f"palette size must be >= 1, got {k}")
        return GameState(graph, k, (None,) * graph.n)

    def apply(self, v: int, c: int) -> "GameState":
        if not (0 <= v < self.graph.n):
            raise ValueError(f"vertex {v} out of range")
        if self.colors[v] is not None:
            raise ValueError(f"vertex {v} already colored")
        if not (1 <= c <= self.k):
            raise ValueError(f"color {c} outside palette 1..{self.k}")
        for w in self.graph.neighbors(v):
            if self.colors[w] == c:
                raise ValueError(f"color {c} at {v} conflicts with neighbor {w}")
        colors = list(self.colors)
        colors[v] = c
        return GameState(self.graph, self.k, tuple(colors), self.history + ((v, c),))

    def is_complete(self) -> bool:
        return all(c is not None for c in self.colors)

    def uncolored(self) -> list[int]:
        return [v for v, c in enumerate(self.colors) if c is None]

    def used_colors(self) -> set[int]:
        return {c for c in self.colors if c is not None}

    def available_colors(self, v: int) -> list[int]:
        """Palette colors not present on v's colored neighbors."""
        taken = {self.colors[w] for w in self.graph.neighbors(v)}
        return [c for c in range(1, self.k + 1) if c not in taken]


def blocked_vertices(state: GameState) -> frozenset[int]:
    """Uncolored vertices whose colored neighborhoods carry all k colors."""
    out = []
    if len(state.used_colors()) < state.k:
        return frozenset()
    for v, c in enumerate(state.colors):
        if c is not None:
            continue
        seen = {state.colors[w] for w in state.graph.neighbors(v)}
        seen.discard(None)
        if len(seen) == state.k:
            out.append(v)
    return frozenset(out)


def canonical_key(state: GameState):
    """Color-name-insensitive key: (k, color classes ordered by minimum
    member).  Two states collide iff their colorings differ only by a
    permutation of color names."""
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(state.colors):
        if c is not None:
            classes.setdefault(c, []).append(v)
    parts = sorted((frozenset(vs) for vs in classes.values()), key=min)
    return (state.k, tuple(parts))


def state_class_masks(state: GameState) -> tuple[int, ...]:
    """The same partition as canonical_key, as bitmasks (solver currency)."""
    classes: dict[int, int] = {}
    for v, c in enumerate(state.colors):
        if c is not None:
            classes[c] = classes.get(c, 0) | (1 << v)
    return tuple(sorted(classes.values(), key=lambda m: m & -m))


# -- exact search ------------------------------------------------------


class Searcher:
    """Memoized minimax over canonical colorings for one (graph, k).

    The memo maps a canonical position to its (unique) game value, so
    concurrent idempotent inserts of the same entry are harmless; this
    single-threaded implementation relies on that only trivially.
    """

    __slots__ = ("masks", "n", "k", "full", "memo", "states", "hits",
                 "max_states", "deadline")

    def __init__(self, graph: Graph, k: int, limits: Limits = DEFAULT_LIMITS):
        if graph.n > limits.max_vertices:
            raise SizeBoundExceeded(
                f"solver: {graph.n} vertices exceeds limit {limits.max_vertices}"
            )
        if k < 1:
            raise ValueError(f"palette size must be >= 1, got {k}")
        self.masks = graph.adjacency_masks()
        self.n = graph.n
        self.k = k
        self.full = (1 << graph.n) - 1
        self.memo: dict[tuple[int, ...], bool] = {}
        self.states = 0
        self.hits = 0
        self.max_states = limits.max_states
        self.deadline = time.monotonic() + limits.max_millis / 1000.0

    def value(self, classes: tuple[int, ...]) -> bool:
        """True iff the position (Ann to present) is Ann-winning."""
        colored = 0
        for m in classes:
            colored |= m
        if colored == self.full:
            return True
        cached = self.memo.get(classes)
        if cached is not None:
            self.hits += 1
            return cached
        self.states += 1
        if self.states > self.max_states:
            raise LimitExceeded("max_states")
        if not (self.states & 255) and time.monotonic() > self.deadline:
            raise LimitExceeded("max_millis")
        masks = self.masks
        k_used = len(classes)
        can_fresh = k_used < self.k
        remaining = self.full & ~colored
        if not can_fresh:
            # only with all k colors on the board can a vertex be blocked
            r = remaining
            while r:
                vb = r & -r
                r ^= vb
                am = masks[vb.bit_length() - 1]
                for cm in classes:
                    if not (am & cm):
                        break
                else:
                    self.memo[classes] = False
                    return False
        result = False
        r = remaining
        while r:
            vb = r & -r
            r ^= vb
            am = masks[vb.bit_length() - 1]
            ok = True
            for i in range(k_used):
                if am & classes[i]:
                    continue
                child = list(classes)
                child[i] |= vb
                child.sort(key=lambda m: m & -m)
                if not self.value(tuple(child)):
                    ok = False
                    break
            if ok and can_fresh:
                # all unused colors are interchangeable: try one representative
                child = list(classes)
                child.append(vb)
                child.sort(key=lambda m: m & -m)
                if not self.value(tuple(child)):
                    ok = False
            if ok:
                result = True
                break
        self.memo[classes] = result
        return result

    def winning_vertex(self, classes: tuple[int, ...]) -> Optional[int]:
        """Lowest uncolored vertex whose every Ben reply stays Ann-winning,
        or None when the position is not Ann-winning."""
        colored = 0
        for m in classes:
            colored |= m
        masks = self.masks
        k_used = len(classes)
        can_fresh = k_used < self.k
        if not can_fresh:
            r = self.full & ~colored
            while r:
                vb = r & -r
                r ^= vb
                am = masks[vb.bit_length() - 1]
                if all(am & cm for cm in classes):
                    return None
        r = self.full & ~colored
        while r:
            vb = r & -r
            r ^= vb
            v = vb.bit_length() - 1
            am = masks[v]
            ok = True
            for i in range(k_used):
                if am & classes[i]:
                    continue
                child = list(classes)
                child[i] |= vb
                child.sort(key=lambda m: m & -m)
                if not self.value(tuple(child)):
                    ok = False
                    break
            if ok and can_fresh:
                child = list(classes)
                child.append(vb)
                child.sort(key=lambda m: m & -m)
                if not self.value(tuple(child)):
                    ok = False
            if ok:
                return v
        return None


def ann_wins(graph: Graph, k: int, limits: Limits = DEFAULT_LIMITS) -> Verdict:
    """Exact game value from the empty coloring; deterministic given limits."""
    t0 = time.monotonic()
    searcher = Searcher(graph, k, limits)
    try:
        win = searcher.value(())
        outcome = Outcome.ANN_WINS if win else Outcome.BEN_WINS
    except LimitExceeded:
        outcome = Outcome.RESOURCE_LIMIT
    millis = (time.monotonic() - t0) * 1000.0
    return Verdict(outcome, searcher.states, searcher.hits, millis)


@dataclass(frozen=True)
class ChiIResult:
    """Per-k outcomes over [chi, k_max]; winning sets are reported, never
    assumed upward-closed."""

    k_range: tuple[int, int]
    verdicts: dict[int, Verdict] = field(compare=False)
    winning_set: frozenset[int] = frozenset()
    unknown: frozenset[int] = frozenset()

    @property
    def chi_i(self) -> Optional[int]:
        return min(self.winning_set) if self.winning_set else None

    def is_interval(self) -> bool:
        """True when the decided winning ks form a contiguous range."""
        if not self.winning_set:
            return True
        lo, hi = min(self.winning_set), max(self.winning_set)
        return all(k in self.winning_set or k in self.unknown
                   for k in range(lo, hi + 1))

    def to_json_dict(self) -> dict:
        lo, hi = self.k_range
        return {
            "k_range": [lo, hi],
            "chi_i": self.chi_i,
            "winning_set": sorted(self.winning_set),
            "unknown": sorted(self.unknown),
            "outcomes": {str(k): v.outcome.value for k, v in self.verdicts.items()},
            "interval": self.is_interval(),
        }


def indicated_chromatic_number(
    graph: Graph,
    k_max: Optional[int] = None,
    limits: Limits = DEFAULT_LIMITS,
) -> ChiIResult:
    """Solve every k in [chi(G), k_max] (default k_max = col(G), where a win
    is guaranteed) and report the full winning set."""
    lo = chromatic_number(graph)
    hi = coloring_number(graph) if k_max is None else k_max
    verdicts: dict[int, Verdict] = {}
    winning = set()
    unknown = set()
    for k in range(lo, hi + 1):
        v = ann_wins(graph, k, limits)
        verdicts[k] = v
        if v.outcome is Outcome.ANN_WINS:
            winning.add(k)
        elif v.outcome is Outcome.RESOURCE_LIMIT:
            unknown.add(k)
    return ChiIResult((lo, hi), verdicts, frozenset(winning), frozenset(unknown))


# -- policies and playback ---------------------------------------------


class Policy:
    """Move-selection rule for one side.

    Ann policies implement choose(state) -> vertex; Ben policies implement
    choose(state, presented) -> color.  Policies are immutable after
    construction up to internal idempotent caches.
    """

    side: str = "?"
    name: str = "?"

    def choose(self, state: GameState, presented: Optional[int] = None) -> int:
        raise NotImplementedError


class SolverAnnPolicy(Policy):
    """Ann policy backed by the exact solver.

    Re-solves residual positions on demand, so the same object is valid at
    any palette size for which the current position is Ann-winning (one
    memoized searcher per k).
    """

    side = "ann"
    name = "optimal"

    def __init__(self, graph: Graph, limits: Limits = DEFAULT_LIMITS):
        self.graph = graph
        self.limits = limits
        self._searchers: dict[int, Searcher] = {}

    def searcher(self, k: int) -> Searcher:
        s = self._searchers.get(k)
        if s is None:
            s = Searcher(self.graph, k, self.limits)
            self._searchers[k] = s
        return s

    def choose(self, state: GameState, presented: Optional[int] = None) -> int:
        if state.graph != self.graph:
            raise PolicyError("policy bound to a different graph")
        v = self.searcher(state.k).winning_vertex(state_class_masks(state))
        if v is None:
            raise PolicyError("position is not Ann-winning; no safe vertex exists")
        return v


def extract_policy(graph: Graph, k: int, limits: Limits = DEFAULT_LIMITS) -> SolverAnnPolicy:
    """Reify a winning Ann strategy; fails unless ann_wins(graph, k) holds."""
    policy = SolverAnnPolicy(graph, limits)
    try:
        if not policy.searcher(k).value(()):
            raise PolicyError(f"Ann does not win with k={k}; no policy to extract")
    except LimitExceeded as exc:
        raise PolicyError(f"solver hit {exc} before a verdict; no policy") from exc
    return policy


@dataclass(frozen=True)
class Transcript:
    k: int
    moves: tuple[tuple[int, int], ...]
    outcome: Outcome
    blocked_witness: Optional[int] = None

    def __post_init__(self):
        if self.outcome is Outcome.BEN_WINS and self.blocked_witness is None:
            raise ValueError("BenWins transcript requires a blocked witness")

    def to_json_dict(self) -> dict:
        d = {
            "k": self.k,
            "moves": [{"v": v, "c": c} for v, c in self.moves],
            "outcome": self.outcome.value,
        }
        if self.blocked_witness is not None:
            d["blocked"] = self.blocked_witness
        return d

    @staticmethod
    def from_json_dict(d: dict) -> "Transcript":
        return Transcript(
            d["k"],
            tuple((m["v"], m["c"]) for m in d["moves"]),
            Outcome(d["outcome"]),
            d.get("blocked"),
        )


def play_game(graph: Graph, k: int, ann: Policy, ben: Policy) -> Transcript:
    """Alternate Ann's vertex choice and Ben's color choice until the graph
    is colored (Ann wins) or a block vertex appears (Ben wins)."""
    if ann.side != "ann" or ben.side != "ben":
        raise ValueError("policies must match their sides (ann, ben)")
    state = GameState.new(graph, k)
    while not state.is_complete():
        v = ann.choose(state)
        if not isinstance(v, int) or not (0 <= v < graph.n) or state.colors[v] is not None:
            raise IllegalMoveError("ann", f"presented invalid vertex {v!r}")
        if not state.available_colors(v):
            # degenerate blocking: the presented vertex cannot be colored
            return Transcript(k, state.history, Outcome.BEN_WINS, v)
        c = ben.choose(state, v)
        if not isinstance(c, int) or not (1 <= c <= k):
            raise IllegalMoveError("ben", f"color {c!r} outside palette 1..{k}")
        if c not in state.available_colors(v):
            raise IllegalMoveError("ben", f"color {c} is not proper at vertex {v}")
        state = state.apply(v, c)
        blocked = blocked_vertices(state)
        if blocked:
            return Transcript(k, state.history, Outcome.BEN_WINS, min(blocked))
    return Transcript(k, state.history, Outcome.ANN_WINS)
