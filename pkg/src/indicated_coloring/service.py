"""HTTP session service: a human plays Ann or Ben against an engine policy.

Sessions are in-memory with idle eviction.  Snapshots carry every derived
datum the board needs (legal moves, per-vertex available colors, blocked
set), so clients render without re-deriving game rules.  Engine replies are
computed synchronously inside the request that triggers them.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .expressions import ProductNode, resolve_graph_input
from .graphs import Graph, GraphError
from .solver import (
    DEFAULT_LIMITS,
    GameState,
    Limits,
    Policy,
    PolicyError,
    blocked_vertices,
)
from .parameters import SizeBoundExceeded
from .strategies import make_ann_policy, make_ben_policy

DEFAULT_IDLE_SECONDS = 30 * 60


@dataclass
class Session:
    id: str
    graph: Graph
    k: int
    human_side: str  # "ann" | "ben" | "both"
    engine_name: str
    state: GameState
    engine_ann: Optional[Policy] = None
    engine_ben: Optional[Policy] = None
    presented: Optional[int] = None
    status: str = "in-progress"
    blocked: frozenset = frozenset()
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_touch: float = field(default_factory=time.monotonic)

    def snapshot(self) -> dict:
        done = self.status != "in-progress"
        awaiting_color = self.presented is not None
        if done:
            legal: list[int] = []
        elif awaiting_color:
            legal = self.state.available_colors(self.presented)
        else:
            legal = self.state.uncolored()
        available = [
            [] if c is not None else self.state.available_colors(v)
            for v, c in enumerate(self.state.colors)
        ]
        return {
            "id": self.id,
            "k": self.k,
            "n": self.graph.n,
            "edges": [[u, v] for u, v in self.graph.edges()],
            "colors": list(self.state.colors),
            "turn": "done" if done else "human",
            "presented": self.presented,
            "legal": legal,
            "available": available,
            "blocked": sorted(self.blocked),
            "status": self.status,
            "moves": [{"v": v, "c": c} for v, c in self.state.history],
            "human_side": self.human_side,
            "engine": self.engine_name,
        }


class SessionStore:
    def __init__(self, idle_seconds: float = DEFAULT_IDLE_SECONDS):
        self.idle_seconds = idle_seconds
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def put(self, session: Session) -> None:
        with self._lock:
            self._evict()
            self._sessions[session.id] = session

    def get(self, sid: str) -> Session:
        with self._lock:
            self._evict()
            session = self._sessions.get(sid)
        if session is None:
            raise HTTPException(status_code=404, detail=f"unknown session {sid}")
        session.last_touch = time.monotonic()
        return session

    def _evict(self) -> None:
        cutoff = time.monotonic() - self.idle_seconds
        stale = [sid for sid, s in self._sessions.items() if s.last_touch < cutoff]
        for sid in stale:
            del self._sessions[sid]


class CreateSession(BaseModel):
    graph: str | dict
    k: int
    human_side: str = "ann"
    engine: str = "optimal"


class Move(BaseModel):
    vertex: Optional[int] = None
    color: Optional[int] = None


def _apply_color(session: Session, color: int) -> None:
    """Color the presented vertex and settle the game status."""
    v = session.presented
    session.state = session.state.apply(v, color)
    session.presented = None
    session.blocked = blocked_vertices(session.state)
    if session.blocked:
        session.status = "ben-won"
    elif session.state.is_complete():
        session.status = "ann-won"


def _present(session: Session, vertex: int) -> None:
    if not session.state.available_colors(vertex):
        # presenting an uncolorable vertex loses for Ann on the spot
        session.blocked = frozenset([vertex])
        session.status = "ben-won"
        return
    session.presented = vertex


def _engine_steps(session: Session) -> None:
    """Let the engine act until it is the human's turn or the game ends."""
    while session.status == "in-progress":
        if session.presented is None:
            if session.engine_ann is None:
                return  # human presents
            _present(session, session.engine_ann.choose(session.state))
        else:
            if session.engine_ben is None:
                return  # human colors
            color = session.engine_ben.choose(session.state, session.presented)
            _apply_color(session, color)


def create_app(limits: Limits = DEFAULT_LIMITS,
               idle_seconds: float = DEFAULT_IDLE_SECONDS,
               static_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="indicated-coloring play service")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
        allow_headers=["*"])
    store = SessionStore(idle_seconds)
    app.state.store = store

    @app.post("/sessions")
    def create_session(body: CreateSession) -> dict:
        if body.human_side not in ("ann", "ben", "both"):
            raise HTTPException(400, "human_side must be ann, ben or both")
        if body.k < 1:
            raise HTTPException(400, f"palette size must be >= 1, got {body.k}")
        try:
            graph, node = resolve_graph_input(body.graph, allow_files=False)
        except GraphError as exc:
            raise HTTPException(400, f"bad graph input: {exc}")
        if graph.n > limits.max_vertices:
            raise HTTPException(
                400, f"graph has {graph.n} vertices; service limit is "
                     f"{limits.max_vertices}")
        if graph.n == 0:
            raise HTTPException(400, "graph must have at least one vertex")
        factors = None
        if isinstance(node, ProductNode):
            factors = (node.left.build(), node.right.build())
        engine_ann = engine_ben = None
        try:
            if body.engine != "human":
                if body.human_side == "ann":
                    engine_ben = make_ben_policy(body.engine, graph, body.k, limits)
                elif body.human_side == "ben":
                    engine_ann = make_ann_policy(body.engine, graph, body.k,
                                                 limits, factors)
                else:
                    raise HTTPException(400, "human_side=both requires engine=human")
        except (PolicyError, SizeBoundExceeded) as exc:
            raise HTTPException(400, f"engine setup failed: {exc}")
        session = Session(
            id=uuid.uuid4().hex,
            graph=graph,
            k=body.k,
            human_side=body.human_side,
            engine_name=body.engine,
            state=GameState.new(graph, body.k),
            engine_ann=engine_ann,
            engine_ben=engine_ben,
        )
        with session.lock:
            _engine_steps(session)
        store.put(session)
        return session.snapshot()

    @app.post("/sessions/{sid}/moves")
    def submit_move(sid: str, move: Move) -> dict:
        session = store.get(sid)
        with session.lock:
            if session.status != "in-progress":
                raise HTTPException(409, "game is over")
            if session.presented is None:
                # presenting phase: human must own the Ann move
                if session.engine_ann is not None:
                    raise HTTPException(409, "engine presents in this session")
                if move.vertex is None:
                    raise HTTPException(409, "expected a vertex (presenting phase)")
                v = move.vertex
                if not (0 <= v < session.graph.n):
                    raise HTTPException(409, f"vertex {v} out of range")
                if session.state.colors[v] is not None:
                    raise HTTPException(409, f"vertex {v} is already colored")
                _present(session, v)
            else:
                if session.engine_ben is not None:
                    raise HTTPException(409, "engine colors in this session")
                if move.color is None:
                    raise HTTPException(409, "expected a color (coloring phase)")
                c = move.color
                if not (1 <= c <= session.k):
                    raise HTTPException(409, f"color {c} outside palette 1..{session.k}")
                if c not in session.state.available_colors(session.presented):
                    raise HTTPException(
                        409, f"color {c} is not proper at vertex {session.presented}")
                _apply_color(session, c)
            _engine_steps(session)
            return session.snapshot()

    @app.get("/sessions/{sid}")
    def session_state(sid: str) -> dict:
        session = store.get(sid)
        with session.lock:
            return session.snapshot()

    if static_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="board")

    return app
