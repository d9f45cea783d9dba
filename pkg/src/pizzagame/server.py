"""HTTP/JSON API for game sessions, engine opponents, hints and analysis.

Sessions live in memory behind an LRU cap; each session serializes its own
requests, and different sessions proceed independently.  The engine's
strategy automaton state is frozen inside the session, so phase-carrying
strategies survive across requests.  All sizes and values in the wire
format are integers; ratios are ``{num, den}`` objects.
"""

from __future__ import annotations

import json
import os
import threading
import time
import uuid
from collections import OrderedDict
from contextlib import asynccontextmanager
from fractions import Fraction
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .core import (
    GameState,
    IllegalMoveError,
    ParseError,
    Pizza,
    PizzaError,
    Player,
    apply_move,
    legal_moves,
    move_for_piece,
    new_game,
    parse_pizza,
)
from . import analysis
from .solver import (
    StrategyError,
    best_move_hints,
    evaluate_vs_adversary,
    optimal_value,
)
from . import strategies as strat

DEFAULT_SESSION_CAP = 1024


class CreateGameRequest(BaseModel):
    sizes: list[int] | str
    human_role: str = "alice"
    opponent: str = "optimal"


class MoveRequest(BaseModel):
    piece: int


class AnalyzeRequest(BaseModel):
    sizes: list[int] | str


def _parse_sizes(raw: list[int] | str) -> Pizza:
    try:
        if isinstance(raw, str):
            return parse_pizza(raw)
        return Pizza(tuple(raw))
    except (ParseError, PizzaError, TypeError) as exc:
        raise HTTPException(status_code=400, detail=f"invalid sizes: {exc}") from exc


def _ratio_json(value: int, total: int) -> dict | None:
    if total == 0:
        return None
    frac = Fraction(value, total)
    return {"num": frac.numerator, "den": frac.denominator}


def state_json(state: GameState) -> dict:
    history = [
        {
            "piece": move.piece,
            "side": move.side.value,
            "player": "alice" if i % 2 == 0 else "bob",
        }
        for i, move in enumerate(state.history)
    ]
    return {
        "sizes": list(state.pizza.sizes),
        "n": state.pizza.n,
        "total": state.pizza.total,
        "eaten_pieces": list(state.eaten_pieces()),
        "history": history,
        "turn": None if state.finished else state.turn.value,
        "scores": {"alice": state.scores[0], "bob": state.scores[1]},
        "finished": state.finished,
        "legal_moves": [m.piece for m in legal_moves(state)],
    }


class Session:
    def __init__(self, pizza: Pizza, human: Player, opponent_id: str):
        self.id = uuid.uuid4().hex
        self.human = human
        self.opponent_id = opponent_id
        engine_seat = human.opponent
        self.engine = strat.strategy_from_id(pizza, opponent_id, seat=engine_seat)
        self.engine_sigma = self.engine.initial()
        self.state = new_game(pizza)
        self.created = time.time()
        self.lock = threading.Lock()
        if engine_seat is Player.ALICE:
            opening = self.engine.opening()
            self.state = apply_move(self.state, move_for_piece(self.state, opening))

    def engine_reply(self) -> dict | None:
        """Apply exactly one engine move if the game continues on its turn."""
        state = self.state
        if state.finished or state.turn is self.human:
            return None
        move, self.engine_sigma = self.engine.respond_state(state, self.engine_sigma)
        self.state = apply_move(state, move)
        return {"piece": move.piece, "side": move.side.value}

    def snapshot(self) -> dict:
        return {
            "id": self.id,
            "sizes": list(self.state.pizza.sizes),
            "human_role": self.human.value,
            "opponent": self.opponent_id,
            "moves": [m.piece for m in self.state.history],
        }


def create_app(
    session_cap: int = DEFAULT_SESSION_CAP,
    snapshot_path: str | None = None,
) -> FastAPI:
    """Build the API application.

    ``snapshot_path`` (or env PIZZA_SNAPSHOT) makes sessions persist to a
    JSON file on shutdown and reload on startup.
    """
    sessions: OrderedDict[str, Session] = OrderedDict()
    registry_lock = threading.Lock()
    snapshot_file = snapshot_path or os.environ.get("PIZZA_SNAPSHOT")

    @asynccontextmanager
    async def lifespan(_: FastAPI):
        _load_snapshot()
        yield
        _save_snapshot()

    app = FastAPI(title="pizzagame API", version="0.1.0", lifespan=lifespan)
    origin = os.environ.get("PIZZA_UI_ORIGIN", "*")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[origin],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def _get_session(game_id: str) -> Session:
        with registry_lock:
            session = sessions.get(game_id)
            if session is None:
                raise HTTPException(status_code=404, detail="unknown game id")
            sessions.move_to_end(game_id)
            return session

    def _put_session(session: Session) -> None:
        with registry_lock:
            sessions[session.id] = session
            while len(sessions) > session_cap:
                sessions.popitem(last=False)

    def _load_snapshot() -> None:
        if not snapshot_file or not Path(snapshot_file).exists():
            return
        try:
            records = json.loads(Path(snapshot_file).read_text())
        except (OSError, json.JSONDecodeError):
            return
        for rec in records:
            try:
                session = Session(
                    Pizza(tuple(rec["sizes"])),
                    Player(rec["human_role"]),
                    rec["opponent"],
                )
                session.id = rec["id"]
                replayed = new_game(session.state.pizza)
                sigma = session.engine.initial()
                for piece in rec["moves"]:
                    move = move_for_piece(replayed, piece)
                    mover_is_engine = replayed.turn is session.human.opponent
                    if mover_is_engine and replayed.history:
                        _, sigma = session.engine.respond_state(replayed, sigma)
                    replayed = apply_move(replayed, move)
                session.state = replayed
                session.engine_sigma = sigma
                _put_session(session)
            except (PizzaError, StrategyError, KeyError, ValueError):
                continue

    def _save_snapshot() -> None:
        if not snapshot_file:
            return
        with registry_lock:
            records = [s.snapshot() for s in sessions.values()]
        Path(snapshot_file).write_text(json.dumps(records))

    @app.post("/games")
    def create_game(request: CreateGameRequest) -> dict:
        pizza = _parse_sizes(request.sizes)
        try:
            human = Player(request.human_role)
        except ValueError:
            raise HTTPException(
                status_code=400, detail=f"unknown role {request.human_role!r}"
            ) from None
        try:
            session = Session(pizza, human, request.opponent)
        except (StrategyError, PizzaError) as exc:
            raise HTTPException(
                status_code=400, detail=f"unknown or unusable opponent: {exc}"
            ) from exc
        _put_session(session)
        return {"id": session.id, "state": state_json(session.state)}

    @app.get("/games/{game_id}")
    def get_game(game_id: str) -> dict:
        session = _get_session(game_id)
        with session.lock:
            return {"id": session.id, "state": state_json(session.state)}

    @app.post("/games/{game_id}/moves")
    def post_move(game_id: str, request: MoveRequest) -> dict:
        session = _get_session(game_id)
        with session.lock:
            state = session.state
            if state.finished:
                raise HTTPException(status_code=409, detail="game is finished")
            if state.turn is not session.human:
                raise HTTPException(status_code=409, detail="not your turn")
            try:
                move = move_for_piece(state, request.piece)
                session.state = apply_move(state, move)
            except (IllegalMoveError, PizzaError) as exc:
                raise HTTPException(status_code=409, detail=str(exc)) from exc
            reply = session.engine_reply()
            return {
                "id": session.id,
                "state": state_json(session.state),
                "human_move": {"piece": move.piece, "side": move.side.value},
                "engine_reply": reply,
            }

    @app.get("/games/{game_id}/hints")
    def get_hints(game_id: str) -> dict:
        session = _get_session(game_id)
        with session.lock:
            state = session.state
            hints = best_move_hints(state)
            return {
                "id": session.id,
                "turn": None if state.finished else state.turn.value,
                "hints": {str(piece): value for piece, value in sorted(hints.items())},
            }

    @app.post("/analyze")
    def analyze_pizza(request: AnalyzeRequest) -> dict:
        pizza = _parse_sizes(request.sizes)
        report = analysis.analysis_report(pizza)
        opt = optimal_value(pizza).value
        report["optimal"] = opt
        report["ratio"] = _ratio_json(opt, pizza.total)
        values: dict[str, int | None] = {}
        values["best-of-four"] = strat.best_of_four(pizza)[1]
        values["best-of-three"] = strat.best_of_three(pizza)[1]
        if pizza.n % 2 == 0:
            values["even"] = evaluate_vs_adversary(
                pizza, strat.even_strategy(pizza)
            ).value
        else:
            values["one-third"] = evaluate_vs_adversary(
                pizza, strat.one_third_strategy(pizza)
            ).value
        report["strategy_values"] = values
        return report

    @app.get("/spec")
    def openapi_spec() -> dict:
        return app.openapi()

    return app


app = create_app()
