"""Exact engine, strategies, solver and verification harness for the
circular pizza-sharing game."""

from .core import (
    Coloring,
    Cut,
    GameState,
    IllegalMoveError,
    Move,
    ParseError,
    Pizza,
    PizzaError,
    Player,
    Side,
    apply_move,
    coloring_from_cut,
    interval_between,
    legal_moves,
    new_game,
    parse_pizza,
    serialize_pizza,
    set_size,
)
from .solver import (
    BobEvaluation,
    EvaluationResult,
    StrategyError,
    best_move_hints,
    evaluate_bob,
    evaluate_vs_adversary,
    naive_tree_value,
    optimal_arc_value,
    optimal_value,
)

__all__ = [
    "Coloring",
    "Cut",
    "GameState",
    "IllegalMoveError",
    "Move",
    "ParseError",
    "Pizza",
    "PizzaError",
    "Player",
    "Side",
    "apply_move",
    "coloring_from_cut",
    "interval_between",
    "legal_moves",
    "new_game",
    "parse_pizza",
    "serialize_pizza",
    "set_size",
    "BobEvaluation",
    "EvaluationResult",
    "StrategyError",
    "best_move_hints",
    "evaluate_bob",
    "evaluate_vs_adversary",
    "naive_tree_value",
    "optimal_arc_value",
    "optimal_value",
]

__version__ = "0.1.0"
