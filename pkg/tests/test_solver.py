"""Interval DP, the naive oracle, hints and adversarial evaluation."""

import itertools

import pytest

from pizzagame.core import (
    Pizza,
    PizzaError,
    apply_move,
    move_for_piece,
    new_game,
)
from pizzagame.harness import random_pizza
from pizzagame.solver import (
    best_move_hints,
    evaluate_bob,
    evaluate_vs_adversary,
    naive_tree_value,
    optimal_arc_value,
    optimal_value,
)
from pizzagame.strategies import even_strategy, optimal_bob


def brute_force_game_value(sizes):
    """Reference value by exhaustive play over full move sequences."""
    n = len(sizes)

    def rec(start, length, alice_moves):
        # value = Alice's haul from the rest; mover max/min accordingly
        if length == 0:
            return 0
        best = None
        for take_start in (True, False):
            piece = start % n if take_start else (start + length - 1) % n
            rest_start = start + 1 if take_start else start
            sub = rec(rest_start, length - 1, not alice_moves)
            value = (sizes[piece] if alice_moves else 0) + sub
            if best is None:
                best = value
            elif alice_moves:
                best = max(best, value)
            else:
                best = min(best, value)
        return best

    return max(sizes[p] + rec(p + 1, n - 1, False) for p in range(n))


class TestArcValues:
    def test_single_piece(self):
        assert optimal_arc_value(Pizza((7, 1, 1)), 0, 1) == 7

    def test_two_pieces_take_max(self):
        assert optimal_arc_value(Pizza((3, 8, 1)), 0, 2) == 8

    def test_three_piece_trap(self):
        # [1,5,1]: the mover gets an end 1, the opponent takes 5, mover gets 1
        assert optimal_arc_value(Pizza((1, 5, 1)), 0, 3) == 2

    def test_length_bounds(self):
        with pytest.raises(PizzaError):
            optimal_arc_value(Pizza((1, 1)), 0, 3)


class TestOptimalValue:
    def test_lone_piece(self):
        assert optimal_value(Pizza((5,))).value == 5

    def test_even_four(self):
        assert optimal_value(Pizza((1, 0, 1, 0))).value == 2

    def test_matches_brute_force_exhaustively(self):
        for n in range(1, 7):
            for sizes in itertools.product((0, 1, 2), repeat=n):
                assert optimal_value(Pizza(sizes)).value == brute_force_game_value(
                    sizes
                ), sizes

    def test_principal_line_replays_to_value(self):
        for seed in range(40):
            pizza = random_pizza(1 + seed % 9, 5, seed)
            result = optimal_value(pizza)
            state = new_game(pizza)
            for piece in result.line:
                state = apply_move(state, move_for_piece(state, piece))
            assert state.finished
            assert state.scores[0] == result.value

    def test_rotation_reflection_invariance(self):
        for seed in range(60):
            pizza = random_pizza(1 + seed % 10, 6, 1000 + seed)
            base = optimal_value(pizza).value
            for k in range(pizza.n):
                assert optimal_value(pizza.rotated(k)).value == base
            assert optimal_value(pizza.reflected()).value == base

    def test_scaling_equivariance(self):
        for seed in range(30):
            pizza = random_pizza(1 + seed % 8, 4, 2000 + seed)
            base = optimal_value(pizza).value
            for k in (2, 3, 7):
                assert optimal_value(pizza.scaled(k)).value == k * base


class TestNaiveOracle:
    def test_three_ones(self):
        assert naive_tree_value(Pizza((1, 1, 1))) == 2

    def test_small_example(self):
        pizza = Pizza((2, 1, 0, 2))
        assert naive_tree_value(pizza) == optimal_value(pizza).value

    def test_equals_dp_on_binary_pizzas(self):
        for n in range(1, 8):
            for sizes in itertools.product((0, 1), repeat=n):
                pizza = Pizza(sizes)
                assert naive_tree_value(pizza) == optimal_value(pizza).value

    def test_refuses_large_boards(self):
        with pytest.raises(PizzaError, match="refusing"):
            naive_tree_value(Pizza((1,) * 16))


class TestHints:
    def test_last_move_adds_piece_size(self):
        pizza = Pizza((1, 2, 3))
        state = new_game(pizza)
        for piece in (0, 1):
            state = apply_move(state, move_for_piece(state, piece))
        hints = best_move_hints(state)
        # Alice to move, her score is 1, the last piece is 2 -> total 4... piece 2 has size 3
        assert hints == {2: 1 + 3}

    def test_opening_hints_match_brute_force(self):
        pizza = Pizza((1, 0, 1, 0))
        sizes = pizza.sizes
        state = new_game(pizza)
        hints = best_move_hints(state)

        def opening_value(p):
            # independent: play out the 3 remaining pieces exhaustively
            def rec(start, length, mover_is_alice):
                if length == 0:
                    return 0
                best = None
                for take_start in (True, False):
                    piece = (
                        start % 4 if take_start else (start + length - 1) % 4
                    )
                    sub = rec(
                        start + 1 if take_start else start,
                        length - 1,
                        not mover_is_alice,
                    )
                    value = (sizes[piece] if mover_is_alice else 0) + sub
                    if best is None:
                        best = value
                    elif mover_is_alice:
                        best = max(best, value)
                    else:
                        best = min(best, value)
                return best

            return sizes[p] + rec(p + 1, 3, False)

        assert hints == {p: opening_value(p) for p in range(4)}
        assert hints[0] == hints[2] == 2
        assert hints[1] <= 2 and hints[3] <= 2

    def test_hint_following_reaches_optimal(self):
        for seed in range(25):
            pizza = random_pizza(1 + seed % 9, 5, 3000 + seed)
            target = optimal_value(pizza).value
            state = new_game(pizza)
            while not state.finished:
                hints = best_move_hints(state)
                # max value, ties to the smallest piece
                best_value = max(hints.values())
                piece = min(p for p, v in hints.items() if v == best_value)
                state = apply_move(state, move_for_piece(state, piece))
            assert state.scores[0] == target


class TestEvaluators:
    def test_even_strategy_on_even_four(self):
        pizza = Pizza((1, 0, 1, 0))
        assert evaluate_vs_adversary(pizza, even_strategy(pizza)).value == 2

    def test_worst_case_line_replays_to_value(self):
        for seed in range(20):
            pizza = random_pizza(2 * (1 + seed % 5), 5, 4000 + seed)
            strategy = even_strategy(pizza)
            result = evaluate_vs_adversary(pizza, strategy)
            state = new_game(pizza)
            for piece in result.line:
                state = apply_move(state, move_for_piece(state, piece))
            assert state.finished
            assert state.scores[0] == result.value

    def test_optimal_dominates_fixed_strategy(self):
        for seed in range(30):
            pizza = random_pizza(2 * (1 + seed % 5), 5, 5000 + seed)
            value = evaluate_vs_adversary(pizza, even_strategy(pizza)).value
            assert optimal_value(pizza).value >= value

    def test_optimal_bob_complements_optimal_value(self):
        for seed in range(30):
            pizza = random_pizza(1 + seed % 9, 5, 6000 + seed)
            result = evaluate_bob(pizza, optimal_bob(pizza))
            assert result.bob_value == pizza.total - optimal_value(pizza).value
            assert result.alice_value + result.bob_value == pizza.total

    def test_bob_line_replays(self):
        pizza = Pizza((0, 0, 1, 0, 1, 0, 0, 1, 0, 2, 0, 0, 2, 0, 2))
        result = evaluate_bob(pizza, optimal_bob(pizza))
        state = new_game(pizza)
        for piece in result.line:
            state = apply_move(state, move_for_piece(state, piece))
        assert state.finished
        assert state.scores[0] == result.alice_value
