"""Exact game values: optimal play and adversarial strategy evaluation.

Because the eaten pieces always form one contiguous cyclic arc, the
remaining pieces do too, so a position is fully described by the remaining
arc ``(start, length)`` and whose turn it is.  Optimal play is a quadratic
interval dynamic program over those arcs; fixed strategy automata are
evaluated by memoized search over ``(arc, automaton state)``.

All values are exact integers.  Zero-sum bookkeeping holds everywhere:
Alice's total plus Bob's total equals the pizza total.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    GameState,
    IllegalMoveError,
    Pizza,
    PizzaError,
    Player,
    Side,
    legal_moves,
)


class StrategyError(PizzaError):
    """Raised when a strategy automaton misbehaves or is misapplied."""


@dataclass(frozen=True)
class EvaluationResult:
    """Alice's guaranteed total, one worst-case line, and work done."""

    value: int
    line: tuple[int, ...]
    nodes: int


@dataclass(frozen=True)
class BobEvaluation:
    """Bob's guaranteed total against every Alice, reported both ways."""

    bob_value: int
    alice_value: int
    line: tuple[int, ...]
    nodes: int


class ArcSolver:
    """Dense interval DP table for one pizza.

    ``value(start, length)`` is the maximum total the player to move can
    secure from the remaining arc of ``length`` pieces starting at piece
    ``start`` (clockwise), under optimal alternating play.
    """

    def __init__(self, sizes: tuple[int, ...]):
        n = len(sizes)
        self.sizes = sizes
        self.n = n
        prefix = [0] * (2 * n + 1)
        for i in range(2 * n):
            prefix[i + 1] = prefix[i] + sizes[i % n]
        self._prefix = prefix
        # table[length][start]; length 0 row is all zeros
        table = [[0] * n for _ in range(n + 1)]
        nodes = 0
        for length in range(1, n + 1):
            row = table[length]
            prev = table[length - 1]
            for start in range(n):
                end = (start + length - 1) % n
                rest = self.arc_sum(start, length)
                left = sizes[start] + (rest - sizes[start]) - prev[(start + 1) % n]
                right = sizes[end] + (rest - sizes[end]) - prev[start]
                row[start] = left if left >= right else right
                nodes += 1
        self._table = table
        self.nodes = nodes

    def arc_sum(self, start: int, length: int) -> int:
        start %= self.n
        return self._prefix[start + length] - self._prefix[start]

    def value(self, start: int, length: int) -> int:
        if length == 0:
            return 0
        return self._table[length][start % self.n]

    def opening_value(self, piece: int) -> int:
        """Alice's total when she opens at ``piece`` and both play optimally."""
        n = self.n
        rest_start = (piece + 1) % n
        return self.sizes[piece] + self.arc_sum(rest_start, n - 1) - self.value(
            rest_start, n - 1
        )

    def best_opening(self) -> tuple[int, int]:
        """(piece, value) of the best opening; ties go to the smallest piece."""
        best_piece = 0
        best_value = self.opening_value(0)
        for p in range(1, self.n):
            v = self.opening_value(p)
            if v > best_value:
                best_piece, best_value = p, v
        return best_piece, best_value

    def take_values(self, start: int, length: int) -> tuple[int, int]:
        """(value taking the ccw-most piece, value taking the cw-most piece)."""
        end = (start + length - 1) % self.n
        rest = self.arc_sum(start, length)
        left = self.sizes[start] + (rest - self.sizes[start]) - self.value(
            (start + 1) % self.n, length - 1
        )
        right = self.sizes[end] + (rest - self.sizes[end]) - self.value(
            start, length - 1
        )
        return left, right


@lru_cache(maxsize=4096)
def _solver(sizes: tuple[int, ...]) -> ArcSolver:
    return ArcSolver(sizes)


def arc_solver(pizza: Pizza) -> ArcSolver:
    return _solver(pizza.sizes)


def optimal_arc_value(pizza: Pizza, start: int, length: int) -> int:
    """Optimal total for the mover on the remaining arc (start, length)."""
    if not 0 <= length <= pizza.n:
        raise PizzaError(f"arc length {length} out of range")
    return arc_solver(pizza).value(start % pizza.n, length)


def optimal_value(pizza: Pizza) -> EvaluationResult:
    """Alice's exact optimal total with a deterministic principal line.

    The line lists eaten piece indices in move order; replaying it through
    the rules engine reproduces the value.  Ties are broken toward the
    lexicographically smallest piece index at every decision.
    """
    sol = arc_solver(pizza)
    n = pizza.n
    best_piece, best_value = sol.best_opening()
    line = [best_piece]
    # Walk the remaining arc; the remaining arc after eating piece p is the
    # n-1 pieces clockwise from p+1.
    start, length = (best_piece + 1) % n, n - 1
    while length > 0:
        end = (start + length - 1) % n
        left_val, right_val = sol.take_values(start, length)
        take_start = left_val > right_val or (left_val == right_val and start <= end)
        if take_start:
            line.append(start)
            start = (start + 1) % n
        else:
            line.append(end)
        length -= 1
    return EvaluationResult(value=best_value, line=tuple(line), nodes=sol.nodes)


_NAIVE_LIMIT = 15


def naive_tree_value(pizza: Pizza) -> int:
    """Full-tree minimax without memoization; independent oracle for the DP.

    Exponential, so refuses pizzas with more than 15 pieces.
    """
    n = pizza.n
    if n > _NAIVE_LIMIT:
        raise PizzaError(
            f"refusing naive tree search on {n} pieces (limit {_NAIVE_LIMIT})"
        )
    s = pizza.sizes

    def rec(start: int, length: int) -> int:
        if length == 0:
            return 0
        if length == 1:
            return s[start % n]
        total = 0
        for i in range(length):
            total += s[(start + i) % n]
        a = s[start % n]
        b = s[(start + length - 1) % n]
        left = a + (total - a) - rec(start + 1, length - 1)
        right = b + (total - b) - rec(start, length - 1)
        return left if left >= right else right

    total = pizza.total
    best = None
    for p in range(n):
        v = s[p] + (total - s[p]) - rec(p + 1, n - 1)
        if best is None or v > best:
            best = v
    assert best is not None
    return best


def best_move_hints(state: GameState) -> dict[int, int]:
    """For each legal move: the mover's final total under optimal play after it.

    The value includes the mover's already banked score, so on the last
    move the hint is simply the current score plus the piece size.
    """
    pizza = state.pizza
    sol = arc_solver(pizza)
    n = pizza.n
    mover_score = state.score_of(state.turn)
    hints: dict[int, int] = {}
    for move in legal_moves(state):
        p = move.piece
        if state.opening is None:
            rest_start, rest_len = (p + 1) % n, n - 1
        else:
            rest_start = (state.arc_hi + 1) % n
            rest_len = n - state.eaten_count
            if p == rest_start:
                rest_start = (rest_start + 1) % n
            rest_len -= 1
        gain_after = sol.arc_sum(rest_start, rest_len) - sol.value(rest_start, rest_len)
        hints[p] = mover_score + pizza.sizes[p] + gain_after
    return hints


def _extend(n: int, lo: int, count: int, side: Side) -> tuple[int, int, int]:
    """Grow the eaten arc by one piece at ``side``; returns (lo, count, piece)."""
    if side is Side.LEFT:
        piece = (lo - 1) % n
        return piece, count + 1, piece
    piece = (lo + count) % n
    return lo, count + 1, piece


def evaluate_vs_adversary(pizza: Pizza, alice) -> EvaluationResult:
    """Exact minimum over all Bob behaviors of Alice's total.

    ``alice`` is a strategy automaton: ``opening()``, ``initial()`` and
    ``respond(lo, count, opp_side, sigma)`` returning ``(side, sigma)``.
    The automaton state must be hashable and must determine the response
    together with the arc and Bob's last move, so positions can be memoized
    on ``(arc, state)``.
    """
    n = pizza.n
    sizes = pizza.sizes
    opening = alice.opening()
    if not 0 <= opening < n:
        raise StrategyError(f"automaton opened out of range: {opening}")
    sigma0 = alice.initial()
    memo: dict[tuple[int, int, object], int] = {}
    nodes = 0

    def bob_turn(lo: int, count: int, sigma) -> int:
        nonlocal nodes
        if count == n:
            return 0
        key = (lo, count, sigma)
        cached = memo.get(key)
        if cached is not None:
            return cached
        nodes += 1
        best: int | None = None
        sides = (Side.LEFT, Side.RIGHT) if n - count > 1 else (Side.LEFT,)
        for side in sides:
            lo1, count1, _ = _extend(n, lo, count, side)
            if count1 == n:
                cand = 0
            else:
                a_side, sigma1 = alice.respond(lo1, count1, side, sigma)
                if a_side not in (Side.LEFT, Side.RIGHT):
                    raise StrategyError(
                        f"automaton returned invalid side {a_side!r} at arc "
                        f"({lo1},{count1}) state {sigma!r}"
                    )
                lo2, count2, eaten = _extend(n, lo1, count1, a_side)
                cand = sizes[eaten] + bob_turn(lo2, count2, sigma1)
            if best is None or cand < best:
                best = cand
        assert best is not None
        memo[key] = best
        return best

    value = sizes[opening] + bob_turn(opening, 1, sigma0)

    # Reconstruct one worst-case line by replaying Bob's minimizing choices
    # (ties toward the smaller eaten piece index).
    line = [opening]
    lo, count, sigma = opening, 1, sigma0
    while count < n:
        options = []
        sides = (Side.LEFT, Side.RIGHT) if n - count > 1 else (Side.LEFT,)
        for side in sides:
            lo1, count1, b_piece = _extend(n, lo, count, side)
            if count1 == n:
                options.append((0, b_piece, side, None, None, lo1, count1))
            else:
                a_side, sigma1 = alice.respond(lo1, count1, side, sigma)
                lo2, count2, a_piece = _extend(n, lo1, count1, a_side)
                future = sizes[a_piece] + bob_turn(lo2, count2, sigma1)
                options.append((future, b_piece, side, a_piece, sigma1, lo2, count2))
        options.sort(key=lambda o: (o[0], o[1]))
        future, b_piece, side, a_piece, sigma1, lo, count = options[0]
        line.append(b_piece)
        if a_piece is not None:
            line.append(a_piece)
            sigma = sigma1
    return EvaluationResult(value=value, line=tuple(line), nodes=nodes)


def evaluate_bob(pizza: Pizza, bob) -> BobEvaluation:
    """Exact minimum over all Alice behaviors of Bob's total.

    Equivalently computes the maximum Alice can eat against this Bob
    automaton; both numbers are reported (they sum to the pizza total).
    """
    n = pizza.n
    sizes = pizza.sizes
    sigma0 = bob.initial()
    memo: dict[tuple[int, int, object], int] = {}
    nodes = 0

    def alice_turn(lo: int, count: int, sigma) -> int:
        nonlocal nodes
        if count == n:
            return 0
        key = (lo, count, sigma)
        cached = memo.get(key)
        if cached is not None:
            return cached
        nodes += 1
        best: int | None = None
        sides = (Side.LEFT, Side.RIGHT) if n - count > 1 else (Side.LEFT,)
        for side in sides:
            lo1, count1, a_piece = _extend(n, lo, count, side)
            gain = sizes[a_piece]
            if count1 == n:
                cand = gain
            else:
                b_side, sigma1 = bob.respond(lo1, count1, side, sigma)
                if b_side not in (Side.LEFT, Side.RIGHT):
                    raise StrategyError(
                        f"bob automaton returned invalid side {b_side!r} at arc "
                        f"({lo1},{count1}) state {sigma!r}"
                    )
                lo2, count2, _ = _extend(n, lo1, count1, b_side)
                cand = gain + alice_turn(lo2, count2, sigma1)
            if best is None or cand > best:
                best = cand
        assert best is not None
        memo[key] = best
        return best

    best_alice: int | None = None
    best_open = 0
    for p in range(n):
        if n == 1:
            v = sizes[p]
        else:
            b_side, sigma1 = bob.respond(p, 1, Side.OPENING, sigma0)
            lo1, count1, _ = _extend(n, p, 1, b_side)
            v = sizes[p] + alice_turn(lo1, count1, sigma1)
        if best_alice is None or v > best_alice:
            best_alice = v
            best_open = p
    assert best_alice is not None

    # One line realizing Alice's best play against this Bob.
    line = [best_open]
    if n > 1:
        b_side, sigma = bob.respond(best_open, 1, Side.OPENING, sigma0)
        lo, count, b_piece = _extend(n, best_open, 1, b_side)
        line.append(b_piece)
        while count < n:
            options = []
            sides = (Side.LEFT, Side.RIGHT) if n - count > 1 else (Side.LEFT,)
            for side in sides:
                lo1, count1, a_piece = _extend(n, lo, count, side)
                if count1 == n:
                    options.append((sizes[a_piece], a_piece, lo1, count1, None, None))
                else:
                    b_side2, sigma1 = bob.respond(lo1, count1, side, sigma)
                    lo2, count2, b_piece2 = _extend(n, lo1, count1, b_side2)
                    future = sizes[a_piece] + alice_turn(lo2, count2, sigma1)
                    options.append((future, a_piece, lo2, count2, b_piece2, sigma1))
            options.sort(key=lambda o: (-o[0], o[1]))
            future, a_piece, lo, count, b_piece2, sigma1 = options[0]
            line.append(a_piece)
            if b_piece2 is not None:
                line.append(b_piece2)
                sigma = sigma1
    alice_value = best_alice
    return BobEvaluation(
        bob_value=pizza.total - alice_value,
        alice_value=alice_value,
        line=tuple(line),
        nodes=nodes,
    )
