"""Board representation and rules engine for the circular pizza-sharing game.

Two players, Alice and Bob, share a circular pizza sliced into pieces of
non-negative integer size.  Alice opens by eating any piece; afterwards the
players alternate and every move must eat a piece adjacent to the already
eaten ones.  The eaten pieces therefore always form one contiguous cyclic
arc, and apart from the first and last move each player chooses between the
two pieces at the ends of that arc.

Sizes are exact non-negative integers.  Callers holding rational sizes must
scale them to a common denominator first; every downstream comparison in
this package is done in integer arithmetic so that guarantees like "at
least 4/9 of the total" can be checked exactly.

Everything in this module is immutable; operations are pure functions and
safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Iterator


class PizzaError(ValueError):
    """Base error for invalid pizzas, moves or analysis requests."""


class ParseError(PizzaError):
    """Raised when a pizza description cannot be parsed."""


class IllegalMoveError(PizzaError):
    """Raised when a move violates the adjacency or turn rules."""


class Player(str, Enum):
    ALICE = "alice"
    BOB = "bob"

    @property
    def opponent(self) -> "Player":
        return Player.BOB if self is Player.ALICE else Player.ALICE


class Side(str, Enum):
    """Which end of the eaten arc a move extends.

    LEFT extends the counterclockwise end, RIGHT the clockwise end.
    OPENING is only valid for the first move of the game.  Recording the
    side makes "eat the piece the opponent just revealed" well defined
    without re-deriving the direction from the history.
    """

    LEFT = "left"
    RIGHT = "right"
    OPENING = "opening"


def other_side(side: Side) -> Side:
    if side is Side.LEFT:
        return Side.RIGHT
    if side is Side.RIGHT:
        return Side.LEFT
    raise PizzaError("opening move has no opposite side")


@dataclass(frozen=True)
class Pizza:
    """A cyclic sequence of exact non-negative piece sizes.

    Piece indices are cyclic: piece ``i`` means piece ``i mod n``.  Cut ``k``
    denotes the gap between piece ``k-1 mod n`` and piece ``k``; there are
    exactly ``n`` cuts.
    """

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        sizes = tuple(int(s) for s in self.sizes)
        if len(sizes) < 1:
            raise PizzaError("a pizza needs at least one piece")
        for i, s in enumerate(sizes):
            if s < 0:
                raise PizzaError(f"piece {i}: negative size {s}")
        object.__setattr__(self, "sizes", sizes)

    @property
    def n(self) -> int:
        return len(self.sizes)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def piece(self, i: int) -> int:
        """Size of piece ``i`` (cyclic indexing)."""
        return self.sizes[i % self.n]

    def rotated(self, k: int) -> "Pizza":
        n = self.n
        return Pizza(tuple(self.sizes[(i + k) % n] for i in range(n)))

    def reflected(self) -> "Pizza":
        return Pizza(tuple(reversed(self.sizes)))

    def scaled(self, k: int) -> "Pizza":
        if k <= 0:
            raise PizzaError("scale factor must be positive")
        return Pizza(tuple(s * k for s in self.sizes))


# A cut is identified by its index: cut k separates piece k-1 (ccw side)
# from piece k (cw side).
Cut = int


def set_size(pizza: Pizza, pieces: Iterable[int]) -> int:
    """Exact total size of a set of piece indices.

    Indices must lie in ``0..n-1``; this helper validates rather than wraps
    so that accidental off-by-one arithmetic in callers is caught early.
    """
    total = 0
    for p in pieces:
        if not 0 <= p < pizza.n:
            raise PizzaError(f"piece index {p} out of range for {pizza.n} pieces")
        total += pizza.sizes[p]
    return total


@dataclass(frozen=True)
class Coloring:
    """Almost alternating red/green piece partition induced by a cut.

    Defined for pizzas with an odd number of pieces: both pieces adjacent
    to the cut are red and the colors alternate everywhere else, so exactly
    one adjacent pair (the one across the cut) is monochromatic.
    """

    cut: Cut
    red: frozenset[int]
    green: frozenset[int]


def coloring_from_cut(pizza: Pizza, cut: Cut) -> Coloring:
    n = pizza.n
    if n % 2 == 0:
        raise PizzaError("coloring defined only for odd pizzas")
    cut %= n
    red = frozenset((cut + 2 * i) % n for i in range((n + 1) // 2))
    green = frozenset(range(n)) - red
    return Coloring(cut=cut, red=red, green=green)


def pieces_between(pizza: Pizza, a: Cut, b: Cut) -> tuple[int, ...]:
    """Pieces strictly clockwise from cut ``a`` to cut ``b``, in order."""
    n = pizza.n
    a %= n
    b %= n
    count = (b - a) % n
    return tuple((a + i) % n for i in range(count))


def interval_between(
    pizza: Pizza, a: Cut, b: Cut
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two cyclic intervals bounded by distinct cuts ``a`` and ``b``.

    For odd pizzas exactly one of the two has an odd number of pieces;
    returns ``(odd_interval, even_interval)`` as clockwise piece tuples.
    """
    n = pizza.n
    if n % 2 == 0:
        raise PizzaError("interval parity split requires an odd pizza")
    a %= n
    b %= n
    if a == b:
        raise PizzaError("cuts must be distinct")
    first = pieces_between(pizza, a, b)
    second = pieces_between(pizza, b, a)
    if len(first) % 2 == 1:
        return first, second
    return second, first


@dataclass(frozen=True)
class Move:
    piece: int
    side: Side


@dataclass(frozen=True)
class GameState:
    """Immutable game position: the eaten arc, whose turn, running totals.

    The eaten pieces are described by the opening piece plus how far the
    arc extends counterclockwise (``left_ext``) and clockwise
    (``right_ext``) from it.
    """

    pizza: Pizza
    opening: int | None
    left_ext: int
    right_ext: int
    turn: Player
    scores: tuple[int, int]
    history: tuple[Move, ...]

    @property
    def eaten_count(self) -> int:
        if self.opening is None:
            return 0
        return self.left_ext + self.right_ext + 1

    @property
    def finished(self) -> bool:
        return self.eaten_count == self.pizza.n

    @property
    def arc_lo(self) -> int:
        """Counterclockwise-most eaten piece."""
        if self.opening is None:
            raise PizzaError("no pieces eaten yet")
        return (self.opening - self.left_ext) % self.pizza.n

    @property
    def arc_hi(self) -> int:
        """Clockwise-most eaten piece."""
        if self.opening is None:
            raise PizzaError("no pieces eaten yet")
        return (self.opening + self.right_ext) % self.pizza.n

    def eaten_pieces(self) -> tuple[int, ...]:
        if self.opening is None:
            return ()
        n = self.pizza.n
        lo = self.arc_lo
        return tuple((lo + i) % n for i in range(self.eaten_count))

    def is_eaten(self, piece: int) -> bool:
        if self.opening is None:
            return False
        n = self.pizza.n
        return (piece - self.arc_lo) % n < self.eaten_count

    def score_of(self, player: Player) -> int:
        return self.scores[0] if player is Player.ALICE else self.scores[1]


def new_game(pizza: Pizza) -> GameState:
    return GameState(
        pizza=pizza,
        opening=None,
        left_ext=0,
        right_ext=0,
        turn=Player.ALICE,
        scores=(0, 0),
        history=(),
    )


def legal_moves(state: GameState) -> tuple[Move, ...]:
    """All legal moves, ordered by piece index.

    The opening player may take any piece.  Afterwards the up-to-two
    uneaten pieces adjacent to the arc ends are available; when the ends
    meet on the last piece it is listed once.  A finished game has no
    moves (that is not an error).
    """
    if state.finished:
        return ()
    if state.opening is None:
        return tuple(Move(p, Side.OPENING) for p in range(state.pizza.n))
    n = state.pizza.n
    left = (state.arc_lo - 1) % n
    right = (state.arc_hi + 1) % n
    if left == right:
        return (Move(left, Side.LEFT),)
    moves = [Move(left, Side.LEFT), Move(right, Side.RIGHT)]
    moves.sort(key=lambda m: m.piece)
    return tuple(moves)


def apply_move(state: GameState, move: Move) -> GameState:
    """Apply a move, returning the successor state.

    Raises :class:`IllegalMoveError` with the reason (wrong phase, already
    eaten, non-adjacent) when the move is not legal.
    """
    if state.finished:
        raise IllegalMoveError("game is finished")
    pizza = state.pizza
    n = pizza.n
    if state.opening is None:
        if move.side is not Side.OPENING:
            raise IllegalMoveError("wrong phase: the first move must be an opening")
        if not 0 <= move.piece < n:
            raise IllegalMoveError(f"piece {move.piece} out of range")
        return GameState(
            pizza=pizza,
            opening=move.piece,
            left_ext=0,
            right_ext=0,
            turn=state.turn.opponent,
            scores=_bump(state.scores, state.turn, pizza.sizes[move.piece]),
            history=state.history + (move,),
        )
    if move.side is Side.OPENING:
        raise IllegalMoveError("wrong phase: opening allowed only as the first move")
    if state.is_eaten(move.piece % n):
        raise IllegalMoveError(f"piece {move.piece} already eaten")
    left_target = (state.arc_lo - 1) % n
    right_target = (state.arc_hi + 1) % n
    target = left_target if move.side is Side.LEFT else right_target
    if move.piece % n != target:
        raise IllegalMoveError(
            f"piece {move.piece} is not adjacent to the {move.side.value} end"
        )
    left_ext = state.left_ext + (1 if move.side is Side.LEFT else 0)
    right_ext = state.right_ext + (1 if move.side is Side.RIGHT else 0)
    return GameState(
        pizza=pizza,
        opening=state.opening,
        left_ext=left_ext,
        right_ext=right_ext,
        turn=state.turn.opponent,
        scores=_bump(state.scores, state.turn, pizza.sizes[target]),
        history=state.history + (Move(target, move.side),),
    )


def move_for_piece(state: GameState, piece: int) -> Move:
    """Resolve a bare piece index to the legal move eating it."""
    for move in legal_moves(state):
        if move.piece == piece % state.pizza.n:
            return move
    raise IllegalMoveError(f"piece {piece} is not available")


def _bump(scores: tuple[int, int], player: Player, amount: int) -> tuple[int, int]:
    if player is Player.ALICE:
        return (scores[0] + amount, scores[1])
    return (scores[0], scores[1] + amount)


def play_out(state: GameState, pick: Callable[[GameState], Move]) -> GameState:
    """Run a game to completion, asking ``pick(state)`` for each move."""
    while not state.finished:
        state = apply_move(state, pick(state))
    return state


def parse_pizza(text: str) -> Pizza:
    """Parse a comma-separated list of non-negative decimal integers.

    Whitespace around tokens and a trailing newline are tolerated.  The
    written order is the clockwise order starting at piece 0.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty pizza description")
    sizes = []
    for i, token in enumerate(stripped.split(",")):
        token = token.strip()
        if not token:
            raise ParseError(f"piece {i}: empty token")
        try:
            value = int(token, 10)
        except ValueError:
            raise ParseError(f"piece {i}: not an integer: {token!r}") from None
        if value < 0:
            raise ParseError(f"piece {i}: negative size {value}")
        sizes.append(value)
    return Pizza(tuple(sizes))


def serialize_pizza(pizza: Pizza) -> str:
    return ",".join(str(s) for s in pizza.sizes)


def iter_rotations(sizes: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    n = len(sizes)
    for k in range(n):
        yield tuple(sizes[(i + k) % n] for i in range(n))
