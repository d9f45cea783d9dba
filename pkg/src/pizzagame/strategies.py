"""Strategy automata for both players, plus the portfolio selectors.

Every strategy is a deterministic automaton: an opening (for Alice), a
finite internal state, and a response function mapping (arc, opponent's
last move, state) to (move, next state).  Responses are always expressed
as an arc side, which is legal whenever the game is unfinished, so the
automata are total by construction.

The Alice strategies all belong to the follow family: after the opening
they either eat the piece the opponent just revealed (follow) or, in two
precisely pinned exception situations, the piece at the other arc end.
That makes their state spaces tiny and lets the adversarial evaluator in
:mod:`pizzagame.solver` memoize positions exactly.

Stable strategy ids (used by the CLI and the HTTP service):
``even``, ``fb:<cut>``, ``one-third``, ``mfb:<B|M|W>``,
``on-part:<X>:<inner>``, ``best-of-three``, ``best-of-four``, ``optimal``,
``bob:interval-guard:<c1,c2,c3>``, ``bob:optimal``.
"""

from __future__ import annotations

from fractions import Fraction

from . import analysis
from .analysis import (
    BestAnswerTable,
    Tripartition,
    XPizza,
    build_best_answer_table,
    classify,
    cut_red_size,
    glue_x_pizza,
    middle_piece,
    tripartition,
    worst_cuts,
)
from .core import Pizza, PizzaError, Player, Side, other_side
from .solver import StrategyError, arc_solver, evaluate_vs_adversary

_INSIDE = 0
_FOLLOW = 1


def _end_piece(n: int, lo: int, count: int, side: Side) -> int:
    """The arc-end piece on the given side (the opponent's last pick)."""
    if side is Side.LEFT:
        return lo
    return (lo + count - 1) % n


def _target(n: int, lo: int, count: int, side: Side) -> int:
    """The uneaten piece a move at the given side would eat."""
    if side is Side.LEFT:
        return (lo - 1) % n
    return (lo + count) % n


def _is_eaten(n: int, lo: int, count: int, piece: int) -> bool:
    return (piece - lo) % n < count


class AliceStrategy:
    """Base class for Alice automata."""

    seat = Player.ALICE
    state_space_bound = 1

    def __init__(self, pizza: Pizza, strategy_id: str):
        self.pizza = pizza
        self.strategy_id = strategy_id

    def opening(self) -> int:
        raise NotImplementedError

    def initial(self):
        return 0

    def respond(self, lo: int, count: int, opp_side: Side, sigma):
        """Default: eat whatever the opponent just revealed."""
        return opp_side, sigma

    def inner_choice(self, piece: int, sigma):
        """Follow/deviate decision given only the opponent's last piece.

        Used when this automaton is nested inside a part-local strategy and
        sees the game through the sub-pizza's piece indices.  ``True``
        means follow.
        """
        return True, sigma

    def respond_state(self, state, sigma):
        """Adapter from a full :class:`GameState` to a concrete move."""
        from .core import Move, legal_moves

        if not state.history:
            raise StrategyError("respond_state needs at least one move played")
        last = state.history[-1]
        side, sigma2 = self.respond(
            state.arc_lo, state.eaten_count, last.side, sigma
        )
        piece = _target(state.pizza.n, state.arc_lo, state.eaten_count, side)
        # Collapse to the single remaining legal move when ends meet.
        for move in legal_moves(state):
            if move.piece == piece:
                return move, sigma2
        return Move(piece, side), sigma2


class BobStrategy:
    """Base class for Bob automata (respond-only; Bob never opens)."""

    seat = Player.BOB
    state_space_bound = 1

    def __init__(self, pizza: Pizza, strategy_id: str):
        self.pizza = pizza
        self.strategy_id = strategy_id

    def initial(self):
        return 0

    def respond(self, lo: int, count: int, opp_side: Side, sigma):
        raise NotImplementedError

    def respond_state(self, state, sigma):
        from .core import Move, legal_moves

        if not state.history:
            raise StrategyError("respond_state needs at least one move played")
        last = state.history[-1]
        side, sigma2 = self.respond(
            state.arc_lo, state.eaten_count, last.side, sigma
        )
        piece = _target(state.pizza.n, state.arc_lo, state.eaten_count, side)
        for move in legal_moves(state):
            if move.piece == piece:
                return move, sigma2
        return Move(piece, side), sigma2


class EvenStrategy(AliceStrategy):
    """Half guarantee on even pizzas: open in the heavier alternation class,
    then always follow."""

    def __init__(self, pizza: Pizza):
        if pizza.n % 2 != 0:
            raise PizzaError("even strategy requires an even number of pieces")
        super().__init__(pizza, "even")
        evens = range(0, pizza.n, 2)
        odds = range(1, pizza.n, 2)
        size_even = sum(pizza.sizes[i] for i in evens)
        size_odd = sum(pizza.sizes[i] for i in odds)
        # Tie: the class containing piece 0.
        self._opening = 0 if size_even >= size_odd else 1
        self.guarantee = max(size_even, size_odd)

    def opening(self) -> int:
        return self._opening


class FbStrategy(AliceStrategy):
    """Follow strategy associated with a best-answer cut.

    Opens with the smallest-index piece the cut is a best answer to, then
    always follows; guaranteed at least the cut's red total.
    """

    def __init__(self, pizza: Pizza, cut: int, table: BestAnswerTable | None = None):
        if pizza.n % 2 == 0:
            raise PizzaError("follow strategy via cuts requires an odd pizza")
        cut %= pizza.n
        if table is None:
            table = build_best_answer_table(pizza)
        answered = table.answers[cut]
        if not answered:
            raise StrategyError(f"cut {cut} is not a best answer to any piece")
        super().__init__(pizza, f"fb:{cut}")
        self.cut = cut
        self.guarantee = table.cut_value[cut]
        self._opening = answered[0]

    def opening(self) -> int:
        return self._opening


class GreenMiddleStrategy(AliceStrategy):
    """Third guarantee fallback: open at the green middle piece of the
    minimal-red coloring, then follow.

    The opening is the first green piece, clockwise from the cut, whose
    green prefix reaches half of the green total; the suffix condition then
    holds automatically.
    """

    def __init__(self, pizza: Pizza, cut: int):
        if pizza.n % 2 == 0:
            raise PizzaError("green-middle opening requires an odd pizza")
        super().__init__(pizza, "one-third")
        n = pizza.n
        cut %= n
        greens = [(cut + j) % n for j in range(1, n, 2)]
        green_total = sum(pizza.sizes[g] for g in greens)
        prefix = 0
        opening = greens[0]
        for g in greens:
            prefix += pizza.sizes[g]
            if 2 * prefix >= green_total:
                opening = g
                break
        self.cut = cut
        self._opening = opening

    def opening(self) -> int:
        return self._opening


def even_strategy(pizza: Pizza) -> EvenStrategy:
    return EvenStrategy(pizza)


def fb_strategy(
    pizza: Pizza, cut: int, table: BestAnswerTable | None = None
) -> FbStrategy:
    return FbStrategy(pizza, cut, table)


def one_third_strategy(pizza: Pizza) -> AliceStrategy:
    """Guarantee a third of any odd pizza.

    If the minimal-red cut already carries a third of the total, play the
    follow strategy associated with it; otherwise open at the green middle
    piece of that cut's coloring and follow.
    """
    if pizza.n % 2 == 0:
        raise PizzaError("one-third strategy requires an odd pizza")
    table = build_best_answer_table(pizza)
    worst = worst_cuts(table)[0]
    if 3 * table.cut_value[worst] >= pizza.total:
        strategy = FbStrategy(pizza, worst, table)
        strategy.strategy_id = "one-third"
        return strategy
    return GreenMiddleStrategy(pizza, worst)


class MfbStrategy(AliceStrategy):
    """Modified follow strategy for one tripartition part.

    Opens at the middle piece of the part's majors; follows while the
    opponent stays on non-border pieces of the part; on the opponent's
    first border pick (which reveals a piece outside the part) eats the
    piece at the other arc end instead, then follows to the end.
    """

    state_space_bound = 2

    def __init__(self, pizza: Pizza, tri: Tripartition, label: str):
        if tuple(tri.pizza.sizes) != tuple(pizza.sizes):
            raise StrategyError("tripartition belongs to a different pizza")
        part = tri.part(label)
        super().__init__(pizza, f"mfb:{label}")
        self.tri = tri
        self.part = part
        self._members = frozenset(part.pieces)
        self._borders = frozenset(part.borders)
        self._opening = middle_piece(pizza, part)

    def opening(self) -> int:
        return self._opening

    def initial(self):
        return _INSIDE

    def inner_choice(self, piece: int, sigma):
        if sigma == _FOLLOW:
            return True, _FOLLOW
        if piece in self._members:
            if piece in self._borders:
                return False, _FOLLOW
            return True, _INSIDE
        return True, _FOLLOW

    def respond(self, lo: int, count: int, opp_side: Side, sigma):
        q = _end_piece(self.pizza.n, lo, count, opp_side)
        follow, sigma2 = self.inner_choice(q, sigma)
        return (opp_side if follow else other_side(opp_side)), sigma2


def mfb_strategy(pizza: Pizza, tri: Tripartition, label: str) -> MfbStrategy:
    return MfbStrategy(pizza, tri, label)


class OnPartStrategy(AliceStrategy):
    """Play a sub-pizza strategy on one part, guard the glue cut, follow
    everywhere else.

    While the opponent stays inside the part, moves are delegated to the
    inner automaton through the part's piece mapping.  When the opponent
    eats a border piece of the part while the other border is still
    uneaten (in sub-pizza terms: reveals the glue cut), the response is the
    piece at the other arc end instead of following; from then on, and
    whenever the opponent picks outside the part, the strategy follows.
    """

    def __init__(self, pizza: Pizza, tri: Tripartition, label: str, inner: AliceStrategy):
        if not isinstance(inner, (FbStrategy, MfbStrategy)):
            raise StrategyError(
                "part-local play accepts only follow or modified-follow automata"
            )
        xp = glue_x_pizza(pizza, tri, label)
        if tuple(inner.pizza.sizes) != tuple(xp.pizza.sizes):
            raise StrategyError(
                f"inner automaton was not built for the {label}-pizza"
            )
        if isinstance(inner, MfbStrategy) and inner.tri.cuts.worst != xp.glue_cut:
            raise StrategyError(
                "inner modified-follow tripartition must anchor its worst cut "
                "at the glue cut"
            )
        super().__init__(pizza, f"on-part:{label}:{inner.strategy_id}")
        self.tri = tri
        self.xpizza = xp
        self.inner = inner
        self._members = frozenset(xp.index_map)
        first, last = xp.index_map[0], xp.index_map[-1]
        self._other_border = {first: last, last: first}
        self._sub_index = {whole: i for i, whole in enumerate(xp.index_map)}
        self.state_space_bound = 2 * inner.state_space_bound

    def opening(self) -> int:
        return self.xpizza.to_whole(self.inner.opening())

    def initial(self):
        return (_INSIDE, self.inner.initial())

    def respond(self, lo: int, count: int, opp_side: Side, sigma):
        mode, inner_sigma = sigma
        if mode == _FOLLOW:
            return opp_side, sigma
        n = self.pizza.n
        q = _end_piece(n, lo, count, opp_side)
        if q not in self._members:
            # Opponent moved outside the part: follow, keep playing inside.
            return opp_side, sigma
        other = self._other_border.get(q)
        if other is not None and not _is_eaten(n, lo, count, other):
            # Glue cut revealed: do not follow across the border.
            return other_side(opp_side), (_FOLLOW, inner_sigma)
        follow, inner_sigma2 = self.inner.inner_choice(self._sub_index[q], inner_sigma)
        side = opp_side if follow else other_side(opp_side)
        return side, (_INSIDE, inner_sigma2)


def on_part(
    pizza: Pizza, tri: Tripartition, label: str, inner: AliceStrategy
) -> OnPartStrategy:
    return OnPartStrategy(pizza, tri, label, inner)


class GlueExceptionStrategy(AliceStrategy):
    """A strategy with the glue-cut exception applied on its own board.

    Plays the inner automaton but refuses to follow across the given cut:
    when the opponent's pick would be followed across the cut (the piece on
    the far side still uneaten), it eats the piece at the other arc end and
    follows from then on.  Used to check that the exception never costs
    anything relative to plain following.
    """

    def __init__(self, pizza: Pizza, inner: AliceStrategy, cut: int):
        if tuple(inner.pizza.sizes) != tuple(pizza.sizes):
            raise StrategyError("inner automaton was built for a different pizza")
        super().__init__(pizza, f"glue-exception:{cut % pizza.n}:{inner.strategy_id}")
        self.inner = inner
        self.cut = cut % pizza.n
        self._cw_piece = self.cut % pizza.n
        self._ccw_piece = (self.cut - 1) % pizza.n
        self.state_space_bound = 2 * inner.state_space_bound

    def opening(self) -> int:
        return self.inner.opening()

    def initial(self):
        return (_INSIDE, self.inner.initial())

    def respond(self, lo: int, count: int, opp_side: Side, sigma):
        mode, inner_sigma = sigma
        if mode == _FOLLOW:
            return opp_side, sigma
        n = self.pizza.n
        q = _end_piece(n, lo, count, opp_side)
        t = _target(n, lo, count, opp_side)
        crossing = (q == self._cw_piece and t == self._ccw_piece) or (
            q == self._ccw_piece and t == self._cw_piece
        )
        if crossing:
            return other_side(opp_side), (_FOLLOW, inner_sigma)
        follow, inner_sigma2 = self.inner.inner_choice(q, inner_sigma)
        side = opp_side if follow else other_side(opp_side)
        return side, (_INSIDE, inner_sigma2)


def with_glue_exception(pizza: Pizza, inner: AliceStrategy, cut: int) -> GlueExceptionStrategy:
    return GlueExceptionStrategy(pizza, inner, cut)


class OptimalStrategy(AliceStrategy):
    """Play exact optimal moves from the interval table, for either seat."""

    def __init__(self, pizza: Pizza, seat: Player = Player.ALICE):
        super().__init__(pizza, "optimal" if seat is Player.ALICE else "bob:optimal")
        self.seat = seat
        self._solver = arc_solver(pizza)

    def opening(self) -> int:
        piece, _ = self._solver.best_opening()
        return piece

    def respond(self, lo: int, count: int, opp_side: Side, sigma):
        n = self.pizza.n
        rs = (lo + count) % n
        rl = n - count
        take_start, take_end = self._solver.take_values(rs, rl)
        start_piece = rs
        end_piece = (rs + rl - 1) % n
        # The remaining arc's start piece sits clockwise of the eaten arc.
        if take_start > take_end or (take_start == take_end and start_piece <= end_piece):
            return Side.RIGHT, sigma
        return Side.LEFT, sigma


def optimal_alice(pizza: Pizza) -> OptimalStrategy:
    return OptimalStrategy(pizza, Player.ALICE)


def optimal_bob(pizza: Pizza) -> OptimalStrategy:
    strategy = OptimalStrategy(pizza, Player.BOB)
    return strategy


_ZERO_INIT = 0
_ZERO_FOLLOW = 1
_GUARD = 2


class IntervalGuardBob(BobStrategy):
    """Bob's counter strategy guarding three marked intervals.

    Three thick cuts split the pizza into three intervals.  If Alice opens
    a zero piece, the rest of the pizza is two-colored along its path and
    Bob eats the heavier class by following Alice.  Otherwise Bob's first
    pick prefers an available piece adjacent to a thick cut; afterwards he
    follows Alice unless that would break into an untouched interval, and
    when both available pieces lie in untouched intervals he eats from the
    smaller one (ties: smaller interval start cut, then smaller piece).
    """

    state_space_bound = 3

    def __init__(self, pizza: Pizza, thick_cuts):
        n = pizza.n
        cuts = sorted({c % n for c in thick_cuts})
        if len(cuts) != 3:
            raise StrategyError(
                f"malformed cut set {tuple(thick_cuts)}: need three distinct cuts"
            )
        super().__init__(pizza, "bob:interval-guard:" + ",".join(map(str, cuts)))
        self.thick_cuts = tuple(cuts)
        intervals = []
        interval_of = [0] * n
        for idx in range(3):
            a = cuts[idx]
            b = cuts[(idx + 1) % 3]
            pieces = []
            j = a
            while j != b:
                pieces.append(j)
                interval_of[j] = idx
                j = (j + 1) % n
            intervals.append(
                {
                    "start_cut": a,
                    "pieces": tuple(pieces),
                    "size": sum(pizza.sizes[p] for p in pieces),
                }
            )
        self.intervals = intervals
        self._interval_of = interval_of

    def initial(self):
        return _ZERO_INIT

    def _touched(self, lo: int, count: int, idx: int) -> bool:
        n = self.pizza.n
        return any(
            _is_eaten(n, lo, count, p) for p in self.intervals[idx]["pieces"]
        )

    def _guard_pick(self, lo: int, count: int, follow_side: Side | None):
        n = self.pizza.n
        left_t = _target(n, lo, count, Side.LEFT)
        right_t = _target(n, lo, count, Side.RIGHT)
        if left_t == right_t:
            return follow_side or Side.LEFT
        candidates = [(Side.LEFT, left_t), (Side.RIGHT, right_t)]
        if follow_side is not None:
            follow_t = left_t if follow_side is Side.LEFT else right_t
            if self._touched(lo, count, self._interval_of[follow_t]):
                return follow_side
            other = other_side(follow_side)
            other_t = left_t if other is Side.LEFT else right_t
            if self._touched(lo, count, self._interval_of[other_t]):
                return other
        else:
            touched = [
                (side, t)
                for side, t in candidates
                if self._touched(lo, count, self._interval_of[t])
            ]
            if len(touched) == 1:
                return touched[0][0]
            if len(touched) == 2:
                return min(touched, key=lambda st: st[1])[0]
        # Both candidates break into untouched intervals.
        def key(st):
            side, t = st
            iv = self.intervals[self._interval_of[t]]
            return (iv["size"], iv["start_cut"], t)

        return min(candidates, key=key)[0]

    def respond(self, lo: int, count: int, opp_side: Side, sigma):
        n = self.pizza.n
        sizes = self.pizza.sizes
        if sigma == _ZERO_INIT:
            opening = lo
            if sizes[opening] == 0 and n >= 2:
                # Two-color the remaining path; eat the heavier class by
                # following Alice, starting at the matching path end.
                class_sizes = [0, 0]
                for j in range(n - 1):
                    class_sizes[j % 2] += sizes[(opening + 1 + j) % n]
                heavier = 0 if class_sizes[0] >= class_sizes[1] else 1
                ccw_parity = (n - 2) % 2
                if heavier == 0:
                    side = Side.RIGHT
                elif ccw_parity == 1:
                    side = Side.LEFT
                else:
                    side = Side.RIGHT
                return side, _ZERO_FOLLOW
            # First pick: prefer an available piece adjacent to a thick cut.
            best = None
            for side in (Side.LEFT, Side.RIGHT):
                t = _target(n, lo, count, side)
                adjacent = [c for c in self.thick_cuts if c == t or c == (t + 1) % n]
                if adjacent:
                    entry = (min(adjacent), t, side)
                    if best is None or entry < best:
                        best = entry
            if best is not None:
                return best[2], _GUARD
            return self._guard_pick(lo, count, None), _GUARD
        if sigma == _ZERO_FOLLOW:
            return opp_side, _ZERO_FOLLOW
        return self._guard_pick(lo, count, opp_side), _GUARD


def interval_guard_bob(pizza: Pizza, thick_cuts) -> IntervalGuardBob:
    return IntervalGuardBob(pizza, thick_cuts)


class StrategyValueBound:
    """Symbolic guarantee of a strategy over the six tripartition sizes.

    ``coefficients`` maps size names (b_major, b_minor, m_major, m_minor,
    w_major, w_minor) to rational weights; ``evaluated`` is the bound in
    size units for the given tripartition.  The exact adversarial value of
    the named strategy is never below the evaluated bound.
    """

    __slots__ = ("strategy_id", "coefficients", "evaluated")

    def __init__(self, strategy_id: str, coefficients: dict[str, Fraction], tri: Tripartition):
        self.strategy_id = strategy_id
        self.coefficients = coefficients
        sizes = tri.sizes()
        self.evaluated = sum(
            (coeff * sizes[name] for name, coeff in coefficients.items()),
            Fraction(0),
        )

    def __repr__(self) -> str:
        return f"StrategyValueBound({self.strategy_id!r}, {self.evaluated})"


_HALF = Fraction(1, 2)
_ONE = Fraction(1)


def value_bounds(pizza: Pizza, tri: Tripartition) -> list[StrategyValueBound]:
    """The symbolic guarantees of the six core strategies on a hard pizza."""
    cuts = tri.cuts
    rows = [
        (f"fb:{cuts.best}", {"b_major": _ONE, "m_minor": _ONE, "w_minor": _ONE}),
        (f"fb:{cuts.mid}", {"b_minor": _ONE, "m_major": _ONE, "w_minor": _ONE}),
        (f"fb:{cuts.worst}", {"b_minor": _ONE, "m_minor": _ONE, "w_major": _ONE}),
        ("mfb:B", {"b_major": _HALF, "m_minor": _ONE, "w_major": _ONE}),
        ("mfb:M", {"b_minor": _ONE, "m_major": _HALF, "w_major": _ONE}),
        ("mfb:W", {"b_minor": _ONE, "m_major": _ONE, "w_major": _HALF}),
    ]
    return [StrategyValueBound(sid, coeffs, tri) for sid, coeffs in rows]


def shave_bound(pizza: Pizza) -> Fraction:
    """Lower bound from shaving the minimum size off every piece.

    With minimum piece size m, n pieces and total S, Alice's optimal total
    is at least (4/9)(S - n*m) + (n*m)/2: play a 4/9-guarantee strategy on
    the shaved pizza and collect m on each of her ceil(n/2) pieces.  For
    m > 0 and S > 0 this strictly exceeds 4S/9.
    """
    m = min(pizza.sizes)
    n = pizza.n
    total = pizza.total
    return Fraction(4, 9) * (total - n * m) + Fraction(n * m, 2)


def _best_fb(pizza: Pizza, table: BestAnswerTable | None = None) -> FbStrategy:
    """The follow strategy with the best guarantee on an odd pizza."""
    if table is None:
        table = build_best_answer_table(pizza)
    best_value = max(table.piece_best_value)
    piece = table.piece_best_value.index(best_value)
    return FbStrategy(pizza, table.piece_best_cuts[piece][0], table)


def _easy_strategy(pizza: Pizza) -> AliceStrategy:
    if pizza.n % 2 == 0:
        return EvenStrategy(pizza)
    return _best_fb(pizza)


def _pick_best(pizza: Pizza, candidates) -> tuple[AliceStrategy, int]:
    best_strategy = None
    best_value = -1
    for strategy in candidates:
        value = evaluate_vs_adversary(pizza, strategy).value
        if value > best_value:
            best_strategy, best_value = strategy, value
    assert best_strategy is not None
    return best_strategy, best_value


def best_of_three(pizza: Pizza) -> tuple[AliceStrategy, int]:
    """Best of the basic portfolio; guarantees 7*value >= 3*total.

    Easy pizzas use the best follow strategy (or the even strategy).  Hard
    pizzas evaluate the follow strategy at the best cut and the modified
    follow strategies for parts M and W, and return the exact maximum.
    """
    hardness = classify(pizza)
    if hardness.easy:
        return _pick_best(pizza, [_easy_strategy(pizza)])
    table = build_best_answer_table(pizza)
    tri = tripartition(pizza, table)
    candidates = [
        FbStrategy(pizza, tri.cuts.best, table),
        MfbStrategy(pizza, tri, "M"),
        MfbStrategy(pizza, tri, "W"),
    ]
    return _pick_best(pizza, candidates)


def best_of_four(pizza: Pizza) -> tuple[AliceStrategy, int]:
    """Best of the refined portfolio; guarantees 9*value >= 4*total.

    Hard pizzas add part-local play on W: if the W-pizza is easy, its best
    follow strategy is mounted on W; if the W-pizza is hard, it is
    tripartitioned with its worst cut pinned to the glue cut, and both the
    follow strategy at its best cut and the modified follow strategy for
    its W-part are mounted on W.
    """
    hardness = classify(pizza)
    if hardness.easy:
        return _pick_best(pizza, [_easy_strategy(pizza)])
    table = build_best_answer_table(pizza)
    tri = tripartition(pizza, table)
    xp = glue_x_pizza(pizza, tri, "W")
    candidates = [
        FbStrategy(pizza, tri.cuts.best, table),
        MfbStrategy(pizza, tri, "B"),
    ]
    sub_hardness = classify(xp.pizza)
    if sub_hardness.easy:
        candidates.append(OnPartStrategy(pizza, tri, "W", _best_fb(xp.pizza)))
    else:
        sub_table = build_best_answer_table(xp.pizza)
        sub_tri = tripartition(xp.pizza, sub_table, force_worst=xp.glue_cut)
        candidates.append(
            OnPartStrategy(
                pizza, tri, "W", FbStrategy(xp.pizza, sub_tri.cuts.best, sub_table)
            )
        )
        candidates.append(
            OnPartStrategy(pizza, tri, "W", MfbStrategy(xp.pizza, sub_tri, "W"))
        )
    return _pick_best(pizza, candidates)


def strategy_from_id(pizza: Pizza, strategy_id: str, seat: Player | None = None):
    """Build the automaton named by a stable strategy id.

    ``seat`` disambiguates the bare ``optimal`` id and validates that the
    chosen strategy plays the expected seat.
    """
    sid = strategy_id.strip()
    strategy = None
    if sid == "even":
        strategy = even_strategy(pizza)
    elif sid == "one-third":
        strategy = one_third_strategy(pizza)
    elif sid.startswith("fb:"):
        strategy = fb_strategy(pizza, _parse_int(sid[3:], sid))
    elif sid.startswith("mfb:"):
        label = _parse_label(sid[4:], sid)
        strategy = mfb_strategy(pizza, tripartition(pizza), label)
    elif sid.startswith("on-part:"):
        rest = sid[len("on-part:") :]
        label, _, inner_id = rest.partition(":")
        label = _parse_label(label, sid)
        tri = tripartition(pizza)
        xp = glue_x_pizza(pizza, tri, label)
        if inner_id.startswith("fb:"):
            inner = fb_strategy(xp.pizza, _parse_int(inner_id[3:], sid))
        elif inner_id.startswith("mfb:"):
            sub_label = _parse_label(inner_id[4:], sid)
            sub_tri = tripartition(xp.pizza, force_worst=xp.glue_cut)
            inner = mfb_strategy(xp.pizza, sub_tri, sub_label)
        else:
            raise StrategyError(f"unknown inner strategy in id: {strategy_id!r}")
        strategy = OnPartStrategy(pizza, tri, label, inner)
    elif sid == "best-of-three":
        strategy, _ = best_of_three(pizza)
    elif sid == "best-of-four":
        strategy, _ = best_of_four(pizza)
    elif sid == "optimal":
        strategy = OptimalStrategy(pizza, seat or Player.ALICE)
    elif sid == "bob:optimal":
        strategy = optimal_bob(pizza)
    elif sid.startswith("bob:interval-guard:"):
        spec = sid[len("bob:interval-guard:") :]
        try:
            cuts = [int(tok) for tok in spec.split(",")]
        except ValueError:
            raise StrategyError(f"malformed cut list in id: {strategy_id!r}") from None
        strategy = interval_guard_bob(pizza, cuts)
    else:
        raise StrategyError(f"unknown strategy id: {strategy_id!r}")
    if seat is not None and strategy.seat is not seat:
        raise StrategyError(
            f"strategy {strategy_id!r} plays {strategy.seat.value}, not {seat.value}"
        )
    return strategy


def _parse_int(token: str, sid: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise StrategyError(f"malformed strategy id: {sid!r}") from None


def _parse_label(token: str, sid: str) -> str:
    if token not in analysis.PART_LABELS:
        raise StrategyError(f"malformed part label in strategy id: {sid!r}")
    return token
