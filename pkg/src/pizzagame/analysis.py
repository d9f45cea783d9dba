"""Structural analysis of odd pizzas relative to cuts.

For a pizza with an odd number of pieces every cut induces an almost
alternating red/green coloring, and a follow-the-opponent game always ends
with Alice holding the red class of some cut whose red class contains her
opening piece.  Bob therefore counters an opening piece ``p`` with a *best
answer*: a cut minimizing the red total among colorings whose red class
contains ``p``.

A pizza is *easy* when some opening guarantees Alice at least half of the
total this way, *hard* otherwise.  Hard pizzas admit a tripartition into
three odd intervals ``B``, ``M``, ``W`` bounded by three distinguished best
answers (the worst, a middle, and the best cut for Alice).  Each part
splits alternately into *minor* pieces (both border pieces included) and
*major* pieces; on hard pizzas the minors of every part carry strictly less
size than the majors.  These parts and their six sizes drive all the
stronger strategies in :mod:`pizzagame.strategies`.

All selection rules here are deterministic: wherever several cuts or
pieces qualify, the smallest cut index / first piece in clockwise order
wins, so analyses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import (
    Coloring,
    Cut,
    Pizza,
    PizzaError,
    coloring_from_cut,
    pieces_between,
)

PART_LABELS = ("B", "M", "W")


def cut_red_size(pizza: Pizza, cut: Cut) -> int:
    """Total size of the red class of the coloring induced by ``cut``."""
    n = pizza.n
    if n % 2 == 0:
        raise PizzaError("red class defined only for odd pizzas")
    cut %= n
    s = pizza.sizes
    return sum(s[(cut + 2 * i) % n] for i in range((n + 1) // 2))


def qualifying_cuts(pizza: Pizza, piece: int) -> tuple[Cut, ...]:
    """All cuts whose red class contains ``piece``, in increasing order.

    These are the two cuts bounding the piece together with every second
    cut walking away from it.
    """
    n = pizza.n
    if n % 2 == 0:
        raise PizzaError("qualifying cuts defined only for odd pizzas")
    piece %= n
    cuts = sorted((piece - 2 * i) % n for i in range((n + 1) // 2))
    return tuple(cuts)


def best_answers(pizza: Pizza, piece: int) -> tuple[int, tuple[Cut, ...]]:
    """Bob's best answers to an opening piece.

    Enumerates all cuts whose red class contains the piece and returns the
    minimum red total together with every cut attaining it.
    """
    values = {cut: cut_red_size(pizza, cut) for cut in qualifying_cuts(pizza, piece)}
    best = min(values.values())
    return best, tuple(sorted(c for c, v in values.items() if v == best))


@dataclass(frozen=True)
class BestAnswerTable:
    """Per-cut red totals and the best-answer relation, both directions.

    ``answers[c]`` is the set of pieces to which cut ``c`` is a best
    answer; ``piece_best_cuts[p]`` is the set of best answers to piece
    ``p``; ``piece_best_value[p]`` is the guaranteed red total of those
    answers.  The two directions are mutually consistent:
    ``c in piece_best_cuts[p]``  iff  ``p in answers[c]``.
    """

    pizza: Pizza
    cut_value: tuple[int, ...]
    answers: tuple[tuple[int, ...], ...]
    piece_best_value: tuple[int, ...]
    piece_best_cuts: tuple[tuple[Cut, ...], ...]

    def answer_cuts(self) -> tuple[Cut, ...]:
        """Cuts that are a best answer to at least one piece."""
        return tuple(c for c in range(self.pizza.n) if self.answers[c])


def build_best_answer_table(pizza: Pizza) -> BestAnswerTable:
    n = pizza.n
    if n % 2 == 0:
        raise PizzaError("best-answer table defined only for odd pizzas")
    cut_value = tuple(cut_red_size(pizza, c) for c in range(n))
    piece_best_value = []
    piece_best_cuts: list[tuple[int, ...]] = []
    answers: list[list[int]] = [[] for _ in range(n)]
    for p in range(n):
        cuts = [(p - 2 * i) % n for i in range((n + 1) // 2)]
        best = min(cut_value[c] for c in cuts)
        chosen = tuple(sorted(c for c in cuts if cut_value[c] == best))
        piece_best_value.append(best)
        piece_best_cuts.append(chosen)
        for c in chosen:
            answers[c].append(p)
    return BestAnswerTable(
        pizza=pizza,
        cut_value=cut_value,
        answers=tuple(tuple(sorted(a)) for a in answers),
        piece_best_value=tuple(piece_best_value),
        piece_best_cuts=tuple(piece_best_cuts),
    )


def worst_cuts(table: BestAnswerTable) -> tuple[Cut, ...]:
    """Cuts minimizing the red total; all of them are best answers."""
    lo = min(table.cut_value)
    return tuple(c for c, v in enumerate(table.cut_value) if v == lo)


def best_cuts(table: BestAnswerTable) -> tuple[Cut, ...]:
    """Best answers maximizing the red total."""
    candidates = table.answer_cuts()
    hi = max(table.cut_value[c] for c in candidates)
    return tuple(c for c in candidates if table.cut_value[c] == hi)


@dataclass(frozen=True)
class Hardness:
    """Easy/hard classification with the best follow-strategy guarantee.

    ``witness`` is an opening piece whose follow-strategy guarantee is at
    least half the total (easy pizzas only).
    """

    easy: bool
    witness: int | None
    best_fb_value: int

    @property
    def hard(self) -> bool:
        return not self.easy


def _even_classes(pizza: Pizza) -> tuple[tuple[int, ...], tuple[int, ...], int, int]:
    evens = tuple(range(0, pizza.n, 2))
    odds = tuple(range(1, pizza.n, 2))
    return evens, odds, sum(pizza.sizes[i] for i in evens), sum(
        pizza.sizes[i] for i in odds
    )


def classify(pizza: Pizza) -> Hardness:
    """Easy iff some follow-strategy opening guarantees half the total.

    Pizzas with an even number of pieces are always easy: color pieces
    alternately and open in the heavier class.  For odd pizzas the best
    guarantee is the maximum over pieces of the best-answer value, compared
    against the total with cross-multiplied integers.
    """
    if pizza.n % 2 == 0:
        evens, odds, se, so = _even_classes(pizza)
        if se >= so:
            witness, value = evens[0], se
        else:
            witness, value = odds[0], so
        return Hardness(easy=True, witness=witness, best_fb_value=value)
    table = build_best_answer_table(pizza)
    best_value = max(table.piece_best_value)
    witness = table.piece_best_value.index(best_value)
    if 2 * best_value >= pizza.total:
        return Hardness(easy=True, witness=witness, best_fb_value=best_value)
    return Hardness(easy=False, witness=None, best_fb_value=best_value)


@dataclass(frozen=True)
class SpecialCuts:
    """The three distinguished best answers and the two marker pieces.

    ``mid_anchor`` is the second piece of the odd (best, worst)-interval
    counted from the best cut; the mid cut is its smallest-index best
    answer.  ``answer_frontier`` is the last piece answered by the best cut
    but not the worst one, walking the even (best, worst)-interval from the
    best cut toward the worst; it is kept for structural assertions only.
    """

    worst: Cut
    best: Cut
    mid: Cut
    mid_anchor: int
    answer_frontier: int


def choose_special_cuts(
    pizza: Pizza,
    table: BestAnswerTable | None = None,
    force_worst: Cut | None = None,
) -> SpecialCuts:
    """Select the worst/best/mid cuts of a hard pizza deterministically.

    ``force_worst`` pins the worst cut to a given member of the minimal
    set (needed when a glued sub-pizza must reuse its glue cut).
    """
    if table is None:
        table = build_best_answer_table(pizza)
    hardness = classify(pizza)
    if hardness.easy:
        raise PizzaError("tripartition defined for hard pizzas only")
    n = pizza.n
    wc = worst_cuts(table)
    if force_worst is None:
        worst = wc[0]
    else:
        force_worst %= n
        if force_worst not in wc:
            raise PizzaError(f"cut {force_worst} is not a minimal-red cut")
        worst = force_worst
    worst_answers = set(table.answers[worst])
    bc = best_cuts(table)
    best = max(
        bc,
        key=lambda c: (len(set(table.answers[c]) - worst_answers), -c),
    )
    odd_iv, even_iv = _intervals_with_orientation(pizza, best, worst)
    if len(odd_iv) < 3:
        raise PizzaError(
            "internal: odd interval between best and worst cut has fewer than 3 pieces"
        )
    mid_anchor = odd_iv[1]
    mid = table.piece_best_cuts[mid_anchor][0]
    if mid in (worst, best):
        raise PizzaError("internal: mid cut collided with worst/best cut")
    frontier_set = set(table.answers[best]) - worst_answers
    frontier = [p for p in even_iv if p in frontier_set]
    if not frontier:
        raise PizzaError("internal: best cut answers nothing beyond the worst cut")
    return SpecialCuts(
        worst=worst,
        best=best,
        mid=mid,
        mid_anchor=mid_anchor,
        answer_frontier=frontier[-1],
    )


def _intervals_with_orientation(
    pizza: Pizza, from_cut: Cut, to_cut: Cut
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(odd interval, even interval) bounded by the cuts, each ordered
    walking away from ``from_cut`` toward ``to_cut``."""
    cw = pieces_between(pizza, from_cut, to_cut)
    ccw = tuple(reversed(pieces_between(pizza, to_cut, from_cut)))
    if len(cw) % 2 == 1:
        return cw, ccw
    return ccw, cw


@dataclass(frozen=True)
class Part:
    """One tripartition part: a clockwise run of pieces between two cuts.

    ``minors`` are the alternating subset containing both border pieces,
    ``majors`` the complement.  Since parts have odd length, minors always
    outnumber majors by one.
    """

    label: str
    pieces: tuple[int, ...]
    start_cut: Cut
    end_cut: Cut

    @property
    def minors(self) -> tuple[int, ...]:
        return self.pieces[0::2]

    @property
    def majors(self) -> tuple[int, ...]:
        return self.pieces[1::2]

    def minor_size(self, pizza: Pizza) -> int:
        return sum(pizza.sizes[p] for p in self.minors)

    def major_size(self, pizza: Pizza) -> int:
        return sum(pizza.sizes[p] for p in self.majors)

    def size(self, pizza: Pizza) -> int:
        return sum(pizza.sizes[p] for p in self.pieces)

    @property
    def borders(self) -> tuple[int, int]:
        return self.pieces[0], self.pieces[-1]


@dataclass(frozen=True)
class Tripartition:
    """Hard-pizza split into odd parts B, M, W with major/minor sizes.

    Each part is named after the distinguished cut *opposite* to it: B is
    the odd (mid, worst)-interval, W the odd (best, mid)-interval and M the
    odd (best, worst)-interval.
    """

    pizza: Pizza
    cuts: SpecialCuts
    part_b: Part
    part_m: Part
    part_w: Part

    def part(self, label: str) -> Part:
        try:
            return {"B": self.part_b, "M": self.part_m, "W": self.part_w}[label]
        except KeyError:
            raise PizzaError(f"unknown part label {label!r}") from None

    @property
    def parts(self) -> tuple[Part, Part, Part]:
        return (self.part_b, self.part_m, self.part_w)

    def sizes(self) -> dict[str, int]:
        """The six part sizes keyed like b_major, b_minor, ..."""
        out: dict[str, int] = {}
        for part in self.parts:
            key = part.label.lower()
            out[f"{key}_major"] = part.major_size(self.pizza)
            out[f"{key}_minor"] = part.minor_size(self.pizza)
        return out

    def size_tuple(self) -> tuple[int, int, int, int, int, int]:
        """(b_major, b_minor, m_major, m_minor, w_major, w_minor)."""
        s = self.sizes()
        return (
            s["b_major"],
            s["b_minor"],
            s["m_major"],
            s["m_minor"],
            s["w_major"],
            s["w_minor"],
        )


def tripartition(
    pizza: Pizza,
    table: BestAnswerTable | None = None,
    force_worst: Cut | None = None,
) -> Tripartition:
    """Compute the tripartition of a hard pizza.

    Raises for easy pizzas.  The three distinguished cuts always bound
    three odd intervals; each part is emitted as a clockwise piece run.
    """
    if table is None:
        table = build_best_answer_table(pizza)
    cuts = choose_special_cuts(pizza, table, force_worst=force_worst)
    arcs = _consecutive_arcs(pizza, (cuts.worst, cuts.mid, cuts.best))
    by_pair = {frozenset((a, b)): (a, b, pieces) for a, b, pieces in arcs}
    parts = {}
    for label, pair in (
        ("B", (cuts.mid, cuts.worst)),
        ("M", (cuts.best, cuts.worst)),
        ("W", (cuts.best, cuts.mid)),
    ):
        a, b, pieces = by_pair[frozenset(pair)]
        if len(pieces) % 2 == 0:
            raise PizzaError("internal: tripartition produced an even part")
        parts[label] = Part(label=label, pieces=pieces, start_cut=a, end_cut=b)
    return Tripartition(
        pizza=pizza,
        cuts=cuts,
        part_b=parts["B"],
        part_m=parts["M"],
        part_w=parts["W"],
    )


def _consecutive_arcs(
    pizza: Pizza, cut_set: Iterable[Cut]
) -> list[tuple[Cut, Cut, tuple[int, ...]]]:
    """Split the circle at the given cuts; returns (from, to, pieces) arcs."""
    ordered = sorted({c % pizza.n for c in cut_set})
    arcs = []
    for i, a in enumerate(ordered):
        b = ordered[(i + 1) % len(ordered)]
        arcs.append((a, b, pieces_between(pizza, a, b)))
    return arcs


def middle_piece(pizza: Pizza, part: Part) -> int:
    """First major piece splitting the part's major size into halves.

    Returns the first piece ``p`` of the majors, in clockwise order, such
    that the majors from ``p`` inclusive to either border of the part carry
    at least half of the major size (checked as ``2*sum >= major_size``).
    """
    majors = part.majors
    if not majors:
        raise PizzaError(f"part {part.label} has no major pieces")
    total = sum(pizza.sizes[p] for p in majors)
    prefix = 0
    for p in majors:
        prefix += pizza.sizes[p]
        if 2 * prefix >= total:
            return p
    raise AssertionError("unreachable: prefix sums reach the full major size")


@dataclass(frozen=True)
class XPizza:
    """One tripartition part re-rolled into a standalone pizza.

    The part's pieces keep their cyclic order; the two border cuts are
    identified into a single glue cut, which is always cut 0 of the
    sub-pizza (between the last and the first piece).
    """

    label: str
    pizza: Pizza
    glue_cut: Cut
    index_map: tuple[int, ...]

    def to_whole(self, sub_index: int) -> int:
        return self.index_map[sub_index % self.pizza.n]

    def to_sub(self, whole_index: int) -> int:
        try:
            return self.index_map.index(whole_index)
        except ValueError:
            raise PizzaError(
                f"piece {whole_index} is not part of the {self.label}-pizza"
            ) from None


def glue_x_pizza(pizza: Pizza, tri: Tripartition, label: str) -> XPizza:
    part = tri.part(label)
    sub = Pizza(tuple(pizza.sizes[p] for p in part.pieces))
    return XPizza(label=label, pizza=sub, glue_cut=0, index_map=part.pieces)


def tripartition_report(tri: Tripartition) -> dict:
    """JSON-ready view of a tripartition (cuts, parts, six sizes)."""
    pizza = tri.pizza
    parts = {}
    for part in tri.parts:
        parts[part.label] = {
            "pieces": list(part.pieces),
            "minors": list(part.minors),
            "majors": list(part.majors),
            "minor_size": part.minor_size(pizza),
            "major_size": part.major_size(pizza),
            "start_cut": part.start_cut,
            "end_cut": part.end_cut,
        }
    return {
        "cuts": {
            "worst": tri.cuts.worst,
            "mid": tri.cuts.mid,
            "best": tri.cuts.best,
        },
        "special_pieces": {
            "mid_anchor": tri.cuts.mid_anchor,
            "answer_frontier": tri.cuts.answer_frontier,
        },
        "parts": parts,
        "sizes": tri.sizes(),
    }


def analysis_report(pizza: Pizza) -> dict:
    """Hardness, best-answer summary and tripartition for one pizza."""
    report: dict = {
        "sizes": list(pizza.sizes),
        "n": pizza.n,
        "total": pizza.total,
    }
    hardness = classify(pizza)
    report["hardness"] = "easy" if hardness.easy else "hard"
    report["best_fb_value"] = hardness.best_fb_value
    report["fb_witness"] = hardness.witness
    if pizza.n % 2 == 1:
        table = build_best_answer_table(pizza)
        report["cut_values"] = list(table.cut_value)
        report["worst_cuts"] = list(worst_cuts(table))
        report["best_cuts"] = list(best_cuts(table))
        if hardness.hard:
            report["tripartition"] = tripartition_report(tripartition(pizza, table))
    return report


def coloring(pizza: Pizza, cut: Cut) -> Coloring:
    """Convenience re-export of the almost alternating coloring."""
    return coloring_from_cut(pizza, cut)
