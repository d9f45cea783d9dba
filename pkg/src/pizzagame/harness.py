"""Family enumeration, guarantee verification and extremal-example search.

The verification style here is exhaustive instance checking: each claim is
a predicate over a single pizza, and a claim run folds it over a pizza
family (exhaustive with canonicalization, seeded random, or an explicit
list), reporting violations (expected: none) and equality witnesses.

Canonicalization uses the standard bracelet reduction: a pizza is
canonical when its size tuple is the lexicographic minimum over all
rotations of itself and of its reversal.  Game values and all structural
analyses are invariant under those transforms, so checking one
representative per class is enough and cuts the work by roughly 2n.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from pathlib import Path
from random import Random
from typing import Callable, Iterable, Iterator

from .core import Pizza, PizzaError
from . import analysis
from .analysis import (
    build_best_answer_table,
    classify,
    coloring_from_cut,
    glue_x_pizza,
    tripartition,
    worst_cuts,
)
from .solver import (
    evaluate_bob,
    evaluate_vs_adversary,
    naive_tree_value,
    optimal_value,
)
from . import strategies as strat

INFEASIBLE_LIMIT = 2 ** 24


def canonical_form(sizes: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographic minimum over all rotations and reflected rotations."""
    n = len(sizes)
    best = None
    for base in (tuple(sizes), tuple(reversed(sizes))):
        doubled = base + base
        for k in range(n):
            rot = doubled[k : k + n]
            if best is None or rot < best:
                best = rot
    assert best is not None
    return best


def is_canonical(sizes: tuple[int, ...]) -> bool:
    return tuple(sizes) == canonical_form(tuple(sizes))


def _sequences(
    n: int, alphabet: tuple[int, ...], total: int | None = None
) -> Iterator[tuple[int, ...]]:
    """All length-n sequences over the alphabet, optionally sum-constrained,
    with simple remaining-sum pruning."""
    values = tuple(sorted(set(int(a) for a in alphabet)))
    lo, hi = values[0], values[-1]

    def rec(prefix: tuple[int, ...], slots: int, remaining: int | None):
        if slots == 0:
            if remaining in (None, 0):
                yield prefix
            return
        for v in values:
            if remaining is not None:
                left = remaining - v
                if left < lo * (slots - 1) or left > hi * (slots - 1):
                    continue
                yield from rec(prefix + (v,), slots - 1, left)
            else:
                yield from rec(prefix + (v,), slots - 1, None)

    yield from rec((), n, total)


def enumerate_pizzas(
    n: int,
    alphabet: Iterable[int],
    canonical: bool = True,
    total: int | None = None,
) -> Iterator[Pizza]:
    """Stream pizzas of n pieces over a size alphabet.

    With ``canonical`` set (the default), exactly one representative per
    rotation+reflection class is emitted, namely the lexicographically
    smallest one.
    """
    if n < 1:
        raise PizzaError("n must be at least 1")
    alphabet_t = tuple(sorted(set(int(a) for a in alphabet)))
    if not alphabet_t:
        raise PizzaError("alphabet must be nonempty")
    if any(a < 0 for a in alphabet_t):
        raise PizzaError("alphabet sizes must be non-negative")
    for seq in _sequences(n, alphabet_t, total):
        if canonical and not is_canonical(seq):
            continue
        yield Pizza(seq)


def random_pizza(n: int, max_size: int, seed: int, min_size: int = 0) -> Pizza:
    """Uniform independent sizes in min_size..max_size, reproducible by seed."""
    if n < 1:
        raise PizzaError("n must be at least 1")
    if min_size < 0 or max_size < min_size:
        raise PizzaError("bad size range")
    rng = Random(seed)
    return Pizza(tuple(rng.randint(min_size, max_size) for _ in range(n)))


@dataclass(frozen=True)
class PizzaFamily:
    """A reproducible pizza family: exhaustive, seeded random, or explicit.

    Exhaustive families with canonicalization emit exactly one
    representative per rotation+reflection class.
    """

    kind: str
    ns: tuple[int, ...] = ()
    alphabet: tuple[int, ...] = ()
    canonical: bool = True
    count: int = 0
    max_size: int = 0
    min_size: int = 0
    seed: int = 0
    members: tuple[Pizza, ...] = ()

    @classmethod
    def exhaustive(
        cls, ns: Iterable[int], alphabet: Iterable[int], canonical: bool = True
    ) -> "PizzaFamily":
        return cls(
            kind="exhaustive",
            ns=tuple(ns),
            alphabet=tuple(sorted(set(alphabet))),
            canonical=canonical,
        )

    @classmethod
    def random(
        cls, n: int, max_size: int, seed: int, count: int, min_size: int = 0
    ) -> "PizzaFamily":
        return cls(
            kind="random",
            ns=(n,),
            max_size=max_size,
            min_size=min_size,
            seed=seed,
            count=count,
        )

    @classmethod
    def explicit(cls, pizzas: Iterable[Pizza]) -> "PizzaFamily":
        return cls(kind="explicit", members=tuple(pizzas))

    def describe(self) -> str:
        if self.kind == "exhaustive":
            return (
                f"exhaustive(ns={list(self.ns)}, alphabet={list(self.alphabet)}, "
                f"canonical={self.canonical})"
            )
        if self.kind == "random":
            return (
                f"random(n={self.ns[0]}, sizes={self.min_size}..{self.max_size}, "
                f"seed={self.seed}, count={self.count})"
            )
        return f"explicit({len(self.members)} pizzas)"

    def pizzas(self) -> Iterator[Pizza]:
        if self.kind == "exhaustive":
            for n in self.ns:
                yield from enumerate_pizzas(n, self.alphabet, self.canonical)
        elif self.kind == "random":
            for i in range(self.count):
                yield random_pizza(
                    self.ns[0], self.max_size, self.seed + i, self.min_size
                )
        else:
            yield from self.members


# ---------------------------------------------------------------------------
# Claims
# ---------------------------------------------------------------------------


@dataclass
class ClaimResult:
    ok: bool
    applicable: bool = True
    equality: bool = False
    detail: str | None = None


@dataclass
class Claim:
    claim_id: str
    description: str
    check: Callable[[Pizza], ClaimResult]


def _even_interval_test(pizza: Pizza, cut: int) -> bool:
    """Every even interval ending at the cut has green total >= red total."""
    n = pizza.n
    s = pizza.sizes
    # Walk clockwise from the cut: offsets 0,2,... are red.
    bal = 0
    for j in range(n - 1):
        piece = (cut + j) % n
        bal += s[piece] if j % 2 == 0 else -s[piece]
        if j % 2 == 1 and bal > 0:
            return False
    bal = 0
    for j in range(n - 1):
        piece = (cut - 1 - j) % n
        bal += s[piece] if j % 2 == 0 else -s[piece]
        if j % 2 == 1 and bal > 0:
            return False
    return True


def _claim_even_half(pizza: Pizza) -> ClaimResult:
    if pizza.n % 2 != 0:
        return ClaimResult(ok=True, applicable=False)
    value = evaluate_vs_adversary(pizza, strat.even_strategy(pizza)).value
    ok = 2 * value >= pizza.total
    return ClaimResult(ok=ok, equality=2 * value == pizza.total)


def _claim_one_third(pizza: Pizza) -> ClaimResult:
    if pizza.n % 2 == 0:
        return ClaimResult(ok=True, applicable=False)
    value = evaluate_vs_adversary(pizza, strat.one_third_strategy(pizza)).value
    ok = 3 * value >= pizza.total
    return ClaimResult(ok=ok, equality=3 * value == pizza.total)


def _claim_three_sevenths(pizza: Pizza) -> ClaimResult:
    _, value = strat.best_of_three(pizza)
    ok = 7 * value >= 3 * pizza.total
    return ClaimResult(ok=ok, equality=7 * value == 3 * pizza.total)


def _claim_four_ninths(pizza: Pizza) -> ClaimResult:
    _, value = strat.best_of_four(pizza)
    ok = 9 * value >= 4 * pizza.total
    return ClaimResult(ok=ok, equality=9 * value == 4 * pizza.total)


def _claim_four_ninths_optimal(pizza: Pizza) -> ClaimResult:
    value = optimal_value(pizza).value
    ok = 9 * value >= 4 * pizza.total
    return ClaimResult(ok=ok, equality=9 * value == 4 * pizza.total)


def _claim_oracle_dp(pizza: Pizza) -> ClaimResult:
    if pizza.n > 15:
        return ClaimResult(ok=True, applicable=False)
    return ClaimResult(ok=optimal_value(pizza).value == naive_tree_value(pizza))


def _hard_tri(pizza: Pizza):
    if pizza.n % 2 == 0:
        return None
    if classify(pizza).easy:
        return None
    return tripartition(pizza)


def _claim_no_neighboring_answers(pizza: Pizza) -> ClaimResult:
    if pizza.n % 2 == 0 or classify(pizza).easy:
        return ClaimResult(ok=True, applicable=False)
    table = build_best_answer_table(pizza)
    answer_cuts = set(table.answer_cuts())
    n = pizza.n
    for c in answer_cuts:
        if (c + 1) % n in answer_cuts:
            return ClaimResult(ok=False, detail=f"neighboring answers {c},{(c+1)%n}")
    return ClaimResult(ok=True)


def _claim_answer_interval_test(pizza: Pizza) -> ClaimResult:
    """Best answer to p: even intervals ending at it and avoiding p are
    green-heavy."""
    if pizza.n % 2 == 0:
        return ClaimResult(ok=True, applicable=False)
    table = build_best_answer_table(pizza)
    n = pizza.n
    s = pizza.sizes
    for p in range(n):
        for cut in table.piece_best_cuts[p]:
            for direction in (1, -1):
                bal = 0
                for j in range(n - 1):
                    piece = (cut + j) % n if direction == 1 else (cut - 1 - j) % n
                    if piece == p:
                        break
                    bal += s[piece] if j % 2 == 0 else -s[piece]
                    if j % 2 == 1 and bal > 0:
                        return ClaimResult(
                            ok=False, detail=f"piece {p} cut {cut} dir {direction}"
                        )
    return ClaimResult(ok=True)


def _claim_worst_cut_test(pizza: Pizza) -> ClaimResult:
    """A cut has minimal red total iff every even interval ending at it is
    green-heavy."""
    if pizza.n % 2 == 0:
        return ClaimResult(ok=True, applicable=False)
    table = build_best_answer_table(pizza)
    wc = set(worst_cuts(table))
    for cut in range(pizza.n):
        if _even_interval_test(pizza, cut) != (cut in wc):
            return ClaimResult(ok=False, detail=f"cut {cut}")
    return ClaimResult(ok=True)


def _claim_part_inequalities(pizza: Pizza) -> ClaimResult:
    tri = _hard_tri(pizza)
    if tri is None:
        return ClaimResult(ok=True, applicable=False)
    b_maj, b_min, m_maj, m_min, w_maj, w_min = tri.size_tuple()
    ok = (
        b_min < b_maj
        and m_min < m_maj
        and w_min < w_maj
        and b_maj + m_min >= b_min + m_maj
        and m_maj + w_min >= m_min + w_maj
        and b_maj + w_min >= b_min + w_maj
    )
    eq = ok and (
        b_maj + m_min == b_min + m_maj
        or m_maj + w_min == m_min + w_maj
        or b_maj + w_min == b_min + w_maj
    )
    return ClaimResult(ok=ok, equality=eq)


def _claim_part_interval_test(pizza: Pizza) -> ClaimResult:
    """Even intervals inside a part ending at a bordering special cut are
    major-heavy."""
    tri = _hard_tri(pizza)
    if tri is None:
        return ClaimResult(ok=True, applicable=False)
    s = pizza.sizes
    for part in tri.parts:
        minors = set(part.minors)
        for start in (True, False):
            pieces = part.pieces if start else tuple(reversed(part.pieces))
            bal = 0
            for j, piece in enumerate(pieces[:-1]):
                bal += -s[piece] if piece in minors else s[piece]
                if j % 2 == 1 and bal < 0:
                    return ClaimResult(ok=False, detail=f"part {part.label}")
    return ClaimResult(ok=True)


def _claim_glue_cut_worst(pizza: Pizza) -> ClaimResult:
    tri = _hard_tri(pizza)
    if tri is None:
        return ClaimResult(ok=True, applicable=False)
    for label in analysis.PART_LABELS:
        xp = glue_x_pizza(pizza, tri, label)
        sub_table = build_best_answer_table(xp.pizza)
        if xp.glue_cut not in worst_cuts(sub_table):
            return ClaimResult(ok=False, detail=f"part {label}")
    return ClaimResult(ok=True)


def _claim_worst_cut_answers(pizza: Pizza) -> ClaimResult:
    """Each minimal-red cut is a best answer to exactly its red class."""
    if pizza.n % 2 == 0 or classify(pizza).easy:
        return ClaimResult(ok=True, applicable=False)
    table = build_best_answer_table(pizza)
    for cut in worst_cuts(table):
        red = coloring_from_cut(pizza, cut).red
        if set(table.answers[cut]) != set(red):
            return ClaimResult(ok=False, detail=f"cut {cut}")
    return ClaimResult(ok=True)


def _claim_follow_bounds(pizza: Pizza) -> ClaimResult:
    tri = _hard_tri(pizza)
    if tri is None:
        return ClaimResult(ok=True, applicable=False)
    table = build_best_answer_table(pizza)
    b_maj, b_min, m_maj, m_min, w_maj, w_min = tri.size_tuple()
    bounds = (
        (tri.cuts.best, b_maj + m_min + w_min),
        (tri.cuts.mid, b_min + m_maj + w_min),
        (tri.cuts.worst, b_min + m_min + w_maj),
    )
    eq = False
    for cut, bound in bounds:
        value = evaluate_vs_adversary(pizza, strat.fb_strategy(pizza, cut, table)).value
        if value < bound:
            return ClaimResult(ok=False, detail=f"cut {cut}: {value} < {bound}")
        eq = eq or value == bound
    return ClaimResult(ok=True, equality=eq)


def _claim_modified_follow_bounds(pizza: Pizza) -> ClaimResult:
    tri = _hard_tri(pizza)
    if tri is None:
        return ClaimResult(ok=True, applicable=False)
    b_maj, b_min, m_maj, m_min, w_maj, w_min = tri.size_tuple()
    bounds = (
        ("B", b_maj + 2 * (m_min + w_maj)),
        ("M", m_maj + 2 * (b_min + w_maj)),
        ("W", w_maj + 2 * (b_min + m_maj)),
    )
    eq = False
    for label, doubled in bounds:
        value = evaluate_vs_adversary(
            pizza, strat.mfb_strategy(pizza, tri, label)
        ).value
        if 2 * value < doubled:
            return ClaimResult(ok=False, detail=f"part {label}: 2*{value} < {doubled}")
        eq = eq or 2 * value == doubled
    return ClaimResult(ok=True, equality=eq)


def _admissible_inners(xp) -> list:
    """The sub-pizza strategies the part-local guarantees quantify over:
    every follow strategy at a best-answer cut, plus the three modified
    follow strategies when the sub-pizza is hard (anchored at the glue
    cut)."""
    sub_table = build_best_answer_table(xp.pizza)
    inners = [
        strat.fb_strategy(xp.pizza, cut, sub_table)
        for cut in sub_table.answer_cuts()
    ]
    if classify(xp.pizza).hard:
        sub_tri = tripartition(xp.pizza, sub_table, force_worst=xp.glue_cut)
        for label in analysis.PART_LABELS:
            inners.append(strat.mfb_strategy(xp.pizza, sub_tri, label))
    return inners


def _claim_exception_safe(pizza: Pizza) -> ClaimResult:
    """Refusing to follow across a minimal-red cut never costs anything."""
    tri = _hard_tri(pizza)
    if tri is None:
        return ClaimResult(ok=True, applicable=False)
    for label in analysis.PART_LABELS:
        xp = glue_x_pizza(pizza, tri, label)
        for inner in _admissible_inners(xp):
            plain = evaluate_vs_adversary(xp.pizza, inner).value
            guarded = evaluate_vs_adversary(
                xp.pizza, strat.with_glue_exception(xp.pizza, inner, xp.glue_cut)
            ).value
            if guarded < plain:
                return ClaimResult(
                    ok=False,
                    detail=f"part {label} inner {inner.strategy_id}: "
                    f"{guarded} < {plain}",
                )
    return ClaimResult(ok=True)


_OUTSIDE_BOUND = {
    "B": lambda t: t[3] + t[4],  # m_minor + w_major
    "M": lambda t: t[1] + t[4],  # b_minor + w_major
    "W": lambda t: t[1] + t[2],  # b_minor + m_major
}


def _claim_split_bound(pizza: Pizza) -> ClaimResult:
    """Part-local play earns its sub-pizza value plus the outside bound."""
    tri = _hard_tri(pizza)
    if tri is None:
        return ClaimResult(ok=True, applicable=False)
    sizes = tri.size_tuple()
    eq = False
    for label in analysis.PART_LABELS:
        xp = glue_x_pizza(pizza, tri, label)
        outside = _OUTSIDE_BOUND[label](sizes)
        for inner in _admissible_inners(xp):
            inner_value = evaluate_vs_adversary(xp.pizza, inner).value
            whole = evaluate_vs_adversary(
                pizza, strat.on_part(pizza, tri, label, inner)
            ).value
            if whole < inner_value + outside:
                return ClaimResult(
                    ok=False,
                    detail=f"part {label} inner {inner.strategy_id}: "
                    f"{whole} < {inner_value}+{outside}",
                )
            eq = eq or whole == inner_value + outside
    return ClaimResult(ok=True, equality=eq)


def _claim_averaging_identity(pizza: Pizza) -> ClaimResult:
    """Doubled bookkeeping identity behind the 3/7 average."""
    tri = _hard_tri(pizza)
    if tri is None:
        return ClaimResult(ok=True, applicable=False)
    b_maj, b_min, m_maj, m_min, w_maj, w_min = tri.size_tuple()
    total = pizza.total
    lhs = 4 * b_min + 3 * m_maj + 3 * w_maj + 3 * (b_maj + m_min + w_min)
    ok = lhs == 3 * total + b_min
    return ClaimResult(ok=ok)


def _claim_nested_part_sizes(pizza: Pizza) -> ClaimResult:
    """When the W-pizza is hard, its parts repartition W's minors/majors."""
    tri = _hard_tri(pizza)
    if tri is None:
        return ClaimResult(ok=True, applicable=False)
    xp = glue_x_pizza(pizza, tri, "W")
    if classify(xp.pizza).easy:
        return ClaimResult(ok=True, applicable=False)
    sub_tri = tripartition(xp.pizza, force_worst=xp.glue_cut)
    b2_maj, b2_min, m2_maj, m2_min, w2_maj, w2_min = sub_tri.size_tuple()
    _, _, _, _, w_maj, w_min = tri.size_tuple()
    ok = w_min == b2_min + m2_min + w2_maj and w_maj == b2_maj + m2_maj + w2_min
    return ClaimResult(ok=ok)


CLAIMS: dict[str, Claim] = {}


def _register(claim_id: str, description: str, fn: Callable[[Pizza], ClaimResult]):
    CLAIMS[claim_id] = Claim(claim_id=claim_id, description=description, check=fn)


_register("even-half", "even strategy earns at least half on even pizzas", _claim_even_half)
_register("one-third", "one-third strategy earns at least a third on odd pizzas", _claim_one_third)
_register("three-sevenths", "best-of-three earns at least 3/7", _claim_three_sevenths)
_register("four-ninths", "best-of-four earns at least 4/9", _claim_four_ninths)
_register("four-ninths-optimal", "optimal play earns at least 4/9", _claim_four_ninths_optimal)
_register("oracle-dp", "interval DP equals full-tree minimax", _claim_oracle_dp)
_register("no-neighboring-answers", "hard pizzas have no neighboring best answers", _claim_no_neighboring_answers)
_register("answer-interval-test", "even intervals ending at a best answer avoiding its piece are green-heavy", _claim_answer_interval_test)
_register("worst-cut-test", "minimal-red cuts are exactly the cuts passing the even-interval test", _claim_worst_cut_test)
_register("part-inequalities", "part size inequalities and minors strictly below majors", _claim_part_inequalities)
_register("part-interval-test", "even intervals inside parts ending at special cuts are major-heavy", _claim_part_interval_test)
_register("glue-cut-worst", "the glue cut is minimal-red in every sub-pizza", _claim_glue_cut_worst)
_register("worst-cut-answers", "minimal-red cuts answer exactly their red class", _claim_worst_cut_answers)
_register("follow-bounds", "follow strategies meet their symbolic part bounds", _claim_follow_bounds)
_register("modified-follow-bounds", "modified follow strategies meet their symbolic part bounds", _claim_modified_follow_bounds)
_register("exception-safe", "the glue-cut exception never lowers a strategy's value", _claim_exception_safe)
_register("split-bound", "part-local play decomposes into inside value plus outside bound", _claim_split_bound)
_register("averaging-identity", "part sizes satisfy the 3/7 averaging identity", _claim_averaging_identity)
_register("nested-part-sizes", "a hard W-pizza repartitions W's minors and majors", _claim_nested_part_sizes)


@dataclass
class VerificationReport:
    claim: str
    family: str
    checked: int = 0
    applicable: int = 0
    violations: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    witness_count: int = 0
    elapsed: float = 0.0

    WITNESS_CAP = 100

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "family": self.family,
            "checked": self.checked,
            "applicable": self.applicable,
            "violations": self.violations,
            "witnesses": self.witnesses,
            "witness_count": self.witness_count,
            "elapsed_seconds": round(self.elapsed, 3),
            "ok": self.ok,
        }

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} VIOLATIONS"
        return (
            f"claim {self.claim}: {status}; checked {self.checked} "
            f"({self.applicable} applicable), {self.witness_count} equality "
            f"witnesses, {self.elapsed:.2f}s"
        )


def _check_one(claim_id: str, sizes: tuple[int, ...]) -> tuple[tuple[int, ...], bool, bool, bool, str | None]:
    result = CLAIMS[claim_id].check(Pizza(sizes))
    return sizes, result.ok, result.applicable, result.equality, result.detail


def _merge(report: VerificationReport, item) -> None:
    sizes, ok, applicable, equality, detail = item
    report.checked += 1
    if applicable:
        report.applicable += 1
    if not ok:
        report.violations.append({"sizes": list(sizes), "detail": detail})
    if equality:
        report.witness_count += 1
        if len(report.witnesses) < VerificationReport.WITNESS_CAP:
            report.witnesses.append({"sizes": list(sizes)})


def worker_count() -> int:
    value = os.environ.get("PIZZA_THREADS", "1")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def verify_family(
    family: "Iterable[Pizza] | PizzaFamily",
    claim_id: str,
    family_description: str = "",
    workers: int | None = None,
) -> VerificationReport:
    """Run one claim over a pizza family.

    Violations are collected (the expected result is an empty list) along
    with pizzas attaining the claim's bound with equality.  Work fans out
    over ``PIZZA_THREADS`` processes when asked; merging is associative and
    order-independent, so reports are deterministic.
    """
    if claim_id not in CLAIMS:
        raise PizzaError(
            f"unknown claim id {claim_id!r}; known: {', '.join(sorted(CLAIMS))}"
        )
    if isinstance(family, PizzaFamily):
        family_description = family_description or family.describe()
        family = family.pizzas()
    report = VerificationReport(claim=claim_id, family=family_description)
    start = time.monotonic()
    sizes_iter = (p.sizes for p in family)
    nworkers = workers if workers is not None else worker_count()
    if nworkers > 1:
        import multiprocessing as mp

        with mp.get_context("fork").Pool(nworkers) as pool:
            items = pool.starmap(
                _check_one,
                ((claim_id, sizes) for sizes in sizes_iter),
                chunksize=64,
            )
    else:
        items = (_check_one(claim_id, sizes) for sizes in sizes_iter)
    for item in items:
        _merge(report, item)
    report.violations.sort(key=lambda v: v["sizes"])
    report.witnesses.sort(key=lambda w: w["sizes"])
    report.elapsed = time.monotonic() - start
    return report


# ---------------------------------------------------------------------------
# Extremal search
# ---------------------------------------------------------------------------


def _predicate_total9_optimal4(pizza: Pizza) -> bool:
    if pizza.total != 9:
        return False
    return optimal_value(pizza).value == 4


def _predicate_four_ninths_tight(pizza: Pizza) -> bool:
    if pizza.total == 0 or (4 * pizza.total) % 9 != 0:
        return False
    return 9 * optimal_value(pizza).value == 4 * pizza.total


def _predicate_four_ninths_or_worse(pizza: Pizza) -> bool:
    if pizza.total == 0:
        return False
    return 9 * optimal_value(pizza).value <= 4 * pizza.total


def _predicate_follow_third(pizza: Pizza) -> bool:
    if pizza.total == 0 or pizza.n % 2 == 0:
        return False
    return 3 * classify(pizza).best_fb_value <= pizza.total


SEARCH_PREDICATES: dict[str, Callable[[Pizza], bool]] = {
    "total9-optimal4": _predicate_total9_optimal4,
    "four-ninths-tight": _predicate_four_ninths_tight,
    "four-ninths-or-worse": _predicate_four_ninths_or_worse,
    "follow-third": _predicate_follow_third,
}


def find_extremal(
    n: int,
    alphabet: Iterable[int],
    predicate: str | Callable[[Pizza], bool],
    total: int | None = None,
    force: bool = False,
) -> list[Pizza]:
    """All canonical pizzas of n pieces over the alphabet satisfying the
    predicate.

    Refuses search spaces beyond 2^24 raw sequences unless forced.  An
    optional exact ``total`` prunes the enumeration up front.
    """
    alphabet_t = tuple(sorted(set(int(a) for a in alphabet)))
    space = len(alphabet_t) ** n
    if space > INFEASIBLE_LIMIT and not force:
        raise PizzaError(
            f"search space {len(alphabet_t)}^{n} = {space} exceeds "
            f"{INFEASIBLE_LIMIT}; pass force=True to run anyway"
        )
    if isinstance(predicate, str):
        try:
            predicate_fn = SEARCH_PREDICATES[predicate]
        except KeyError:
            raise PizzaError(
                f"unknown predicate {predicate!r}; known: "
                f"{', '.join(sorted(SEARCH_PREDICATES))}"
            ) from None
    else:
        predicate_fn = predicate
    found = []
    for pizza in enumerate_pizzas(n, alphabet_t, canonical=True, total=total):
        if predicate_fn(pizza):
            found.append(pizza)
    return found


def minimality_scan(
    alphabet: Iterable[int] = (0, 1),
    n_max: int = 20,
    checkpoint_path: str | Path | None = None,
    prefix_len: int = 4,
) -> list[Pizza]:
    """Scan all piece counts up to n_max for pizzas where optimal play does
    not beat 4/9 (total > 0).  Long-running and opt-in.

    Progress is checkpointed as newline-delimited JSON records of completed
    canonical prefixes, so an interrupted scan resumes where it left off.
    Findings for {0,1} below 21 pieces would contradict the shipped
    extremal fixtures; the expected result is an empty list.
    """
    alphabet_t = tuple(sorted(set(int(a) for a in alphabet)))
    done: set[tuple] = set()
    path = Path(checkpoint_path) if checkpoint_path else None
    if path and path.exists():
        for line in path.read_text().splitlines():
            if not line.strip():
                continue
            rec = json.loads(line)
            done.add((rec["n"], tuple(rec["prefix"])))
    findings: list[Pizza] = []
    for n in range(1, n_max + 1):
        plen = min(prefix_len, n)
        for prefix in _sequences(plen, alphabet_t):
            key = (n, prefix)
            if key in done:
                continue
            for tail in _sequences(n - plen, alphabet_t):
                seq = prefix + tail
                if not is_canonical(seq):
                    continue
                pizza = Pizza(seq)
                if _predicate_four_ninths_or_worse(pizza):
                    findings.append(pizza)
            if path:
                with path.open("a") as fh:
                    fh.write(json.dumps({"n": n, "prefix": list(prefix)}) + "\n")
    return findings


# ---------------------------------------------------------------------------
# Shipped witnesses
# ---------------------------------------------------------------------------


def load_fixture(name: str) -> dict:
    """Load a packaged witness fixture by file stem (e.g. 'witness_15')."""
    from importlib import resources

    ref = resources.files("pizzagame") / "fixtures" / f"{name}.json"
    try:
        return json.loads(ref.read_text())
    except FileNotFoundError:
        raise PizzaError(f"unknown fixture {name!r}") from None


def replay_witness_15(fixture: dict | None = None) -> dict:
    """Re-validate the 15-piece extremal witness and its guard cuts."""
    fixture = fixture or load_fixture("witness_15")
    pizza = Pizza(tuple(fixture["sizes"]))
    result = {
        "sizes": list(pizza.sizes),
        "total": pizza.total,
        "optimal_value": optimal_value(pizza).value,
    }
    bob = strat.interval_guard_bob(pizza, fixture["thick_cuts"])
    result["bob_guarantee"] = evaluate_bob(pizza, bob).bob_value
    return result


def replay_witness_21(fixture: dict | None = None) -> dict:
    fixture = fixture or load_fixture("witness_21")
    pizza = Pizza(tuple(fixture["sizes"]))
    return {
        "sizes": list(pizza.sizes),
        "total": pizza.total,
        "optimal_value": optimal_value(pizza).value,
    }
