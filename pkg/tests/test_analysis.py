"""Best answers, hardness, tripartition, middle pieces and glued parts."""

import itertools

import pytest

from pizzagame.core import Pizza, PizzaError, coloring_from_cut, set_size
from pizzagame.analysis import (
    Part,
    best_answers,
    best_cuts,
    build_best_answer_table,
    choose_special_cuts,
    classify,
    cut_red_size,
    glue_x_pizza,
    middle_piece,
    qualifying_cuts,
    tripartition,
    worst_cuts,
)
from pizzagame.harness import enumerate_pizzas, load_fixture, random_pizza

TIGHTNESS = Pizza((0, 4, 0, 1, 4, 1, 0, 4, 0))
KILLER = Pizza(tuple(load_fixture("follow_third")["sizes"]))


def brute_best_answers(pizza, piece):
    """Independent oracle: scan every cut's coloring directly."""
    values = {}
    for cut in range(pizza.n):
        coloring = coloring_from_cut(pizza, cut)
        if piece in coloring.red:
            values[cut] = set_size(pizza, coloring.red)
    best = min(values.values())
    return best, tuple(sorted(c for c, v in values.items() if v == best))


def hard_pizzas_up_to_9():
    out = []
    for n in (9,):
        for pizza in enumerate_pizzas(n, (0, 1, 2)):
            if not classify(pizza).easy:
                out.append(pizza)
    return out


class TestBestAnswers:
    def test_uniform_five(self):
        assert best_answers(Pizza((1,) * 5), 0) == (3, (0, 1, 3))

    def test_small_asymmetric(self):
        # frozen from the brute-force oracle below
        assert brute_best_answers(Pizza((1, 0, 1)), 1) == (1, (1, 2))
        assert best_answers(Pizza((1, 0, 1)), 1) == (1, (1, 2))

    def test_all_zero(self):
        pizza = Pizza((0,) * 7)
        value, cuts = best_answers(pizza, 3)
        assert value == 0
        assert cuts == qualifying_cuts(pizza, 3)
        assert len(cuts) == 4

    def test_matches_brute_force_on_random_pizzas(self):
        for seed in range(150):
            n = 3 + 2 * (seed % 6)
            pizza = random_pizza(n, 4, 9000 + seed)
            for piece in range(n):
                assert best_answers(pizza, piece) == brute_best_answers(
                    pizza, piece
                )

    def test_even_rejected(self):
        with pytest.raises(PizzaError):
            best_answers(Pizza((1, 1)), 0)


class TestBestAnswerTable:
    def test_uniform_symmetry(self):
        pizza = Pizza((1,) * 5)
        table = build_best_answer_table(pizza)
        for cut in range(5):
            assert table.cut_value[cut] == 3
            assert set(table.answers[cut]) == coloring_from_cut(pizza, cut).red

    def test_cross_consistency_random(self):
        for seed in range(120):
            n = 3 + 2 * (seed % 6)
            pizza = random_pizza(n, 4, 10_000 + seed)
            table = build_best_answer_table(pizza)
            for piece in range(n):
                value, cuts = brute_best_answers(pizza, piece)
                assert table.piece_best_value[piece] == value
                assert table.piece_best_cuts[piece] == cuts
                for cut in cuts:
                    assert piece in table.answers[cut]
            for cut in range(n):
                for piece in table.answers[cut]:
                    assert cut in table.piece_best_cuts[piece]

    def test_every_piece_has_an_answer(self):
        for seed in range(60):
            pizza = random_pizza(3 + 2 * (seed % 5), 3, 11_000 + seed)
            table = build_best_answer_table(pizza)
            covered = set()
            for cut in range(pizza.n):
                covered.update(table.answers[cut])
            assert covered == set(range(pizza.n))


class TestClassify:
    def test_even_is_easy(self):
        h = classify(Pizza((1, 0, 1, 0)))
        assert h.easy
        assert 2 * h.best_fb_value >= 2

    def test_uniform_five_easy(self):
        h = classify(Pizza((1,) * 5))
        assert h.easy
        assert h.best_fb_value == 3

    def test_follow_third_fixture_is_hard(self):
        h = classify(KILLER)
        assert h.hard
        assert h.witness is None
        assert 3 * h.best_fb_value <= KILLER.total

    def test_fixture_is_smallest_binary_example(self):
        # search {0,1} pizzas by ascending odd n for follow value <= total/3
        found = None
        for n in (3, 5, 7, 9):
            for pizza in enumerate_pizzas(n, (0, 1)):
                if pizza.total == 0:
                    continue
                h = classify(pizza)
                if 3 * h.best_fb_value <= pizza.total:
                    found = pizza
                    break
            if found:
                break
        assert found is not None
        assert found == KILLER

    def test_easy_witness_guarantee(self):
        for seed in range(80):
            pizza = random_pizza(1 + seed % 10, 4, 12_000 + seed)
            h = classify(pizza)
            if h.easy:
                assert h.witness is not None
                if pizza.n % 2 == 1:
                    value, _ = best_answers(pizza, h.witness)
                    assert 2 * value >= pizza.total

    def test_single_piece_easy(self):
        assert classify(Pizza((4,))).easy


class TestWorstBestCuts:
    def test_uniform_everything_coincides(self):
        table = build_best_answer_table(Pizza((1,) * 5))
        assert worst_cuts(table) == tuple(range(5))
        assert best_cuts(table) == tuple(range(5))

    def test_disjoint_when_values_differ(self):
        table = build_best_answer_table(TIGHTNESS)
        wc, bc = set(worst_cuts(table)), set(best_cuts(table))
        assert table.cut_value[next(iter(wc))] != table.cut_value[next(iter(bc))]
        assert not (wc & bc)

    def test_equal_when_values_coincide(self):
        # on the follow-third fixture every best answer has the minimal red
        # total, so the two distinguished sets coincide
        table = build_best_answer_table(KILLER)
        assert set(worst_cuts(table)) == set(best_cuts(table))

    def test_disjoint_or_equal_exhaustively(self):
        for pizza in hard_pizzas_up_to_9():
            table = build_best_answer_table(pizza)
            wc, bc = set(worst_cuts(table)), set(best_cuts(table))
            if table.cut_value[next(iter(wc))] == table.cut_value[next(iter(bc))]:
                assert wc == bc
            else:
                assert not (wc & bc)

    def test_worst_cuts_are_best_answers(self):
        for pizza in hard_pizzas_up_to_9():
            table = build_best_answer_table(pizza)
            for cut in worst_cuts(table):
                assert table.answers[cut]


class TestSpecialCuts:
    def test_tightness_pizza_frozen(self):
        cuts = choose_special_cuts(TIGHTNESS)
        assert (cuts.worst, cuts.best, cuts.mid) == (0, 3, 6)
        assert cuts.mid_anchor == 1
        assert cuts.answer_frontier == 7

    def test_mid_anchor_is_doubly_green(self):
        for pizza in hard_pizzas_up_to_9() + [TIGHTNESS, KILLER]:
            cuts = choose_special_cuts(pizza)
            assert cuts.mid_anchor in coloring_from_cut(pizza, cuts.worst).green
            assert cuts.mid_anchor in coloring_from_cut(pizza, cuts.best).green

    def test_cuts_pairwise_non_neighboring(self):
        for pizza in hard_pizzas_up_to_9() + [TIGHTNESS]:
            cuts = choose_special_cuts(pizza)
            chosen = {cuts.worst, cuts.mid, cuts.best}
            assert len(chosen) == 3
            for c in chosen:
                assert (c + 1) % pizza.n not in chosen

    def test_mid_sits_before_the_frontier(self):
        # the mid cut lies between the best cut and the frontier piece on
        # the even-interval side (the side away from the anchor)
        for pizza in hard_pizzas_up_to_9() + [TIGHTNESS]:
            cuts = choose_special_cuts(pizza)
            n = pizza.n
            from pizzagame.core import interval_between

            odd, even = interval_between(pizza, cuts.best, cuts.worst)
            walk = even if even[0] == cuts.best % n else tuple(reversed(even))
            # internal cuts passed when walking from the best cut piece by piece
            passed = []
            for piece in walk:
                if piece == cuts.answer_frontier:
                    break
                passed.append(piece)
            boundary_cuts = set()
            for i in range(len(passed)):
                a, b = walk[i], walk[i + 1]
                boundary_cuts.add(b if (a + 1) % n == b else a)
            assert cuts.mid in boundary_cuts

    def test_easy_pizza_rejected(self):
        with pytest.raises(PizzaError, match="hard"):
            choose_special_cuts(Pizza((1,) * 5))

    def test_force_worst_validates(self):
        table = build_best_answer_table(TIGHTNESS)
        assert worst_cuts(table) == (0,)
        with pytest.raises(PizzaError, match="minimal-red"):
            choose_special_cuts(TIGHTNESS, force_worst=3)


class TestTripartition:
    def test_tightness_sizes(self):
        tri = tripartition(TIGHTNESS)
        assert tri.size_tuple() == (4, 0, 4, 0, 4, 2)

    def test_tightness_part_contents(self):
        tri = tripartition(TIGHTNESS)
        assert [TIGHTNESS.sizes[p] for p in tri.part_b.pieces] == [0, 4, 0]
        assert [TIGHTNESS.sizes[p] for p in tri.part_m.pieces] == [0, 4, 0]
        assert [TIGHTNESS.sizes[p] for p in tri.part_w.pieces] == [1, 4, 1]

    def test_parts_cover_circle_oddly(self):
        for pizza in hard_pizzas_up_to_9() + [TIGHTNESS]:
            tri = tripartition(pizza)
            pieces = sorted(
                p for part in tri.parts for p in part.pieces
            )
            assert pieces == list(range(pizza.n))
            for part in tri.parts:
                assert len(part.pieces) % 2 == 1
                assert len(part.pieces) >= 3
                assert set(part.minors) | set(part.majors) == set(part.pieces)
                assert part.pieces[0] in part.minors
                assert part.pieces[-1] in part.minors

    def test_part_inequalities_exhaustive_nine(self):
        for pizza in hard_pizzas_up_to_9():
            b_maj, b_min, m_maj, m_min, w_maj, w_min = tripartition(
                pizza
            ).size_tuple()
            assert b_min < b_maj and m_min < m_maj and w_min < w_maj
            assert b_maj + m_min >= b_min + m_maj
            assert m_maj + w_min >= m_min + w_maj
            assert b_maj + w_min >= b_min + w_maj

    def test_easy_rejected(self):
        with pytest.raises(PizzaError, match="hard"):
            tripartition(Pizza((1, 0, 1, 0, 0)))


class TestMiddlePiece:
    def test_singleton_major(self):
        tri = tripartition(TIGHTNESS)
        part = tri.part_b
        assert middle_piece(TIGHTNESS, part) == part.majors[0]

    def test_symmetric_majors(self):
        # part with majors of sizes [1,1,1]: the middle one qualifies first? no:
        # prefix 1 of total 3 fails 2*1 >= 3; the second major is the answer
        pizza = Pizza((0, 1, 0, 1, 0, 1, 0, 9, 9))
        part = Part(label="B", pieces=(0, 1, 2, 3, 4, 5, 6), start_cut=0, end_cut=7)
        assert [pizza.sizes[p] for p in part.majors] == [1, 1, 1]
        assert middle_piece(pizza, part) == 3

    def test_two_majors_hand_enumerated(self):
        # majors sized [3,1] clockwise: prefix 3 has 2*3 >= 4 and suffix
        # 3+1 >= 2, so the size-3 piece is the middle piece
        pizza = Pizza((0, 3, 0, 1, 0))
        part = Part(label="W", pieces=(0, 1, 2, 3, 4), start_cut=0, end_cut=0)
        assert middle_piece(pizza, part) == 1

    def test_split_property_everywhere(self):
        for pizza in hard_pizzas_up_to_9():
            tri = tripartition(pizza)
            for part in tri.parts:
                chosen = middle_piece(pizza, part)
                majors = list(part.majors)
                total = sum(pizza.sizes[p] for p in majors)
                idx = majors.index(chosen)
                before = sum(pizza.sizes[p] for p in majors[: idx + 1])
                after = sum(pizza.sizes[p] for p in majors[idx:])
                assert 2 * before >= total
                assert 2 * after >= total

    def test_empty_major_rejected(self):
        part = Part(label="B", pieces=(0,), start_cut=0, end_cut=1)
        with pytest.raises(PizzaError, match="major"):
            middle_piece(Pizza((1, 1, 1)), part)


class TestGluedParts:
    def test_tightness_w_pizza(self):
        tri = tripartition(TIGHTNESS)
        xp = glue_x_pizza(TIGHTNESS, tri, "W")
        assert xp.pizza.sizes == (1, 4, 1)
        assert xp.glue_cut == 0
        # glue cut separates the two border pieces of size 1
        assert TIGHTNESS.sizes[xp.to_whole(0)] == 1
        assert TIGHTNESS.sizes[xp.to_whole(2)] == 1

    def test_index_map_round_trip(self):
        for pizza in hard_pizzas_up_to_9():
            tri = tripartition(pizza)
            for label in "BMW":
                xp = glue_x_pizza(pizza, tri, label)
                for sub in range(xp.pizza.n):
                    assert xp.to_sub(xp.to_whole(sub)) == sub

    def test_glue_cut_is_minimal_red(self):
        for pizza in hard_pizzas_up_to_9() + [TIGHTNESS]:
            tri = tripartition(pizza)
            for label in "BMW":
                xp = glue_x_pizza(pizza, tri, label)
                table = build_best_answer_table(xp.pizza)
                assert xp.glue_cut in worst_cuts(table)

    def test_red_size_decomposes_over_parts(self):
        # the red class of each special cut restricted to each part is the
        # minor or major set, matching the six-size bookkeeping
        tri = tripartition(TIGHTNESS)
        table = build_best_answer_table(TIGHTNESS)
        b_maj, b_min, m_maj, m_min, w_maj, w_min = tri.size_tuple()
        assert table.cut_value[tri.cuts.best] == b_maj + m_min + w_min
        assert table.cut_value[tri.cuts.mid] == b_min + m_maj + w_min
        assert table.cut_value[tri.cuts.worst] == b_min + m_min + w_maj

    def test_red_size_helper_matches_coloring(self):
        for seed in range(40):
            pizza = random_pizza(3 + 2 * (seed % 5), 5, 13_000 + seed)
            for cut in range(pizza.n):
                coloring = coloring_from_cut(pizza, cut)
                assert cut_red_size(pizza, cut) == set_size(pizza, coloring.red)
