import random

import pytest

from slowcolor import families as F
from slowcolor.enumeration import graph_classes, tree_classes
from slowcolor.families import generate, parse_graph
from slowcolor.formulas import bipartite_lower_bound, closed_form, u
from slowcolor.game import GameRecord, IllegalMoveError
from slowcolor.graph import Graph, is_independent
from slowcolor.invariants import chromatic_sum, hall_ratio, independence_number
from slowcolor.solver import solve
from slowcolor.strategies import (
    GraphClassError,
    ListerStrategy,
    PainterStrategy,
    alpha2_painter,
    greedy_painter,
    lister_bipartite,
    lister_disjoint,
    lister_guarantee,
    lister_join,
    lister_mark_all,
    lister_multipartite,
    lister_star,
    lister_tree,
    mark_all_lister,
    optimal_lister,
    painter_alpha2,
    painter_bipartite_threshold,
    painter_greedy,
    painter_guarantee,
    painter_tree,
    run_game,
    threshold_painter,
    tree_painter,
)

from oracles import permuted


# ---------------------------------------------------------------------------
# Painter policy examples
# ---------------------------------------------------------------------------


def test_painter_greedy_examples():
    k22 = parse_graph("K2,2")
    assert painter_greedy(k22, k22.vertex_mask).bit_count() == 2
    assert painter_greedy(parse_graph("K3"), 0b111).bit_count() == 1
    assert painter_greedy(parse_graph("P4"), 0b1111) == 0b0101  # canonical tie-break


def test_painter_tree_examples():
    p3 = parse_graph("P3")
    assert painter_tree(p3, 0b111) == 0b101
    k2 = parse_graph("n=2;0-1")
    assert painter_tree(k2, 0b11) == 0b01  # tie broken to the lowest vertex
    star = generate(F.Star(4))
    reply = painter_tree(star, 0b0011)  # center plus one leaf marked
    assert reply and reply & ~0b0011 == 0 and is_independent(star, reply)
    with pytest.raises(GraphClassError):
        painter_tree(parse_graph("C4"), 0b1111)


def test_painter_tree_disconnected_marks():
    p6 = parse_graph("P6")
    reply = painter_tree(p6, 0b101101)
    assert reply & ~0b101101 == 0
    assert is_independent(p6, reply)
    assert reply  # nonempty


def test_painter_alpha2_cases():
    g = generate(F.CompleteMultipartite((2, 2)))
    assert painter_alpha2(g, 0b0011) == 0b0011  # full 2-part marked
    h = generate(F.CompleteMultipartite((1, 2)))
    assert painter_alpha2(h, 0b011) == 0b001  # marked singleton part
    assert painter_alpha2(g, 0b0101) == 0b0001  # no full part: one 2-part vertex
    with pytest.raises(GraphClassError):
        painter_alpha2(parse_graph("P4"), 0b1111)


def test_painter_threshold_cases():
    r_side, s_side = 0b1111, 0b10000
    assert painter_bipartite_threshold(r_side, s_side, 0b10011) == 0b00011
    assert painter_bipartite_threshold(r_side, s_side, 0b10001) == 0b10000
    # exact tie on (9, 4) with marks (3, 2): j*j*s = 36 = i*i*r, keep the big side
    r9 = (1 << 9) - 1
    s4 = ((1 << 13) - 1) ^ r9
    marks = 0b111 | (0b11 << 9)
    assert painter_bipartite_threshold(r9, s4, marks) == 0b111
    strat = threshold_painter()
    assert strat.respond(Graph(3, [0, 0, 0]), 0b101) == 0b101  # edgeless: color all
    with pytest.raises(GraphClassError):
        strat.respond(parse_graph("P4"), 0b1111)


# ---------------------------------------------------------------------------
# Game runner
# ---------------------------------------------------------------------------


def test_run_game_examples():
    rec = run_game(generate(F.Empty(3)), mark_all_lister(), greedy_painter())
    assert len(rec.rounds) == 1 and rec.total_score == 3
    rec = run_game(parse_graph("K3"), mark_all_lister(), greedy_painter())
    assert len(rec.rounds) == 3 and rec.total_score == 6
    p4 = parse_graph("P4")
    rec = run_game(p4, mark_all_lister(), tree_painter())
    assert rec.total_score <= 6
    rec.validate(p4)


def test_run_game_record_invariants(cache):
    rng = random.Random(5)
    for trial in range(25):
        n = rng.randint(1, 7)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
        g = Graph.from_edges(n, edges)
        rec = run_game(g, mark_all_lister(), greedy_painter())
        rec.validate(g)
        assert rec.total_score == sum(m.bit_count() for m, _ in rec.rounds)


def test_run_game_rejects_illegal_moves():
    bad_lister = ListerStrategy("bad", lambda root, alive: 0)
    with pytest.raises(IllegalMoveError) as err:
        run_game(parse_graph("K2"), bad_lister, greedy_painter())
    assert err.value.round_index == 1
    bad_painter = PainterStrategy("bad", lambda g, m: m)  # colors dependent sets
    with pytest.raises(IllegalMoveError):
        run_game(parse_graph("K2"), mark_all_lister(), bad_painter)


def test_transcript_serialization_roundtrip():
    g = parse_graph("P5")
    rec = run_game(g, mark_all_lister(), greedy_painter())
    lines = rec.to_lines()
    back = GameRecord.from_lines(g.n, lines)
    assert back.rounds == rec.rounds
    assert "total score" in rec.to_text()


# ---------------------------------------------------------------------------
# Guarantees
# ---------------------------------------------------------------------------


def test_painter_guarantee_examples(cache):
    k22 = parse_graph("K2,2")
    assert painter_guarantee(k22, greedy_painter()) <= 4 * hall_ratio(k22)
    for n in range(2, 8):
        t = generate(F.Path(n))
        assert painter_guarantee(t, tree_painter()) <= 3 * n // 2
    for parts in [(2, 2), (2, 2, 1), (2, 1, 1), (2, 2, 2), (1, 1, 1, 1)]:
        g = generate(F.CompleteMultipartite(parts))
        assert painter_guarantee(g, alpha2_painter()) == closed_form(
            F.CompleteMultipartite(parts)
        )


def test_painter_guarantee_equivariant():
    rng = random.Random(12)
    for trial in range(20):
        n = rng.randint(1, 6)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        g = Graph.from_edges(n, edges)
        value = painter_guarantee(g, greedy_painter())
        perm = list(range(n))
        rng.shuffle(perm)
        assert painter_guarantee(permuted(g, perm), greedy_painter()) == value


def test_threshold_painter_guarantee_bound(cache):
    from slowcolor.formulas import bipartite_upper_holds

    for r in range(1, 5):
        for s in range(1, r + 1):
            g = generate(F.CompleteBipartite(r, s))
            got = painter_guarantee(g, threshold_painter())
            assert bipartite_upper_holds(got, r, s)


def test_lister_mark_all_op():
    g = parse_graph("P4")
    assert lister_mark_all(g) == g.vertex_mask
    with pytest.raises(ValueError):
        lister_mark_all(Graph(0, []))


def test_lister_guarantee_examples(cache):
    p5 = generate(F.Path(5))
    assert lister_guarantee(p5, mark_all_lister()) >= chromatic_sum(p5)
    star = generate(F.Star(4))
    assert lister_guarantee(star, lister_star(star, cache)) == 6
    j52 = generate(F.JoinEmptyClique(5, 2))
    assert lister_guarantee(j52, lister_join(j52, cache)) == 12
    k33 = generate(F.CompleteBipartite(3, 3))
    assert lister_guarantee(k33, lister_bipartite(3, 3)) >= 9


def test_mark_all_guarantee_lower_bounds(cache):
    for n in range(1, 6):
        for g in graph_classes(n):
            got = lister_guarantee(g, mark_all_lister())
            assert got >= chromatic_sum(g)
            assert got >= 2 * g.n - independence_number(g)


def test_lister_disjoint(cache):
    p4 = parse_graph("P4")
    assert lister_guarantee(p4, lister_disjoint(p4, [0b0011, 0b1100], cache)) == 6
    k33 = generate(F.CompleteBipartite(3, 3))
    matching = [(1 << 0) | (1 << 3), (1 << 1) | (1 << 4), (1 << 2) | (1 << 5)]
    assert lister_guarantee(k33, lister_disjoint(k33, matching, cache)) >= 9
    with pytest.raises(ValueError):
        lister_disjoint(p4, [0b0011, 0b0110], cache)


def test_lister_star_join_match_closed_form(cache):
    for total in range(1, 7):
        for r in range(total + 1):
            g = generate(F.JoinEmptyClique(r, total - r))
            if g.n == 0:
                continue
            got = lister_guarantee(g, lister_join(g, cache))
            assert got == closed_form(F.JoinEmptyClique(r, total - r))
    with pytest.raises(GraphClassError):
        lister_join(parse_graph("P4"), cache)
    with pytest.raises(GraphClassError):
        lister_star(generate(F.JoinEmptyClique(3, 2)), cache)


def test_lister_tree_guarantee(cache):
    for n in range(1, 8):
        for t in tree_classes(n):
            if n == 1:
                continue
            got = lister_guarantee(t, lister_tree(t, cache))
            assert got >= n + u(n - 1)
    with pytest.raises(GraphClassError):
        lister_tree(parse_graph("C4"), cache)


def test_lister_bipartite_guarantee(cache):
    for r in range(1, 5):
        for s in range(1, r + 1):
            g = generate(F.CompleteBipartite(r, s))
            got = lister_guarantee(g, lister_bipartite(r, s))
            assert got >= bipartite_lower_bound(r, s)


def test_lister_multipartite(cache):
    km22 = generate(F.CompleteMultipartite((2, 2)))
    assert lister_guarantee(km22, lister_multipartite(2, 2)) == 6
    k33 = generate(F.CompleteMultipartite((3, 3)))
    assert lister_guarantee(k33, lister_multipartite(2, 3)) >= 10
    k3 = generate(F.CompleteMultipartite((1, 1, 1)))
    assert lister_guarantee(k3, lister_multipartite(3, 1)) == 6


def test_sandwich(cache):
    for n in range(1, 7):
        for g in graph_classes(n):
            value = solve(g, cache).value
            assert lister_guarantee(g, mark_all_lister()) <= value
            assert value <= painter_guarantee(g, greedy_painter())


def test_sandwich_all_strategies_on_their_classes(cache):
    # every implemented pair brackets the exact value on its graph class (n <= 8)
    for n in range(2, 9):
        for t in tree_classes(n):
            value = solve(t, cache).value
            assert lister_guarantee(t, lister_tree(t, cache)) <= value
            assert value <= painter_guarantee(t, tree_painter())
    for r in range(1, 8):
        for s in range(1, min(r, 8 - r) + 1):
            g = generate(F.CompleteBipartite(r, s))
            value = solve(g, cache).value
            assert lister_guarantee(g, lister_bipartite(r, s, cache)) <= value
            assert value <= painter_guarantee(g, threshold_painter())
    for total in range(1, 9):
        for r in range(total + 1):
            g = generate(F.JoinEmptyClique(r, total - r))
            value = solve(g, cache).value
            assert lister_guarantee(g, lister_join(g, cache)) <= value
    for twos in range(0, 5):
        for ones in range(0, 9 - 2 * twos):
            if twos + ones == 0:
                continue
            parts = (2,) * twos + (1,) * ones
            g = generate(F.CompleteMultipartite(parts))
            value = solve(g, cache).value
            assert value <= painter_guarantee(g, alpha2_painter())
    for t, r in ((2, 2), (2, 3), (3, 2), (2, 4), (4, 2), (8, 1), (1, 8)):
        g = generate(F.CompleteMultipartite((r,) * t))
        value = solve(g, cache).value
        assert lister_guarantee(g, lister_multipartite(t, r)) <= value


def test_optimal_lister_reaches_value(cache):
    for spec in ("P5", "C5", "K3,2"):
        g = parse_graph(spec)
        assert lister_guarantee(g, optimal_lister(cache)) == solve(g, cache).value
