"""Acceptance battery: every criterion at its stated tolerance.

Each test prints one ``ACCEPTANCE <k> ... PASS/FAIL`` line (visible with
``pytest -s`` or in failure output).
"""

import time
from contextlib import contextmanager
from fractions import Fraction

from slowcolor import families as F
from slowcolor.enumeration import TREE_COUNTS, graph_classes, tree_classes
from slowcolor.families import generate, parse_graph
from slowcolor.formulas import (
    bipartite_dp,
    bipartite_lower_bound,
    bipartite_upper_holds,
    closed_form,
    krr_fit,
    multipartite_equality_check,
    u,
)
from slowcolor.graph import components, induced_subgraph
from slowcolor.harness import gnp_corpus
from slowcolor.invariants import chromatic_sum, hall_ratio, independence_number
from slowcolor.paintability import sum_paintability
from slowcolor.solver import brute_force_value, solve
from slowcolor.strategies import (
    alpha2_painter,
    greedy_painter,
    lister_bipartite,
    lister_guarantee,
    lister_tree,
    mark_all_lister,
    painter_guarantee,
    tree_painter,
)

@contextmanager
def criterion(number: int, name: str, budget_s: float):
    started = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - started
        assert elapsed < budget_s, f"criterion {number} exceeded its {budget_s}s budget"
    except BaseException:
        print(f"ACCEPTANCE {number} {name}: FAIL")
        raise
    print(f"ACCEPTANCE {number} {name}: PASS ({elapsed:.1f}s)")


def test_criterion_01_named_values(cache):
    with criterion(1, "named bipartite values", 3.0):
        for spec, expected in (("K3,3", 10), ("K2,2", 6), ("K3,2", 8)):
            started = time.perf_counter()
            assert solve(parse_graph(spec), cache).value == expected
            assert time.perf_counter() - started < 1.0


def test_criterion_02_closed_form_agreement(cache):
    with criterion(2, "closed-form agreement", 300.0):
        for n in range(1, 11):
            assert solve(generate(F.Path(n)), cache).value == 3 * n // 2
            assert solve(generate(F.Star(n)), cache).value == n + u(n - 1)
        for total in range(1, 9):
            for r in range(total + 1):
                spec = F.JoinEmptyClique(r, total - r)
                assert solve(generate(spec), cache).value == closed_form(spec)
        for twos in range(0, 4):
            for ones in range(0, 8 - 2 * twos):
                if twos + ones == 0:
                    continue
                parts = (2,) * twos + (1,) * ones
                spec = F.CompleteMultipartite(parts)
                assert solve(generate(spec), cache).value == closed_form(spec)


def test_criterion_03_oracle_equivalence(cache):
    with criterion(3, "pruned solver equals unpruned minimax (n<=5)", 120.0):
        for n in range(0, 6):
            for g in graph_classes(n):
                assert solve(g, cache).value == brute_force_value(g)


def test_criterion_04_bound_sandwich(cache):
    with criterion(4, "bound sandwich on classes and random corpus", 600.0):
        corpus = [g for n in range(1, 7) for g in graph_classes(n)]
        corpus += [generate(spec) for spec in gnp_corpus(100, 9)]
        for g in corpus:
            value = solve(g, cache).value
            n = g.n
            alpha = independence_number(g)
            assert chromatic_sum(g) <= value
            assert Fraction(value) <= n * hall_ratio(g)
            assert value >= 2 * n - alpha
            assert Fraction(value) >= Fraction(n * n, 2 * alpha) + Fraction(n, 2)
            assert value <= n + g.edge_count()


def test_criterion_05_equality_characterizations(cache):
    with criterion(5, "equality characterizations (n<=6)", 1800.0):
        for n in range(1, 7):
            for g in graph_classes(n):
                value = solve(g, cache).value
                chi_sp = sum_paintability(g, cache=cache)
                ve = g.n + g.edge_count()
                complete = all(
                    induced_subgraph(g, c)[0].edge_count()
                    == c.bit_count() * (c.bit_count() - 1) // 2
                    for c in components(g)
                )
                assert value <= chi_sp <= ve
                assert (value == chi_sp) == complete
                assert (value == ve) == complete


def test_criterion_06_tree_extremality(cache):
    with criterion(6, "tree extremality (n<=9)", 600.0):
        for n in range(1, 10):
            trees = tree_classes(n)
            assert len(trees) == TREE_COUNTS[n - 1]
            low, high = n + u(n - 1), 3 * n // 2
            values = [solve(t, cache).value for t in trees]
            assert all(low <= v <= high for v in values)
            assert solve(generate(F.Star(n)), cache).value == low == min(values)
            assert solve(generate(F.Path(n)), cache).value == high == max(values)


def test_criterion_07_bipartite_bounds():
    with criterion(7, "complete bipartite bounds (r,s<=60)", 60.0):
        table = bipartite_dp(60, 60)
        for s in range(1, 61):
            for r in range(s, 61):
                value = table[r, s]
                assert bipartite_lower_bound(r, s) <= value
                assert bipartite_upper_holds(value, r, s)


def test_criterion_08_data_fit():
    with criterion(8, "balanced bipartite fit within 2 (r<=100)", 60.0):
        table = bipartite_dp(100, 100)
        for r in range(1, 101):
            assert abs(table[r, r] - krr_fit(r)) <= 2.0


def test_criterion_09_strategy_guarantees(cache):
    with criterion(9, "strategy guarantees", 900.0):
        # greedy painter never exceeds n times the Hall ratio (n <= 7 corpus)
        for n in range(1, 8):
            for g in graph_classes(n):
                assert Fraction(painter_guarantee(g, greedy_painter())) <= n * hall_ratio(g)
        # tree painter stays below the path formula on every tree (n <= 9)
        for n in range(1, 10):
            for t in tree_classes(n):
                assert painter_guarantee(t, tree_painter()) <= 3 * n // 2
        # the parts-<=2 painter achieves its closed form exactly (n <= 7)
        for twos in range(0, 4):
            for ones in range(0, 8 - 2 * twos):
                if twos + ones == 0:
                    continue
                parts = (2,) * twos + (1,) * ones
                g = generate(F.CompleteMultipartite(parts))
                assert painter_guarantee(g, alpha2_painter()) == closed_form(
                    F.CompleteMultipartite(parts)
                )
        # tree lister meets the star formula bound on every tree (n <= 9)
        for n in range(2, 10):
            for t in tree_classes(n):
                assert lister_guarantee(t, lister_tree(t, cache)) >= n + u(n - 1)
        # bipartite lister meets the proven lower bound (r, s <= 5)
        for r in range(1, 6):
            for s in range(1, r + 1):
                g = generate(F.CompleteBipartite(r, s))
                assert lister_guarantee(g, lister_bipartite(r, s)) >= bipartite_lower_bound(r, s)
        # marking everything always collects at least the chromatic sum (n <= 7)
        for n in range(1, 8):
            for g in graph_classes(n):
                assert lister_guarantee(g, mark_all_lister()) >= chromatic_sum(g)


def test_criterion_10_multipartite_equality_grid(cache):
    with criterion(10, "balanced multipartite equality grid", 120.0):
        for r in range(1, 7):
            assert multipartite_equality_check(1, r, cache).equal is True
        for r in range(1, 3):
            for t in range(1, 4):
                assert multipartite_equality_check(t, r, cache).equal is True
        assert multipartite_equality_check(2, 3, cache).equal is False
