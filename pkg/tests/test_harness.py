import csv

from slowcolor.enumeration import TREE_COUNTS, graph_classes, tree_classes, two_tree_classes
from slowcolor.families import RandomGnp, generate
from slowcolor.harness import (
    experiment_join_sqrt_gap,
    experiment_krr_fit,
    experiment_pnk_conjecture,
    gnp_corpus,
    suite_bounds,
    suite_closed_forms,
    suite_equality_characterizations,
    suite_tree_extremality,
    write_rows_csv,
)


def test_graph_class_counts():
    for n, count in {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}.items():
        assert len(graph_classes(n)) == count


def test_tree_counts_match_known_sequence():
    import networkx as nx

    for n in range(1, 10):
        assert len(tree_classes(n)) == TREE_COUNTS[n - 1]
        if n >= 2:
            assert TREE_COUNTS[n - 1] == nx.number_of_nonisomorphic_trees(n)


def test_two_tree_classes():
    # Unlabeled edge-grown 2-trees number 1, 1, 1, 2, 5, 12 for n = 2..7.
    for n, count in {2: 1, 3: 1, 4: 1, 5: 2, 6: 5, 7: 12}.items():
        assert len(two_tree_classes(n)) == count


def test_gnp_corpus_deterministic():
    a = gnp_corpus(20, 9)
    b = gnp_corpus(20, 9)
    assert a == b
    assert all(isinstance(s, RandomGnp) and 5 <= s.n <= 9 for s in a)
    assert generate(a[0]) == generate(b[0])


def test_suite_closed_forms(cache):
    report = suite_closed_forms(n_max=7, join_sum_max=6, multipartite_n_max=6,
                                bipartite_sum_max=6, cache=cache)
    assert report.ok()
    assert report.kind == "assert"
    assert any(c.case_id == "P7" for c in report.cases)


def test_suite_tree_extremality(cache):
    report = suite_tree_extremality(7, cache=cache)
    assert report.ok()
    ids = [c.case_id for c in report.cases]
    assert "tree-count-n7" in ids


def test_suite_bounds_small(cache):
    report = suite_bounds(n_max=4, sample_count=10, sample_n_max=7, cache=cache)
    assert report.ok()
    assert len(report.cases) == (1 + 2 + 4 + 11) + 10


def test_suite_equality_characterizations(cache):
    report = suite_equality_characterizations(4, cache=cache)
    assert report.ok()


def test_suite_determinism(cache):
    first = suite_bounds(n_max=3, sample_count=5, cache=cache)
    second = suite_bounds(n_max=3, sample_count=5, cache=cache)
    assert [c.row() for c in first.cases] == [c.row() for c in second.cases]


def test_experiments_report(tmp_path, cache):
    report, rows = experiment_krr_fit(30)
    assert report.ok() and len(rows) == 30
    r1 = rows[0]
    assert r1[0] == 1 and r1[1] == 3 and abs(r1[3]) <= 0.01

    report, rows = experiment_pnk_conjecture(7, 2, cache)
    assert report.kind == "report"
    k1 = {(k, n): (conj, act) for k, n, conj, act, _ in rows if k == 1}
    for (_, n), (conj, act) in k1.items():
        assert conj == act  # the disjoint-clique formula is exact for k = 1

    report, rows = experiment_join_sqrt_gap(20, 4)
    assert report.kind == "report"
    lookup = {(r, t): row for (r, t, *rest), row in zip(rows, rows)}
    exact, approx, gap, within = lookup[(2, 2)][2:]
    assert exact == 4 and within

    path = tmp_path / "fit.csv"
    write_rows_csv(path, ["r", "value", "fit", "diff"], experiment_krr_fit(5)[1])
    with open(path) as fh:
        got = list(csv.reader(fh))
    assert got[0] == ["r", "value", "fit", "diff"]
    assert len(got) == 6


def test_report_text_and_csv(tmp_path, cache):
    report = suite_closed_forms(n_max=3, join_sum_max=3, multipartite_n_max=3,
                                bipartite_sum_max=3, cache=cache)
    text = report.to_text()
    assert "closed-forms" in text and "failed" in text
    path = tmp_path / "report.csv"
    report.write_csv(path)
    with open(path) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["case", "expected", "actual", "passed"]
    assert len(rows) == len(report.cases) + 1
