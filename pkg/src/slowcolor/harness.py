"""Batch verification suites and conjecture experiments.

Assertion suites check proved statements case by case and are expected to
pass; experiments only report what the computation shows (fit qualities,
conjectured equalities) so an open problem can never break the battery.
Every suite is deterministic given its limits and seeds, emits a
machine-readable report, and names each case by a graph expression the
parser accepts, so any case can be re-run standalone.

CSV schemas
-----------
* assertion suites: ``case,expected,actual,passed``
* ``krr-fit``: ``r,value,fit,diff`` (fit = 4r - sqrt(r) - log3(r))
* ``pnk-conjecture``: ``k,n,conjectured,actual,matches``
* ``join-sqrt-gap``: ``r,t,exact,approx,gap,within_t``
* ``ktree-conjecture``: ``n,lower,value,upper,within``
"""

import csv
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import families
from .enumeration import TREE_COUNTS, graph_classes, tree_classes, two_tree_classes
from .families import generate
from .formulas import (
    bipartite_dp,
    closed_form,
    join_dp,
    krr_fit,
    multipartite_equality_check,
    triangular,
    u,
)
from .graph import Graph, components_within, induced_subgraph
from .invariants import bound_report
from .paintability import sum_paintability
from .solver import SolverCache, solve


@dataclass
class CaseResult:
    case_id: str
    expected: object
    actual: object
    passed: bool | None  # None marks a reported (non-asserted) case

    def row(self) -> tuple:
        return (self.case_id, self.expected, self.actual, self.passed)


@dataclass
class SuiteReport:
    name: str
    kind: str  # "assert" or "report"
    cases: list[CaseResult] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def failed(self) -> int:
        return sum(1 for c in self.cases if c.passed is False)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.passed is True)

    def ok(self) -> bool:
        return self.failed == 0

    def add(self, case_id: str, expected, actual, passed: bool | None) -> None:
        self.cases.append(CaseResult(case_id, expected, actual, passed))

    def check(self, case_id: str, expected, actual) -> None:
        self.add(case_id, expected, actual, expected == actual)

    def to_text(self) -> str:
        lines = [f"suite {self.name} [{self.kind}]"]
        for c in self.cases:
            status = {True: "pass", False: "FAIL", None: "info"}[c.passed]
            lines.append(f"  {status:<4} {c.case_id}: expected {c.expected}, got {c.actual}")
        lines.append(
            f"  {self.passed} passed, {self.failed} failed, "
            f"{len(self.cases)} cases in {self.wall_time:.2f}s"
        )
        return "\n".join(lines)

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["case", "expected", "actual", "passed"])
            for c in self.cases:
                writer.writerow(c.row())


def _timed(report: SuiteReport, started: float) -> SuiteReport:
    report.wall_time = time.perf_counter() - started
    return report


# ---------------------------------------------------------------------------
# Corpora
# ---------------------------------------------------------------------------


def gnp_corpus(count: int = 100, n_max: int = 9, n_min: int = 5, base_seed: int = 2024):
    """Deterministic random-graph sample: specs cycling sizes and densities."""
    densities = (0.2, 0.35, 0.5, 0.65, 0.8)
    specs = []
    for k in range(count):
        n = n_min + k % (n_max - n_min + 1)
        p = densities[(k // (n_max - n_min + 1)) % len(densities)]
        specs.append(families.RandomGnp(n, p, base_seed + k))
    return specs


def _class_cases(n_max: int):
    """(case id, graph) for one representative per class up to n_max vertices."""
    for n in range(1, n_max + 1):
        for g in graph_classes(n):
            yield g.to_edge_list_string(), g


# ---------------------------------------------------------------------------
# Assertion suites
# ---------------------------------------------------------------------------


def suite_closed_forms(
    n_max: int = 10,
    join_sum_max: int = 8,
    multipartite_n_max: int = 7,
    bipartite_sum_max: int = 8,
    cache: SolverCache | None = None,
) -> SuiteReport:
    """Exact solver versus every closed form and the bipartite table."""
    started = time.perf_counter()
    cache = cache if cache is not None else SolverCache()
    report = SuiteReport("closed-forms", "assert")
    for n in range(1, n_max + 1):
        for spec in (families.Path(n), families.Star(n), families.Complete(n), families.Empty(n)):
            report.check(spec.dsl(), closed_form(spec), solve(generate(spec), cache).value)
    for total in range(1, join_sum_max + 1):
        for r in range(total + 1):
            spec = families.JoinEmptyClique(r, total - r)
            report.check(spec.dsl(), closed_form(spec), solve(generate(spec), cache).value)
    for parts in _small_part_multisets(multipartite_n_max):
        spec = families.CompleteMultipartite(parts)
        report.check(spec.dsl(), closed_form(spec), solve(generate(spec), cache).value)
    table = bipartite_dp(bipartite_sum_max, bipartite_sum_max)
    for r in range(bipartite_sum_max + 1):
        for s in range(bipartite_sum_max + 1 - r):
            spec = families.CompleteBipartite(r, s)
            report.check(spec.dsl(), table[r, s], solve(generate(spec), cache).value)
    return _timed(report, started)


def _small_part_multisets(n_max: int):
    """Nonincreasing part multisets over {1, 2} with total in [1, n_max]."""
    for twos in range(0, n_max // 2 + 1):
        for ones in range(0, n_max - 2 * twos + 1):
            if twos + ones >= 1 and 2 * twos + ones >= 1:
                yield (2,) * twos + (1,) * ones


def suite_tree_extremality(n_max: int = 9, cache: SolverCache | None = None) -> SuiteReport:
    """Every tree's value sits between the star and path formulas."""
    started = time.perf_counter()
    cache = cache if cache is not None else SolverCache()
    report = SuiteReport("tree-extremality", "assert")
    for n in range(1, n_max + 1):
        trees = tree_classes(n)
        report.check(f"tree-count-n{n}", TREE_COUNTS[n - 1], len(trees))
        low = n + u(n - 1)
        high = 3 * n // 2
        values = []
        for g in trees:
            value = solve(g, cache).value
            values.append(value)
            report.add(
                g.to_edge_list_string(),
                f"[{low},{high}]",
                value,
                low <= value <= high,
            )
        report.check(f"star-attains-min-n{n}", low, min(values))
        report.check(f"path-attains-max-n{n}", high, max(values))
        report.check(f"P{n}", high, solve(generate(families.Path(n)), cache).value)
        report.check(f"S{n}", low, solve(generate(families.Star(n)), cache).value)
    return _timed(report, started)


def suite_bounds(
    n_max: int = 6,
    sample_count: int = 100,
    sample_n_max: int = 9,
    base_seed: int = 2024,
    cache: SolverCache | None = None,
) -> SuiteReport:
    """Bound sandwich on all small classes plus a seeded random corpus."""
    started = time.perf_counter()
    cache = cache if cache is not None else SolverCache()
    report = SuiteReport("bounds", "assert")
    cases = list(_class_cases(n_max))
    cases += [
        (spec.dsl(), generate(spec))
        for spec in gnp_corpus(sample_count, sample_n_max, base_seed=base_seed)
        if spec.n >= 1
    ]
    for case_id, g in cases:
        value = solve(g, cache).value
        rep = bound_report(g)
        checks = {
            "chromatic-sum<=value": rep.chromatic_sum <= value,
            "value<=n*rho": Fraction(value) <= rep.upper_n_rho,
            "value>=2n-alpha": value >= rep.lower_2n_minus_alpha,
            "value>=quadratic": Fraction(value) >= rep.lower_quadratic,
            "value<=v+e": value <= rep.upper_v_plus_e,
        }
        bad = [name for name, ok in checks.items() if not ok]
        report.add(case_id, "all bounds", f"value={value}" + (f" violating {bad}" if bad else ""), not bad)
    return _timed(report, started)


def suite_equality_characterizations(
    n_max: int = 6, cache: SolverCache | None = None
) -> SuiteReport:
    """The two equality laws for the token game plus the balanced multipartite grid.

    The game value equals the sum-paintability, and equals |V| + |E|, exactly
    when every component is a complete graph; the balanced multipartite
    value meets its quadratic bound exactly for one part or parts of size
    at most 2.
    """
    started = time.perf_counter()
    cache = cache if cache is not None else SolverCache()
    report = SuiteReport("equality-characterizations", "assert")
    for case_id, g in _class_cases(n_max):
        value = solve(g, cache).value
        chi_sp = sum_paintability(g, limit=max(7, n_max), cache=cache)
        ve = g.n + g.edge_count()
        complete = _all_components_complete(g)
        report.add(
            case_id + " value=chiSP iff complete components",
            complete,
            (value == chi_sp),
            (value == chi_sp) == complete,
        )
        report.add(
            case_id + " value=v+e iff complete components",
            complete,
            (value == ve),
            (value == ve) == complete,
        )
        report.add(case_id + " value<=chiSP", True, value <= chi_sp, value <= chi_sp)
        report.add(case_id + " chiSP<=v+e", True, chi_sp <= ve, chi_sp <= ve)
    for t in range(1, 4):
        for r in range(1, 7):
            if t * r > 12 or (t > 1 and r > 3):
                continue
            res = multipartite_equality_check(t, r, cache)
            expected = t == 1 or r <= 2
            report.add(f"KM[{','.join([str(r)] * t)}]", expected, res.equal, res.equal == expected)
    return _timed(report, started)


def _all_components_complete(g: Graph) -> bool:
    for comp in components_within(g, g.vertex_mask):
        k = comp.bit_count()
        sub, _ = induced_subgraph(g, comp)
        if sub.edge_count() != k * (k - 1) // 2:
            return False
    return True


# ---------------------------------------------------------------------------
# Experiments (reported, not asserted)
# ---------------------------------------------------------------------------


def experiment_krr_fit(r_max: int = 100) -> tuple[SuiteReport, list[tuple]]:
    """Balanced bipartite values against the fit 4r - sqrt(r) - log3(r).

    Rows: (r, value, fit, diff).  Cases pass when |diff| <= 2.
    """
    started = time.perf_counter()
    report = SuiteReport("krr-fit", "report")
    table = bipartite_dp(r_max, r_max)
    rows = []
    for r in range(1, r_max + 1):
        value = table[r, r]
        fit = krr_fit(r)
        diff = value - fit
        rows.append((r, value, round(fit, 4), round(diff, 4)))
        report.add(f"K{r},{r}", "fit within 2", round(diff, 4), abs(diff) <= 2.0)
    return _timed(report, started), rows


def experiment_pnk_conjecture(
    n_max: int = 9, k_max: int = 2, cache: SolverCache | None = None
) -> tuple[SuiteReport, list[tuple]]:
    """Path powers against the disjoint-cliques value (conjectured equal).

    The k-th power of the n-path contains floor(n/(k+1)) disjoint (k+1)-cliques
    plus a leftover clique on n mod (k+1) vertices, so its value is at least
    floor(n/(k+1)) * choose(k+2, 2) + choose(r+1, 2); conjectured exact.
    Rows: (k, n, conjectured, actual, matches); never asserted.
    """
    started = time.perf_counter()
    cache = cache if cache is not None else SolverCache()
    report = SuiteReport("pnk-conjecture", "report")
    rows = []
    for k in range(1, k_max + 1):
        for n in range(k + 1, n_max + 1):
            copies, leftover = divmod(n, k + 1)
            conjectured = copies * triangular(k + 1) + triangular(leftover)
            actual = solve(generate(families.PathPower(n, k)), cache).value
            rows.append((k, n, conjectured, actual, conjectured == actual))
            report.add(f"P{n}^{k}", conjectured, actual, None)
    return _timed(report, started), rows


def experiment_join_sqrt_gap(
    r_max: int = 60, t_max: int = 10
) -> tuple[SuiteReport, list[tuple]]:
    """Join values against r + choose(t,2) + (t-1)sqrt(2r), flagging gaps > t.

    Rows: (r, t, exact, approx, gap, within_t).  The exact side is the value
    of the join of r independent vertices with a (t-1)-clique.
    """
    started = time.perf_counter()
    report = SuiteReport("join-sqrt-gap", "report")
    table = join_dp(r_max, max(0, t_max - 1))
    rows = []
    for r in range(1, r_max + 1):
        for t in range(1, t_max + 1):
            exact = table[r, t - 1]
            approx = r + math.comb(t, 2) + (t - 1) * math.sqrt(2 * r)
            gap = abs(exact - approx)
            rows.append((r, t, exact, round(approx, 4), round(gap, 4), gap <= t))
            report.add(f"J({r},{t - 1})", f"gap<={t}", round(gap, 4), None)
    flagged = [row for row in rows if not row[5]]
    report.add("entries-exceeding-t", 0, len(flagged), None)
    return _timed(report, started), rows


def experiment_ktree_conjecture(
    n_max: int = 7, cache: SolverCache | None = None
) -> tuple[SuiteReport, list[tuple]]:
    """2-trees between the clique-join lower form and the squared-path value.

    Checks the conjectured analogue of tree extremality for k = 2:
    value(K2 joined to n-2 independent vertices) <= value(T) <= value(P_n^2).
    Rows: (n, lower, value, upper, within); reported only.
    """
    started = time.perf_counter()
    cache = cache if cache is not None else SolverCache()
    report = SuiteReport("ktree-conjecture", "report")
    rows = []
    for n in range(3, n_max + 1):
        lower = closed_form(families.JoinEmptyClique(n - 2, 2))
        upper = solve(generate(families.PathPower(n, 2)), cache).value
        for g in two_tree_classes(n):
            value = solve(g, cache).value
            within = lower <= value <= upper
            rows.append((n, lower, value, upper, within))
            report.add(g.to_edge_list_string(), f"[{lower},{upper}]", value, None)
    return _timed(report, started), rows


def write_rows_csv(path, header: list[str], rows) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


EXPERIMENT_HEADERS = {
    "krr-fit": ["r", "value", "fit", "diff"],
    "pnk-conjecture": ["k", "n", "conjectured", "actual", "matches"],
    "join-sqrt-gap": ["r", "t", "exact", "approx", "gap", "within_t"],
    "ktree-conjecture": ["n", "lower", "value", "upper", "within"],
}

SUITES = {
    "closed-forms": suite_closed_forms,
    "tree-extremality": suite_tree_extremality,
    "bounds": suite_bounds,
    "equality-characterizations": suite_equality_characterizations,
}

EXPERIMENTS = {
    "krr-fit": experiment_krr_fit,
    "pnk-conjecture": experiment_pnk_conjecture,
    "join-sqrt-gap": experiment_join_sqrt_gap,
    "ktree-conjecture": experiment_ktree_conjecture,
}
