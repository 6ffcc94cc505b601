"""Classical graph parameters the game bounds are stated in.

Everything here is exact: the Hall ratio and the quadratic lower bound are
returned as :class:`fractions.Fraction` so bound checks never touch floats.
"""

from dataclasses import dataclass
from fractions import Fraction

from .canon import canonical_key
from .graph import Graph, bits, complement, components_within, delete_vertices, \
    induced_subgraph, maximal_independent_subsets

_chromatic_sum_memo: dict[bytes, int] = {}


def independence_number(g: Graph) -> int:
    """Maximum size of an independent set, by branch and bound.

    Branches on a maximum-degree vertex of the candidate set (include it and
    drop its closed neighborhood, or exclude it); prunes with the trivial
    ``chosen + |candidates|`` bound.
    """
    adj = g.adj
    best = 0

    def bb(cand: int, size: int) -> None:
        nonlocal best
        count = cand.bit_count()
        if size + count <= best:
            return
        if count == 0:
            best = size
            return
        v = max(bits(cand), key=lambda u: (adj[u] & cand).bit_count())
        bb(cand & ~adj[v] & ~(1 << v), size + 1)
        bb(cand & ~(1 << v), size)

    bb(g.vertex_mask, 0)
    return best


def max_matching(g: Graph) -> int:
    """Maximum matching size, exact.

    Recursion on the lowest vertex with a live neighbor: leave it unmatched or
    match it to each neighbor in turn, memoized on the surviving vertex mask.
    """
    adj = g.adj
    memo: dict[int, int] = {}

    def mm(alive: int) -> int:
        rem = alive
        v = -1
        while rem:
            low = rem & -rem
            cand = low.bit_length() - 1
            if adj[cand] & alive:
                v = cand
                break
            rem ^= low
        if v < 0:
            return 0
        if alive in memo:
            return memo[alive]
        best = mm(alive & ~(1 << v))
        for u in bits(adj[v] & alive):
            best = max(best, 1 + mm(alive & ~(1 << v) & ~(1 << u)))
        memo[alive] = best
        return best

    return mm(g.vertex_mask)


def chromatic_sum(g: Graph) -> int:
    """Minimum total of a proper coloring by positive integers.

    Uses the recursion "n plus the best completion after removing one color
    class", restricting the class to maximal independent sets: growing the
    first class never increases the total, since any vertex moved into it
    drops from a color >= 2 to color 1 and removing it cannot raise the
    optimal sum of the rest.  Additive over components; memoized on the
    canonical key of each connected piece.
    """
    total = 0
    for comp in components_within(g, g.vertex_mask):
        total += _chromatic_sum_connected(induced_subgraph(g, comp)[0])
    return total


def _chromatic_sum_connected(g: Graph) -> int:
    if g.n == 0:
        return 0
    key = canonical_key(g)
    cached = _chromatic_sum_memo.get(key)
    if cached is not None:
        return cached
    best = None
    for cls in maximal_independent_subsets(g, g.vertex_mask):
        sub = chromatic_sum(delete_vertices(g, cls))
        if best is None or sub < best:
            best = sub
    value = g.n + best
    _chromatic_sum_memo[key] = value
    return value


def independence_by_subset(g: Graph) -> list[int]:
    """Independence number of every induced subgraph, indexed by vertex mask."""
    if g.n > 20:
        raise ValueError("subset table limited to 20 vertices")
    adj = g.adj
    table = [0] * (1 << g.n)
    for s in range(1, 1 << g.n):
        low = s & -s
        v = low.bit_length() - 1
        table[s] = max(table[s ^ low], 1 + table[s & ~adj[v] & ~low])
    return table


def hall_ratio(g: Graph) -> Fraction:
    """Largest |S| / alpha(g[S]) over nonempty vertex subsets, exact."""
    if g.n == 0:
        raise ValueError("Hall ratio is undefined on the empty graph")
    alpha = independence_by_subset(g)
    best = Fraction(0)
    for s in range(1, 1 << g.n):
        ratio = Fraction(s.bit_count(), alpha[s])
        if ratio > best:
            best = ratio
    return best


@dataclass(frozen=True)
class BoundReport:
    """Exact bound data for one graph; lower bounds never exceed upper ones."""

    n: int
    alpha: int
    complement_matching: int  # q in the alpha<=2 closed form
    chromatic_sum: int
    hall_ratio: Fraction
    lower_2n_minus_alpha: int
    lower_quadratic: Fraction  # n^2/(2 alpha) + n/2
    upper_n_rho: Fraction
    upper_v_plus_e: int

    CSV_HEADER = (
        "n,alpha,complement_matching,chromatic_sum,hall_ratio,"
        "lower_2n_minus_alpha,lower_quadratic,upper_n_rho,upper_v_plus_e"
    )

    def csv_row(self) -> str:
        return ",".join(
            str(x)
            for x in (
                self.n,
                self.alpha,
                self.complement_matching,
                self.chromatic_sum,
                self.hall_ratio,
                self.lower_2n_minus_alpha,
                self.lower_quadratic,
                self.upper_n_rho,
                self.upper_v_plus_e,
            )
        )


def bound_report(g: Graph) -> BoundReport:
    """Evaluate every implemented bound on the game value of ``g``."""
    if g.n == 0:
        raise ValueError("bounds are stated for nonempty graphs")
    n = g.n
    alpha = independence_number(g)
    rho = hall_ratio(g)
    return BoundReport(
        n=n,
        alpha=alpha,
        complement_matching=max_matching(complement(g)),
        chromatic_sum=chromatic_sum(g),
        hall_ratio=rho,
        lower_2n_minus_alpha=2 * n - alpha,
        lower_quadratic=Fraction(n * n, 2 * alpha) + Fraction(n, 2),
        upper_n_rho=n * rho,
        upper_v_plus_e=n + g.edge_count(),
    )
