"""Closed forms and family dynamic programs for the sum-color cost.

All arithmetic is exact (ints and fractions).  The only floating point in
this module is the empirical-fit comparison value ``4r - sqrt(r) - log3(r)``
for balanced complete bipartite graphs.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import families
from .families import FamilySpec
from .graph import Graph, complement
from .invariants import independence_number, max_matching


def triangular(k: int) -> int:
    """k-th triangular number k(k+1)/2."""
    return k * (k + 1) // 2


def u(t: int) -> int:
    """Largest k with k(k+1)/2 <= t, via integer square root only.

    Satisfies u(t - u(t)) = u(t) when t+1 is triangular and u(t) - 1
    otherwise.
    """
    if t < 0:
        raise ValueError("argument must be nonnegative")
    return (math.isqrt(8 * t + 1) - 1) // 2


def alpha2_value(g: Graph) -> int:
    """Exact game value for graphs whose independence number is at most 2.

    Equals choose(n-q+1, 2) + choose(q+1, 2) where q is the maximum matching
    of the complement; this also equals the chromatic sum of such graphs.
    """
    if independence_number(g) > 2:
        raise ValueError("closed form requires independence number at most 2")
    n = g.n
    q = max_matching(complement(g))
    return math.comb(n - q + 1, 2) + math.comb(q + 1, 2)


def closed_form(spec: FamilySpec) -> int | None:
    """Exact game value of a family instance, or None when no closed form applies.

    Covered: paths (floor(3n/2)), stars (n + u(n-1)), complete and empty
    graphs, the join of an independent set with a clique
    (r + choose(s+1, 2) + s*u(r)), and complete multipartite graphs with all
    parts of size at most 2 (via the number q of 2-parts).
    """
    match spec:
        case families.Path(n):
            return 3 * n // 2
        case families.Star(n):
            return n + u(n - 1) if n >= 1 else 0
        case families.Complete(n):
            return triangular(n)
        case families.Empty(n):
            return n
        case families.JoinEmptyClique(r, s):
            return r + triangular(s) + s * u(r)
        case families.Cycle(n) if n <= 5:
            return alpha2_value(families.generate(spec))
        case families.CompleteBipartite(r, s):
            if r == 0 or s == 0:
                return r + s
            if s == 1:
                return closed_form(families.Star(r + 1))
            if r == 1:
                return closed_form(families.Star(s + 1))
            if r <= 2 and s <= 2:
                return closed_form(families.CompleteMultipartite((r, s)))
            return None
        case families.CompleteMultipartite(parts):
            if any(p > 2 for p in parts):
                return None
            n = sum(parts)
            q = sum(1 for p in parts if p == 2)
            return math.comb(n - q + 1, 2) + math.comb(q + 1, 2)
    return None


@dataclass(frozen=True)
class DpTable:
    """Exact value table indexed by the two family parameters."""

    kind: str  # "bipartite" or "join"
    values: tuple[tuple[int, ...], ...]

    @property
    def r_max(self) -> int:
        return len(self.values) - 1

    @property
    def s_max(self) -> int:
        return len(self.values[0]) - 1

    def __getitem__(self, rs: tuple[int, int]) -> int:
        r, s = rs
        return self.values[r][s]

    def csv_rows(self):
        """Rows ``(r, s, value)`` matching the header ``r,s,value``."""
        for r in range(self.r_max + 1):
            for s in range(self.s_max + 1):
                yield r, s, self.values[r][s]


def bipartite_dp(r_max: int, s_max: int) -> DpTable:
    """Exact values for all complete bipartite graphs up to (r_max, s_max).

    State (r, s) maximizes over moves (j, i) != (0, 0) marking j vertices in
    the r-side and i in the s-side; the reply deletes one side's marks, so the
    move is worth j + i + min over the defined branches of the smaller states.
    Vectorized over the move grid; the plain-loop reference implementation in
    the tests pins the semantics.
    """
    if r_max < 0 or s_max < 0:
        raise ValueError("table bounds must be nonnegative")
    t = np.zeros((r_max + 1, s_max + 1), dtype=np.int64)
    t[:, 0] = np.arange(r_max + 1)
    t[0, :] = np.arange(s_max + 1)
    for r in range(1, r_max + 1):
        jj = np.arange(1, r + 1)
        for s in range(1, s_max + 1):
            ii = np.arange(1, s + 1)
            a = t[r - 1 :: -1, s][:r]  # a[j-1] = value(r - j, s), j = 1..r
            b = t[r, s - 1 :: -1][:s]  # b[i-1] = value(r, s - i), i = 1..s
            core = np.minimum.outer(a, b) + jj[:, None] + ii[None, :]
            only_j = (a + jj).max()
            only_i = (b + ii).max()
            t[r, s] = max(int(core.max()), int(only_j), int(only_i))
    values = tuple(tuple(int(x) for x in row) for row in t)
    return DpTable("bipartite", values)


def join_dp(r_max: int, s_max: int) -> DpTable:
    """Exact values of the independent-set-joined-to-clique family.

    Recursion: marking the whole clique plus k independent vertices is
    optimal for some k in [1, r]; the reply removes either one clique vertex
    or all k marked independent vertices.  Bases: (r, 0) -> r and
    (0, s) -> choose(s+1, 2).  Must agree with the closed form everywhere.
    """
    if r_max < 0 or s_max < 0:
        raise ValueError("table bounds must be nonnegative")
    t = [[0] * (s_max + 1) for _ in range(r_max + 1)]
    for r in range(r_max + 1):
        t[r][0] = r
    for s in range(s_max + 1):
        t[0][s] = triangular(s)
    for r in range(1, r_max + 1):
        for s in range(1, s_max + 1):
            t[r][s] = max(
                k + s + min(t[r - k][s], t[r][s - 1]) for k in range(1, r + 1)
            )
    return DpTable("join", tuple(tuple(row) for row in t))


def bipartite_lower_bound(r: int, s: int) -> Fraction:
    """Proven lower bound r + (5s-3)/2 + u(r-s) for r >= s >= 1, exact."""
    if s < 1:
        raise ValueError("lower bound is stated for s >= 1")
    if r < s:
        raise ValueError("expected r >= s")
    return Fraction(r) + Fraction(5 * s - 3, 2) + u(r - s)


def bipartite_upper_holds(value: int, r: int, s: int) -> bool:
    """Exact check of value <= r + s + 2*sqrt(r*s), in integer arithmetic."""
    d = value - r - s
    return d <= 0 or d * d <= 4 * r * s


def bipartite_bounds(r: int, s: int) -> tuple[Fraction, float]:
    """(exact lower bound, float upper bound r + s + 2*sqrt(rs)).

    The float is informational; use :func:`bipartite_upper_holds` for exact
    comparisons against the upper bound.
    """
    return bipartite_lower_bound(r, s), r + s + 2 * math.sqrt(r * s)


def krr_fit(r: int) -> float:
    """Empirical fit 4r - sqrt(r) - log3(r) for the balanced bipartite value."""
    if r < 1:
        raise ValueError("fit is defined for r >= 1")
    return 4 * r - math.sqrt(r) - math.log(r, 3)


@dataclass(frozen=True)
class MultipartiteEqualityResult:
    t: int
    r: int
    lhs: int | float
    rhs: int
    equal: bool | None  # None when only a lower bound on lhs is available
    exact: bool


def multipartite_equality_check(
    t: int, r: int, cache=None, *, limit: int = 12
) -> MultipartiteEqualityResult:
    """Compare the balanced multipartite game value against r * choose(t+1, 2).

    The graph is the complete multipartite graph with t parts of size r (the
    complement of t disjoint r-cliques).  Within the solver cap the left side
    is exact; beyond it we substitute the strategy lower bound
    r*choose(t+1, 2) + (t-1)*(sqrt(2r) - 2), which can refute equality but
    not confirm it, so ``equal`` becomes None when the bound does not exceed
    the right side.
    """
    from .solver import solve  # local import to avoid a cycle

    if t < 1 or r < 1:
        raise ValueError("parameters must be positive")
    rhs = r * triangular(t)
    if t * r <= limit:
        g = families.generate(families.CompleteMultipartite((r,) * t))
        value = solve(g, cache, limit=limit).value
        return MultipartiteEqualityResult(t, r, value, rhs, value == rhs, True)
    bound = rhs + (t - 1) * (math.sqrt(2 * r) - 2)
    return MultipartiteEqualityResult(t, r, bound, rhs, False if bound > rhs else None, False)
