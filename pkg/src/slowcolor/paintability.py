"""Token-game decision procedure and exact sum-paintability.

In the painting game each vertex v carries f(v) tokens; marking v spends one.
Lister wins by marking some vertex more often than its token count, Painter
by coloring everything first.  ``is_f_paintable`` decides the winner by full
alternation over Lister's marked sets, after first applying the forced-move
reduction: a vertex holding exactly one token must be colorable on sight, so
it can be deleted up front with its neighbors paying one token each, and a
vertex reduced to zero tokens loses the game for Painter outright.

Painter's replies are restricted to subsets that are maximal independent
within the marked set.  This keeps the decision exact: paintability is
monotone under vertex deletion (a winning strategy restricts to any induced
subgraph), so coloring extra marked vertices at no cost never hurts; the
test suite pins this against a restriction-free oracle.

States are memoized on the colored canonical key of (graph, token vector),
so relabelings and automorphic token assignments share table entries.
"""

from .canon import canonical_key_colored
from .graph import Graph, bits, induced_subgraph, maximal_independent_subsets

DEFAULT_DECISION_LIMIT = 8
DEFAULT_SUM_LIMIT = 7

_paintable_memo: dict[bytes, bool] = {}


class PaintabilityLimitError(RuntimeError):
    """The graph exceeds the configured paintability size cap."""


def _validate_tokens(g: Graph, f) -> tuple[int, ...]:
    f = tuple(f)
    if len(f) != g.n:
        raise ValueError(f"expected {g.n} token counts, got {len(f)}")
    if any(x < 1 for x in f):
        raise ValueError("every vertex needs at least one token")
    return f


def _reduce_forced(g: Graph, f: tuple[int, ...]):
    """Delete single-token vertices, charging their neighbors one token each.

    Returns the reduced (graph, tokens), or None when some vertex runs out of
    tokens, which is an immediate Lister win.
    """
    tokens = list(f)
    while True:
        target = next((v for v in range(g.n) if tokens[v] == 1), None)
        if target is None:
            return g, tuple(tokens)
        neighbor_bits = g.adj[target]
        keep = g.vertex_mask & ~(1 << target)
        g, old = induced_subgraph(g, keep)
        new_tokens = []
        for v in old:
            x = tokens[v] - (1 if neighbor_bits & (1 << v) else 0)
            if x == 0:
                return None
            new_tokens.append(x)
        tokens = new_tokens


def is_f_paintable(g: Graph, f, *, limit: int = DEFAULT_DECISION_LIMIT) -> bool:
    """True iff Painter wins the painting game on ``g`` with tokens ``f``."""
    if g.n > limit:
        raise PaintabilityLimitError(f"graph has {g.n} vertices, cap is {limit}")
    f = _validate_tokens(g, f)
    return _paintable(g, f)


def _paintable(g: Graph, f: tuple[int, ...]) -> bool:
    reduced = _reduce_forced(g, f)
    if reduced is None:
        return False
    g, f = reduced
    if g.n == 0:
        return True
    key = canonical_key_colored(g, f)
    cached = _paintable_memo.get(key)
    if cached is not None:
        return cached
    full = g.vertex_mask
    result = True
    marked = full
    while marked:
        survivable = False
        for colored in maximal_independent_subsets(g, marked):
            keep = full & ~colored
            sub, old = induced_subgraph(g, keep)
            sub_f = tuple(
                f[v] - (1 if marked & (1 << v) else 0) for v in old
            )
            if _paintable(sub, sub_f):
                survivable = True
                break
        if not survivable:
            result = False
            break
        marked = (marked - 1) & full
    _paintable_memo[key] = result
    return result


def sum_paintability(
    g: Graph,
    *,
    limit: int = DEFAULT_SUM_LIMIT,
    value_lower: int | None = None,
    cache=None,
) -> int:
    """Minimum total token count under which ``g`` is paintable.

    Searches totals upward from the game value of ``g`` (Painter playing to a
    sufficient allocation shows the game value never exceeds it) and stops at
    |V| + |E|, which greedy play always achieves.  Per-vertex counts stay in
    [1, deg+1]: more than deg+1 tokens are never needed on a vertex.
    Component-additive, like the game value.
    """
    from .graph import components_within
    from .solver import solve

    if g.n > limit:
        raise PaintabilityLimitError(f"graph has {g.n} vertices, cap is {limit}")
    if g.n == 0:
        return 0
    comps = components_within(g, g.vertex_mask)
    if len(comps) > 1:
        total = 0
        for comp in comps:
            total += sum_paintability(induced_subgraph(g, comp)[0], limit=limit, cache=cache)
        return total

    lower = value_lower if value_lower is not None else solve(g, cache).value
    caps = [g.degree(v) + 1 for v in range(g.n)]
    upper = g.n + g.edge_count()
    for total in range(lower, upper + 1):
        if _exists_paintable(g, caps, total):
            return total
    raise AssertionError("greedy token bound violated")  # pragma: no cover


def _exists_paintable(g: Graph, caps: list[int], total: int) -> bool:
    n = g.n
    seen: set[bytes] = set()
    suffix_max = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_max[i] = suffix_max[i + 1] + caps[i]

    def assign(i: int, remaining: int, partial: list[int]) -> bool:
        if i == n:
            key = canonical_key_colored(g, partial)
            if key in seen:
                return False
            seen.add(key)
            return _paintable(g, tuple(partial))
        lo = max(1, remaining - suffix_max[i + 1])
        hi = min(caps[i], remaining - (n - i - 1))
        for x in range(lo, hi + 1):
            partial.append(x)
            if assign(i + 1, remaining - x, partial):
                partial.pop()
                return True
            partial.pop()
        return False

    return assign(0, total, [])
