"""Executable Lister and Painter strategies, a game runner, and evaluators.

Painter policies are pure functions of (current graph, marked set) and must
be label-equivariant: relabeling the graph relabels the reply, up to an
automorphism.  All built-ins achieve this by breaking ties toward the
smallest canonical key of the surviving graph; it is what lets
:func:`painter_guarantee` memoize on canonical classes.

Lister policies see the fixed root graph plus the mask of surviving
vertices, which lets strategies that commit to a decomposition of the root
(disjoint subgames, tree splits) stay pure functions of the state.

The evaluators compute exact worst-case performance: ``painter_guarantee``
maximizes over every nonempty marked set against the fixed Painter, and
``lister_guarantee`` minimizes over Painter replies (maximal independent
subsets of the mark, which is never worse for Painter) with Lister fixed.
"""

from dataclasses import dataclass
from typing import Callable

from .canon import canonical_key, canonical_key_colored
from .formulas import u
from .game import GameRecord, IllegalMoveError
from .graph import (
    Graph,
    bits,
    complete_bipartite_sides,
    complete_multipartite_parts,
    components_within,
    delete_vertices,
    induced_subgraph,
    is_forest,
    is_independent,
    maximal_independent_subsets,
    neighbors_of_set,
)
from .solver import DEFAULT_LIMIT, SlowSolver, SolverCache

PAINTER_EVAL_LIMIT = 10

_painter_guarantee_memo: dict[tuple[str, bytes], int] = {}


class GraphClassError(ValueError):
    """The strategy does not apply to this graph."""


class EvaluatorLimitError(RuntimeError):
    """The graph exceeds the configured evaluator size cap."""


@dataclass(frozen=True)
class PainterStrategy:
    key: str
    respond: Callable[[Graph, int], int]


@dataclass(frozen=True)
class ListerStrategy:
    key: str
    marks: Callable[[Graph, int], int]  # (root graph, alive mask) -> mark mask


# ---------------------------------------------------------------------------
# Painter policies
# ---------------------------------------------------------------------------


def _lowest_k(mask: int, k: int) -> int:
    out = 0
    for v in bits(mask):
        if k == 0:
            break
        out |= 1 << v
        k -= 1
    return out


def painter_greedy(g: Graph, m: int) -> int:
    """Color a maximum independent subset of the marked set.

    Among maximum subsets, prefer the one whose deletion leaves the smallest
    canonical key, then the smallest mask.
    """
    if m == 0:
        raise ValueError("marked set must be nonempty")
    candidates = list(maximal_independent_subsets(g, m))
    top = max(c.bit_count() for c in candidates)
    best = None
    for c in candidates:
        if c.bit_count() != top:
            continue
        entry = (canonical_key(delete_vertices(g, c)), c)
        if best is None or entry < best:
            best = entry
    return best[1]


def painter_tree(t: Graph, m: int) -> int:
    """Forest reply: per component of t[m], color the better bipartition side.

    For a connected marked set C in the surviving forest, cut C's internal
    edges and classify each C-vertex by the parity of its piece's order
    (A = even, B = odd).  Of the two sides X, Y of the bipartition of t[C],
    color the side I maximizing 3|I| + |A and I| + |B minus I|; one side
    always reaches 2|C|, which keeps the total at or below the path formula.

    Components of t[m] are handled one after another, each against the
    forest with the earlier choices already removed: parities must reflect
    the vertices this round has taken, or simultaneous choices double-count
    the credit for shared even pieces.  The per-step bound then telescopes
    over the components.  Processing order and tie-breaks go through
    canonical keys, so the reply is label-equivariant.
    """
    if not is_forest(t):
        raise GraphClassError("painter_tree requires a forest")
    if m == 0:
        raise ValueError("marked set must be nonempty")
    comps = components_within(t, m)
    if len(comps) > 1:
        comps.sort(key=lambda c: _component_order_key(t, m, c))
    reply = 0
    alive = t.vertex_mask
    for comp in comps:
        choice = _tree_component_choice(t, comp, alive)
        reply |= choice
        alive &= ~choice
    return reply


def _component_order_key(t: Graph, m: int, comp: int) -> bytes:
    colors = [2 if comp & (1 << v) else 1 if m & (1 << v) else 0 for v in range(t.n)]
    return canonical_key_colored(t, colors)


def _tree_component_choice(t: Graph, comp: int, alive: int) -> int:
    if comp.bit_count() == 1:
        return comp
    # Cutting comp's internal edges strands each comp vertex in its own
    # piece (a forest admits no way back into comp); classify pieces by the
    # parity of their order within the surviving forest.
    parity_even = 0
    for v in bits(comp):
        piece = 1 << v
        frontier = piece
        while frontier:
            grown = 0
            for w in bits(frontier):
                row = t.adj[w] & alive
                if (1 << w) & comp:
                    row &= ~comp
                grown |= row
            grown &= ~piece
            piece |= grown
            frontier = grown
        if piece.bit_count() % 2 == 0:
            parity_even |= 1 << v
    x, y = _forest_bipartition(t, comp)
    a = parity_even
    score_x = 3 * x.bit_count() + (a & x).bit_count() + (y & ~a & comp).bit_count()
    score_y = 3 * y.bit_count() + (a & y).bit_count() + (x & ~a & comp).bit_count()
    if score_x != score_y:
        return x if score_x > score_y else y
    kx = canonical_key_colored(t, [2 if x & (1 << v) else 1 if alive & (1 << v) else 0 for v in range(t.n)])
    ky = canonical_key_colored(t, [2 if y & (1 << v) else 1 if alive & (1 << v) else 0 for v in range(t.n)])
    if kx != ky:
        return x if kx < ky else y
    return min(x, y)


def _forest_bipartition(t: Graph, comp: int) -> tuple[int, int]:
    x = comp & -comp
    y = 0
    level = x
    side = 0
    while level:
        nxt = neighbors_of_set(t, level) & comp & ~(x | y)
        if side == 0:
            y |= nxt
        else:
            x |= nxt
        level = nxt
        side ^= 1
    return x, y


def painter_alpha2(g: Graph, m: int) -> int:
    """Reply for complete multipartite graphs with parts of size at most 2.

    Color a fully marked 2-part if one exists; otherwise a marked singleton
    part; otherwise one marked vertex of a 2-part.  Each reply keeps the
    graph in class and realizes the matching closed form exactly.
    """
    parts = complete_multipartite_parts(g)
    if parts is None or any(p.bit_count() > 2 for p in parts):
        raise GraphClassError("painter_alpha2 requires complete multipartite, parts <= 2")
    if m == 0:
        raise ValueError("marked set must be nonempty")
    two_parts = [p for p in parts if p.bit_count() == 2]
    for p in two_parts:
        if p & m == p:
            return p
    singles = 0
    for p in parts:
        if p.bit_count() == 1:
            singles |= p
    if singles & m:
        low = singles & m
        return low & -low
    low = m & -m
    return low


def painter_bipartite_threshold(r_side: int, s_side: int, m: int) -> int:
    """Threshold reply on a complete bipartite graph with sides r >= s.

    With j marks on the r-side and i on the s-side, color the r-side marks
    when j*j*s >= i*i*r (the exact form of j >= i*sqrt(r/s); ties go to the
    r-side), otherwise the s-side marks.  A side without marks never gets
    colored.
    """
    if m & ~(r_side | s_side):
        raise ValueError("marked set extends outside the two sides")
    r = r_side.bit_count()
    s = s_side.bit_count()
    j = (m & r_side).bit_count()
    i = (m & s_side).bit_count()
    if i == 0:
        return m & r_side
    if j == 0:
        return m & s_side
    if j * j * s >= i * i * r:
        return m & r_side
    return m & s_side


def greedy_painter() -> PainterStrategy:
    return PainterStrategy("greedy", painter_greedy)


def tree_painter() -> PainterStrategy:
    return PainterStrategy("tree", painter_tree)


def alpha2_painter() -> PainterStrategy:
    return PainterStrategy("alpha2", painter_alpha2)


def threshold_painter() -> PainterStrategy:
    def respond(g: Graph, m: int) -> int:
        sides = complete_bipartite_sides(g)
        if sides is None:
            if g.edge_count() == 0:
                return m
            raise GraphClassError("threshold painter requires a complete bipartite graph")
        big, small = sides
        return painter_bipartite_threshold(big, small, m)

    return PainterStrategy("bipartite-threshold", respond)


PAINTERS: dict[str, Callable[[], PainterStrategy]] = {
    "greedy": greedy_painter,
    "tree": tree_painter,
    "alpha2": alpha2_painter,
    "threshold": threshold_painter,
}


# ---------------------------------------------------------------------------
# Lister policies
# ---------------------------------------------------------------------------


def lister_mark_all(g: Graph) -> int:
    """Mark every remaining vertex; guarantees at least the chromatic sum."""
    if g.n == 0:
        raise ValueError("graph is empty")
    return g.vertex_mask


def mark_all_lister() -> ListerStrategy:
    return ListerStrategy("mark-all", lambda root, alive: alive)


def _optimal_move(root: Graph, live: int, cache: SolverCache) -> int:
    sub, old = induced_subgraph(root, live)
    solver = SlowSolver(sub, cache, limit=sub.n)
    move = solver.best_first_moves()[0]
    out = 0
    for v in bits(move):
        out |= 1 << old[v]
    return out


def optimal_lister(cache: SolverCache | None = None, *, limit: int = DEFAULT_LIMIT) -> ListerStrategy:
    """Solver-backed optimal play on whatever remains."""
    cache = cache if cache is not None else SolverCache()

    def marks(root: Graph, alive: int) -> int:
        if alive.bit_count() > limit:
            raise EvaluatorLimitError("graph exceeds the optimal-play cap")
        return _optimal_move(root, alive, cache)

    return ListerStrategy("optimal", marks)


def lister_disjoint(g: Graph, subgraph_masks, cache: SolverCache | None = None) -> ListerStrategy:
    """Play optimally inside each listed induced subgraph in turn.

    Guarantees at least the sum of the subgraph values; leftover vertices
    outside every listed subgraph are marked all at once at the end.
    """
    masks = list(subgraph_masks)
    seen = 0
    for mask in masks:
        if mask & ~g.vertex_mask:
            raise ValueError("subgraph extends outside the graph")
        if mask & seen:
            raise ValueError("subgraphs overlap")
        seen |= mask
    cache = cache if cache is not None else SolverCache()

    def marks(root: Graph, alive: int) -> int:
        for mask in masks:
            live = alive & mask
            if live:
                return _optimal_move(root, live, cache)
        return alive

    return ListerStrategy(f"disjoint[{len(masks)}]", marks)


def _join_move(r_live: int, s_live: int) -> int:
    # Mark the whole clique side plus u(|R|) independent-side vertices.
    if s_live == 0:
        return r_live
    return s_live | _lowest_k(r_live, u(r_live.bit_count()))


def _recognize_join(g: Graph) -> tuple[int, int]:
    """Split vertices into (independent side, dominating clique side)."""
    full = g.vertex_mask
    s_side = 0
    for v in range(g.n):
        if g.adj[v] == full & ~(1 << v):
            s_side |= 1 << v
    r_side = full & ~s_side
    if not is_independent(g, r_side):
        raise GraphClassError("not a join of an independent set with a clique")
    return r_side, s_side


def lister_join(g: Graph, cache: SolverCache | None = None) -> ListerStrategy:
    """Strategy achieving r + choose(s+1,2) + s*u(r) on the independent-join-clique family."""
    r_side, s_side = _recognize_join(g)

    def marks(root: Graph, alive: int) -> int:
        return _join_move(alive & r_side, alive & s_side)

    return ListerStrategy(f"join[{r_side.bit_count()},{s_side.bit_count()}]", marks)


def lister_star(g: Graph, cache: SolverCache | None = None) -> ListerStrategy:
    """Join strategy specialized to stars (one dominating center)."""
    r_side, s_side = _recognize_join(g)
    if g.n > 2 and s_side.bit_count() != 1:
        raise GraphClassError("not a star")
    strategy = lister_join(g, cache)
    return ListerStrategy(f"star[{g.n}]", strategy.marks)


def lister_tree(t: Graph, cache: SolverCache | None = None) -> ListerStrategy:
    """Recursive edge-splitting on a tree; guarantees at least n + u(n-1).

    Stars play the star strategy outright.  Otherwise split off a 2- or
    3-vertex piece when an edge allows it; below 8 vertices fall back to
    optimal play, and beyond that split at an edge leaving at least 4
    vertices on both sides (such an edge exists for non-stars without a
    2/3-split).  Pieces are played one after the other.
    """
    if not is_forest(t) or len(components_within(t, t.vertex_mask)) != 1:
        raise GraphClassError("lister_tree requires a tree")
    cache = cache if cache is not None else SolverCache()
    plan: list[tuple[str, int, int]] = []  # (kind, mask, center-or-zero)

    def is_star_mask(mask: int) -> int | None:
        # Returns the center when t[mask] is a star (or tiny), else None.
        if mask.bit_count() <= 2:
            return mask.bit_length() - 1  # any vertex serves as center
        centers = [v for v in bits(mask) if (t.adj[v] & mask) == mask & ~(1 << v)]
        return centers[0] if centers else None

    def split(mask: int) -> None:
        center = is_star_mask(mask)
        if center is not None:
            plan.append(("star", mask, center))
            return
        n = mask.bit_count()
        edges = [
            (v, w)
            for v in bits(mask)
            for w in bits(t.adj[v] & mask)
            if v < w
        ]
        # A cut edge is usable when the separate guarantees of its sides
        # cover the whole bound: u(n1-1) + u(n2-1) >= u(n-1).  Edges leaving
        # a 2- or 3-vertex side always qualify once n >= 5 and are preferred;
        # for larger trees without one, an edge with both sides >= 4
        # qualifies by concavity of the bound.
        fallback = None
        for v, w in edges:
            side = _side_of_cut(t, mask, v, w)
            rest = mask & ~side
            n1, n2 = side.bit_count(), rest.bit_count()
            if u(n1 - 1) + u(n2 - 1) < u(n - 1):
                continue
            if min(n1, n2) in (2, 3):
                split(side)
                split(rest)
                return
            if fallback is None:
                fallback = (side, rest)
        if n <= 7 or fallback is None:
            plan.append(("optimal", mask, 0))
            return
        side, rest = fallback
        split(side)
        split(rest)

    split(t.vertex_mask)

    def marks(root: Graph, alive: int) -> int:
        for kind, mask, center in plan:
            live = alive & mask
            if not live:
                continue
            if kind == "star":
                return _join_move(live & ~(1 << center), live & (1 << center))
            return _optimal_move(root, live, cache)
        return alive

    return ListerStrategy(f"tree[{t.n}]", marks)


def _side_of_cut(t: Graph, mask: int, v: int, w: int) -> int:
    """Vertices of ``mask`` on v's side after cutting edge v-w."""
    side = 1 << v
    frontier = side
    blocked = 1 << w
    while frontier:
        grown = neighbors_of_set(t, frontier) & mask & ~side & ~blocked
        side |= grown
        frontier = grown
    return side


def lister_bipartite(r: int, s: int, cache: SolverCache | None = None) -> ListerStrategy:
    """Case strategy on the standard-numbered complete bipartite graph.

    With r' and s' surviving vertices (larger side first): mark one vertex a
    side when equal; two from each side when they differ by one; one small
    vertex plus u(r'-s') large ones when the gap is at least two.  A single
    surviving small vertex turns the position into a star, which is played
    with the star move.  The two states (2,2) and (3,2) fall outside the
    case analysis and are played optimally instead (at (3,2) the case move
    only collects 7, half a point under the bound).
    """
    if not r >= s >= 1:
        raise ValueError("expected r >= s >= 1")
    x_mask = (1 << r) - 1
    y_mask = ((1 << (r + s)) - 1) ^ x_mask
    cache = cache if cache is not None else SolverCache()

    def marks(root: Graph, alive: int) -> int:
        if root.n != r + s:
            raise GraphClassError(f"expected the standard K_{{{r},{s}}} numbering")
        big, small = alive & x_mask, alive & y_mask
        if big.bit_count() < small.bit_count():
            big, small = small, big
        rr, ss = big.bit_count(), small.bit_count()
        if ss == 0:
            return alive
        if ss == 1:
            return _join_move(big, small)
        if (rr, ss) in ((2, 2), (3, 2)):
            return _optimal_move(root, alive, cache)
        if rr == ss:
            return (big & -big) | (small & -small)
        if rr == ss + 1:
            return _lowest_k(big, 2) | _lowest_k(small, 2)
        return (small & -small) | _lowest_k(big, u(rr - ss))

    return ListerStrategy(f"bipartite[{r},{s}]", marks)


def lister_multipartite(t: int, r: int) -> ListerStrategy:
    """Strategy on the complete multipartite graph with t parts of size r.

    While at least two parts are untouched, mark r-1 vertices in every
    untouched part; once the position collapses toward one multi-vertex part
    plus singletons, switch to the join strategy on that residue.
    """
    if t < 1 or r < 1:
        raise ValueError("parameters must be positive")
    part_masks = [((1 << r) - 1) << (i * r) for i in range(t)]

    def marks(root: Graph, alive: int) -> int:
        if root.n != t * r:
            raise GraphClassError(f"expected the standard {t}-parts-of-{r} numbering")
        live = [alive & p for p in part_masks]
        full = [p for p in live if p.bit_count() == r]
        multi = [p for p in live if p.bit_count() >= 2]
        if r >= 2 and len(full) >= 2:
            move = 0
            for p in full:
                move |= _lowest_k(p, r - 1)
            return move
        if not multi:
            return alive
        if len(multi) == 1:
            return _join_move(multi[0], alive & ~multi[0])
        move = 0
        for p in multi:
            move |= _lowest_k(p, p.bit_count() - 1)
        return move

    return ListerStrategy(f"multipartite[{t},{r}]", marks)


# ---------------------------------------------------------------------------
# Runner and evaluators
# ---------------------------------------------------------------------------


def run_game(g: Graph, lister: ListerStrategy, painter: PainterStrategy) -> GameRecord:
    """Alternate the two policies until the graph is empty."""
    record = GameRecord(g.n)
    alive = g.vertex_mask
    round_index = 0
    max_rounds = g.n * (g.n + 1)
    while alive:
        round_index += 1
        if round_index > max_rounds:
            raise IllegalMoveError(round_index, "game makes no progress")
        marked = lister.marks(g, alive)
        if marked == 0:
            raise IllegalMoveError(round_index, f"lister {lister.key!r} marked nothing")
        if marked & ~alive:
            raise IllegalMoveError(round_index, f"lister {lister.key!r} marked deleted vertices")
        current, old = induced_subgraph(g, alive)
        to_local = {v: i for i, v in enumerate(old)}
        local_marked = 0
        for v in bits(marked):
            local_marked |= 1 << to_local[v]
        local_colored = painter.respond(current, local_marked)
        if local_colored & ~local_marked:
            raise IllegalMoveError(round_index, f"painter {painter.key!r} colored unmarked vertices")
        if not is_independent(current, local_colored):
            raise IllegalMoveError(round_index, f"painter {painter.key!r} colored a dependent set")
        colored = 0
        for v in bits(local_colored):
            colored |= 1 << old[v]
        record.rounds.append((marked, colored))
        alive &= ~colored
    return record


def painter_guarantee(g: Graph, painter: PainterStrategy, *, limit: int = PAINTER_EVAL_LIMIT) -> int:
    """Exact worst case of the fixed Painter: max over all Lister play."""
    if g.n > limit:
        raise EvaluatorLimitError(f"graph has {g.n} vertices, evaluator cap is {limit}")
    return _painter_value(g, painter)


def _painter_value(g: Graph, painter: PainterStrategy) -> int:
    if g.n == 0:
        return 0
    key = (painter.key, canonical_key(g))
    cached = _painter_guarantee_memo.get(key)
    if cached is not None:
        return cached
    full = g.vertex_mask
    best = 0
    marked = full
    while marked:
        colored = painter.respond(g, marked)
        if colored == 0 or colored & ~marked or not is_independent(g, colored):
            raise IllegalMoveError(0, f"painter {painter.key!r} returned an illegal reply")
        score = marked.bit_count() + _painter_value(delete_vertices(g, colored), painter)
        if score > best:
            best = score
        marked = (marked - 1) & full
    _painter_guarantee_memo[key] = best
    return best


def lister_guarantee(g: Graph, lister: ListerStrategy, *, limit: int = DEFAULT_LIMIT) -> int:
    """Exact worst case of the fixed Lister: min over Painter replies.

    Painter replies range over the maximal independent subsets of the mark;
    coloring more at no cost is never worse for Painter.
    """
    if g.n > limit:
        raise EvaluatorLimitError(f"graph has {g.n} vertices, evaluator cap is {limit}")
    memo: dict[int, int] = {0: 0}

    def value(alive: int) -> int:
        cached = memo.get(alive)
        if cached is not None:
            return cached
        marked = lister.marks(g, alive)
        if marked == 0:
            raise IllegalMoveError(0, f"lister {lister.key!r} marked nothing")
        if marked & ~alive:
            raise IllegalMoveError(0, f"lister {lister.key!r} marked deleted vertices")
        worst = None
        for colored in maximal_independent_subsets(g, marked):
            rest = value(alive & ~colored)
            if worst is None or rest < worst:
                worst = rest
        result = marked.bit_count() + worst
        memo[alive] = result
        return result

    return value(g.vertex_mask)


def clear_evaluator_cache() -> None:
    _painter_guarantee_memo.clear()
