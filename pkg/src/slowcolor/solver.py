"""Exact computation of the sum-color cost via the minimax recursion.

The game value of a graph satisfies

    value(G) = max over nonempty M of (|M| + min over independent I in M
               of value(G - I)),         value(empty) = 0.

The solver prunes the move space without changing the value:

* Lister marks only sets inducing a connected subgraph, inside a single
  component (a disconnected mark can be replaced by marking its pieces on
  successive rounds).
* Painter colors only subsets that are maximal independent within the marked
  set (coloring more vertices at no extra cost never hurts).
* The value of a disconnected graph is the sum over its components: playing
  each component separately gives Lister at least the sum, and a Painter who
  answers within the touched component caps it at the sum.

Each connected state is memoized on its canonical key, so a cache survives
relabelings and can be persisted across runs (see :class:`SolverCache`).
The unpruned definition is kept alive by the test-suite oracle, which checks
all isomorphism classes up to five vertices against this solver.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone

from .canon import canonical_key
from .game import GameRecord
from .graph import (
    Graph,
    bits,
    components_within,
    connected_subsets,
    induced_subgraph,
    maximal_independent_subsets,
)

DEFAULT_LIMIT = 12

CACHE_HEADER = "slowcolor-cache v1"


class SolverLimitError(RuntimeError):
    """The graph exceeds the configured solver size cap."""


class SolveCancelled(RuntimeError):
    """Cooperative cancellation was requested during a solve."""


class CacheFormatError(ValueError):
    """A persisted cache file is malformed; carries the offending line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SolverCache:
    """Canonical key -> exact game value, safely shared between solves.

    Inserts are idempotent (a key always maps to the one correct value), so
    concurrent use cannot corrupt results.
    """

    def __init__(self):
        self.values: dict[bytes, int] = {}
        self.created = datetime.now(timezone.utc).isoformat(timespec="seconds")

    def __len__(self) -> int:
        return len(self.values)

    def get(self, key: bytes) -> int | None:
        return self.values.get(key)

    def put(self, key: bytes, value: int) -> None:
        self.values[key] = value

    def save(self, path) -> None:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(CACHE_HEADER + "\n")
            for key in sorted(self.values):
                fh.write(f"{key.hex()} {self.values[key]}\n")

    @classmethod
    def load(cls, path) -> "SolverCache":
        cache = cls()
        with open(path, "r", encoding="ascii") as fh:
            header = fh.readline().rstrip("\n")
            if header != CACHE_HEADER:
                raise CacheFormatError(f"expected header {CACHE_HEADER!r}, got {header!r}", 1)
            for lineno, line in enumerate(fh, start=2):
                line = line.strip()
                if not line:
                    continue
                parts = line.split()
                if len(parts) != 2:
                    raise CacheFormatError("expected '<hex key> <value>'", lineno)
                try:
                    key = bytes.fromhex(parts[0])
                    value = int(parts[1])
                except ValueError as exc:
                    raise CacheFormatError(str(exc), lineno) from exc
                if value < 0:
                    raise CacheFormatError("negative value", lineno)
                cache.values[key] = value
        return cache


@dataclass
class SolveResult:
    """Game value plus the tie-broken optimal first marks and search stats."""

    value: int
    optimal_marks: list[int] = field(default_factory=list)
    node_count: int = 0
    cache_hits: int = 0


class SlowSolver:
    """Solver bound to one root graph.

    States are vertex masks of the root; each connected piece is valued once
    per canonical class through the shared cache.  ``should_cancel`` is polled
    between node expansions.
    """

    def __init__(
        self,
        g: Graph,
        cache: SolverCache | None = None,
        *,
        limit: int = DEFAULT_LIMIT,
        use_bound_pruning: bool = False,
        should_cancel=None,
    ):
        if g.n > limit:
            raise SolverLimitError(f"graph has {g.n} vertices, solver cap is {limit}")
        self.g = g
        self.cache = cache if cache is not None else SolverCache()
        self.use_bound_pruning = use_bound_pruning
        self.should_cancel = should_cancel
        self.node_count = 0
        self.cache_hits = 0
        self._mask_value: dict[int, int] = {0: 0}
        self._key_of_mask: dict[int, bytes] = {}

    # -- values ---------------------------------------------------------

    def value_of_mask(self, mask: int) -> int:
        cached = self._mask_value.get(mask)
        if cached is not None:
            return cached
        total = 0
        for comp in components_within(self.g, mask):
            total += self._component_value(comp)
        self._mask_value[mask] = total
        return total

    def _canonical_of_mask(self, mask: int) -> bytes:
        key = self._key_of_mask.get(mask)
        if key is None:
            sub, _ = induced_subgraph(self.g, mask)
            key = canonical_key(sub)
            self._key_of_mask[mask] = key
        return key

    def _component_value(self, comp: int) -> int:
        key = self._canonical_of_mask(comp)
        cached = self.cache.get(key)
        if cached is not None:
            self.cache_hits += 1
            return cached
        if self.should_cancel is not None and self.should_cancel():
            raise SolveCancelled("solve cancelled")
        self.node_count += 1
        best = 0
        for marked in connected_subsets(self.g, comp):
            score = self._move_value(comp, marked, incumbent=best)
            if score > best:
                best = score
        self.cache.put(key, best)
        return best

    def _move_value(self, state: int, marked: int, incumbent: int = -1) -> int:
        size = marked.bit_count()
        worst = None
        prune = self.use_bound_pruning and incumbent >= 0
        for colored in maximal_independent_subsets(self.g, marked):
            rest_mask = state & ~colored
            if prune and size + _edge_bound(self.g, rest_mask) <= incumbent:
                # value(H) <= |V(H)| + |E(H)| caps this reply, hence the whole
                # move, at or below the incumbent; an underestimate is safe
                # under the max.
                return size
            rest = self.value_of_mask(rest_mask)
            if worst is None or rest < worst:
                worst = rest
                if prune and size + worst <= incumbent:
                    return size + worst
        return size + worst

    # -- reporting ------------------------------------------------------

    def best_first_moves(self, mask: int | None = None) -> list[int]:
        """All pruned-move-space marks achieving the optimum, smallest mask first."""
        if mask is None:
            mask = self.g.vertex_mask
        target = self.value_of_mask(mask)
        moves = []
        for comp in components_within(self.g, mask):
            for marked in connected_subsets(self.g, comp):
                if self._move_value(mask, marked) == target:
                    moves.append(marked)
        return sorted(moves)

    def best_response(self, mask: int, marked: int) -> int:
        """Painter reply minimizing the remaining value.

        Ties break toward the smallest canonical key of the surviving graph,
        then the smallest mask, so replays are reproducible.
        """
        if marked == 0 or marked & ~mask:
            raise ValueError("marked set must be nonempty and inside the state")
        best = None
        for colored in maximal_independent_subsets(self.g, marked):
            rest_mask = mask & ~colored
            entry = (self.value_of_mask(rest_mask), self._canonical_of_mask(rest_mask), colored)
            if best is None or entry < best:
                best = entry
        return best[2]

    def solve(self, threads: int = 1) -> SolveResult:
        full = self.g.vertex_mask
        if threads > 1 and full:
            # Pre-valuing root-level moves in parallel only warms the caches;
            # values are exact, so the reduction below is order-independent
            # and the result is identical to the single-threaded run.
            comps = components_within(self.g, full)
            moves = [m for comp in comps for m in connected_subsets(self.g, comp)]
            with ThreadPoolExecutor(max_workers=threads) as pool:
                list(pool.map(lambda m: self._move_value(full, m), moves))
        value = self.value_of_mask(full)
        return SolveResult(
            value=value,
            optimal_marks=self.best_first_moves(full),
            node_count=self.node_count,
            cache_hits=self.cache_hits,
        )


def _edge_bound(g: Graph, mask: int) -> int:
    # value(H) <= |V(H)| + |E(H)| for every graph H.
    edges = 0
    for v in range(g.n):
        if mask & (1 << v):
            edges += (g.adj[v] & mask).bit_count()
    return mask.bit_count() + edges // 2


def solve(
    g: Graph,
    cache: SolverCache | None = None,
    *,
    limit: int = DEFAULT_LIMIT,
    threads: int = 1,
    use_bound_pruning: bool = False,
    should_cancel=None,
) -> SolveResult:
    """Exact sum-color cost of ``g`` with optimal first marks."""
    solver = SlowSolver(
        g,
        cache,
        limit=limit,
        use_bound_pruning=use_bound_pruning,
        should_cancel=should_cancel,
    )
    return solver.solve(threads=threads)


def optimal_painter_response(
    g: Graph, marked: int, cache: SolverCache | None = None, *, limit: int = DEFAULT_LIMIT
) -> int:
    """A maximal independent subset of ``marked`` minimizing the remaining value."""
    solver = SlowSolver(g, cache, limit=limit)
    return solver.best_response(g.vertex_mask, marked)


def score_lower_certificate(
    g: Graph, cache: SolverCache | None = None, *, limit: int = DEFAULT_LIMIT
) -> GameRecord:
    """Replay optimal play on both sides; the transcript's score equals the value.

    Each round marks the union over surviving components of the smallest
    optimal mark inside that component (the values add across components, so
    the union is again optimal), and Painter answers with the tie-broken
    optimal reply.  The record is deterministic.
    """
    solver = SlowSolver(g, cache, limit=limit)
    record = GameRecord(g.n)
    alive = g.vertex_mask
    while alive:
        marked = 0
        for comp in components_within(g, alive):
            marked |= solver.best_first_moves(comp)[0]
        colored = solver.best_response(alive, marked)
        record.rounds.append((marked, colored))
        alive &= ~colored
    return record


def brute_force_value(g: Graph) -> int:
    """Unpruned minimax over all nonempty marks and all independent replies.

    Exponential and intended for cross-checking the pruned solver on graphs
    with at most about six vertices.  Memoizes on the surviving vertex mask
    only; no connectivity, maximality, or component shortcuts.  The empty
    reply is excluded: it only prolongs the game and never lowers the score.
    """
    adj = g.adj
    memo: dict[int, int] = {0: 0}

    def independent_subsets(marked: int):
        verts = list(bits(marked))
        stack = [(0, 0)]
        while stack:
            idx, chosen = stack.pop()
            if idx == len(verts):
                if chosen:
                    yield chosen
                continue
            v = verts[idx]
            stack.append((idx + 1, chosen))
            if not adj[v] & chosen:
                stack.append((idx + 1, chosen | (1 << v)))

    def value(alive: int) -> int:
        cached = memo.get(alive)
        if cached is not None:
            return cached
        best = 0
        sub = alive
        while sub:
            marked = sub
            reply = None
            for colored in independent_subsets(marked):
                rest = value(alive & ~colored)
                if reply is None or rest < reply:
                    reply = rest
            score = marked.bit_count() + reply
            if score > best:
                best = score
            sub = (sub - 1) & alive
        memo[alive] = best
        return best

    return value(g.vertex_mask)
