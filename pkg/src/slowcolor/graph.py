"""Bitmask graph core.

A :class:`Graph` is an immutable simple undirected graph on vertices
``0..n-1`` with ``n <= 64``, stored as one neighbor bitmask per vertex.
Vertex sets everywhere in this package are plain ``int`` bitmasks (bit ``v``
set means vertex ``v`` is in the set), which keeps set algebra down to single
machine-word operations at the sizes the exact solver can handle anyway.
"""

from collections.abc import Iterable, Iterator

MAX_VERTICES = 64

# Type alias used in signatures throughout the package.
VertexSet = int


def bit(v: int) -> int:
    return 1 << v


def bits(mask: int) -> Iterator[int]:
    """Yield the vertex indices present in a bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable undirected graph with adjacency bitmasks.

    Invariants enforced at construction: adjacency is symmetric and
    irreflexive, and no mask has bits at positions >= n.
    """

    __slots__ = ("n", "adj", "_full")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency masks, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"adjacency of vertex {v} has bits outside [0, {n})")
            if row & (1 << v):
                raise ValueError(f"vertex {v} is adjacent to itself")
        for v in range(n):
            for u in bits(adj[v]):
                if not adj[u] & (1 << v):
                    raise ValueError(f"edge {v}-{u} is not symmetric")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_full", full)

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} outside vertex range [0, {n})")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def vertex_mask(self) -> int:
        return self._full

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1)):
                yield (v, v + 1 + u)

    def edge_count(self) -> int:
        return sum(self.adj[v].bit_count() for v in range(self.n)) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    def to_edge_list_string(self) -> str:
        """Serialize in the ``n=<int>; u-v,u-v`` format accepted by the parser."""
        pairs = ",".join(f"{u}-{v}" for u, v in self.edges())
        return f"n={self.n};{pairs}" if pairs else f"n={self.n};"


def neighbors_of_set(g: Graph, s: int) -> int:
    """Union of neighborhoods of the vertices in ``s`` (may intersect ``s``)."""
    out = 0
    for v in bits(s):
        out |= g.adj[v]
    return out


def induced_subgraph(g: Graph, keep: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the vertices of ``keep``, labels compacted.

    Returns the new graph plus the tuple mapping new labels to original ones.
    """
    _check_subset(g, keep)
    old = tuple(bits(keep))
    index = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        row = 0
        for u in bits(g.adj[v] & keep):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(old), adj), old


def delete_vertices(g: Graph, s: int) -> Graph:
    """Induced subgraph on ``V(g)`` minus ``s``, with compacted labels."""
    _check_subset(g, s)
    return induced_subgraph(g, g.vertex_mask & ~s)[0]


def components(g: Graph) -> list[int]:
    """Connected components as vertex masks, ordered by smallest member."""
    return components_within(g, g.vertex_mask)


def components_within(g: Graph, within: int) -> list[int]:
    """Connected components of the induced subgraph on ``within``."""
    comps = []
    rem = within
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            grown = neighbors_of_set(g, frontier) & within & ~comp
            comp |= grown
            frontier = grown
        comps.append(comp)
        rem &= ~comp
    return comps


def is_connected_set(g: Graph, s: int) -> bool:
    """True iff ``s`` is nonempty and induces a connected subgraph."""
    if s == 0:
        return False
    comp = s & -s
    frontier = comp
    while frontier:
        grown = neighbors_of_set(g, frontier) & s & ~comp
        comp |= grown
        frontier = grown
    return comp == s


def is_independent(g: Graph, s: int) -> bool:
    """True iff no edge of ``g`` has both endpoints in ``s``."""
    rem = s
    while rem:
        low = rem & -rem
        v = low.bit_length() - 1
        if g.adj[v] & s:
            return False
        rem ^= low
    return True


def maximal_independent_subsets(g: Graph, m: int) -> Iterator[int]:
    """All subsets of ``m`` that are independent in ``g`` and maximal within ``m``.

    Bron-Kerbosch with pivoting, run on the complement of ``g[m]`` (maximal
    independent sets of the induced subgraph are its maximal cliques).
    Yields each set exactly once, in no particular order.
    """
    _check_subset(g, m)
    nonadj = {v: ~g.adj[v] & m & ~(1 << v) for v in bits(m)}

    def expand(r: int, p: int, x: int) -> Iterator[int]:
        if p == 0 and x == 0:
            yield r
            return
        pivot = -1
        best = -1
        for u in bits(p | x):
            score = (p & nonadj[u]).bit_count()
            if score > best:
                best, pivot = score, u
        cand = p & ~nonadj[pivot]
        for v in bits(cand):
            vb = 1 << v
            yield from expand(r | vb, p & nonadj[v], x & nonadj[v])
            p &= ~vb
            x |= vb

    yield from expand(0, m, 0)


def connected_subsets(g: Graph, within: int) -> Iterator[int]:
    """Every nonempty ``M`` with ``M`` contained in ``within`` and ``g[M]`` connected.

    Grow-by-neighbor enumeration: each set is generated exactly once, anchored
    at its minimum vertex; already-consumed extension candidates are banned in
    later sibling branches to prevent duplicates.
    """
    _check_subset(g, within)

    def grow(s: int, frontier: int, allowed: int) -> Iterator[int]:
        yield s
        banned = 0
        for v in bits(frontier):
            vb = 1 << v
            new_s = s | vb
            new_frontier = (frontier | (g.adj[v] & allowed)) & ~new_s & ~banned
            yield from grow(new_s, new_frontier, allowed & ~banned)
            banned |= vb

    for v in bits(within):
        vb = 1 << v
        allowed = within & ~(vb - 1)
        yield from grow(vb, g.adj[v] & allowed & ~vb, allowed)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, [~g.adj[v] & full & ~(1 << v) for v in range(g.n)])


def graph_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union; vertices of ``b`` are shifted up by ``a.n``."""
    if a.n + b.n > MAX_VERTICES:
        raise ValueError(f"union would have {a.n + b.n} > {MAX_VERTICES} vertices")
    adj = list(a.adj) + [row << a.n for row in b.adj]
    return Graph(a.n + b.n, adj)


def graph_join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    g = graph_union(a, b)
    amask = (1 << a.n) - 1
    bmask = g.vertex_mask & ~amask
    adj = [(row | bmask) if v < a.n else (row | amask) for v, row in enumerate(g.adj)]
    return Graph(g.n, adj)


def is_forest(g: Graph) -> bool:
    return g.edge_count() == g.n - len(components(g))


def bipartition_within(g: Graph, comp: int) -> tuple[int, int] | None:
    """Two-color a connected vertex set; None if an odd cycle obstructs it.

    Returns (side of the smallest vertex, other side).
    """
    x = comp & -comp
    y = 0
    level = x
    side = 0
    while level:
        nxt = neighbors_of_set(g, level) & comp & ~(x | y)
        if side == 0:
            y |= nxt
        else:
            x |= nxt
        level = nxt
        side ^= 1
    for v in bits(x):
        if g.adj[v] & x:
            return None
    for v in bits(y):
        if g.adj[v] & y:
            return None
    return x, y


def complete_multipartite_parts(g: Graph) -> list[int] | None:
    """Parts of a complete multipartite graph, or None if ``g`` is not one.

    Parts are the components of the complement; the graph qualifies iff every
    cross-part pair is an edge.
    """
    comp = complement(g)
    parts = components(comp)
    for p in parts:
        for v in bits(p):
            if g.adj[v] != g.vertex_mask & ~p:
                return None
    return parts


def complete_bipartite_sides(g: Graph) -> tuple[int, int] | None:
    """Sides (larger first) of a complete bipartite graph with both sides nonempty."""
    parts = complete_multipartite_parts(g)
    if parts is None or len(parts) != 2:
        return None
    a, b = parts
    if a.bit_count() < b.bit_count():
        a, b = b, a
    return a, b


def _check_subset(g: Graph, s: int) -> None:
    if s & ~g.vertex_mask:
        raise ValueError("vertex set has bits outside the graph")
