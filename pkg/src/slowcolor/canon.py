"""Canonical forms for small graphs.

The canonical key of a graph is the lexicographically minimal encoding of its
adjacency matrix over all vertex relabelings, prefixed by the vertex count.
Bits are read column by column: placing vertex ``k`` appends the ``k`` bits
recording its adjacency to the previously placed vertices, oldest first.
Under this ordering a partial placement determines a prefix of the encoding,
so the search can branch and bound on prefixes.

Two graphs produce equal keys iff they are isomorphic; the exhaustive oracle
used by the tests checks this on every small graph.

``canonical_key_colored`` extends the order with an integer color per vertex
(the color participates in each column segment after the adjacency bits), so
equal keys mean color-preserving isomorphism.  The solver memoizes plain
keys; the paintability checker memoizes colored keys with token counts as
colors.
"""

from .graph import Graph, bits

__all__ = ["canonical_key", "canonical_key_colored", "graph_from_canonical_key"]


def canonical_key(g: Graph) -> bytes:
    """Isomorphism-invariant key: ``bytes([n])`` + packed canonical adjacency bits."""
    n = g.n
    if n == 0:
        return bytes([0])
    segments = _minimal_segments(g, None)
    return bytes([n]) + _pack_bits(segments, n)


def canonical_key_colored(g: Graph, colors) -> bytes:
    """Key equal for two colored graphs iff a color-preserving isomorphism exists.

    ``colors`` is one small nonnegative int per vertex (< 256).  The key is
    ``bytes([n])`` + color values in canonical vertex order + packed bits.
    """
    n = g.n
    colors = tuple(colors)
    if len(colors) != n:
        raise ValueError("need one color per vertex")
    if n == 0:
        return bytes([0])
    palette = sorted(set(colors))
    if palette[0] < 0 or palette[-1] >= 256:
        raise ValueError("colors must be in [0, 256)")
    rank = {c: i for i, c in enumerate(palette)}
    cbits = max(1, (len(palette) - 1).bit_length())
    ranks = tuple(rank[c] for c in colors)
    segments = _minimal_segments(g, (ranks, cbits))
    cmask = (1 << cbits) - 1
    color_bytes = bytes(palette[seg & cmask] for seg in segments)
    adj_segments = [seg >> cbits for seg in segments]
    return bytes([n]) + color_bytes + _pack_bits(adj_segments, n)


def _pack_bits(segments, n: int) -> bytes:
    # segments[k] holds the k adjacency bits of canonical position k.
    total = n * (n - 1) // 2
    acc = 0
    for k in range(1, n):
        acc = (acc << k) | segments[k]
    return acc.to_bytes((total + 7) // 8 or 1, "big")


def graph_from_canonical_key(key: bytes) -> Graph | None:
    """Rebuild the canonical representative encoded by a plain key.

    Returns None when the byte string cannot be a plain (uncolored) key.
    """
    if not key:
        return None
    n = key[0]
    total = n * (n - 1) // 2
    if len(key) != 1 + ((total + 7) // 8 or 1):
        return None
    acc = int.from_bytes(key[1:], "big")
    adj = [0] * n
    shift = total
    for k in range(1, n):
        for i in range(k):
            shift -= 1
            if (acc >> shift) & 1:
                adj[k] |= 1 << i
                adj[i] |= 1 << k
    return Graph(n, adj)


def _twin_class_ids(g: Graph, colors) -> list[int]:
    # Vertices u, v are twins when swapping them is an automorphism: equal
    # open neighborhoods (nonadjacent) or equal closed neighborhoods
    # (adjacent).  Colored twins must also share the color.
    n = g.n
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for v in range(n):
        for u in range(v + 1, n):
            if colors is not None and colors[v] != colors[u]:
                continue
            if g.adj[v] == g.adj[u] or (
                g.adj[v] ^ (1 << u) == g.adj[u] ^ (1 << v) and g.has_edge(u, v)
            ):
                ra, rb = find(v), find(u)
                if ra != rb:
                    parent[rb] = ra
    return [find(v) for v in range(n)]


def _minimal_segments(g: Graph, coloring) -> list[int]:
    """Minimal per-column segments over all placements.

    Each segment is the adjacency bits of the newly placed vertex toward the
    already placed ones (earliest placed = most significant), with the color
    rank appended in the low bits when a coloring is given.  At every depth
    only candidates achieving the minimal next segment can extend a minimal
    completion, and one representative per twin class suffices.
    """
    n = g.n
    adj = g.adj
    if coloring is None:
        ranks, cbits = None, 0
    else:
        ranks, cbits = coloring
    twin = _twin_class_ids(g, ranks)
    # best[k] = segment at position k of the smallest complete encoding found;
    # 1 << (k + cbits) is an unreachable sentinel (segments use k+cbits bits).
    best = [1 << (k + cbits) for k in range(n)]
    placed: list[int] = []

    # Secondary ordering heuristic so promising branches come first.
    inv_rank = sorted(range(n), key=lambda v: (adj[v].bit_count(), v))
    order_pos = {v: i for i, v in enumerate(inv_rank)}

    def segment(v: int) -> int:
        s = 0
        row = adj[v]
        for u in placed:
            s = (s << 1) | ((row >> u) & 1)
        if ranks is not None:
            s = (s << cbits) | ranks[v]
        return s

    def dfs(depth: int, avail: int) -> None:
        reps: dict[int, int] = {}
        for v in bits(avail):
            reps.setdefault(twin[v], v)
        cands = [(segment(v), v) for v in reps.values()]
        mseg = min(s for s, _ in cands)
        if mseg > best[depth]:
            return
        if mseg < best[depth]:
            best[depth] = mseg
            for j in range(depth + 1, n):
                best[j] = 1 << (j + cbits)
        if depth == n - 1:
            return
        chosen = sorted((v for s, v in cands if s == mseg), key=order_pos.__getitem__)
        for v in chosen:
            placed.append(v)
            dfs(depth + 1, avail & ~(1 << v))
            placed.pop()

    dfs(0, g.vertex_mask)
    return best
