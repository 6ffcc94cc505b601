"""Exhaustive enumeration of small graphs up to isomorphism.

Graphs on n vertices are produced by extending every (n-1)-vertex class with
a new vertex attached to each possible neighborhood, deduplicating by
canonical key; deleting any vertex of an n-vertex graph lands in the parent
list, so the sweep is complete.  Trees extend by attaching one leaf.
Results are cached per order within the process.
"""

from .canon import canonical_key
from .graph import Graph

_graph_cache: dict[int, list[Graph]] = {}
_tree_cache: dict[int, list[Graph]] = {}

# Counts of isomorphism classes of trees for n = 1..9, a sanity anchor for
# the enumerators (independent of the canonical-key implementation).
TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47)


def graph_classes(n: int) -> list[Graph]:
    """One representative per isomorphism class of n-vertex graphs."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n in _graph_cache:
        return _graph_cache[n]
    if n == 0:
        reps = [Graph(0, [])]
    else:
        reps = []
        seen = set()
        for parent in graph_classes(n - 1):
            for hood in range(1 << (n - 1)):
                g = _extend(parent, hood)
                key = canonical_key(g)
                if key not in seen:
                    seen.add(key)
                    reps.append(g)
    _graph_cache[n] = reps
    return reps


def tree_classes(n: int) -> list[Graph]:
    """One representative per isomorphism class of n-vertex trees."""
    if n < 1:
        raise ValueError("trees need at least one vertex")
    if n in _tree_cache:
        return _tree_cache[n]
    if n == 1:
        reps = [Graph(1, [0])]
    else:
        reps = []
        seen = set()
        for parent in tree_classes(n - 1):
            for v in range(n - 1):
                g = _extend(parent, 1 << v)
                key = canonical_key(g)
                if key not in seen:
                    seen.add(key)
                    reps.append(g)
    _tree_cache[n] = reps
    return reps


def two_tree_classes(n: int) -> list[Graph]:
    """Graphs built from an edge by repeatedly joining a vertex to an edge.

    Each extension attaches the new vertex to both endpoints of an existing
    edge (the 2-clique analogue of growing a tree by a leaf).
    """
    if n < 2:
        raise ValueError("needs at least two vertices")
    reps = [Graph.from_edges(2, [(0, 1)])]
    for order in range(3, n + 1):
        seen = set()
        nxt = []
        for parent in reps:
            for a, b in parent.edges():
                g = _extend(parent, (1 << a) | (1 << b))
                key = canonical_key(g)
                if key not in seen:
                    seen.add(key)
                    nxt.append(g)
        reps = nxt
    return reps


def _extend(parent: Graph, hood: int) -> Graph:
    n = parent.n + 1
    adj = [row | (((hood >> v) & 1) << (n - 1)) for v, row in enumerate(parent.adj)]
    adj.append(hood)
    return Graph(n, adj)
