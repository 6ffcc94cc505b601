"""Named graph families, their generators, and the graph-spec parser.

Vertex numbering is fixed per family so examples and transcripts are
reproducible:

* ``Path(n)`` / ``Cycle(n)`` / ``PathPower(n, k)``: path order ``0..n-1``.
* ``Star(n)``: center ``0``, leaves ``1..n-1``.
* ``CompleteBipartite(r, s)`` and ``CompleteMultipartite(parts)``: parts are
  contiguous ranges in the given order.
* ``JoinEmptyClique(r, s)``: independent side ``0..r-1``, clique ``r..r+s-1``.
* ``Grid2xK(k)`` (the 2-by-k grid): column ``i`` holds vertices ``2i, 2i+1``.
* ``RandomGnp(n, p, seed)``: pairs ``(i, j)`` with ``i < j`` are scanned in
  lexicographic order; pair t is an edge iff the t-th value of the 64-bit
  linear congruential generator ``x -> 6364136223846793005*x +
  1442695040888963407 (mod 2^64)``, mapped to [0, 1) by taking the top 53
  bits, is below ``p``.  Identical seeds reproduce identical graphs in any
  implementation of this recipe.

The text format accepted by :func:`parse_graph` is either an explicit edge
list ``n=<int>; u-v,u-v,...`` or a family expression: ``P<n>``, ``C<n>``,
``K<n>``, ``E<n>``, ``S<n>``, ``K<r>,<s>``, ``KM[a,b,...]``, ``J(<r>,<s>)``,
``P<n>^<k>``, ``GRID<k>``, ``GNP(<n>,<p>,<seed>)``, ``U(<spec>,<spec>)``,
``JOIN(<spec>,<spec>)``.
"""

from dataclasses import dataclass

from .graph import MAX_VERTICES, Graph, graph_join, graph_union


class ParseError(ValueError):
    """Graph-spec syntax or range error, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"at position {position}: {message}")
        self.position = position


@dataclass(frozen=True)
class Path:
    n: int

    def dsl(self) -> str:
        return f"P{self.n}"


@dataclass(frozen=True)
class Cycle:
    n: int

    def dsl(self) -> str:
        return f"C{self.n}"


@dataclass(frozen=True)
class Star:
    n: int  # total vertex count, i.e. K_{1,n-1}

    def dsl(self) -> str:
        return f"S{self.n}"


@dataclass(frozen=True)
class Complete:
    n: int

    def dsl(self) -> str:
        return f"K{self.n}"


@dataclass(frozen=True)
class Empty:
    n: int

    def dsl(self) -> str:
        return f"E{self.n}"


@dataclass(frozen=True)
class CompleteBipartite:
    r: int
    s: int

    def dsl(self) -> str:
        return f"K{self.r},{self.s}"


@dataclass(frozen=True)
class CompleteMultipartite:
    parts: tuple[int, ...]

    def __init__(self, parts):
        object.__setattr__(self, "parts", tuple(parts))

    def dsl(self) -> str:
        return "KM[" + ",".join(str(p) for p in self.parts) + "]"


@dataclass(frozen=True)
class JoinEmptyClique:
    """r independent vertices completely joined to an s-clique."""

    r: int
    s: int

    def dsl(self) -> str:
        return f"J({self.r},{self.s})"


@dataclass(frozen=True)
class PathPower:
    n: int
    k: int

    def dsl(self) -> str:
        return f"P{self.n}^{self.k}"


@dataclass(frozen=True)
class Grid2xK:
    k: int

    def dsl(self) -> str:
        return f"GRID{self.k}"


@dataclass(frozen=True)
class RandomGnp:
    n: int
    p: float
    seed: int

    def dsl(self) -> str:
        return f"GNP({self.n},{self.p},{self.seed})"


@dataclass(frozen=True)
class Union:
    a: object
    b: object

    def dsl(self) -> str:
        return f"U({self.a.dsl()},{self.b.dsl()})"


@dataclass(frozen=True)
class Join:
    a: object
    b: object

    def dsl(self) -> str:
        return f"JOIN({self.a.dsl()},{self.b.dsl()})"


FamilySpec = (
    Path
    | Cycle
    | Star
    | Complete
    | Empty
    | CompleteBipartite
    | CompleteMultipartite
    | JoinEmptyClique
    | PathPower
    | Grid2xK
    | RandomGnp
    | Union
    | Join
)

_MASK64 = (1 << 64) - 1
_LCG_MULT = 6364136223846793005
_LCG_INC = 1442695040888963407


def _lcg_uniform(seed: int):
    x = seed & _MASK64
    while True:
        x = (x * _LCG_MULT + _LCG_INC) & _MASK64
        yield (x >> 11) / float(1 << 53)


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by a family spec."""
    match spec:
        case Path(n):
            _check_n(n)
            return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
        case Cycle(n):
            if n < 3:
                raise ValueError("cycle needs at least 3 vertices")
            _check_n(n)
            return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
        case Star(n):
            _check_n(n)
            return Graph.from_edges(n, [(0, i) for i in range(1, n)])
        case Complete(n):
            _check_n(n)
            return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
        case Empty(n):
            _check_n(n)
            return Graph(n, [0] * n)
        case CompleteBipartite(r, s):
            return generate(CompleteMultipartite((r, s)))
        case CompleteMultipartite(parts):
            if any(p < 0 for p in parts):
                raise ValueError("part sizes must be nonnegative")
            n = sum(parts)
            _check_n(n)
            edges = []
            start = 0
            bounds = []
            for p in parts:
                bounds.append((start, start + p))
                start += p
            for ai, (a0, a1) in enumerate(bounds):
                for b0, b1 in bounds[ai + 1 :]:
                    edges.extend((u, v) for u in range(a0, a1) for v in range(b0, b1))
            return Graph.from_edges(n, edges)
        case JoinEmptyClique(r, s):
            if r < 0 or s < 0:
                raise ValueError("parameters must be nonnegative")
            _check_n(r + s)
            return graph_join(generate(Empty(r)), generate(Complete(s)))
        case PathPower(n, k):
            _check_n(n)
            if k < 1:
                raise ValueError("power must be positive")
            return Graph.from_edges(
                n, [(i, j) for i in range(n) for j in range(i + 1, min(n, i + k + 1))]
            )
        case Grid2xK(k):
            if k < 1:
                raise ValueError("grid needs at least one column")
            _check_n(2 * k)
            edges = [(2 * i, 2 * i + 1) for i in range(k)]
            edges += [(2 * i + j, 2 * i + 2 + j) for i in range(k - 1) for j in (0, 1)]
            return Graph.from_edges(2 * k, edges)
        case RandomGnp(n, p, seed):
            _check_n(n)
            if not 0.0 <= p <= 1.0:
                raise ValueError("edge probability must be in [0, 1]")
            uni = _lcg_uniform(seed)
            edges = [
                (i, j)
                for i in range(n)
                for j in range(i + 1, n)
                if next(uni) < p
            ]
            return Graph.from_edges(n, edges)
        case Union(a, b):
            return graph_union(generate(a), generate(b))
        case Join(a, b):
            return graph_join(generate(a), generate(b))
    raise TypeError(f"not a family spec: {spec!r}")


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n > MAX_VERTICES:
        raise ValueError(f"vertex count {n} exceeds the {MAX_VERTICES}-vertex limit")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def startswith(self, token: str) -> bool:
        return self.text.startswith(token, self.pos)

    def expect(self, token: str) -> None:
        self.skip_ws()
        if not self.startswith(token):
            raise self.error(f"expected {token!r}")
        self.pos += len(token)

    def int_(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])

    def float_(self) -> float:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isdigit() or self.text[self.pos] == "."):
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a number")
        return float(self.text[start : self.pos])

    def spec(self) -> FamilySpec:
        self.skip_ws()
        if self.startswith("JOIN("):
            self.pos += len("JOIN(")
            a = self.spec()
            self.expect(",")
            b = self.spec()
            self.expect(")")
            return Join(a, b)
        if self.startswith("U("):
            self.pos += len("U(")
            a = self.spec()
            self.expect(",")
            b = self.spec()
            self.expect(")")
            return Union(a, b)
        if self.startswith("GNP("):
            self.pos += len("GNP(")
            n = self.int_()
            self.expect(",")
            p = self.float_()
            self.expect(",")
            seed = self.int_()
            self.expect(")")
            return RandomGnp(n, p, seed)
        if self.startswith("GRID"):
            self.pos += len("GRID")
            return Grid2xK(self.int_())
        if self.startswith("KM["):
            self.pos += len("KM[")
            parts = [self.int_()]
            self.skip_ws()
            while self.peek() == ",":
                self.pos += 1
                parts.append(self.int_())
                self.skip_ws()
            self.expect("]")
            return CompleteMultipartite(parts)
        if self.startswith("J("):
            self.pos += len("J(")
            r = self.int_()
            self.expect(",")
            s = self.int_()
            self.expect(")")
            return JoinEmptyClique(r, s)
        head = self.peek()
        if head == "P":
            self.pos += 1
            n = self.int_()
            if self.peek() == "^":
                self.pos += 1
                return PathPower(n, self.int_())
            return Path(n)
        if head == "C":
            self.pos += 1
            return Cycle(self.int_())
        if head == "K":
            self.pos += 1
            r = self.int_()
            # "K<r>,<s>" only when a digit follows the comma; otherwise the
            # comma belongs to an enclosing combinator.
            save = self.pos
            if self.peek() == ",":
                self.pos += 1
                if self.peek().isdigit():
                    return CompleteBipartite(r, self.int_())
                self.pos = save
            return Complete(r)
        if head == "E":
            self.pos += 1
            return Empty(self.int_())
        if head == "S":
            self.pos += 1
            return Star(self.int_())
        raise self.error("expected a graph family")


def parse_family(text: str) -> FamilySpec:
    """Parse a family expression such as ``K3,2`` or ``U(P4,K3)``."""
    p = _Parser(text)
    spec = p.spec()
    p.skip_ws()
    if p.pos != len(text):
        raise p.error("trailing input after graph spec")
    return spec


def parse_graph(text: str) -> Graph:
    """Parse an edge list (``n=4; 0-1,2-3``) or a family expression."""
    p = _Parser(text)
    p.skip_ws()
    if p.startswith("n="):
        p.pos += 2
        n = p.int_()
        if n > MAX_VERTICES:
            raise p.error(f"vertex count {n} exceeds the {MAX_VERTICES}-vertex limit")
        p.expect(";")
        edges = []
        p.skip_ws()
        if p.pos < len(text):
            while True:
                upos = p.pos
                u = p.int_()
                p.expect("-")
                vpos = p.pos
                v = p.int_()
                if u >= n:
                    p.pos = upos
                    raise p.error(f"vertex {u} out of range [0, {n})")
                if v >= n:
                    p.pos = vpos
                    raise p.error(f"vertex {v} out of range [0, {n})")
                edges.append((u, v))
                p.skip_ws()
                if p.peek() != ",":
                    break
                p.pos += 1
        if p.pos != len(text):
            raise p.error("trailing input after edge list")
        return Graph.from_edges(n, edges)
    spec = p.spec()
    p.skip_ws()
    if p.pos != len(text):
        raise p.error("trailing input after graph spec")
    try:
        return generate(spec)
    except ValueError as exc:
        raise ParseError(str(exc), 0) from exc
