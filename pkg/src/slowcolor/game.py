"""Game transcripts for the slow-coloring game.

A round is a pair (marked set, colored set) of vertex masks in the labels of
the graph the game was played on.  The score is the total number of marks.
"""

from dataclasses import dataclass, field

from .graph import Graph, bits, is_independent


class IllegalMoveError(ValueError):
    """A strategy or player produced a move that violates the rules."""

    def __init__(self, round_index: int, reason: str):
        super().__init__(f"round {round_index}: {reason}")
        self.round_index = round_index
        self.reason = reason


@dataclass
class GameRecord:
    """Sequence of (marked, colored) rounds with the accumulated score."""

    n: int
    rounds: list[tuple[int, int]] = field(default_factory=list)

    @property
    def total_score(self) -> int:
        return sum(m.bit_count() for m, _ in self.rounds)

    def validate(self, g: Graph) -> None:
        """Check the record against the rules on ``g``; raises on violation."""
        if g.n != self.n:
            raise IllegalMoveError(0, f"record is for {self.n} vertices, graph has {g.n}")
        alive = g.vertex_mask
        seen = 0
        for i, (marked, colored) in enumerate(self.rounds, start=1):
            if marked == 0:
                raise IllegalMoveError(i, "marked set is empty")
            if marked & ~alive:
                raise IllegalMoveError(i, "marked set contains deleted vertices")
            if colored & ~marked:
                raise IllegalMoveError(i, "colored set is not inside the marked set")
            if not is_independent(g, colored):
                raise IllegalMoveError(i, "colored set is not independent")
            alive &= ~colored
            seen |= colored
        if seen != g.vertex_mask:
            raise IllegalMoveError(len(self.rounds), "colored sets do not cover the graph")

    def to_lines(self) -> list[str]:
        """Machine format: one ``<round> <marked-hex> <colored-hex>`` line per round."""
        return [f"{i} {m:x} {c:x}" for i, (m, c) in enumerate(self.rounds, start=1)]

    @classmethod
    def from_lines(cls, n: int, lines) -> "GameRecord":
        rounds = []
        for line in lines:
            fields = line.split()
            if len(fields) != 3:
                raise ValueError(f"bad transcript line: {line!r}")
            rounds.append((int(fields[1], 16), int(fields[2], 16)))
        return cls(n, rounds)

    def to_text(self) -> str:
        out = []
        for i, (m, c) in enumerate(self.rounds, start=1):
            marked = ",".join(str(v) for v in bits(m))
            colored = ",".join(str(v) for v in bits(c)) or "-"
            out.append(f"round {i}: marks {{{marked}}} (+{m.bit_count()}), colors {{{colored}}}")
        out.append(f"total score {self.total_score}")
        return "\n".join(out)
