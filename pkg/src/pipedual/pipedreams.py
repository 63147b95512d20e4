"""
Pipe dreams on the n x n grid, identified with their sets of crossing tiles.

Tile semantics: at a crossing tile both pipes pass straight through
(west to east, south to north); at an elbow tile the pipe arriving from
the west turns north and the pipe arriving from the south turns east.
Pipes enter from the west edge of rows 1..n.  Crossing tiles are confined
to the staircase region {(i, j) : i + j <= n}; everything on or below the
main antidiagonal is an elbow, which forces every westward pipe to exit
through the north edge, so tracing always yields a permutation.

>>> trace(PipeDream(4, frozenset({(1, 1), (1, 3)}))).images
(2, 1, 4, 3)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .grid import Box, staircase_boxes
from .permutations import Permutation, length
from .transversals import SetFamily

# largest n for which the subset-enumeration oracle stays cheap
BRUTE_FORCE_MAX_N = 6


@dataclass(frozen=True)
class PipeDream:
    """Crossing-box set of an n x n pipe dream."""

    n: int
    crosses: frozenset[Box]

    def __post_init__(self):
        for (r, c) in self.crosses:
            if not (1 <= r and 1 <= c and r + c <= self.n):
                raise ValueError(
                    f"crossing tile ({r}, {c}) outside the staircase of the "
                    f"{self.n} x {self.n} grid"
                )


@dataclass(frozen=True, order=True)
class PipePair:
    """An unordered pair of pipes (labeled by entry row, a < b) together
    with the number of tiles where they cross."""

    a: int
    b: int
    crossings: int

    def __post_init__(self):
        if not self.a < self.b:
            raise ValueError(f"pipe pair not normalized: {self.a}, {self.b}")


def _walk(dream: PipeDream):
    """Yield (pipe, box, heading) for every tile each pipe passes through;
    heading is 'E' when the pipe enters the box from the west and 'N' when
    it enters from the south.  Ends each pipe at its north-edge exit column."""
    crosses = dream.crosses
    for pipe in range(1, dream.n + 1):
        r, c = pipe, 1
        heading = "E"
        while r >= 1:
            yield pipe, (r, c), heading
            if (r, c) in crosses:
                if heading == "E":
                    c += 1
                else:
                    r -= 1
            else:
                if heading == "E":
                    heading = "N"
                    r -= 1
                else:
                    heading = "E"
                    c += 1
        yield pipe, (0, c), "X"


def trace(dream: PipeDream) -> Permutation:
    """The permutation w sending each entry row i to the north-edge exit
    column w(i) of its pipe."""
    images = [0] * dream.n
    for pipe, (r, c), heading in _walk(dream):
        if heading == "X":
            images[pipe - 1] = c
    return Permutation(tuple(images))


def crossing_counts(dream: PipeDream) -> frozenset[PipePair]:
    """Crossing multiplicities for every pair of pipes meeting at least once.

    Each crossing tile is traversed straight by exactly one west-east pipe
    and one south-north pipe; those two pipes cross there.
    """
    horizontal: dict[Box, int] = {}
    vertical: dict[Box, int] = {}
    for pipe, box, heading in _walk(dream):
        if box in dream.crosses:
            if heading == "E":
                horizontal[box] = pipe
            elif heading == "N":
                vertical[box] = pipe
    counts: dict[tuple[int, int], int] = {}
    for box in dream.crosses:
        a, b = horizontal[box], vertical[box]
        key = (a, b) if a < b else (b, a)
        counts[key] = counts.get(key, 0) + 1
    return frozenset(PipePair(a, b, m) for (a, b), m in counts.items())


def is_reduced(dream: PipeDream) -> bool:
    """True iff no pair of pipes crosses more than once; equivalently the
    number of crossing tiles equals the inversion count of the trace."""
    return all(pair.crossings <= 1 for pair in crossing_counts(dream))


@lru_cache(maxsize=None)
def enumerate_rp(w: Permutation) -> SetFamily:
    """All reduced pipe dreams tracing to w, as a canonical family.

    Depth-first search over the staircase, column by column.  Within a
    column the pipes are routed bottom to top; a branch is cut as soon as
    a pair of pipes would cross twice, the crossing budget length(w) is
    exceeded, the remaining columns cannot hold enough crossings, or the
    pipe exiting the finished column contradicts w.
    """
    n = w.n
    target = w.inverse().images  # target[c-1] must exit north at column c
    budget = length(w)
    # staircase boxes in columns >= c
    cap = [0] * (n + 2)
    for c in range(n, 0, -1):
        cap[c] = cap[c + 1] + max(0, n - c)

    results: list[frozenset[Box]] = []
    crosses: list[Box] = []
    crossed: set[tuple[int, int]] = set()

    def per_column(c: int, west: list[int]) -> None:
        if len(crosses) + cap[c] < budget:
            return
        free = n - c  # rows 1..free admit crossings; below is forced elbows
        east = [0] * n
        rising = 0  # the south-edge pipe of this column; exits east at row n
        for r in range(n, free, -1):
            east[r - 1] = rising
            rising = west[r - 1]

        def route(r: int, rising: int) -> None:
            if r == 0:
                if rising != target[c - 1]:
                    return
                if c == n:
                    results.append(frozenset(crosses))
                else:
                    per_column(c + 1, east)
                return
            horiz = west[r - 1]
            east[r - 1] = rising
            route(r - 1, horiz)
            if len(crosses) < budget:
                pair = (horiz, rising) if horiz < rising else (rising, horiz)
                if pair not in crossed:
                    crossed.add(pair)
                    crosses.append((r, c))
                    east[r - 1] = horiz
                    route(r - 1, rising)
                    crosses.pop()
                    crossed.remove(pair)

        route(free, rising)

    per_column(1, list(range(1, n + 1)))
    return SetFamily.from_sets(n, results)


def enumerate_rp_bruteforce(w: Permutation) -> SetFamily:
    """Independent oracle for :func:`enumerate_rp`: enumerate every subset
    of the staircase with length(w) boxes and keep those that trace to w
    and are reduced.  Only for n <= BRUTE_FORCE_MAX_N."""
    if w.n > BRUTE_FORCE_MAX_N:
        raise ValueError(
            f"brute-force enumeration is capped at n <= {BRUTE_FORCE_MAX_N}"
        )
    boxes = staircase_boxes(w.n)
    found = []
    for subset in itertools.combinations(boxes, length(w)):
        dream = PipeDream(w.n, frozenset(subset))
        if trace(dream) == w and is_reduced(dream):
            found.append(subset)
    return SetFamily.from_sets(w.n, found)


def render_ascii(dream: PipeDream) -> str:
    """Fixed-width picture: '+' for crossings, '.' for elbows weakly above
    the main antidiagonal (row + col <= n + 1), a space below it."""
    n = dream.n
    lines = []
    for i in range(1, n + 1):
        line = []
        for j in range(1, n + 1):
            if (i, j) in dream.crosses:
                line.append("+")
            elif i + j <= n + 1:
                line.append(".")
            else:
                line.append(" ")
        lines.append("".join(line))
    return "\n".join(lines)
