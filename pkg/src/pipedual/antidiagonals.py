"""
Antidiagonals in grid rectangles, and the minimal antidiagonal family of
a permutation.

An antidiagonal is a box set with no element weakly southeast of another:
listed by increasing row, the columns strictly decrease.  The family of a
permutation w collects, over every upper-left rectangle [p] x [q], the
antidiagonals of size 1 + rank(w, p, q), and keeps the inclusion-minimal
ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .grid import Box
from .permutations import Permutation, rank_matrix
from .transversals import SetFamily, minimalize


@dataclass(frozen=True)
class Antidiagonal:
    """Boxes sorted by row; rows strictly increase, columns strictly decrease."""

    boxes: tuple[Box, ...]

    def __post_init__(self):
        for (r1, c1), (r2, c2) in zip(self.boxes, self.boxes[1:]):
            if not (r1 < r2 and c1 > c2):
                raise ValueError(f"not an antidiagonal: {self.boxes!r}")

    def __len__(self) -> int:
        return len(self.boxes)

    def __iter__(self):
        return iter(self.boxes)


def _chains(r_min: int, p: int, c_max: int, k: int) -> Iterator[tuple[Box, ...]]:
    # k boxes with rows ascending in [r_min, p], columns descending in [1, c_max]
    if k == 0:
        yield ()
        return
    for r in range(r_min, p - k + 2):
        for c in range(k, c_max + 1):
            for rest in _chains(r + 1, p, c - 1, k - 1):
                yield ((r, c), *rest)


def antidiagonals_in_rectangle(p: int, q: int, size: int) -> Iterator[Antidiagonal]:
    """Every antidiagonal of the given size inside [p] x [q], exactly once,
    in lexicographic order of the (row, col) box sequence.

    >>> [a.boxes for a in antidiagonals_in_rectangle(2, 2, 2)]
    [((1, 2), (2, 1))]
    """
    if p < 1 or q < 1:
        raise ValueError("rectangle dimensions must be positive")
    if size < 0:
        raise ValueError("size must be non-negative")
    for boxes in _chains(1, p, q, size):
        yield Antidiagonal(boxes)


@lru_cache(maxsize=None)
def antidiagonal_family(w: Permutation) -> SetFamily:
    """The inclusion-minimal antidiagonals of w, canonically ordered.

    For every rectangle [p] x [q] the relevant antidiagonals have exactly
    1 + rank(w, p, q) boxes; rectangles that cannot hold one (required
    size above min(p, q)) are skipped, and minimality does the rest.
    """
    n = w.n
    rm = rank_matrix(w)
    union: set[tuple[Box, ...]] = set()
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            size = 1 + rm.entry(p, q)
            if size > min(p, q):
                continue
            union.update(_chains(1, p, q, size))
    return minimalize(SetFamily.from_sets(n, union))
