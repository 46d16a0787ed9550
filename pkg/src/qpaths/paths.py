"""
Northeastern lattice paths and their statistics.

A path is a string of ``E`` (east, (1,0)) and ``N`` (north, (0,1)) steps.  The
binary-word encoding maps ``N -> 1`` and ``E -> 0`` with the first step leftmost,
so the enclosed area of a path equals the inversion count of its word.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator

from qpaths.errors import InvalidArgumentError, ResourceLimitError
from qpaths.numbertheory import binomial

EAST = "E"
NORTH = "N"

MAX_STEPS_ENV = "QPATHS_MAX_STEPS"
DEFAULT_MAX_STEPS = 30

_TO_WORD = str.maketrans({EAST: "0", NORTH: "1"})
_FROM_WORD = str.maketrans({"0": EAST, "1": NORTH})
_SWAP = str.maketrans({EAST: NORTH, NORTH: EAST})


def max_steps() -> int:
    """Enumeration bound, overridable through ``QPATHS_MAX_STEPS``."""
    raw = os.environ.get(MAX_STEPS_ENV)
    if raw is None:
        return DEFAULT_MAX_STEPS
    try:
        value = int(raw)
    except ValueError:
        raise InvalidArgumentError(f"{MAX_STEPS_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise InvalidArgumentError(f"{MAX_STEPS_ENV} must be nonnegative, got {value}")
    return value


def check_word(word: str) -> str:
    if any(ch not in "01" for ch in word):
        raise InvalidArgumentError(f"binary word must contain only 0/1, got {word!r}")
    return word


@dataclass(frozen=True)
class LatticePath:
    """
    A lattice path given by its step string.

    >>> p = LatticePath("ENNENEEN")
    >>> (p.width, p.height, p.word)
    (4, 4, '01101001')
    """

    steps: str

    def __post_init__(self):
        if any(ch not in (EAST, NORTH) for ch in self.steps):
            raise InvalidArgumentError(f"path steps must be E/N, got {self.steps!r}")

    @classmethod
    def from_word(cls, word: str) -> LatticePath:
        return cls(check_word(word).translate(_FROM_WORD))

    @classmethod
    def parse(cls, text: str) -> LatticePath:
        """Accept either an E/N step string or a 0/1 word (1 = N)."""
        text = text.strip().upper()
        if text and set(text) <= {"0", "1"}:
            return cls.from_word(text)
        return cls(text)

    @property
    def word(self) -> str:
        return self.steps.translate(_TO_WORD)

    @property
    def width(self) -> int:
        return self.steps.count(EAST)

    @property
    def height(self) -> int:
        return self.steps.count(NORTH)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps

    def vertices(self) -> list[tuple[int, int]]:
        x = y = 0
        pts = [(0, 0)]
        for s in self.steps:
            if s == EAST:
                x += 1
            else:
                y += 1
            pts.append((x, y))
        return pts


def enumerate_paths(width: int, height: int, limit: int | None = None) -> Iterator[LatticePath]:
    """
    Yield every path to ``(width, height)`` once, in lexicographic step order (E < N).

    >>> [p.steps for p in enumerate_paths(1, 1)]
    ['EN', 'NE']
    """
    if width < 0 or height < 0:
        raise InvalidArgumentError(f"endpoint must be nonnegative, got ({width}, {height})")
    bound = max_steps() if limit is None else limit
    n = width + height
    if n > bound:
        raise ResourceLimitError(
            f"enumerating paths with {n} steps exceeds the bound of {bound} "
            f"({binomial(n, width)} paths); use the polynomial route"
        )
    # lexicographic order of the sorted east positions is lexicographic order of the strings
    for east in itertools.combinations(range(n), width):
        steps = [NORTH] * n
        for i in east:
            steps[i] = EAST
        yield LatticePath("".join(steps))


def enumerate_words(n: int, limit: int | None = None) -> Iterator[str]:
    """Even binary words of length ``2n``, in lexicographic order."""
    for p in enumerate_paths(n, n, limit):
        yield p.word


def inversions(word: str) -> int:
    """
    Number of pairs i < j with a 1 at i and a 0 at j.

    >>> inversions("01101001")
    8
    """
    ones = 0
    total = 0
    for ch in check_word(word):
        if ch == "1":
            ones += 1
        else:
            total += ones
    return total


def area(path: LatticePath) -> int:
    """Unit squares enclosed between the path and the lower-right boundary."""
    norths = 0
    total = 0
    for s in path.steps:
        if s == NORTH:
            norths += 1
        else:
            total += norths
    return total


def major_index(word: str) -> int:
    """
    Sum of the 1-based positions i where a 1 is immediately followed by a 0.

    >>> major_index("1001101")
    6
    """
    check_word(word)
    return sum(i + 1 for i in range(len(word) - 1) if word[i] == "1" and word[i + 1] == "0")


def transpose(path: LatticePath) -> LatticePath:
    """Reflect in the main diagonal; swaps every E and N."""
    return LatticePath(path.steps.translate(_SWAP))


def _require_square(path: LatticePath) -> int:
    w, h = path.width, path.height
    if w != h:
        raise InvalidArgumentError(f"path must end on the diagonal, got ({w}, {h})")
    return w


def exceedance(path: LatticePath) -> int:
    """Number of north steps that start on or above the diagonal y = x."""
    _require_square(path)
    x = y = 0
    count = 0
    for s in path.steps:
        if s == NORTH:
            if y >= x:
                count += 1
            y += 1
        else:
            x += 1
    return count


def is_dyck(path: LatticePath) -> bool:
    return exceedance(path) == 0


def column_partition(path: LatticePath) -> tuple[int, ...]:
    """Enclosed squares per column, left to right; weakly increasing and summing to the area."""
    cols = []
    norths = 0
    for s in path.steps:
        if s == NORTH:
            norths += 1
        else:
            cols.append(norths)
    return tuple(cols)
