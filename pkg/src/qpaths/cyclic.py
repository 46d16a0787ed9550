"""
Cyclic maps on paths, words and increasing sequences, and their orbits.

Every map here is a permutation of a finite set whose period is coprime to the
amount by which it shifts a statistic, so each orbit visits every residue class
of the statistic exactly once.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable

from qpaths.errors import InvalidArgumentError
from qpaths.paths import EAST, LatticePath, area, check_word, inversions, transpose

Sequence = tuple[int, ...]


def rotate_step(path: LatticePath) -> LatticePath:
    """
    Move the last step to the front.

    A trailing N gains ``width`` squares; a trailing E loses ``height``.

    >>> rotate_step(LatticePath("EN"))
    LatticePath(steps='NE')
    """
    if not path.steps:
        raise InvalidArgumentError("cannot rotate the empty path")
    s = path.steps
    return LatticePath(s[-1] + s[:-1])


def _fixed_first_rotation(s: str) -> str:
    return s[0] + s[-1] + s[1:-1]


def phi_square(path: LatticePath) -> LatticePath:
    """Fix the first step and rotate the remaining ``2n - 1`` steps right by one.

    Paths starting with E are rotated directly; paths starting with N are
    conjugated by the transpose. The area moves by ``n - 1`` (mod ``2n - 1``)
    in the first case and by ``n`` in the second.
    """
    n = path.width
    if n != path.height:
        raise InvalidArgumentError(f"path must end on the diagonal, got ({path.width}, {path.height})")
    if n < 1:
        raise InvalidArgumentError("phi_square needs n >= 1")
    if path.steps[0] == EAST:
        return LatticePath(_fixed_first_rotation(path.steps))
    return transpose(LatticePath(_fixed_first_rotation(transpose(path).steps)))


def phi_word(word: str) -> str:
    """
    Keep the first digit; cycle the rest one place right.

    >>> phi_word("0110")
    '0011'
    """
    check_word(word)
    if len(word) < 2:
        raise InvalidArgumentError(f"word needs length >= 2, got {word!r}")
    return _fixed_first_rotation(word)


def check_sequence(seq: Iterable[int], n: int | None = None) -> Sequence:
    """Validate a strictly increasing sequence of length ``n`` inside ``[1, 2n]``."""
    seq = tuple(int(a) for a in seq)
    if n is None:
        n = len(seq)
    if n < 1 or len(seq) != n:
        raise InvalidArgumentError(f"expected {n} terms, got {len(seq)}")
    if any(b <= a for a, b in zip(seq, seq[1:])):
        raise InvalidArgumentError(f"sequence must be strictly increasing: {seq}")
    if seq[0] < 1 or seq[-1] > 2 * n:
        raise InvalidArgumentError(f"terms must lie in [1, {2 * n}]: {seq}")
    return seq


def phi_sequence(seq: Iterable[int]) -> Sequence:
    """
    Advance an increasing sequence in ``[1, 2n]``: every term except a leading 1
    steps up by one, and ``2n`` wraps round to 2. Output is sorted ascending.

    >>> phi_sequence((2, 4))
    (2, 3)
    """
    seq = check_sequence(seq)
    top = 2 * len(seq)

    def bump(a: int) -> int:
        return 2 if a == top else a + 1

    if seq[0] == 1:
        out = (1,) + tuple(bump(a) for a in seq[1:])
    else:
        out = tuple(bump(a) for a in seq)
    out = tuple(sorted(out))
    if len(set(out)) != len(out):
        raise AssertionError(f"phi_sequence produced a repeated term from {seq}: {out}")
    return out


def _check_catalan_path(path: LatticePath) -> int:
    n = path.height
    if path.width != n + 1:
        raise InvalidArgumentError(f"expected a path to (n+1, n), got ({path.width}, {path.height})")
    if path.steps[-1] != EAST:
        raise InvalidArgumentError(f"path {path} does not pass through ({n}, {n})")
    return n


def embedded_area(path: LatticePath) -> int:
    """Area of the (n, n) path obtained by dropping the final east step."""
    return area(path) - path.height


def catalan_restrict_step(path: LatticePath) -> LatticePath:
    """Rotate a path to (n+1, n) through (n, n) until it next passes through (n, n).

    The embedded (n, n) path gains 1 in area modulo n + 1, and the induced map
    has period n + 1.
    """
    _check_catalan_path(path)
    nxt = rotate_step(path)
    while nxt.steps[-1] != EAST:
        nxt = rotate_step(nxt)
    return nxt


def close_square_path(path: LatticePath) -> LatticePath:
    """Append an east step, turning an (n, n) path into one to (n+1, n)."""
    if path.width != path.height:
        raise InvalidArgumentError(f"expected a path to (n, n), got ({path.width}, {path.height})")
    return LatticePath(path.steps + EAST)


@dataclass(frozen=True)
class CyclicMap:
    name: str
    step: Callable
    statistic: Callable[[object], int]
    modulus: Callable[[object], int]
    statistic_name: str


def _seq_modulus(seq: Sequence) -> int:
    return 2 * len(seq) - 1


MAPS: dict[str, CyclicMap] = {
    "rotate": CyclicMap("rotate", rotate_step, area, len, "area"),
    "phi-square": CyclicMap("phi-square", phi_square, area, lambda p: 2 * p.width - 1, "area"),
    "phi-word": CyclicMap("phi-word", phi_word, inversions, lambda w: len(w) - 1, "inversions"),
    "phi-seq": CyclicMap("phi-seq", phi_sequence, sum, _seq_modulus, "sum"),
    "catalan": CyclicMap("catalan", catalan_restrict_step, embedded_area, lambda p: p.height + 1, "embedded area"),
}


def get_map(name: str) -> CyclicMap:
    try:
        return MAPS[name]
    except KeyError:
        raise InvalidArgumentError(f"unknown map {name!r}; choose from {sorted(MAPS)}") from None


@dataclass(frozen=True)
class Orbit:
    map_name: str
    elements: tuple
    statistic_values: tuple[int, ...]
    modulus: int

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def residues(self) -> tuple[int, ...]:
        return tuple(v % self.modulus for v in self.statistic_values)

    @property
    def deltas(self) -> tuple[int, ...]:
        """Statistic change from each element to the next, wrapping at the end."""
        vals = self.statistic_values
        return tuple(vals[(i + 1) % len(vals)] - vals[i] for i in range(len(vals)))

    def has_distinct_residues(self) -> bool:
        return len(set(self.residues)) == len(self.residues)


def orbit_of(start: Hashable, map_name: str, max_length: int = 1_000_000) -> Orbit:
    """Iterate ``map_name`` from ``start`` until it returns."""
    cmap = get_map(map_name)
    elements = [start]
    cur = cmap.step(start)
    while cur != start:
        elements.append(cur)
        if len(elements) > max_length:
            raise AssertionError(f"{map_name} did not return to {start} within {max_length} steps")
        cur = cmap.step(cur)
    if len(set(elements)) != len(elements):  # pragma: no cover - a map that isn't a bijection
        raise AssertionError(f"{map_name} orbit of {start} repeats an element")
    return Orbit(
        map_name=map_name,
        elements=tuple(elements),
        statistic_values=tuple(cmap.statistic(e) for e in elements),
        modulus=cmap.modulus(start),
    )


def orbit_partition(objects: Iterable[Hashable], map_name: str) -> list[Orbit]:
    """Split ``objects`` into orbits; each object lands in exactly one."""
    seen: set = set()
    orbits = []
    for obj in objects:
        if obj in seen:
            continue
        orb = orbit_of(obj, map_name)
        seen.update(orb.elements)
        orbits.append(orb)
    return orbits
