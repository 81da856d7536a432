"""Rational Dyck paths, partitions, valleys, and laser geometry.

An (a, b)-Dyck path runs from (0, 0) to (b, a) in north and east steps and
stays weakly above the line y = (a/b) x.  Because gcd(a, b) = 1 the path
touches the line only at its endpoints.

A laser is fired from the bottom point of a north step (other than the
origin) with slope a/b toward the northeast; it stops at the first point
of the path it meets, which coprimality forces into the open interior of
an east step.  If the source has x-coordinate i and the east step's right
endpoint has x-coordinate k, the laser contributes the diagonal i-k of the
polygon with points 0..b.

Every slope comparison is done by integer cross multiplication.  No
floating point enters any predicate in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import CapExceededError, InvalidSourceError, InvariantViolationError
from .polygon import Diagonal, check_slope_pair, crosses, is_admissible

DEFAULT_PATH_CAP = 10**7


class LatticePoint(NamedTuple):
    x: int
    y: int


class LaserHit(NamedTuple):
    """Laser outcome: the source point and the hit step's right endpoint x."""

    source: LatticePoint
    hit_step_right_x: int


@dataclass(frozen=True)
class DyckPath:
    """An (a, b)-Dyck path stored as a step word over {N, E}."""

    a: int
    b: int
    word: str

    def __post_init__(self):
        check_slope_pair(self.a, self.b)
        w = self.word
        if len(w) != self.a + self.b or w.count("N") != self.a or w.count("E") != self.b:
            raise ValueError(f"word {w!r} is not an (N^{self.a}, E^{self.b}) shuffle")
        north = east = 0
        for step in w:
            if step == "N":
                north += 1
            elif step == "E":
                east += 1
                if north * self.b < east * self.a:
                    raise ValueError(f"word {w!r} dips below the line y = {self.a}/{self.b} x")
            else:
                raise ValueError(f"bad step {step!r} in {w!r}")

    def __str__(self) -> str:
        return self.word

    @classmethod
    def from_runs(cls, a: int, b: int, runs: Sequence[Sequence]) -> "DyckPath":
        """Build from run-length form [["N", 2], ["E", 1], ...]."""
        return cls(a, b, "".join(step * int(n) for step, n in runs))

    def runs(self) -> list[tuple[str, int]]:
        """Run-length encoding of the step word."""
        out: list[tuple[str, int]] = []
        for step in self.word:
            if out and out[-1][0] == step:
                out[-1] = (step, out[-1][1] + 1)
            else:
                out.append((step, 1))
        return out

    def points(self) -> list[LatticePoint]:
        """All a+b+1 lattice points of the path in order."""
        pts = [LatticePoint(0, 0)]
        x = y = 0
        for step in self.word:
            if step == "N":
                y += 1
            else:
                x += 1
            pts.append(LatticePoint(x, y))
        return pts

    def east_steps(self) -> list[tuple[int, int]]:
        """East steps as (left endpoint x, height y), in path order."""
        out = []
        x = y = 0
        for step in self.word:
            if step == "E":
                out.append((x, y))
                x += 1
            else:
                y += 1
        return out

    def north_step_bottoms(self) -> list[LatticePoint]:
        """Bottom points of all north steps, in path order (origin included)."""
        out = []
        x = y = 0
        for step in self.word:
            if step == "N":
                out.append(LatticePoint(x, y))
                y += 1
            else:
                x += 1
        return out

    def vertical_run_xs(self) -> list[int]:
        """x-coordinates holding a vertical run, in increasing order."""
        return sorted({p.x for p in self.north_step_bottoms()})


def enumerate_dyck_paths(a: int, b: int, max_words: int | None = DEFAULT_PATH_CAP) -> list[DyckPath]:
    """All (a, b)-Dyck paths in lexicographic word order with N < E.

    Raises CapExceededError when C(a+b, a) exceeds ``max_words`` (the cap
    bounds the search space, not the Dyck count itself).
    """
    check_slope_pair(a, b)
    if max_words is not None and comb(a + b, a) > max_words:
        raise CapExceededError(
            f"C({a + b},{a}) = {comb(a + b, a)} exceeds the enumeration cap {max_words}"
        )
    out: list[DyckPath] = []
    word: list[str] = []

    def extend(north: int, east: int) -> None:
        if north == a and east == b:
            out.append(DyckPath(a, b, "".join(word)))
            return
        if north < a:
            word.append("N")
            extend(north + 1, east)
            word.pop()
        if east < b and north * b >= (east + 1) * a:
            word.append("E")
            extend(north, east + 1)
            word.pop()

    extend(0, 0)
    return out


def iter_dyck_paths(a: int, b: int, max_words: int | None = DEFAULT_PATH_CAP) -> Iterator[DyckPath]:
    """Iterator form of :func:`enumerate_dyck_paths` (same order)."""
    return iter(enumerate_dyck_paths(a, b, max_words))


def partition_of(path: DyckPath) -> tuple[int, ...]:
    """Row lengths of the cells northwest of the path, top row first.

    Row i of the result is the x-coordinate of the i-th north step counted
    from the top, so the tuple is weakly decreasing and fits under the
    staircase cut out by the line.
    """
    xs = [p.x for p in path.north_step_bottoms()]
    return tuple(reversed(xs))


def young_contains(inner: Sequence[int], outer: Sequence[int]) -> bool:
    """Containment of partitions: inner[i] <= outer[i] for all rows."""
    n = max(len(inner), len(outer))
    get = lambda p, i: p[i] if i < len(p) else 0
    return all(get(inner, i) <= get(outer, i) for i in range(n))


def valleys(path: DyckPath) -> list[LatticePoint]:
    """EN corners of the path, west to east."""
    out = []
    x = y = 0
    prev = ""
    for step in path.word:
        if step == "N":
            if prev == "E":
                out.append(LatticePoint(x, y))
            y += 1
        else:
            x += 1
        prev = step
    return out


def laser_hit_on_east_steps(
    east_steps: Iterable[tuple[int, int]], a: int, b: int, x0: int, y0: int
) -> int | None:
    """Right endpoint x of the first east step whose open interior meets the
    slope-a/b ray from (x0, y0).

    ``east_steps`` must come in path order.  The first east step crossed by
    the ray is the first point of the path the ray meets at all: the ray
    leaves its source into the region below the path, horizontal steps can
    only be crossed upward, and a vertical step cannot be reached from the
    region below the path without crossing a horizontal step first.  Strict
    inequalities suffice because coprimality rules out lattice hits.
    """
    for x1, y in east_steps:
        if y <= y0:
            continue
        lhs = a * (x1 - x0)
        mid = (y - y0) * b
        if lhs < mid < lhs + a:
            return x1 + 1
    return None


def fire_laser(path: DyckPath, source: LatticePoint) -> LaserHit:
    """Fire the slope-a/b laser from a north-step bottom of the path.

    The source must be the bottom of a north step and not the origin.
    Exact integer arithmetic throughout.
    """
    source = LatticePoint(*source)
    if source == (0, 0):
        raise InvalidSourceError("lasers cannot be fired from the origin")
    if source not in path.north_step_bottoms():
        raise InvalidSourceError(f"{source} is not the bottom of a north step of {path.word}")
    hit = laser_hit_on_east_steps(path.east_steps(), path.a, path.b, source.x, source.y)
    if hit is None:
        raise InvariantViolationError(f"laser from {source} on {path.word} escaped the path")
    return LaserHit(source, hit)


def laser_diagonal(path: DyckPath, source: LatticePoint) -> Diagonal:
    """The admissible diagonal i-k carved out by the laser from ``source``."""
    hit = fire_laser(path, source)
    d = Diagonal(hit.source.x, hit.hit_step_right_x, path.b)
    if not is_admissible(d, path.a, path.b):
        raise InvariantViolationError(f"laser diagonal {d} of {path.word} is not admissible")
    return d


def facet_of(path: DyckPath) -> frozenset[Diagonal]:
    """Laser diagonals from every non-origin north-step bottom of the path.

    The result has exactly a-1 pairwise noncrossing diagonals.
    """
    sources = [p for p in path.north_step_bottoms() if p != (0, 0)]
    diag = [laser_diagonal(path, p) for p in sources]
    face = frozenset(diag)
    if len(face) != path.a - 1:
        raise InvariantViolationError(f"facet of {path.word} has {len(face)} diagonals, not a-1")
    for m in range(len(diag)):
        for n in range(m + 1, len(diag)):
            if crosses(diag[m], diag[n]):
                raise InvariantViolationError(
                    f"facet of {path.word} contains crossing diagonals {diag[m]}, {diag[n]}"
                )
    return face
