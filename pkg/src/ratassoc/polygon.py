"""Diagonals of the polygon with points 0..b, and admissibility tests.

Boundary points of the (b+1)-gon are labeled clockwise 0, 1, ..., b.  A
diagonal ``i-j`` (i < j) joins two non-adjacent points; the pairs (i, i+1)
and (0, b) are sides, not diagonals.  For a coprime pair a < b, a diagonal
is admissible when the two boundary arcs it separates both have point
counts in the remainder set S(a, b) = {floor(i*b/a) : 1 <= i <= a-1}.

All predicates here are exact integer computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import BadOrderError, NotCoprimeError


def check_slope_pair(a: int, b: int) -> None:
    """Validate 0 < a < b and gcd(a, b) == 1, raising otherwise."""
    if not (isinstance(a, int) and isinstance(b, int)):
        raise BadOrderError(f"slope pair must be integers, got ({a!r}, {b!r})")
    if not 0 < a < b:
        raise BadOrderError(f"need 0 < a < b, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise NotCoprimeError(f"({a}, {b}) is not a coprime pair")


@dataclass(frozen=True)
class Diagonal:
    """Chord ``i-j`` of the polygon with boundary points 0..b.

    Equality and hashing include the ambient ``b`` so diagonals of
    different polygons never compare equal.
    """

    i: int
    j: int
    b: int

    def __post_init__(self):
        if not 0 <= self.i < self.j <= self.b:
            raise ValueError(f"need 0 <= i < j <= b, got ({self.i}, {self.j}) with b={self.b}")
        if self.j - self.i < 2 or (self.i, self.j) == (0, self.b):
            raise ValueError(f"({self.i}, {self.j}) is a side of the (b+1)-gon with b={self.b}")

    def key(self) -> tuple[int, int]:
        """Canonical sort key (j, i); this is the order used everywhere."""
        return (self.j, self.i)

    def text(self) -> str:
        return f"{self.i}-{self.j}"

    def __str__(self) -> str:
        return self.text()

    @classmethod
    def parse(cls, text: str, b: int) -> "Diagonal":
        """Parse the text form ``"i-j"``."""
        left, _, right = text.partition("-")
        return cls(int(left), int(right), b)


@dataclass(frozen=True)
class RemainderSet:
    """The admissible arc sizes S(a, b) for a coprime pair a < b."""

    a: int
    b: int
    members: frozenset[int]

    def __contains__(self, n: int) -> bool:
        return n in self.members


@lru_cache(maxsize=None)
def remainder_set(a: int, b: int) -> RemainderSet:
    """Return S(a, b) = {floor(i*b/a) : i = 1..a-1}.

    Coprimality makes the a-1 floor values pairwise distinct.
    """
    check_slope_pair(a, b)
    members = frozenset(i * b // a for i in range(1, a))
    if len(members) != a - 1:
        raise NotCoprimeError(f"S({a},{b}) collapsed; pair cannot be coprime")
    return RemainderSet(a, b, members)


def is_admissible(d: Diagonal, a: int, b: int) -> bool:
    """True when both boundary arcs cut off by ``d`` have sizes in S(a, b)."""
    if d.b != b:
        raise ValueError(f"diagonal {d} lives on b={d.b}, not b={b}")
    s = remainder_set(a, b).members
    inner = d.j - d.i - 1
    outer = b - 1 - inner
    return inner in s and outer in s


@lru_cache(maxsize=None)
def all_admissible_diagonals(a: int, b: int) -> tuple[Diagonal, ...]:
    """Every admissible diagonal exactly once, ordered by (j, i)."""
    check_slope_pair(a, b)
    out = []
    for j in range(2, b + 1):
        for i in range(0, j - 1):
            if (i, j) == (0, b):
                continue
            d = Diagonal(i, j, b)
            if is_admissible(d, a, b):
                out.append(d)
    return tuple(out)


def all_diagonals(b: int) -> tuple[Diagonal, ...]:
    """Every diagonal of the (b+1)-gon, ordered by (j, i)."""
    out = []
    for j in range(2, b + 1):
        for i in range(0, j - 1):
            if (i, j) != (0, b):
                out.append(Diagonal(i, j, b))
    return tuple(out)


def crosses(d: Diagonal, e: Diagonal) -> bool:
    """True when the two diagonals cross in the open interior.

    Crossing means strictly interleaved endpoints: i < k < j < m or
    k < i < m < j.  Diagonals sharing an endpoint never cross.
    """
    if d.b != e.b:
        raise ValueError(f"cannot compare diagonals of different polygons: {d}, {e}")
    return (d.i < e.i < d.j < e.j) or (e.i < d.i < e.j < d.j)


def translate(d: Diagonal, k: int) -> Diagonal | None:
    """The diagonal (i-k)-(j-k), or None when it leaves the polygon.

    Negative ``k`` shifts upward; the result must satisfy 0 <= i-k and
    j-k <= b.  The translate of a diagonal is always a diagonal (span and
    non-side status are translation invariant away from the boundary wrap).
    """
    ni, nj = d.i - k, d.j - k
    if ni < 0 or nj > d.b:
        return None
    return Diagonal(ni, nj, d.b)
